#include "octica/parse.hpp"

#include <cctype>

namespace octica {

ParseError::ParseError(const std::string& what, int line, int column)
    : std::invalid_argument(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column),
      message_(what) {}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const VarList& frame) : s_(text), frame_(frame) {}

  QPoly run() {
    skip();
    if (pos_ >= s_.size()) fail("empty expression");
    QPoly r = expr();
    skip();
    if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return r;
  }

 private:
  const std::string& s_;
  const VarList& frame_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(s_[i]) & 0xC0) != 0x80) {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  // Returns the operator at the cursor ('-' also for U+2212) without consuming it.
  char peek_op() {
    skip();
    if (pos_ >= s_.size()) return 0;
    if (s_.compare(pos_, 3, "\xE2\x88\x92") == 0) return '-';
    char c = s_[pos_];
    return std::string("+-*/^()").find(c) != std::string::npos ? c : 0;
  }
  void take_op() { pos_ += s_.compare(pos_, 3, "\xE2\x88\x92") == 0 ? 3 : 1; }

  QPoly expr() {
    QPoly r = term();
    for (char op = peek_op(); op == '+' || op == '-'; op = peek_op()) {
      take_op();
      QPoly t = term();
      r = op == '+' ? r + t : r - t;
    }
    return r;
  }

  QPoly term() {
    QPoly r = unary();
    for (char op = peek_op(); op == '*' || op == '/'; op = peek_op()) {
      std::size_t at = pos_;
      take_op();
      QPoly u = unary();
      if (op == '*') {
        r = r * u;
      } else {
        if (!u.is_constant() || u.is_zero()) fail_at("division by a non-constant or zero", at);
        r = qconst(Rational(1) / u.constant_term(), frame_) * r;
      }
    }
    return r;
  }

  QPoly unary() {
    char op = peek_op();
    if (op == '-' || op == '+') {
      take_op();
      QPoly u = unary();
      return op == '-' ? -u : u;
    }
    return power();
  }

  QPoly power() {
    QPoly base = atom();
    if (peek_op() == '^') {
      take_op();
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      if (pos_ - start > 4) fail_at("exponent too large", start);
      return base.pow(std::stoi(s_.substr(start, pos_ - start)));
    }
    return base;
  }

  QPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      QPoly r = expr();
      if (peek_op() != ')') fail("expected ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return qconst(Rational(Integer(s_.substr(start, pos_ - start))), frame_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      for (const auto& v : frame_)
        if (v == name) return qvar(frame_, name);
      fail_at("unknown variable '" + name + "'", start);
    }
    fail(std::string("unexpected '") + c + "'");
  }
};

}  // namespace

QPoly parse_poly(const std::string& text, const VarList& frame) { return Parser(text, frame).run(); }

std::array<Rational, 3> parse_point(const std::string& text) {
  std::array<Rational, 3> p;
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    std::size_t end = i < 2 ? text.find(',', start) : text.size();
    if (end == std::string::npos) throw ParseError("a point needs three comma-separated coordinates", 1, static_cast<int>(text.size()) + 1);
    QPoly c = parse_poly(text.substr(start, end - start), {});
    if (!c.is_constant()) throw ParseError("point coordinates must be numbers", 1, static_cast<int>(start) + 1);
    p[i] = c.constant_term();
    start = end + 1;
  }
  if (p[0] == 0 && p[1] == 0 && p[2] == 0) throw ParseError("the zero vector is not a point", 1, 1);
  return p;
}

}  // namespace octica
