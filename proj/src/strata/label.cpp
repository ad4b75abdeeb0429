#include "octica/strata.hpp"

#include <cctype>
#include <stdexcept>

namespace octica {

namespace {

const char* const kMacron = "\xCC\x84";  // combining macron

std::string superscript(int k) {
  static const char* const digits[] = {"\xE2\x81\xB0", "\xC2\xB9", "\xC2\xB2", "\xC2\xB3", "\xE2\x81\xB4",
                                       "\xE2\x81\xB5", "\xE2\x81\xB6", "\xE2\x81\xB7", "\xE2\x81\xB8", "\xE2\x81\xB9"};
  return digits[k % 10];
}

std::string display_symbols(const StratumLabel& l) {
  std::string out;
  auto group = [&](int count, const std::string& sym) {
    if (count >= 3) out += sym + superscript(count);
    else
      for (int i = 0; i < count; ++i) out += sym;
  };
  group(l.a, "1");
  group(l.b, std::string("1") + kMacron);
  group(l.c, "2");
  group(l.d, std::string("2") + kMacron);
  return out.empty() ? "\xE2\x88\x85" : out;
}

std::string ascii_symbols(const StratumLabel& l) {
  std::string out;
  for (int i = 0; i < l.a; ++i) out += "1";
  for (int i = 0; i < l.b; ++i) out += "1b";
  for (int i = 0; i < l.c; ++i) out += "2";
  for (int i = 0; i < l.d; ++i) out += "2b";
  return out.empty() ? "e" : out;
}

int primes(const std::string& tag) {
  int k = 0;
  while (k < static_cast<int>(tag.size()) && tag[k] == '\'') ++k;
  return k;
}

// "[1]" -> "1", "[1b]" -> "1b"
std::string refinement(const std::string& tag) {
  auto open = tag.find('[');
  if (open == std::string::npos) return "";
  return tag.substr(open + 1, tag.size() - open - 2);
}

void parse_symbols(const std::string& s, StratumLabel& l, const std::string& whole) {
  if (s == "e") return;
  for (std::size_t i = 0; i < s.size();) {
    bool bar = i + 1 < s.size() && s[i + 1] == 'b';
    if (s[i] == '1') (bar ? l.b : l.a)++;
    else if (s[i] == '2') (bar ? l.d : l.c)++;
    else throw std::invalid_argument("bad stratum label '" + whole + "'");
    i += bar ? 2 : 1;
  }
}

}  // namespace

std::string StratumLabel::name() const {
  std::string tag_text = std::string(primes(tag), '\'');
  std::string ref = refinement(tag);
  if (!ref.empty()) {
    StratumLabel point{0, ref == "1", ref == "1b", ref == "2", ref == "2b", ""};
    tag_text += "[" + display_symbols(point) + "]";
  }
  if (n == 0) return "N_{" + display_symbols(*this) + "}" + tag_text;
  return "M_{" + std::to_string(n) + ";" + display_symbols(*this) + "}" + tag_text;
}

std::string StratumLabel::ascii() const {
  std::string out = n == 0 ? "N_" + ascii_symbols(*this) : "M_" + std::to_string(n) + "_" + ascii_symbols(*this);
  if (!tag.empty()) out += "_" + std::string(primes(tag), 'p') + refinement(tag);
  return out;
}

StratumLabel parse_label(const std::string& text) {
  StratumLabel l;
  auto fail = [&] { throw std::invalid_argument("bad stratum label '" + text + "'"); };
  if (text.size() < 3 || text[1] != '_' || (text[0] != 'N' && text[0] != 'M')) fail();
  std::size_t pos = 2;
  if (text[0] == 'M') {
    auto us = text.find('_', pos);
    if (us == std::string::npos || us == pos) fail();
    for (std::size_t i = pos; i < us; ++i)
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail();
    l.n = std::stoi(text.substr(pos, us - pos));
    if (l.n < 1 || l.n > 4) fail();
    pos = us + 1;
  }
  auto us = text.find('_', pos);
  parse_symbols(text.substr(pos, us == std::string::npos ? std::string::npos : us - pos), l, text);
  if (us != std::string::npos) {
    std::string t = text.substr(us + 1);
    int k = 0;
    while (k < static_cast<int>(t.size()) && t[k] == 'p') ++k;
    std::string ref = t.substr(k);
    if (k == 0 || (!ref.empty() && ref != "1" && ref != "1b" && ref != "2" && ref != "2b")) fail();
    l.tag = std::string(k, '\'') + (ref.empty() ? "" : "[" + ref + "]");
  }
  return l;
}

int expected_dimension(const StratumLabel& l) {
  if (l.n != 0) throw std::invalid_argument("expected dimension is defined for the normal locus only");
  return 36 - 9 * l.a - 10 * l.b - 8 * l.c - 9 * l.d;
}

std::string HodgeType::name() const { return "\xE2\x97\x8A_{" + std::to_string(r) + "," + std::to_string(s) + "}"; }

std::optional<HodgeType> hodge_type(const StratumLabel& l) {
  if (l.n != 0) return std::nullopt;
  int s = l.a + l.c;
  return HodgeType{l.b + l.d, s == 4 ? 3 : s};
}

std::vector<HodgeType> possible_hodge_types(const StratumLabel& l) {
  if (l.n == 0) return {*hodge_type(l)};
  if (l.n == 2 && l.elliptic() == 0) return {{0, 3}, {1, 2}, {2, 1}, {3, 0}};
  if (l.n == 4) return {{0, 3}, {1, 2}, {2, 1}, {3, 0}};
  return {};
}

bool hodge_leq(const HodgeType& lo, const HodgeType& hi) { return lo.r <= hi.r && lo.r + lo.s <= hi.r + hi.s; }

bool may_degenerate(const StratumLabel& f, const StratumLabel& t) {
  return f.n == 0 && t.n == 0 && t.a + t.b >= f.a + f.b && t.b >= f.b && t.c + t.d >= f.c + f.d && t.d >= f.d;
}

std::string birational_type(const StratumLabel& l) {
  bool known = false;
  for (const auto& c : catalogue_components()) known = known || c == l;
  if (!known) throw std::out_of_range("no component " + l.ascii() + " in the catalogue");
  const std::string elliptic2 = "Properly elliptic, \xCF\x87=2, p_g=1";
  if (l.n == 4) return "P\xC2\xB2 \xE2\x8A\x94 P\xC2\xB2";
  if (l.n == 3) return "Rational";
  if (l.n == 2) return l.elliptic() == 0 ? "Weak del Pezzo of degree 2" : "Ruled of genus 1";
  if (l.n == 1) {
    if (l.elliptic() == 0) return "K3-Surface";
    return l.elliptic() == 2 ? "Ruled of genus 1" : "Rational";
  }
  int j = l.a + l.b, q = l.c + l.d, p = primes(l.tag);
  switch (l.elliptic()) {
    case 0:
      return "General type, K\xC2\xB2=2, \xCF\x87=4";
    case 1:
      return j ? "General type, K\xC2\xB2=1, \xCF\x87=3" : "Properly elliptic, \xCF\x87=3, p_g=2";
    case 2:
      if (j == 2) return elliptic2;
      if (q == 2) return "K3";
      return p == 1 ? "K3" : elliptic2;
    case 3:
      if (j == 3) return p == 1 ? "Rational" : "Enriques";
      if (j == 2) return p == 3 ? "Enriques" : "Rational";
      return "Rational";
    default:
      return "Ruled of genus 1";
  }
}

}  // namespace octica
