#pragma once

#include "octica/poly.hpp"

#include <stdexcept>
#include <string>

namespace octica {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

// Integers and rationals, variables of the frame, + - * / ^ and parentheses.
// Division is only allowed by nonzero constants. Positions are 1-based.
QPoly parse_poly(const std::string& text, const VarList& frame = xyz());

// "a,b,c" with rational entries, not all zero.
std::array<Rational, 3> parse_point(const std::string& text);

}  // namespace octica
