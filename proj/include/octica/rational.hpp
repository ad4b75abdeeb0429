#pragma once

#include <gmpxx.h>

#include <string>

namespace octica {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

}  // namespace octica
