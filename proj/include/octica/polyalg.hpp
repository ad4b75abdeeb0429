#pragma once

#include "octica/poly.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace octica {

// All exponent vectors of the given total degree, largest first.
std::vector<Exponents> monomial_basis(int num_vars, int degree);

// Binomial coefficient for small arguments.
long binomial(long n, long k);

class DivisionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Throws DivisionError when b does not divide a.
QPoly divide_exact(const QPoly& a, const QPoly& b);
bool divides(const QPoly& b, const QPoly& a);

// Scale so the grevlex-leading coefficient is 1 (zero stays zero).
QPoly make_monic(const QPoly& p);
// Scale by a positive rational so the coefficients are coprime integers.
QPoly primitive_integer(const QPoly& p);

QPoly gcd(const QPoly& a, const QPoly& b);
QPoly gcd(const std::vector<QPoly>& ps);

// f = c * prod_i factors[i]^i with each factor monic, squarefree and
// pairwise coprime; works for any number of variables.
struct SquarefreeDecomposition {
  Rational unit;
  std::map<int, QPoly> factors;
  QPoly squarefree_part() const;
};
SquarefreeDecomposition squarefree_decomposition(const QPoly& f);

// Univariate division with remainder in the given variable; coefficients
// must be constants (the polynomial is univariate).
std::pair<QPoly, QPoly> divmod_univariate(const QPoly& a, const QPoly& b, std::size_t var);

// Dense coefficient list in var (index = power); coefficients keep the frame.
std::vector<QPoly> coefficients_in(const QPoly& p, std::size_t var);
QPoly from_coefficients(const std::vector<QPoly>& cs, std::size_t var, const VarList& vars);

// Sylvester-matrix resultant eliminating var. The rows of f come first and
// coefficients run from the highest power down; so Res_y(y-x, y+x) = 2x.
// Throws std::invalid_argument if either operand has degree 0 in var.
QPoly resultant(const QPoly& f, const QPoly& g, std::size_t var);

// Exact rational roots of a univariate polynomial, sorted ascending.
std::vector<Rational> rational_roots(const QPoly& f, std::size_t var);

// Order of vanishing at var = 0 of a univariate polynomial (-1 for zero).
int order_at_zero(const QPoly& p, std::size_t var);

struct RationalMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Rational> a;

  RationalMatrix() = default;
  RationalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  Rational& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  static RationalMatrix identity(std::size_t n);
  std::vector<Rational> row(std::size_t i) const;
  void append_row(const std::vector<Rational>& r);
};

using RationalVector = std::vector<Rational>;

// Reduced row echelon form; pivot columns are reported in order.
RationalMatrix rref(RationalMatrix m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const RationalMatrix& m);
// One vector per free column of the rref, free entry 1; length cols - rank.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);
RationalVector multiply(const RationalMatrix& m, const RationalVector& v);

// Matrices over a polynomial ring Q[params].
struct PolyMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<QPoly> a;

  PolyMatrix() = default;
  PolyMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  QPoly& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const QPoly& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

QPoly determinant(PolyMatrix m);

// Fraction-free Gauss-Jordan: every row is made primitive after each
// elimination step. Pivot rows carry a nonzero entry in their pivot column
// and zeros in every other pivot column; non-pivot rows are dropped.
struct FractionFreeEchelon {
  PolyMatrix rows;
  std::vector<std::size_t> pivot_cols;
};
FractionFreeEchelon fraction_free_echelon(const PolyMatrix& m);

// Content of a vector of polynomials (monic gcd of the entries).
QPoly content(const std::vector<QPoly>& v);

}  // namespace octica
