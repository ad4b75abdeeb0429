#include "octica/polyalg.hpp"

#include <stdexcept>

namespace octica {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rational> RationalMatrix::row(std::size_t i) const {
  return {a.begin() + static_cast<long>(i * cols), a.begin() + static_cast<long>((i + 1) * cols)};
}

void RationalMatrix::append_row(const std::vector<Rational>& r) {
  if (rows == 0 && cols == 0) cols = r.size();
  if (r.size() != cols) throw std::invalid_argument("row length mismatch");
  a.insert(a.end(), r.begin(), r.end());
  ++rows;
}

RationalMatrix rref(RationalMatrix m, std::vector<std::size_t>* pivots) {
  std::size_t r = 0;
  if (pivots) pivots->clear();
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && is_zero(m(p, c))) ++p;
    if (p == m.rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

std::size_t rank(const RationalMatrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  std::vector<std::size_t> piv;
  RationalMatrix R = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t j = 0; j < m.cols; ++j) {
    if (is_pivot[j]) continue;
    RationalVector v(m.cols);
    v[j] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -R(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalVector multiply(const RationalMatrix& m, const RationalVector& v) {
  if (v.size() != m.cols) throw std::invalid_argument("dimension mismatch in matrix-vector product");
  RationalVector out(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (!is_zero(m(i, j))) out[i] += m(i, j) * v[j];
  return out;
}

namespace {

bool better_pivot(const QPoly& a, const QPoly& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  return a.size() < b.size();
}

void make_row_primitive(std::vector<QPoly>& row) {
  QPoly c = content(row);
  if (c.is_zero()) return;
  if (!c.is_constant())
    for (auto& e : row)
      if (!e.is_zero()) e = divide_exact(e, c);
  // Normalise the rational scale: integer coefficients, coprime overall.
  Integer den = 1, num = 0;
  for (const auto& e : row)
    for (const auto& [x, q] : e.terms()) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
    }
  if (num == 0) return;
  Rational s(den, num);
  s.canonicalize();
  if (s != 1)
    for (auto& e : row) e = s * e;
}

}  // namespace

FractionFreeEchelon fraction_free_echelon(const PolyMatrix& m) {
  std::vector<std::vector<QPoly>> rows(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) rows[i].push_back(m(i, j));
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t best = m.rows;
    for (std::size_t i = r; i < m.rows; ++i) {
      if (rows[i][c].is_zero()) continue;
      if (best == m.rows || better_pivot(rows[i][c], rows[best][c])) best = i;
    }
    if (best == m.rows) continue;
    std::swap(rows[r], rows[best]);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      QPoly g = gcd(rows[r][c], rows[i][c]);
      QPoly a = divide_exact(rows[r][c], g), b = divide_exact(rows[i][c], g);
      for (std::size_t j = 0; j < m.cols; ++j) {
        QPoly v = a * rows[i][j];
        if (!rows[r][j].is_zero()) v -= b * rows[r][j];
        rows[i][j] = std::move(v);
      }
      make_row_primitive(rows[i]);
    }
    piv.push_back(c);
    ++r;
  }
  FractionFreeEchelon out;
  out.rows = PolyMatrix(r, m.cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out.rows(i, j) = rows[i][j];
  out.pivot_cols = piv;
  return out;
}

}  // namespace octica
