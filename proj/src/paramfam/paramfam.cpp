#include "octica/paramfam.hpp"

#include <functional>
#include <stdexcept>

namespace octica {

namespace {

QPoly in_params(const QPoly& p, const VarList& params) { return p.vars() == params ? p : p.in_frame(params); }

RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  RationalMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

std::vector<RationalVector> canonical_span(const std::vector<RationalVector>& vs, std::size_t cols) {
  if (vs.empty()) return {};
  RationalMatrix e = rref(from_rows(vs, cols));
  std::size_t r = rank(e);
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < r; ++i) out.push_back(e.row(i));
  return out;
}

// Product of the diagonal of a Smith-style diagonalisation over Q[t]; equal
// up to a unit to the gcd of the maximal nonvanishing minors.
QPoly univariate_determinantal_divisor(PolyMatrix a, std::size_t* rank_out) {
  const std::size_t R = a.rows, C = a.cols;
  auto deg = [](const QPoly& p) { return p.total_degree(); };
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < C; ++c) std::swap(a(i, c), a(j, c));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < R; ++r) std::swap(a(r, i), a(r, j));
  };
  QPoly product = a.rows && a.cols ? QPoly::constant(Rational(1), a(0, 0).vars()) : QPoly::constant(Rational(1));
  std::size_t k = 0;
  for (; k < std::min(R, C); ++k) {
    std::size_t bi = R, bj = C;
    for (std::size_t i = k; i < R; ++i)
      for (std::size_t j = k; j < C; ++j)
        if (!a(i, j).is_zero() && (bi == R || deg(a(i, j)) < deg(a(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi == R) break;
    swap_rows(k, bi);
    swap_cols(k, bj);
    for (;;) {
      bool clean = true;
      for (std::size_t i = k + 1; i < R; ++i) {
        if (a(i, k).is_zero()) continue;
        auto [q, r] = divmod_univariate(a(i, k), a(k, k), 0);
        for (std::size_t c = k; c < C; ++c)
          if (!a(k, c).is_zero()) a(i, c) -= q * a(k, c);
        if (!a(i, k).is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < C; ++j) {
        if (a(k, j).is_zero()) continue;
        auto [q, r] = divmod_univariate(a(k, j), a(k, k), 0);
        for (std::size_t rr = k; rr < R; ++rr)
          if (!a(rr, k).is_zero()) a(rr, j) -= q * a(rr, k);
        if (!a(k, j).is_zero()) clean = false;
      }
      if (clean) break;
      std::size_t pi = k, pj = k;
      for (std::size_t i = k; i < R; ++i)
        if (!a(i, k).is_zero() && deg(a(i, k)) < deg(a(pi, pj))) {
          pi = i;
          pj = k;
        }
      for (std::size_t j = k; j < C; ++j)
        if (!a(k, j).is_zero() && deg(a(k, j)) < deg(a(pi, pj))) {
          pi = k;
          pj = j;
        }
      swap_rows(k, pi);
      swap_cols(k, pj);
    }
    product = product * a(k, k);
  }
  if (rank_out) *rank_out = k;
  return make_monic(product);
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    if (!f(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Kernel of m over the fraction field, one primitive polynomial vector per free column.
std::vector<std::vector<QPoly>> generic_kernel(const ParamMatrix& m) {
  FractionFreeEchelon e = fraction_free_echelon(m.m);
  std::vector<bool> is_pivot(m.m.cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<QPoly>> out;
  for (std::size_t j = 0; j < m.m.cols; ++j) {
    if (is_pivot[j]) continue;
    QPoly l = QPoly::constant(Rational(1), m.params);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
      if (e.rows(i, j).is_zero()) continue;
      QPoly p = in_params(e.rows(i, e.pivot_cols[i]), m.params);
      l = divide_exact(l * p, gcd(l, p));
    }
    std::vector<QPoly> v(m.m.cols, QPoly(m.params));
    v[j] = l;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
      if (e.rows(i, j).is_zero()) continue;
      v[e.pivot_cols[i]] = -in_params(e.rows(i, j), m.params) * divide_exact(l, in_params(e.rows(i, e.pivot_cols[i]), m.params));
    }
    QPoly c = content(v);
    if (!c.is_constant())
      for (auto& x : v) x = divide_exact(x, c);
    out.push_back(std::move(v));
  }
  return out;
}

Rational at_zero(const QPoly& p) { return p.constant_term(); }

QPoly divide_by_lambda(const QPoly& p) {
  QPoly r(p.vars());
  for (const auto& [e, c] : p.terms()) r.add_term({e[0] - 1}, c);
  return r;
}

}  // namespace

PolyMatrix UniversalFamily::coefficient_matrix() const {
  auto mons = monomial_basis(3, degree);
  PolyMatrix b(mons.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < mons.size(); ++i) b(i, j) = in_params(basis[j].coeff(mons[i]), params);
  return b;
}

QPoly UniversalFamily::member(const RationalVector& a, const std::vector<Rational>& values) const {
  if (a.size() != basis.size()) throw std::invalid_argument("coefficient vector has wrong length");
  QPoly f(xyz());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (a[i] != 0) f += qconst(a[i], xyz()) * specialize(basis[i], values);
  return f;
}

UniversalFamily transported_family(const LinearSystem& base, const std::vector<PPoly>& images, const VarList& params) {
  if (images.size() != 3) throw std::invalid_argument("need images of x, y and z");
  UniversalFamily fam;
  fam.params = params;
  fam.degree = base.degree;
  for (const auto& f : base.basis) fam.basis.push_back(lift(f, params).compose(images, xyz()));
  return fam;
}

UniversalFamily moving_tangent_family(int n, int degree) {
  const Point origin{Rational(0), Rational(0), Rational(1)};
  LinearSystem base = condition_ideal_graded_piece({AnchoredCondition::nn_point(origin, qvar(xyz(), "y"), n)}, degree);
  VarList T{"t"};
  QPoly t = qvar(T, "t");
  auto v = [](std::size_t i) { return PPoly::variable(xyz(), i); };
  PPoly y_image = v(1) - PPoly::constant(t, xyz()) * v(0);
  return transported_family(base, {v(0), y_image, v(2)}, T);
}

ParamMatrix build_condition_matrix(const UniversalFamily& family, const std::vector<AnchoredCondition>& extra) {
  PolyMatrix b = family.coefficient_matrix();
  ParamMatrix out;
  out.params = family.params;
  std::vector<std::vector<QPoly>> rows;
  for (const auto& c : extra) {
    RationalMatrix r = condition_rows(c, family.degree);
    for (std::size_t i = 0; i < r.rows; ++i) {
      std::vector<QPoly> row(b.cols, QPoly(family.params));
      for (std::size_t k = 0; k < r.cols; ++k) {
        if (r(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols; ++j)
          if (!b(k, j).is_zero()) row[j] += qconst(r(i, k), family.params) * b(k, j);
      }
      rows.push_back(std::move(row));
    }
  }
  out.m = PolyMatrix(rows.size(), b.cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < b.cols; ++j) out.m(i, j) = rows[i][j];
  return out;
}

RationalMatrix specialize(const ParamMatrix& m, const std::vector<Rational>& values) {
  if (values.size() != m.params.size()) throw std::invalid_argument("wrong number of parameter values");
  RationalMatrix r(m.m.rows, m.m.cols);
  for (std::size_t i = 0; i < m.m.rows; ++i)
    for (std::size_t j = 0; j < m.m.cols; ++j) {
      const QPoly& e = m.m(i, j);
      r(i, j) = e.vars().empty() ? e.constant_term() : evaluate(e, values);
    }
  return r;
}

std::size_t generic_rank(const ParamMatrix& m) { return fraction_free_echelon(m.m).pivot_cols.size(); }

RankDropLocus rank_drop_locus(const ParamMatrix& m, std::size_t max_minors) {
  RankDropLocus out;
  PolyMatrix a = m.m;
  for (auto& e : a.a) e = in_params(e, m.params);
  if (m.params.size() <= 1) {
    if (m.params.empty()) {
      RationalMatrix r = specialize(m, {});
      out.generic_rank = rank(r);
      out.minor_gcd = QPoly::constant(Rational(1));
      return out;
    }
    out.minor_gcd = univariate_determinantal_divisor(a, &out.generic_rank);
    if (!out.minor_gcd.is_constant()) out.rational_points = rational_roots(out.minor_gcd, 0);
    return out;
  }
  out.generic_rank = generic_rank(m);
  std::size_t r = out.generic_rank;
  if (r == 0) {
    out.minor_gcd = QPoly::constant(Rational(1), m.params);
    return out;
  }
  QPoly g(m.params);
  std::size_t count = 0;
  for_each_subset(a.rows, r, [&](const std::vector<std::size_t>& rows) {
    for_each_subset(a.cols, r, [&](const std::vector<std::size_t>& cols) {
      if (count >= max_minors) return false;
      ++count;
      PolyMatrix sub(r, r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) sub(i, j) = a(rows[i], cols[j]);
      QPoly d = determinant(sub);
      if (!d.is_zero()) {
        out.minors.push_back(d);
        g = g.is_zero() ? d : gcd(g, d);
      }
      return true;
    });
    return count < max_minors;
  });
  out.complete = count < max_minors;
  out.minor_gcd = make_monic(g);
  return out;
}

KernelComparison compare_kernels_at(const ParamMatrix& m, const std::vector<Rational>& point) {
  if (point.size() != m.params.size()) throw std::invalid_argument("wrong number of parameter values");
  KernelComparison out;
  const std::size_t cols = m.m.cols;
  out.special_kernel = canonical_span(kernel_basis(specialize(m, point)), cols);

  // Approach the point along the line params = point + lambda * (1, 2, ..., k).
  VarList L{"lambda"};
  std::vector<QPoly> line;
  for (std::size_t i = 0; i < point.size(); ++i)
    line.push_back(qconst(point[i], L) + qconst(Rational(static_cast<long>(i + 1)), L) * qvar(L, "lambda"));
  std::vector<std::vector<QPoly>> vecs;
  for (const auto& v : generic_kernel(m)) {
    std::vector<QPoly> w;
    for (const auto& e : v) w.push_back(e.vars().empty() ? e.in_frame(L) : e.compose(line, L));
    vecs.push_back(std::move(w));
  }
  for (int step = 0;; ++step) {
    std::vector<RationalVector> v0;
    for (const auto& v : vecs) {
      RationalVector r;
      for (const auto& e : v) r.push_back(at_zero(e));
      v0.push_back(std::move(r));
    }
    RationalMatrix cm(cols, vecs.size());
    for (std::size_t i = 0; i < vecs.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) cm(j, i) = v0[i][j];
    auto rel = kernel_basis(cm);
    if (rel.empty()) {
      out.limit_kernel = canonical_span(v0, cols);
      out.saturation_steps = step;
      break;
    }
    if (step > 1000) throw std::runtime_error("kernel limit saturation did not terminate");
    const RationalVector& c = rel.front();
    std::size_t target = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) target = i;
    std::vector<QPoly> w(cols, QPoly(L));
    for (std::size_t i = 0; i < vecs.size(); ++i)
      if (c[i] != 0)
        for (std::size_t j = 0; j < cols; ++j) w[j] += qconst(c[i], L) * vecs[i][j];
    auto all_vanish = [&]() {
      for (const auto& e : w)
        if (at_zero(e) != 0) return false;
      return true;
    };
    while (all_vanish()) {
      bool nonzero = false;
      for (auto& e : w) {
        e = divide_by_lambda(e);
        nonzero = nonzero || !e.is_zero();
      }
      if (!nonzero) throw std::logic_error("generic kernel vectors are dependent");
    }
    vecs[target] = std::move(w);
  }

  std::vector<RationalVector> both = out.special_kernel;
  both.insert(both.end(), out.limit_kernel.begin(), out.limit_kernel.end());
  out.inclusion_holds = canonical_span(both, cols).size() == out.special_kernel.size();
  if (!out.inclusion_holds) throw std::logic_error("limit kernel is not contained in the special kernel");
  out.strict = out.limit_kernel.size() < out.special_kernel.size();
  return out;
}

SplitReport component_split_report(const UniversalFamily& family, const KernelComparison& comparison,
                                   const std::vector<Rational>& point, const QPoly& witness_line) {
  auto min_mult = [&](const std::vector<RationalVector>& kernel) {
    int k = -1;
    for (const auto& v : kernel) {
      QPoly f = family.member(v, point);
      if (f.is_zero()) continue;
      int d = divisibility_multiplicity(f, witness_line);
      if (k < 0 || d < k) k = d;
    }
    return std::max(k, 0);
  };
  SplitReport out;
  out.special_multiplicity = min_mult(comparison.special_kernel);
  out.limit_multiplicity = min_mult(comparison.limit_kernel);
  out.split = comparison.strict && out.special_multiplicity != out.limit_multiplicity;
  return out;
}

QPoly conic_through(const std::vector<ConicConstraint>& constraints) {
  auto mons = monomial_basis(3, 2);
  RationalMatrix rows(0, mons.size());
  auto value_row = [&](const Point& p) {
    RationalVector r;
    for (const auto& e : mons) r.push_back(evaluate(QPoly::monomial(xyz(), e, Rational(1)), {p[0], p[1], p[2]}));
    return r;
  };
  auto direction_row = [&](const Point& p, const Point& q) {
    RationalVector r;
    for (const auto& e : mons) {
      QPoly m = QPoly::monomial(xyz(), e, Rational(1));
      Rational s = 0;
      for (std::size_t k = 0; k < 3; ++k) s += q[k] * evaluate(m.derivative(k), {p[0], p[1], p[2]});
      r.push_back(s);
    }
    return r;
  };
  for (const auto& c : constraints) {
    if (c.point[0] == 0 && c.point[1] == 0 && c.point[2] == 0) throw ConicError("degenerate point (0:0:0)");
    rows.append_row(value_row(c.point));
    if (c.tangent) {
      if (!on_line(c.point, *c.tangent)) throw ConicError("tangent does not pass through " + to_string(c.point));
      auto l = linear_coeffs(*c.tangent);
      RationalMatrix lm(1, 3);
      for (std::size_t i = 0; i < 3; ++i) lm(0, i) = l[i];
      Point q{};
      for (const auto& v : kernel_basis(lm))
        if (!same_point(Point{v[0], v[1], v[2]}, c.point)) q = Point{v[0], v[1], v[2]};
      rows.append_row(direction_row(c.point, q));
    }
  }
  if (rows.rows != 5) throw ConicError("a conic needs exactly five linear conditions, got " + std::to_string(rows.rows));
  auto ker = kernel_basis(rows);
  if (ker.size() != 1) throw ConicError("conic conditions are dependent");
  QPoly conic = primitive_integer(form_from_vector(ker.front(), 2));
  if (sgn(conic.leading_coeff()) < 0) conic = -conic;
  for (const auto& c : constraints) {
    if (!c.tangent) continue;
    bool singular = true;
    for (std::size_t k = 0; k < 3; ++k)
      if (evaluate(conic.derivative(k), {c.point[0], c.point[1], c.point[2]}) != 0) singular = false;
    if (singular) throw ConicError("conic conditions are dependent: the solution is singular at " + to_string(c.point));
  }
  return conic;
}

}  // namespace octica
