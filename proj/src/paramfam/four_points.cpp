#include "octica/paramfam.hpp"

#include <sstream>

namespace octica {

namespace {

const VarList UV{"u", "v"};

QPoly at_p4(const QPoly& form) { return form.compose({qvar(UV, "u"), qvar(UV, "v"), qconst(1, UV)}, UV); }

// Two forms spanning the conics through the four fixed conditions.
std::pair<QPoly, QPoly> pencil(const std::vector<ConicConstraint>& fixed) {
  auto mons = monomial_basis(3, 2);
  RationalMatrix rows(0, mons.size());
  for (const auto& c : fixed) {
    Point p = c.point;
    RationalVector r;
    for (const auto& e : mons) r.push_back(evaluate(QPoly::monomial(xyz(), e, Rational(1)), {p[0], p[1], p[2]}));
    rows.append_row(r);
    if (c.tangent) {
      auto l = linear_coeffs(*c.tangent);
      RationalMatrix lm(1, 3);
      for (std::size_t i = 0; i < 3; ++i) lm(0, i) = l[i];
      Point q{};
      for (const auto& v : kernel_basis(lm))
        if (!same_point(Point{v[0], v[1], v[2]}, p)) q = Point{v[0], v[1], v[2]};
      RationalVector d;
      for (const auto& e : mons) {
        QPoly m = QPoly::monomial(xyz(), e, Rational(1));
        Rational s = 0;
        for (std::size_t k = 0; k < 3; ++k) s += q[k] * evaluate(m.derivative(k), {p[0], p[1], p[2]});
        d.push_back(s);
      }
      rows.append_row(d);
    }
  }
  auto ker = kernel_basis(rows);
  if (ker.size() != 2) throw std::logic_error("fixed conic conditions are not independent");
  return {form_from_vector(ker[0], 2), form_from_vector(ker[1], 2)};
}

// Gradient at p4 of the pencil member through p4, as polynomials in u, v.
std::array<QPoly, 3> gradient_through_p4(const std::pair<QPoly, QPoly>& ab) {
  QPoly a4 = at_p4(ab.first), b4 = at_p4(ab.second);
  std::array<QPoly, 3> g;
  for (std::size_t k = 0; k < 3; ++k) g[k] = b4 * at_p4(ab.first.derivative(k)) - a4 * at_p4(ab.second.derivative(k));
  return g;
}

QPoly line_through(const Point& a, const Point& b) {
  return linear_form(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]);
}

bool all_roots_rational(const QPoly& f, std::size_t var, std::vector<Rational>& roots) {
  roots = rational_roots(f, var);
  return static_cast<std::size_t>(squarefree_decomposition(f).squarefree_part().degree_in(var)) == roots.size();
}

// Common zeros in the (u, v)-plane of polynomials without a common factor.
std::vector<std::array<Rational, 2>> common_zeros(const std::vector<QPoly>& hs, bool& all_rational) {
  std::vector<std::array<Rational, 2>> pts;
  std::vector<QPoly> live;
  for (const auto& h : hs)
    if (!h.is_zero()) live.push_back(h);
  if (live.empty()) throw std::logic_error("no conditions to solve");
  for (const auto& h : live)
    if (h.is_constant()) return pts;
  std::size_t a = 0;
  for (std::size_t i = 0; i < live.size(); ++i)
    if (live[i].degree_in(1) > 0 && (live[a].degree_in(1) <= 0 || live[i].degree_in(1) < live[a].degree_in(1))) a = i;
  QPoly e = live[a].degree_in(1) > 0 ? QPoly(UV) : live[a];
  for (std::size_t b = 0; b < live.size(); ++b) {
    if (b == a) continue;
    QPoly r = live[a].degree_in(1) > 0 && live[b].degree_in(1) > 0 ? resultant(live[a], live[b], 1) : (live[b].degree_in(1) > 0 ? live[a] : live[b]);
    if (r.degree_in(1) > 0) continue;
    e = e.is_zero() ? r : gcd(e, r);
  }
  if (e.is_zero()) throw std::logic_error("elimination produced no univariate condition");
  if (e.is_constant()) return pts;
  std::vector<Rational> us;
  if (!all_roots_rational(e, 0, us)) all_rational = false;
  for (const auto& u0 : us) {
    QPoly g(UV);
    for (const auto& h : live) {
      QPoly s = h.substitute(0, qconst(u0, UV));
      if (!s.is_zero()) g = g.is_zero() ? s : gcd(g, s);
    }
    if (g.is_zero()) throw std::logic_error("a vertical line lies in the common zero set");
    if (g.is_constant()) continue;
    std::vector<Rational> vs;
    if (!all_roots_rational(g, 1, vs)) all_rational = false;
    for (const auto& v0 : vs) pts.push_back({u0, v0});
  }
  return pts;
}

}  // namespace

FourPointSetup default_four_point_setup() {
  FourPointSetup s;
  s.p1 = {Rational(1), Rational(0), Rational(0)};
  s.p2 = {Rational(0), Rational(1), Rational(0)};
  s.p3 = {Rational(0), Rational(0), Rational(1)};
  s.l1 = linear_form(0, 1, -1);
  s.l2 = linear_form(1, 0, -1);
  return s;
}

FourPointCertificate verify_no_four_33_points(const FourPointSetup& s) {
  FourPointCertificate out;
  out.c0 = conic_through({{s.p1, s.l1}, {s.p2, s.l2}, {s.p3, std::nullopt}});
  std::array<Rational, 3> grad;
  for (std::size_t k = 0; k < 3; ++k) grad[k] = evaluate(out.c0.derivative(k), {s.p3[0], s.p3[1], s.p3[2]});
  out.l3 = s.l3_override ? *s.l3_override : linear_form(grad[0], grad[1], grad[2]);

  std::array<std::array<QPoly, 3>, 3> g{
      gradient_through_p4(pencil({{s.p2, s.l2}, {s.p3, out.l3}})),
      gradient_through_p4(pencil({{s.p1, s.l1}, {s.p3, out.l3}})),
      gradient_through_p4(pencil({{s.p1, s.l1}, {s.p2, s.l2}})),
  };
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a + 1; b < 3; ++b) out.minors.push_back(g[i][a] * g[j][b] - g[i][b] * g[j][a]);

  QPoly common(UV);
  for (const auto& m : out.minors)
    if (!m.is_zero()) common = common.is_zero() ? m : gcd(common, m);
  if (common.is_zero()) {
    out.summary = "tangent lines at p4 coincide for every p4";
    return out;
  }
  out.common_factor = make_monic(common);

  // Configurations where some conic is not determined or the tangents are not distinguished.
  QPoly c0 = at_p4(out.c0);
  std::vector<QPoly> degenerate{at_p4(line_through(s.p1, s.p2)), at_p4(line_through(s.p1, s.p3)), at_p4(line_through(s.p2, s.p3)),
                                at_p4(s.l1), at_p4(s.l2), at_p4(out.l3)};
  QPoly allowed = c0;
  for (const auto& l : degenerate)
    if (!l.is_constant()) allowed = allowed * l;
  bool factor_ok = out.common_factor.is_constant() || divides(squarefree_decomposition(out.common_factor).squarefree_part(), allowed);
  bool c0_in_locus = divides(make_monic(c0), out.common_factor);

  std::vector<QPoly> residual;
  for (const auto& m : out.minors) residual.push_back(m.is_zero() ? m : divide_exact(m, out.common_factor));
  out.residual_points = common_zeros(residual, out.residual_all_rational);
  bool points_ok = out.residual_all_rational;
  for (const auto& p : out.residual_points) {
    bool explained = evaluate(c0, {p[0], p[1]}) == 0;
    for (const auto& l : degenerate) explained = explained || (!l.is_constant() && evaluate(l, {p[0], p[1]}) == 0);
    points_ok = points_ok && explained;
  }
  out.certified = factor_ok && c0_in_locus && points_ok;
  std::ostringstream os;
  os << "C0 = " << to_string(out.c0) << "; tangent at p3 = " << to_string(out.l3) << "; coincidence factor = " << to_string(out.common_factor)
     << "; residual points = " << out.residual_points.size() << (out.residual_all_rational ? "" : " (some irrational)")
     << (out.certified ? "; every coincidence lies on C0 or a degenerate configuration" : "; coincidence found off C0");
  out.summary = os.str();
  return out;
}

}  // namespace octica
