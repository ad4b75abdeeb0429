#include "octica/random.hpp"
#include "octica/singclass.hpp"

#include <stdexcept>

namespace octica {

namespace {

using Matrix3 = std::array<std::array<Rational, 3>, 3>;

VarList plane() { return {"x", "y"}; }

Point normalized(Point p) {
  for (int i = 2; i >= 0; --i)
    if (p[i] != 0) {
      Rational s = p[i];
      for (auto& v : p) v /= s;
      break;
    }
  return p;
}

void add_unique(std::vector<Point>& pts, const Point& p) {
  for (const auto& q : pts)
    if (same_point(q, p)) return;
  pts.push_back(normalized(p));
}

std::vector<QPoly> nonzero(const std::vector<QPoly>& v) {
  std::vector<QPoly> out;
  for (const auto& p : v)
    if (!p.is_zero()) out.push_back(p);
  return out;
}

QPoly random_combination(const std::vector<QPoly>& ps, std::mt19937_64& rng) {
  QPoly r(ps.front().vars());
  for (const auto& p : ps) r += qconst(Rational(draw(rng, -9, 9)), p.vars()) * p;
  return r;
}

// Univariate polynomial in x whose roots contain the x-coordinates of all
// common zeros of hs in the affine plane; zero means no bound was found.
QPoly eliminant(const std::vector<QPoly>& hs, std::mt19937_64& rng, int resultants) {
  QPoly e(plane());
  std::vector<QPoly> biv;
  for (const auto& h : hs) {
    if (h.degree_in(1) <= 0) e = e.is_zero() ? h : gcd(e, h);
    else biv.push_back(h);
  }
  if (biv.size() < 2) return e;
  for (int made = 0, tries = 0; made < resultants && tries < 20; ++tries) {
    QPoly a = biv.size() == 2 && made == 0 ? biv[0] : random_combination(biv, rng);
    QPoly b = biv.size() == 2 && made == 0 ? biv[1] : random_combination(biv, rng);
    if (a.degree_in(1) < 1 || b.degree_in(1) < 1) continue;
    QPoly r = resultant(a, b, 1);
    if (r.is_zero()) continue;
    e = e.is_zero() ? r : gcd(e, r);
    ++made;
  }
  return e;
}

std::vector<std::array<Rational, 2>> affine_zeros(const std::vector<QPoly>& hs0, std::mt19937_64& rng) {
  auto hs = nonzero(hs0);
  if (hs.empty()) throw std::domain_error("common zero set is the whole plane");
  for (const auto& h : hs)
    if (h.is_constant()) return {};
  if (!gcd(hs).is_constant()) throw std::domain_error("common zero set is positive-dimensional");
  QPoly e = eliminant(hs, rng, 2);
  if (e.is_zero()) throw std::logic_error("no nonzero eliminant for a finite zero set");
  std::vector<std::array<Rational, 2>> out;
  if (e.is_constant()) return out;
  for (const auto& x0 : rational_roots(e, 0)) {
    std::vector<QPoly> fibre;
    for (const auto& h : hs) {
      QPoly s = h.substitute(0, qconst(x0, plane()));
      if (!s.is_zero()) fibre.push_back(s);
    }
    if (fibre.empty()) throw std::domain_error("common zero set contains a vertical line");
    QPoly g = gcd(fibre);
    if (g.is_constant()) continue;
    for (const auto& y0 : rational_roots(g, 1)) out.push_back({x0, y0});
  }
  return out;
}

Matrix3 random_transform(std::mt19937_64& rng, long span = 4) {
  for (;;) {
    Matrix3 a;
    for (auto& row : a)
      for (auto& v : row) v = Rational(draw(rng, -span, span));
    Rational det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                   a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    if (det != 0) return a;
  }
}

QPoly affine_chart(const QPoly& form) {
  return form.compose({qvar(plane(), "x"), qvar(plane(), "y"), qconst(Rational(1), plane())}, plane());
}

QPoly at_infinity(const QPoly& form) {
  return form.compose({qvar(plane(), "x"), qconst(Rational(1), plane()), qconst(Rational(0), plane())}, plane());
}

// Squarefree degree of the eliminant after a generic change of coordinates.
std::optional<long> count_once(const std::vector<QPoly>& forms, std::mt19937_64& rng) {
  Matrix3 a = random_transform(rng, 40);
  std::vector<QPoly> moved, inf, aff;
  for (const auto& f : forms) moved.push_back(apply_matrix(f, a));
  for (const auto& f : moved) inf.push_back(at_infinity(f));
  auto infz = nonzero(inf);
  if (infz.empty() || !gcd(infz).is_constant()) return std::nullopt;
  if (evaluate(moved.front(), {Rational(1), Rational(0), Rational(0)}) == 0) {
    bool all = true;
    for (const auto& f : moved) all = all && evaluate(f, {Rational(1), Rational(0), Rational(0)}) == 0;
    if (all) return std::nullopt;
  }
  for (const auto& f : moved) aff.push_back(affine_chart(f));
  // Leading coefficients in y must be constants so no zero escapes to infinity.
  std::vector<QPoly> hs;
  for (const auto& h : aff)
    if (!h.is_zero()) {
      if (h.is_constant()) return 0;
      if (h.degree_in(1) != h.total_degree()) return std::nullopt;
      hs.push_back(h);
    }
  if (!gcd(hs).is_constant()) return -1;
  QPoly e = eliminant(hs, rng, 2);
  if (e.is_zero()) return std::nullopt;
  if (e.is_constant()) return 0;
  return squarefree_decomposition(e).squarefree_part().total_degree();
}

Matrix3 inverse(const Matrix3& a) {
  RationalMatrix m(3, 6);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      m(i, j) = a[i][j];
      m(i, 3 + j) = Rational(i == j ? 1 : 0);
    }
  RationalMatrix r = rref(m);
  Matrix3 out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out[i][j] = r(i, 3 + j);
  return out;
}

QPoly global_line(const QPoly& local, const Matrix3& transport) {
  Rational al = local.coeff({1, 0}), be = local.coeff({0, 1});
  Matrix3 inv = inverse(transport);
  std::array<Rational, 3> l;
  for (std::size_t j = 0; j < 3; ++j) l[j] = al * inv[0][j] + be * inv[1][j];
  return linear_form(l[0], l[1], l[2]);
}

std::vector<QPoly> gradient(const QPoly& f) { return {f.derivative(0), f.derivative(1), f.derivative(2)}; }

std::vector<QPoly> second_partials(const QPoly& f) {
  std::vector<QPoly> out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) out.push_back(f.derivative(i).derivative(j));
  return out;
}

// Total Milnor number of a reduced curve: degree of the part of Res_y(F_x, F_y)
// supported on the curve, in generic coordinates.
std::optional<long> total_milnor(const QPoly& form, std::mt19937_64& rng) {
  int d = form.total_degree();
  std::optional<long> prev;
  for (int attempt = 0; attempt < 12; ++attempt) {
    QPoly f = affine_chart(apply_matrix(form, random_transform(rng, 40)));
    if (f.total_degree() != d || f.degree_in(1) != d) continue;
    QPoly fx = f.derivative(0), fy = f.derivative(1);
    if (fx.degree_in(1) != d - 1 || fy.degree_in(1) != d - 1 || fx.total_degree() != d - 1) continue;
    QPoly e = resultant(fx, fy, 1);
    if (e.total_degree() != (d - 1) * (d - 1)) continue;
    QPoly g = resultant(f, fx, 1);
    if (g.is_zero()) continue;
    QPoly off = e;
    for (;;) {
      QPoly h = gcd(off, g);
      if (h.is_constant()) break;
      off = divide_exact(off, h);
    }
    long mu = e.total_degree() - std::max(off.total_degree(), 0);
    if (prev && *prev == mu) return mu;
    prev = mu;
  }
  return std::nullopt;
}

}  // namespace

std::optional<long> total_milnor_number(const QPoly& form) {
  QPoly f = form.in_frame(xyz());
  if (f.is_zero() || !f.is_homogeneous()) throw std::invalid_argument("curve must be a nonzero homogeneous form");
  for (const auto& [e, q] : squarefree_decomposition(f).factors)
    if (e >= 2 && !q.is_constant()) return std::nullopt;
  if (f.total_degree() < 2) return 0;
  auto rng = seeded_rng(0x3b1d);
  return total_milnor(f, rng);
}

std::vector<Point> rational_common_zeros(const std::vector<QPoly>& forms0) {
  std::vector<QPoly> forms;
  for (const auto& f : forms0) {
    QPoly g = f.in_frame(xyz());
    if (!g.is_homogeneous() && !g.is_zero()) throw std::invalid_argument("rational_common_zeros expects forms");
    if (!g.is_zero()) forms.push_back(g);
  }
  if (forms.empty()) throw std::domain_error("common zero set is the whole plane");
  for (const auto& f : forms)
    if (f.is_constant()) return {};
  auto rng = seeded_rng(0xc0e5);
  std::vector<Point> out;
  std::vector<QPoly> aff, inf;
  for (const auto& f : forms) aff.push_back(affine_chart(f));
  for (const auto& [x0, y0] : affine_zeros(aff, rng)) add_unique(out, {x0, y0, Rational(1)});
  for (const auto& f : forms) inf.push_back(at_infinity(f));
  auto infz = nonzero(inf);
  if (infz.empty()) throw std::domain_error("common zero set contains the line z = 0");
  QPoly g = gcd(infz);
  if (!g.is_constant())
    for (const auto& r : rational_roots(g, 0)) add_unique(out, {r, Rational(1), Rational(0)});
  bool at_x = true;
  for (const auto& f : forms) at_x = at_x && evaluate(f, {Rational(1), Rational(0), Rational(0)}) == 0;
  if (at_x) add_unique(out, {Rational(1), Rational(0), Rational(0)});
  return out;
}

std::optional<long> count_common_zeros(const std::vector<QPoly>& forms0) {
  std::vector<QPoly> forms;
  for (const auto& f : forms0) {
    QPoly g = f.in_frame(xyz());
    if (!g.is_zero()) forms.push_back(g);
  }
  if (forms.empty()) return std::nullopt;
  for (const auto& f : forms)
    if (f.is_constant()) return 0;
  auto rng = seeded_rng(0xc0a7);
  std::optional<long> prev;
  for (int attempt = 0; attempt < 12; ++attempt) {
    auto n = count_once(forms, rng);
    if (n && *n < 0) return std::nullopt;
    if (!n) continue;
    if (prev && *prev == *n) return n;
    prev = n;
  }
  return std::nullopt;
}

int CurveSingularityProfile::count(SingKind kind) const {
  int n = 0;
  for (const auto& p : points) n += p.report.type.kind == kind;
  return n;
}

std::array<int, 4> CurveSingularityProfile::elliptic_counts() const {
  std::array<int, 4> c{0, 0, 0, 0};
  for (const auto& p : points) {
    const auto& t = p.report.type;
    if (t.kind == SingKind::J10) ++c[0];
    else if (t.kind == SingKind::J2) ++c[1];
    else if (t.kind == SingKind::X && t.p == 9) ++c[2];
    else if (t.kind == SingKind::X || t.kind == SingKind::Y) ++c[3];
  }
  return c;
}

namespace {

// For R * D^2 every point of multiplicity >= 3 lies on D or is a triple point
// of R. Irrational ones are admissible only as transversal meetings of R with
// a smooth point of D; Bezout certifies that none of the others is missed.
std::optional<std::string> doubled_certificate(const QPoly& r, const QPoly& d, const std::vector<PointReport>& found) {
  long rational_r3 = 0, rational_sing_d = 0, rational_meet = 0, meet_sum = 0;
  for (const auto& pr : found) {
    const auto& p = pr.point;
    bool on_r = !r.is_constant() && evaluate(r, {p[0], p[1], p[2]}) == 0;
    bool on_d = evaluate(d, {p[0], p[1], p[2]}) == 0;
    if (on_d && multiplicity(localize(d, p).f_local) >= 2) ++rational_sing_d;
    if (!on_r) continue;
    LocalCurve lr = localize(r, p);
    if (multiplicity(lr.f_local) >= 3) ++rational_r3;
    if (on_d) {
      auto i = intersection_multiplicity(lr.f_local, localize(d, p).f_local);
      if (!i) return "reduced and doubled parts share a component";
      ++rational_meet;
      meet_sum += *i;
    }
  }
  auto r3 = r.total_degree() <= 2 ? std::optional<long>(0) : count_common_zeros(second_partials(r));
  if (!r3) return "could not count triple points of the reduced part";
  if (*r3 != rational_r3) return "triple points of the reduced part outside the rational locus";
  auto sd = d.total_degree() <= 1 ? std::optional<long>(0) : count_common_zeros(gradient(d));
  if (!sd) return "could not count singular points of the doubled part";
  if (*sd != rational_sing_d) return "singular points of the doubled part outside the rational locus";
  if (r.is_constant()) return std::nullopt;
  auto meet = count_common_zeros({r, d});
  if (!meet) return "could not count the meeting points of the reduced and doubled parts";
  if (meet_sum + (*meet - rational_meet) != static_cast<long>(r.total_degree()) * d.total_degree())
    return "tangency between the reduced and doubled parts outside the rational locus";
  return std::nullopt;
}

}  // namespace

CurveSingularityProfile curve_profile(const QPoly& form0, const std::vector<Point>& hints) {
  QPoly form = form0.in_frame(xyz());
  if (form.is_zero() || !form.is_homogeneous()) throw std::invalid_argument("curve must be a nonzero homogeneous form");
  CurveSingularityProfile prof;
  prof.degree = form.total_degree();
  auto sf = squarefree_decomposition(form);
  QPoly reduced_part = qconst(Rational(1), xyz());
  bool too_multiple = false;
  for (const auto& [e, q] : sf.factors) {
    if (q.is_constant()) continue;
    if (e == 1) reduced_part = q;
    else prof.multiple_components[e] = q;
    if (e >= 3) too_multiple = true;
  }
  bool reduced = prof.multiple_components.empty();

  std::vector<Point> candidates;
  if (prof.degree >= 2) {
    if (reduced) {
      for (const auto& p : rational_common_zeros(gradient(form))) add_unique(candidates, p);
    } else if (!too_multiple) {
      for (const auto& p : rational_common_zeros(second_partials(form))) add_unique(candidates, p);
      if (reduced_part.total_degree() >= 2)
        for (const auto& p : rational_common_zeros(gradient(reduced_part))) add_unique(candidates, p);
    }
  }
  for (const auto& h : hints) add_unique(candidates, h);

  for (const auto& p : candidates) {
    if (evaluate(form, {p[0], p[1], p[2]}) != 0) throw std::invalid_argument("hint " + to_string(p) + " is not on the curve");
    LocalCurve g = localize(form, p);
    PointReport pr;
    pr.point = normalized(p);
    pr.report = classify(g);
    if (pr.report.type.kind == SingKind::Smooth) continue;
    if (pr.report.distinguished_tangent) pr.tangent_line = global_line(*pr.report.distinguished_tangent, g.transport);
    if (pr.report.milnor) prof.total_milnor_rational += *pr.report.milnor;
    prof.points.push_back(pr);
  }

  if (too_multiple) {
    prof.verdict = "component of multiplicity at least 3";
    return prof;
  }
  prof.high_multiplicity_points = prof.degree <= 2 ? std::optional<long>(0) : count_common_zeros(second_partials(form));
  long rational_high = 0;
  bool all_hlc = true;
  for (const auto& p : prof.points) {
    rational_high += p.report.multiplicity >= 3;
    all_hlc = all_hlc && p.report.type.half_log_canonical();
  }
  if (reduced && prof.degree >= 2) {
    auto rng = seeded_rng(0x3b1d);
    if (auto mu = total_milnor(form, rng)) prof.residual_milnor_budget = *mu - prof.total_milnor_rational;
  }
  if (!all_hlc) prof.verdict = "a point is not half-log-canonical";
  else if (!reduced) {
    if (auto problem = doubled_certificate(reduced_part, prof.multiple_components.at(2), prof.points)) {
      prof.verdict = *problem;
      return prof;
    }
    prof.half_log_canonical = true;
    prof.verdict = "half-log-canonical";
  } else if (!prof.high_multiplicity_points) prof.verdict = "could not count points of multiplicity at least 3";
  else if (*prof.high_multiplicity_points != rational_high)
    prof.verdict = "points of multiplicity at least 3 outside the rational locus";
  else {
    prof.half_log_canonical = true;
    prof.verdict = "half-log-canonical";
  }
  return prof;
}

}  // namespace octica
