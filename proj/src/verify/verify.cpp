#include "octica/verify.hpp"

#include "octica/random.hpp"
#include "octica/strata.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace octica {

void LemmaCheckResult::record(bool ok, const QPoly& curve, const std::string& what) {
  ++instances_checked;
  if (ok) return;
  all_passed = false;
  failures.push_back(what);
  if (!counterexample) counterexample = curve;
}

void LemmaCheckResult::merge(const LemmaCheckResult& other) {
  instances_checked += other.instances_checked;
  all_passed = all_passed && other.all_passed;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  if (!counterexample && other.counterexample) counterexample = other.counterexample;
}

std::optional<long> intersection_multiplicity(const QPoly& f0, const QPoly& g0, const Point& p) {
  QPoly f = f0.in_frame(xyz()), g = g0.in_frame(xyz());
  std::vector<Rational> pt(p.begin(), p.end());
  if (evaluate(f, pt) != 0 || evaluate(g, pt) != 0) return 0;
  return intersection_multiplicity(localize(f, p).f_local, localize(g, p).f_local);
}

namespace {

QPoly X() { return qvar(xyz(), "x"); }
QPoly Y() { return qvar(xyz(), "y"); }
QPoly Z() { return qvar(xyz(), "z"); }
QPoly k(long v) { return qconst(Rational(v), xyz()); }
Point pt(long a, long b, long c) { return {Rational(a), Rational(b), Rational(c)}; }

QPoly line_through(const Point& p, const Point& q) {
  return linear_form(p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]);
}

bool same_line(const QPoly& l, const QPoly& m) {
  auto a = linear_coeffs(l), b = linear_coeffs(m);
  return a[1] * b[2] == a[2] * b[1] && a[2] * b[0] == a[0] * b[2] && a[0] * b[1] == a[1] * b[0];
}

bool contains_line(const QPoly& curve, const QPoly& line) { return divisibility_multiplicity(curve, line) >= 1; }

QPoly common_factor(const std::vector<QPoly>& forms) {
  QPoly g = forms.front();
  for (const auto& f : forms) g = gcd(g, f);
  return g;
}

bool has_repeated_factor(const QPoly& f) {
  if (f.is_constant()) return false;
  for (const auto& [e, q] : squarefree_decomposition(f).factors)
    if (e >= 2 && !q.is_constant()) return true;
  return false;
}

bool nn_type(const SingType& t) { return t.kind == SingKind::J10 || t.kind == SingKind::J2; }

struct SingPoint {
  Point p;
  int mult;
  std::optional<QPoly> nn_tangent;  // set for [3;3]-points
};

std::string where(const Point& p) { return to_string(p); }

void degree_bound_clauses(const QPoly& c, int d, const std::vector<SingPoint>& pts, LemmaCheckResult& out) {
  std::vector<std::string> bad;
  auto fail = [&](const std::string& what) { bad.push_back(what); };
  for (const auto& s : pts) {
    if (d < s.mult) fail("multiplicity " + std::to_string(s.mult) + " at " + where(s.p) + " exceeds the degree");
    if (!s.nn_tangent) continue;
    const QPoly& l = *s.nn_tangent;
    if (d < 5) fail("[3;3]-point on a curve of degree below 5");
    bool in = contains_line(c, l);
    if (d == 5 && !in) fail("quintic with a [3;3]-point misses its tangent line");
    if (!in) {
      auto i = intersection_multiplicity(c, l, s.p);
      if (!i || *i <= 3) fail("tangent line at " + where(s.p) + " meets with multiplicity at most 3");
    }
    for (const auto& t : pts) {
      if (same_point(t.p, s.p) || !on_line(t.p, l)) continue;
      int need = in ? 6 + t.mult - 2 : 6 + t.mult;
      if (d < need) fail("point of multiplicity " + std::to_string(t.mult) + " on the tangent line at " + where(s.p));
    }
  }
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const auto &a = pts[i], &b = pts[j];
      QPoly l = line_through(a.p, b.p);
      if (d < a.mult + b.mult - 1) fail("points at " + where(a.p) + " and " + where(b.p) + " exceed the degree");
      if (d == a.mult + b.mult - 1 && !contains_line(c, l)) fail("joining line of " + where(a.p) + " and " + where(b.p) + " is missing");
      if (a.nn_tangent && b.nn_tangent && same_line(*a.nn_tangent, *b.nn_tangent)) {
        int m = 3, n = 3;
        if (d < 2 * n + 2 * m - 3) fail("two [3;3]-points share a tangent line");
        else if (d < 2 * n + 2 * m && !contains_line(c, *a.nn_tangent)) fail("shared tangent line is not a component");
      }
      // Collinear sets, each line visited once from its first two points.
      std::vector<const SingPoint*> on;
      bool first = true;
      for (std::size_t k2 = 0; k2 < pts.size(); ++k2) {
        if (!on_line(pts[k2].p, l)) continue;
        if (k2 < j && k2 != i) first = false;
        on.push_back(&pts[k2]);
      }
      if (!first || on.size() < 3) continue;
      long s = static_cast<long>(on.size()), sum = 0;
      int nn = 0;
      for (auto* q : on) sum += q->mult, nn += q->nn_tangent.has_value();
      if (d < 1 - s + sum) fail("collinear points exceed the degree");
      if (d == 1 - s + sum && !contains_line(c, l)) fail("line through collinear points is missing");
      if (d == 8 && nn >= 3) fail("three collinear [3;3]-points on an octic");
    }
  if (d == 8)
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        if (pts[i].nn_tangent && pts[j].nn_tangent && same_line(*pts[i].nn_tangent, *pts[j].nn_tangent))
          fail("two [3;3]-points of an octic share a tangent line");
  std::string what = "degree " + std::to_string(d) + ":";
  for (const auto& b : bad) what += " " + b + ";";
  out.record(bad.empty(), c, what);
}

// Every member of the system is non-reduced (or the system is zero).
bool forced_non_reduced(const LinearSystem& sys) { return sys.basis.empty() || has_repeated_factor(common_factor(sys.basis)); }

const Point kA = pt(1, 0, 0), kB = pt(0, 1, 0), kC = pt(0, 0, 1), kD = pt(1, 1, 1);

}  // namespace

LemmaCheckResult check_bezout(const std::vector<std::pair<QPoly, QPoly>>& pairs) {
  LemmaCheckResult r;
  r.lemma_id = "bezout";
  for (const auto& [f, g] : pairs) {
    QPoly h = gcd(f, g);
    if (!h.is_constant()) continue;
    long sum = 0;
    bool known = true;
    for (const auto& p : rational_common_zeros({f, g})) {
      auto i = intersection_multiplicity(f, g, p);
      if (!i) known = false;
      else sum += *i;
    }
    long bound = static_cast<long>(f.total_degree()) * g.total_degree();
    r.record(known && sum <= bound, f * g,
             "local intersections sum to " + std::to_string(sum) + " > " + std::to_string(bound));
  }
  return r;
}

LemmaCheckResult check_degree_bounds(const std::vector<QPoly>& curves) {
  LemmaCheckResult r;
  r.lemma_id = "degree-bounds";
  std::vector<std::pair<QPoly, QPoly>> tangent_pairs;
  for (const auto& c0 : curves) {
    QPoly c = c0.in_frame(xyz());
    auto prof = curve_profile(c);
    if (!prof.multiple_components.empty()) {
      r.record(false, c, "curve is not reduced");
      continue;
    }
    std::vector<SingPoint> pts;
    for (const auto& p : prof.points) {
      SingPoint s{p.point, p.report.multiplicity, std::nullopt};
      if (nn_type(p.report.type) && p.tangent_line) {
        s.nn_tangent = *p.tangent_line;
        if (!contains_line(c, *p.tangent_line)) tangent_pairs.emplace_back(c, *p.tangent_line);
      }
      pts.push_back(s);
    }
    degree_bound_clauses(c, prof.degree, pts, r);
  }
  r.merge(check_bezout(tangent_pairs));
  r.lemma_id = "degree-bounds";
  return r;
}

LemmaCheckResult check_degree_bound_systems() {
  LemmaCheckResult r;
  r.lemma_id = "degree-bounds";
  using AC = AnchoredCondition;
  QPoly y = Y(), z = Z();
  auto gcd_of = [](const LinearSystem& s) { return s.basis.empty() ? QPoly(xyz()) : common_factor(s.basis); };
  auto contains_everywhere = [&](const LinearSystem& s, const QPoly& l) {
    return s.basis.empty() || contains_line(gcd_of(s), l);
  };
  {
    auto s = condition_ideal_graded_piece({AC::nn_point(kC, y, 3)}, 5);
    r.record(contains_everywhere(s, y), gcd_of(s), "quintic with a [3;3]-point avoids its tangent line");
  }
  {
    auto s = condition_ideal_graded_piece({AC::nn_point(kC, y, 3)}, 4);
    r.record(forced_non_reduced(s), gcd_of(s), "reduced quartic with a [3;3]-point");
  }
  {
    auto s = condition_ideal_graded_piece({AC::nn_point(kC, y, 3), AC::multiplicity(kA, 4)}, 7);
    r.record(forced_non_reduced(s), gcd_of(s), "reduced septic with a quadruple point on a [3;3] tangent");
  }
  {
    auto s = condition_ideal_graded_piece({AC::nn_point(kC, y, 3), AC::multiplicity(kA, 4)}, 8);
    r.record(contains_everywhere(s, y), gcd_of(s), "octic with a quadruple point on a [3;3] tangent avoids it");
  }
  {
    auto s = condition_ideal_graded_piece({AC::nn_point(kA, z, 3), AC::nn_point(kB, z, 3)}, 8);
    r.record(forced_non_reduced(s), gcd_of(s), "reduced octic with two [3;3]-points on one tangent");
  }
  {
    auto s = condition_ideal_graded_piece({AC::multiplicity(kA, 4), AC::multiplicity(kB, 4), AC::multiplicity(pt(1, 1, 0), 4)}, 8);
    r.record(forced_non_reduced(s), gcd_of(s), "reduced octic with three collinear quadruple points");
  }
  {
    auto s = condition_ideal_graded_piece({AC::multiplicity(kA, 4), AC::multiplicity(kB, 4)}, 7);
    r.record(contains_everywhere(s, z), gcd_of(s), "septic with two quadruple points avoids their line");
  }
  {
    auto s = condition_ideal_graded_piece({AC::nn_point(kA, y - z, 3), AC::nn_point(kB, X() - z, 3), AC::nn_point(pt(1, 1, 0), X() - y + z, 3)}, 8);
    r.record(forced_non_reduced(s), gcd_of(s), "reduced octic with three collinear [3;3]-points");
  }
  return r;
}

LemmaCheckResult check_degree_bounds() {
  std::vector<QPoly> curves;
  for (const auto& c : catalogue_components())
    if (c.normal()) curves.push_back(witness(c));
  auto r = check_degree_bounds(curves);
  r.merge(check_degree_bound_systems());
  return r;
}

QPoly ComponentUnion::curve() const {
  QPoly c = k(1);
  for (const auto& f : components) c = c * f.in_frame(xyz());
  return c;
}

std::vector<ComponentUnion> milnor_family() {
  QPoly x = X(), y = Y(), z = Z();
  std::vector<ComponentUnion> out;
  for (int d = 2; d <= 8; ++d) {
    ComponentUnion u{std::to_string(d) + " concurrent lines", {y}};
    for (int i = 0; i + 1 < d; ++i) u.components.push_back(x - k(i) * y);
    out.push_back(u);
  }
  out.push_back({"four lines, one triple point", {x, y, x - y, x + y + z}});
  out.push_back({"eight lines in general position",
                 {x, y, z, x + y + z, x + k(2) * y + k(3) * z, x - y + k(5) * z, k(2) * x + k(7) * y - z, x - k(3) * y - k(4) * z}});
  out.push_back({"three conics tangent at two points", {x * y - z * z, x * y - k(2) * z * z, x * y - k(3) * z * z}});
  QPoly p1 = x * (y - z), p2 = y * (x - z);
  out.push_back({"four conics through four points", {p1 + p2, p1 - p2, p1 + k(2) * p2, k(2) * p1 + k(3) * p2}});
  out.push_back({"conic and two tangent lines", {x * y - z * z, x, y}});
  out.push_back({"conic with tangent and secant", {x * x + y * y - z * z, x - z, y}});
  out.push_back({"smooth cubic and its flex tangent", {y * y * z - x * x * x - z * z * z, z}});
  out.push_back({"smooth cubic, conic and line", {x * x * x + y * y * y + z * z * z, x * y - z * z, x + y}});
  out.push_back({"smooth octic", {x.pow(8) + y.pow(8) + z.pow(8)}});
  return out;
}

LemmaCheckResult check_milnor_lemma(const std::vector<ComponentUnion>& family) {
  LemmaCheckResult r;
  r.lemma_id = "milnor";
  std::vector<std::pair<QPoly, QPoly>> pairs;
  for (const auto& u : family) {
    QPoly c = u.curve();
    int d = c.total_degree();
    std::vector<std::string> bad;
    auto mu = total_milnor_number(c);
    if (!mu) {
      r.record(false, c, u.name + ": could not count the Milnor number");
      continue;
    }
    if (*mu > static_cast<long>(d - 1) * (d - 1)) bad.push_back("total Milnor number above (d-1)^2");
    auto prof = curve_profile(c);
    bool concurrent_lines = false;
    for (const auto& p : prof.points) concurrent_lines = concurrent_lines || p.report.multiplicity == d;
    if ((*mu == static_cast<long>(d - 1) * (d - 1)) != concurrent_lines)
      bad.push_back("maximum attained by something other than concurrent lines");

    bool smooth_parts = true;
    long genus_side = 0;
    for (const auto& f : u.components) {
      int e = f.total_degree();
      if (e >= 2) {
        auto sing = count_common_zeros({f.derivative(0), f.derivative(1), f.derivative(2)});
        smooth_parts = smooth_parts && sing && *sing == 0;
      }
      genus_side += 2 - (e - 1) * (e - 2);
    }
    long accounted = 0;
    for (const auto& p : prof.points) accounted += p.report.milnor.value_or(-1000000);
    if (smooth_parts && accounted == *mu) {
      long sum = 0;
      for (const auto& p : prof.points) {
        long branches = 0;
        for (const auto& f : u.components) branches += evaluate(f.in_frame(xyz()), {p.point[0], p.point[1], p.point[2]}) == 0;
        sum += *p.report.milnor + branches - 1;
      }
      if ((3L - d) * d + sum != genus_side) bad.push_back("Euler characteristic of the normalisation disagrees");
    }
    for (std::size_t i = 0; i < u.components.size(); ++i)
      for (std::size_t j = i + 1; j < u.components.size(); ++j) pairs.emplace_back(u.components[i], u.components[j]);
    std::string what = u.name + ":";
    for (const auto& b : bad) what += " " + b + ";";
    r.record(bad.empty(), c, what);
  }
  r.merge(check_bezout(pairs));
  r.lemma_id = "milnor";
  return r;
}

LemmaCheckResult check_milnor_bound(const std::vector<QPoly>& curves) {
  LemmaCheckResult r;
  r.lemma_id = "milnor";
  for (const auto& c : curves) {
    int d = c.total_degree();
    auto mu = total_milnor_number(c);
    r.record(mu && *mu <= static_cast<long>(d - 1) * (d - 1), c,
             mu ? "total Milnor number " + std::to_string(*mu) + " above (d-1)^2" : "curve is not reduced");
  }
  return r;
}

LemmaCheckResult check_milnor_lemma() {
  auto r = check_milnor_lemma(milnor_family());
  std::vector<QPoly> witnesses;
  for (const auto& c : catalogue_components())
    if (c.normal()) witnesses.push_back(witness(c));
  r.merge(check_milnor_bound(witnesses));
  return r;
}

LemmaCheckResult check_four_33_points() {
  LemmaCheckResult r;
  r.lemma_id = "four-33-points";
  auto cert = verify_no_four_33_points();
  r.record(cert.certified, cert.c0, "coincidence locus leaves the conic C0: " + cert.summary);
  auto broken = default_four_point_setup();
  broken.l3_override = cert.l3 + X();
  auto control = verify_no_four_33_points(broken);
  r.record(!control.certified, control.c0, "perturbed tangent still certified");
  return r;
}

LemmaCheckResult check_nonexistence_suite() {
  using AC = AnchoredCondition;
  LemmaCheckResult r;
  r.lemma_id = "nonexistence";
  r.merge(check_four_33_points());

  // With the four points fixed at A, B, C, D the only moduli are the tangent
  // directions at the [3;3]-points.
  auto rng = seeded_rng(0x4e0e);
  auto param = [&] {
    long v = 0;
    while (v == 0 || v == 1) v = draw(rng, -30, 30);
    return Rational(v);
  };
  auto tangent_at_a = [](const Rational& t) { return Y() - qconst(t, xyz()) * Z(); };
  auto tangent_at_b = [](const Rational& s) { return X() - qconst(s, xyz()) * Z(); };
  for (int i = 0; i < 10; ++i) {
    Rational t = param(), s = param();
    auto s1122 = condition_ideal_graded_piece(
        {AC::nn_point(kA, tangent_at_a(t), 3), AC::nn_point(kB, tangent_at_b(s), 3), AC::multiplicity(kC, 4), AC::multiplicity(kD, 4)}, 8);
    r.record(forced_non_reduced(s1122), s1122.basis.empty() ? k(0) : s1122.basis.front(),
             "N_1122: reduced member at t=" + t.get_str() + ", s=" + s.get_str());
    auto s1222 = condition_ideal_graded_piece(
        {AC::nn_point(kA, tangent_at_a(t), 3), AC::multiplicity(kB, 4), AC::multiplicity(kC, 4), AC::multiplicity(kD, 4)}, 8);
    r.record(forced_non_reduced(s1222), s1222.basis.empty() ? k(0) : s1222.basis.front(),
             "N_1222: reduced member at t=" + t.get_str());
  }

  // Controls: the same test must not fire on inhabited configurations.
  auto s2222 = condition_ideal_graded_piece(
      {AC::multiplicity(kA, 4), AC::multiplicity(kB, 4), AC::multiplicity(kC, 4), AC::multiplicity(kD, 4)}, 8);
  r.record(!forced_non_reduced(s2222), k(0), "control N_2222 reported empty");
  for (const char* inhabited : {"N_2", "N_1112_p", "N_2222"}) {
    auto label = parse_label(inhabited);
    auto w = validate_witness(label, witness(label));
    r.record(w.valid, witness(label), std::string("control ") + inhabited + " has no valid witness: " + w.reason);
  }
  return r;
}

std::vector<std::string> lemma_ids() { return {"bezout", "degree-bounds", "milnor", "nonexistence", "four-33-points"}; }

LemmaCheckResult run_lemma(const std::string& id) {
  if (id == "degree-bounds") return check_degree_bounds();
  if (id == "milnor") return check_milnor_lemma();
  if (id == "nonexistence") return check_nonexistence_suite();
  if (id == "four-33-points") return check_four_33_points();
  if (id == "bezout") {
    std::vector<std::pair<QPoly, QPoly>> pairs;
    for (const auto& u : milnor_family())
      for (std::size_t i = 0; i < u.components.size(); ++i)
        for (std::size_t j = i + 1; j < u.components.size(); ++j) pairs.emplace_back(u.components[i], u.components[j]);
    return check_bezout(pairs);
  }
  throw std::invalid_argument("unknown lemma '" + id + "'");
}

}  // namespace octica
