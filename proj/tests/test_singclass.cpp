#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "octica/singclass.hpp"
#include "goldens.hpp"
#include "support.hpp"

#include <algorithm>
#include <set>

using namespace octica;
using testing_support::Gen;
using testing_support::isolated_goldens;
using testing_support::non_isolated_goldens;

namespace {

QPoly X() { return qvar(local_frame(), "x"); }
QPoly Y() { return qvar(local_frame(), "y"); }
QPoly k(long v) { return qconst(Rational(v), local_frame()); }
QPoly x() { return qvar(xyz(), "x"); }
QPoly y() { return qvar(xyz(), "y"); }
QPoly z() { return qvar(xyz(), "z"); }
QPoly kc(const Rational& v) { return qconst(v, xyz()); }

// Kouchnirenko: for a convenient germ with generic coefficients on its
// Newton boundary, mu = 2V - a - b + 1 with V the area below the boundary.
long newton_number(const QPoly& f) {
  std::vector<std::pair<long, long>> pts;
  for (const auto& [e, c] : f.terms()) pts.emplace_back(e[0], e[1]);
  long a = -1, b = -1;
  for (auto [i, j] : pts) {
    if (j == 0 && (a < 0 || i < a)) a = i;
    if (i == 0 && (b < 0 || j < b)) b = j;
  }
  REQUIRE(a > 0);
  REQUIRE(b > 0);
  std::sort(pts.begin(), pts.end());
  std::vector<std::pair<long, long>> hull;
  for (auto p : pts) {
    if (p.first > a) continue;
    while (hull.size() >= 2) {
      auto [x1, y1] = hull[hull.size() - 2];
      auto [x2, y2] = hull.back();
      long cross = (x2 - x1) * (p.second - y1) - (y2 - y1) * (p.first - x1);
      if (cross <= 0) hull.pop_back();
      else break;
    }
    if (!hull.empty() && hull.back().first == p.first) continue;
    hull.push_back(p);
  }
  // twice the area below the boundary
  long twice_v = 0;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i)
    twice_v += (hull[i + 1].first - hull[i].first) * (hull[i].second + hull[i + 1].second);
  REQUIRE(hull.front() == std::make_pair(0L, b));
  REQUIRE(hull.back() == std::make_pair(a, 0L));
  return twice_v - a - b + 1;
}

// Pure powers high enough not to change the type, so the oracle applies.
QPoly convenient(const QPoly& f) { return f + X().pow(40) + Y().pow(40); }

QPoly linear_change(const QPoly& f, Gen& g) {
  for (;;) {
    Rational a = g.rat(), b = g.rat(), c = g.rat(), d = g.rat();
    if (a * d - b * c == 0) continue;
    return f.compose({k(1) * qconst(a, local_frame()) * X() + qconst(b, local_frame()) * Y(),
                      qconst(c, local_frame()) * X() + qconst(d, local_frame()) * Y()},
                     local_frame());
  }
}

std::array<Rational, 3> coeffs(const QPoly& l) { return linear_coeffs(l); }

bool proportional(const QPoly& a, const QPoly& b) {
  auto u = coeffs(a), v = coeffs(b);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (u[i] * v[j] != u[j] * v[i]) return false;
  return true;
}

QPoly random_line(Gen& g) {
  for (;;) {
    QPoly l = linear_form(Rational(g.range(-4, 4)), Rational(g.range(-4, 4)), Rational(g.range(-4, 4)));
    if (!l.is_zero()) return l;
  }
}

Point cross(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Branches counted by repeated blow-ups; -1 if a tangent direction is irrational.
long branches_by_blowup(const QPoly& f) {
  if (multiplicity(f) == 1) return 1;
  auto b = blow_up_strict_transform(f);
  if (static_cast<int>(b.rational_points.size()) != b.distinct_directions) return -1;
  long total = 0;
  for (const auto& p : b.rational_points) {
    long r = branches_by_blowup(p.germ);
    if (r < 0) return -1;
    total += r;
  }
  return total;
}

}  // namespace

TEST_CASE("Table 1 golden suite: isolated types, Milnor numbers and the Newton-polygon oracle") {
  for (const auto& gd : isolated_goldens()) {
    CAPTURE(gd.symbol);
    auto r = classify(gd.germ);
    CHECK(r.type.symbol() == gd.symbol);
    CHECK(parse_sing_type(gd.symbol) == r.type);
    REQUIRE(r.milnor.has_value());
    CHECK(*r.milnor == gd.mu);
    CHECK(r.table_mu == gd.mu);
    CHECK(newton_number(convenient(gd.germ)) == gd.mu);
    CHECK(r.type.half_log_canonical());
  }
}

TEST_CASE("Table 1 golden suite: non-isolated types") {
  for (const auto& gd : non_isolated_goldens()) {
    CAPTURE(gd.symbol);
    auto r = classify(gd.germ);
    CHECK(r.type.symbol() == gd.symbol);
    CHECK(parse_sing_type(gd.symbol) == r.type);
    CHECK_FALSE(r.milnor.has_value());
    CHECK(r.table_mu == gd.mu);
    CHECK_FALSE(r.type.isolated());
    CHECK_FALSE(milnor_number(gd.germ).has_value());
  }
}

TEST_CASE("classification is invariant under linear changes of coordinates") {
  Gen g(71);
  auto all = isolated_goldens();
  for (const auto& gd : non_isolated_goldens()) all.push_back(gd);
  for (const auto& gd : all) {
    CAPTURE(gd.symbol);
    auto base = classify(gd.germ);
    for (int t = 0; t < 10; ++t) {
      auto moved = classify(linear_change(gd.germ, g));
      CHECK(moved.type == base.type);
      CHECK(moved.milnor == base.milnor);
      CHECK(moved.branches == base.branches);
    }
  }
}

TEST_CASE("documented germ examples") {
  CHECK(multiplicity(X().pow(2) + Y().pow(3)) == 2);
  CHECK(multiplicity(X().pow(4) + (X() * Y()).pow(2) + Y().pow(4)) == 4);
  CHECK(multiplicity(X() + Y().pow(2)) == 1);

  CHECK(milnor_number(X().pow(3) + Y().pow(4)) == 6);
  CHECK(milnor_number(X().pow(4) + (X() * Y()).pow(2) + Y().pow(5)) == 10);
  CHECK_FALSE(milnor_number(X().pow(2)).has_value());
  CHECK(milnor_number(X() * Y()) == 1);
  CHECK(milnor_number(X() + k(1)) == 0);

  auto x9 = classify(X().pow(4) + (X() * Y()).pow(2) + Y().pow(4));
  CHECK(x9.type.symbol() == "X_9");
  CHECK(x9.type.simply_elliptic());
  CHECK(x9.type.elliptic_degree() == 2);
  auto j = classify(X().pow(3) + (X() * Y()).pow(2) + Y().pow(7));
  CHECK(j.type.symbol() == "J_2,1");
  CHECK(j.milnor == 11);
  CHECK(j.type.elliptic_degree() == 1);
  REQUIRE(j.distinguished_tangent.has_value());
  CHECK(*j.distinguished_tangent == X());
  CHECK(classify(X().pow(2) * Y()).type.kind == SingKind::DInf);
  auto bad = classify(X().pow(5) + Y().pow(4));
  CHECK(bad.type.kind == SingKind::NotHLC);
  CHECK_FALSE(bad.reason.empty());
  CHECK(classify(X() - Y().pow(3)).type.kind == SingKind::Smooth);
  CHECK_THROWS_AS(classify(X() + k(1)), std::invalid_argument);

  // contact too high or multiplicity too large
  CHECK(classify(X().pow(3) + Y().pow(10)).type.kind == SingKind::NotHLC);
  CHECK(classify(X().pow(5) + Y().pow(5)).type.kind == SingKind::NotHLC);
  CHECK(classify(X().pow(3) * Y()).type.kind == SingKind::NotHLC);
  CHECK(classify(X().pow(2) * (X() - Y().pow(3))).type.kind == SingKind::NotHLC);
  CHECK(classify(X().pow(2) * Y() * (Y() - X())).type.kind == SingKind::XInf);
  CHECK(classify(X().pow(2) * Y() * (X() - Y().pow(2))).type.kind == SingKind::NotHLC);
}

TEST_CASE("branch counts") {
  auto br = [](const QPoly& f) { return classify(f).branches; };
  CHECK(br(X() * Y()) == 2);
  CHECK(br(X().pow(2) + Y().pow(3)) == 1);
  CHECK(br(X().pow(2) - Y().pow(4)) == 2);
  CHECK(br(Y() * (X().pow(2) + Y().pow(2))) == 3);
  CHECK(br(Y() * (X().pow(2) + Y().pow(3))) == 2);
  CHECK(br(X().pow(3) + X() * Y().pow(3)) == 2);
  CHECK(br(X().pow(4) - Y().pow(4)) == 4);
  CHECK(br(X().pow(3) + (X() * Y()).pow(2) + Y().pow(6)) == 3);
  CHECK_FALSE(br(X().pow(2)).has_value());

  int compared = 0;
  for (const auto& gd : isolated_goldens()) {
    long oracle = branches_by_blowup(gd.germ);
    if (oracle < 0) continue;
    CAPTURE(gd.symbol);
    CHECK(classify(gd.germ).branches == oracle);
    ++compared;
  }
  CHECK(compared > 20);
}

TEST_CASE("tangent cones") {
  auto x9 = tangent_cone_structure(X().pow(4) + (X() * Y()).pow(2) + Y().pow(4));
  CHECK(x9.ordinary);
  CHECK(x9.structure() == std::vector<std::pair<int, int>>{{1, 4}});
  auto j = tangent_cone_structure(X().pow(3) + (X() * Y()).pow(2));
  CHECK_FALSE(j.ordinary);
  CHECK(j.structure() == std::vector<std::pair<int, int>>{{3, 1}});
  auto d4 = tangent_cone_structure(Y() * (X().pow(2) + Y().pow(2)));
  CHECK(d4.ordinary);
  CHECK(d4.structure() == std::vector<std::pair<int, int>>{{1, 3}});
  auto y = tangent_cone_structure(X().pow(2) * Y().pow(2) + X().pow(6));
  CHECK(y.structure() == std::vector<std::pair<int, int>>{{2, 2}});
}

TEST_CASE("blow-ups") {
  // A3: the y-chart is (xy)^2/y^2 + y^4/y^2 = x^2 + y^2 by hand.
  auto a3 = blow_up_strict_transform(X().pow(2) + Y().pow(4));
  CHECK(a3.multiplicity == 2);
  CHECK(a3.chart_y == X().pow(2) + Y().pow(2));
  CHECK(a3.chart_x == k(1) + X().pow(2) * Y().pow(4));
  int singular = 0;
  for (const auto& p : a3.rational_points)
    if (p.multiplicity >= 2) {
      ++singular;
      CHECK(classify(p.germ).type.symbol() == "A_1");
    }
  CHECK(singular == 1);

  auto j10 = blow_up_strict_transform(X().pow(3) + (X() * Y()).pow(2) + Y().pow(6));
  REQUIRE(j10.rational_points.size() == 1);
  CHECK(classify(j10.rational_points[0].germ).type.symbol() == "D_4");
  for (int p = 1; p <= 3; ++p) {
    auto jp = blow_up_strict_transform(X().pow(3) + (X() * Y()).pow(2) + Y().pow(6 + p));
    REQUIRE(jp.rational_points.size() == 1);
    CHECK(classify(jp.rational_points[0].germ).type.symbol() == "D_" + std::to_string(4 + p));
  }

  auto node = blow_up_strict_transform(X() * Y());
  CHECK(node.distinct_directions == 2);
  REQUIRE(node.rational_points.size() == 2);
  for (const auto& p : node.rational_points) CHECK(p.multiplicity == 1);

  auto conj = blow_up_strict_transform(X().pow(2) + Y().pow(2));
  CHECK(conj.distinct_directions == 2);
  CHECK(conj.rational_points.empty());
}

TEST_CASE("intersection multiplicity against the graph-parametrisation oracle") {
  Gen g(5);
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    QPoly f = g.poly(local_frame(), 5, 5);
    f -= qconst(f.constant_term(), local_frame());
    if (f.is_zero()) continue;
    QPoly p(local_frame());
    for (int i = 1; i <= 3; ++i) p += qconst(g.rat(), local_frame()) * X().pow(i);
    QPoly graph = Y() - p;
    // ord_x f(x, p(x)) is the intersection number with the smooth branch y = p(x)
    QPoly along = f.substitute(1, p);
    auto got = intersection_multiplicity(f, graph);
    if (along.is_zero()) {
      CHECK_FALSE(got.has_value());
      continue;
    }
    REQUIRE(got.has_value());
    CHECK(*got == order_at_zero(along, 0));
    ++checked;
  }
  CHECK(checked > 40);
  CHECK(intersection_multiplicity(Y() - X().pow(4), Y()) == 4);
  CHECK(intersection_multiplicity(Y().pow(2) - X().pow(3), Y()) == 3);
  CHECK(intersection_multiplicity(X() + k(1), Y()) == 0);
  CHECK_FALSE(intersection_multiplicity(X() * Y(), X() * (Y() + k(1))).has_value());
  CHECK(intersection_multiplicity(X() * (Y() + k(1)), Y() * (X() + k(1))) == 1);
}

TEST_CASE("Milnor numbers of random sparse germs match the Newton-polygon oracle") {
  Gen g(13);
  for (int t = 0; t < 40; ++t) {
    long a = g.range(2, 9), b = g.range(2, 9);
    QPoly f = qconst(g.rat(3) + Rational(4), local_frame()) * X().pow(static_cast<unsigned>(a)) +
              qconst(g.rat(3) + Rational(4), local_frame()) * Y().pow(static_cast<unsigned>(b));
    for (int i = 0; i < 3; ++i) {
      long e = g.range(1, a - 1), h = g.range(1, b - 1);
      Rational c = g.rat(3);
      if (c != 0) f += qconst(c, local_frame()) * X().pow(static_cast<unsigned>(e)) * Y().pow(static_cast<unsigned>(h));
    }
    CAPTURE(to_string(f));
    auto mu = milnor_number(f);
    REQUIRE(mu.has_value());
    CHECK(*mu == newton_number(f));
  }
}

TEST_CASE("localize") {
  auto g = localize(x() * y() * z(), {Rational(0), Rational(0), Rational(1)});
  CHECK(g.f_local == X() * Y());
  auto s = localize(x() * y() * z(), {Rational(1), Rational(0), Rational(1)});
  CHECK(multiplicity(s.f_local) == 1);
  CHECK_THROWS_AS(localize(x() * y() * z(), {Rational(1), Rational(1), Rational(1)}), std::invalid_argument);

  Gen gen(3);
  QPoly cusp = y().pow(3) * z() - x().pow(4);
  for (int t = 0; t < 5; ++t) {
    std::array<std::array<Rational, 3>, 3> a;
    Rational det;
    do {
      for (auto& row : a)
        for (auto& v : row) v = Rational(gen.range(-3, 3));
      det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
            a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    } while (det == 0);
    // The moved curve C(A v) has the E6 point at A^{-1}(0:0:1) with tangent y(A v).
    QPoly moved = apply_matrix(cusp, a);
    auto pts = rational_common_zeros({moved.derivative(0), moved.derivative(1), moved.derivative(2)});
    REQUIRE(pts.size() == 1);
    auto lc = localize(moved, pts[0]);
    auto r = classify(lc);
    CHECK(r.type.symbol() == "E_6");
    auto prof = curve_profile(moved);
    REQUIRE(prof.points.size() == 1);
    REQUIRE(prof.points[0].tangent_line.has_value());
    CHECK(proportional(*prof.points[0].tangent_line, apply_matrix(y(), a)));
  }
}

TEST_CASE("common zeros") {
  CHECK_THROWS_AS(rational_common_zeros({x() * y(), y() * z()}), std::domain_error);
  CHECK_THROWS_AS(rational_common_zeros({x() * y(), x() * z()}), std::domain_error);
  auto three = rational_common_zeros({x() * y(), y() * z(), z() * x()});
  CHECK(three.size() == 3);
  auto conics = rational_common_zeros({x().pow(2) - y() * z(), x() * z() - y().pow(2)});
  // (0:0:1) and (1:1:1); the other two intersections are conjugate
  CHECK(conics.size() == 2);
  CHECK(count_common_zeros({x().pow(2) - y() * z(), x() * z() - y().pow(2)}) == 4);
  CHECK(count_common_zeros({x().pow(2) + y().pow(2) - z().pow(2), x() - kc(2) * z()}) == 2);
  CHECK(rational_common_zeros({x().pow(2) + y().pow(2) - z().pow(2), x() - kc(2) * z()}).empty());
  CHECK(count_common_zeros({x(), y()}) == 1);
  CHECK_FALSE(count_common_zeros({x() * y(), x() * z()}).has_value());
}

TEST_CASE("curve profiles") {
  auto lines = curve_profile(x() * y() * (x() + y()) * (x() - y()));
  REQUIRE(lines.points.size() == 1);
  CHECK(lines.points[0].report.type.symbol() == "X_9");
  CHECK(lines.total_milnor_rational == 9);
  CHECK(lines.residual_milnor_budget == 0);
  CHECK(lines.half_log_canonical);

  auto fermat = curve_profile(x().pow(8) + y().pow(8) + z().pow(8));
  CHECK(fermat.points.empty());
  CHECK(fermat.residual_milnor_budget == 0);
  CHECK(fermat.half_log_canonical);

  QPoly three = kc(1);
  for (int l = 1; l <= 3; ++l) three = three * (x() * z() - kc(l) * y().pow(2));
  auto conics = curve_profile(three);
  CHECK(conics.count(SingKind::J10) == 2);
  CHECK(conics.points.size() == 2);
  CHECK(conics.elliptic_counts() == std::array<int, 4>{2, 0, 0, 0});
  CHECK(conics.residual_milnor_budget == 0);
  CHECK(conics.half_log_canonical);

  auto pinch = curve_profile(x().pow(2) * y() * z());
  CHECK(pinch.count(SingKind::DInf) == 2);
  CHECK(pinch.count(SingKind::A) == 1);
  CHECK(pinch.half_log_canonical);
  CHECK_FALSE(pinch.residual_milnor_budget.has_value());

  auto triple = curve_profile(x().pow(3) * y() * (y() - z()) * z());
  CHECK_FALSE(triple.half_log_canonical);

  // X9 at the origin, a rational node and irrational nodes elsewhere
  auto irr = curve_profile((x().pow(2) + y().pow(2)) * (x().pow(2) + kc(2) * y().pow(2)) * (x() + z()) * (y() - z()));
  CHECK(irr.half_log_canonical);
  CHECK(irr.count(SingKind::X) == 1);
  CHECK(irr.count(SingKind::A) == 1);
  CHECK(irr.residual_milnor_budget > 0);

  // Three conjugate line pairs: ordinary triple points at (1:i:0) and (1:-i:0)
  // cannot be classified over Q, so no verdict is certified.
  QPoly pairs = kc(1);
  for (int a = 0; a < 3; ++a) pairs = pairs * ((y() + kc(a) * z()).pow(2) + x().pow(2));
  auto hidden = curve_profile(pairs);
  CHECK(hidden.high_multiplicity_points == 2);
  CHECK_FALSE(hidden.half_log_canonical);

  CHECK_THROWS_AS(curve_profile(x() * y() * z(), {{Rational(1), Rational(1), Rational(1)}}), std::invalid_argument);
  auto hinted = curve_profile(x() * y() * z(), {{Rational(1), Rational(0), Rational(1)}});
  CHECK(hinted.points.size() == 3);
}

TEST_CASE("line arrangements: total Milnor number equals the sum of (k-1)^2") {
  Gen g(29);
  for (int t = 0; t < 12; ++t) {
    int n = static_cast<int>(g.range(3, 6));
    std::vector<QPoly> ls;
    QPoly c = kc(1);
    while (static_cast<int>(ls.size()) < n) {
      QPoly l = random_line(g);
      bool dup = false;
      for (const auto& m : ls) dup = dup || proportional(l, m);
      if (dup) continue;
      ls.push_back(l);
      c = c * l;
    }
    // oracle: group pairwise intersections and count lines through each
    std::vector<Point> meets;
    for (std::size_t i = 0; i < ls.size(); ++i)
      for (std::size_t j = i + 1; j < ls.size(); ++j) {
        Point p = cross(coeffs(ls[i]), coeffs(ls[j]));
        bool seen = false;
        for (const auto& q : meets) seen = seen || same_point(p, q);
        if (!seen) meets.push_back(p);
      }
    long expected = 0;
    for (const auto& p : meets) {
      long through = 0;
      for (const auto& l : ls) through += on_line(p, l);
      expected += (through - 1) * (through - 1);
    }
    auto prof = curve_profile(c);
    CAPTURE(to_string(c));
    CHECK(prof.total_milnor_rational == expected);
    CHECK(prof.residual_milnor_budget == 0);
    CHECK(prof.total_milnor_rational <= (n - 1) * (n - 1));
    CHECK((prof.total_milnor_rational == (n - 1) * (n - 1)) == (meets.size() == 1));
  }
}

TEST_CASE("unions of lines and conics stay within the (d-1)^2 bound") {
  Gen g(41);
  for (int t = 0; t < 8; ++t) {
    QPoly c = kc(1);
    int d = 0;
    int target = static_cast<int>(g.range(4, t < 2 ? 8 : 6));
    while (d < target) {
      if (target - d >= 2 && g.range(0, 1) == 1) {
        QPoly q = g.poly(xyz(), 2, 6);
        QPoly form(xyz());
        for (const auto& [e, co] : q.terms())
          if (total_degree(e) == 2) form.add_term(e, co);
        if (form.is_zero() || !squarefree_decomposition(form).factors.count(1) || gcd(form, c).total_degree() > 0) continue;
        c = c * form;
        d += 2;
      } else {
        QPoly l = random_line(g);
        if (gcd(l, c).total_degree() > 0) continue;
        c = c * l;
        d += 1;
      }
    }
    auto prof = curve_profile(c);
    REQUIRE(prof.residual_milnor_budget.has_value());
    CHECK(prof.residual_milnor_budget.value() >= 0);
    CHECK(prof.total_milnor_rational + *prof.residual_milnor_budget <= (d - 1) * (d - 1));
  }
}
