#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "octica/linsys.hpp"
#include "support.hpp"

using namespace octica;
using testing_support::Gen;

namespace {

QPoly x() { return qvar(xyz(), "x"); }
QPoly y() { return qvar(xyz(), "y"); }
QPoly z() { return qvar(xyz(), "z"); }
const Point O{Rational(0), Rational(0), Rational(1)};
const Point Q{Rational(1), Rational(0), Rational(0)};

// All partial derivatives of order < m vanish at p (direct evaluation).
bool jets_vanish(const QPoly& f, const Point& p, int m) {
  std::vector<QPoly> layer{f};
  std::vector<Rational> pt(p.begin(), p.end());
  for (int k = 0; k < m; ++k) {
    std::vector<QPoly> next;
    for (const auto& g : layer) {
      if (evaluate(g, pt) != 0) return false;
      for (std::size_t v = 0; v < 3; ++v) next.push_back(g.derivative(v));
    }
    layer = std::move(next);
  }
  return true;
}

Point random_point(Gen& g) {
  for (;;) {
    Point p{g.rat(), g.rat(), g.rat()};
    if (p[0] != 0 || p[1] != 0 || p[2] != 0) return p;
  }
}

}  // namespace

TEST_CASE("dimension examples") {
  auto quad = condition_ideal_graded_piece({AnchoredCondition::multiplicity(O, 4)}, 8);
  CHECK(quad.dim_forms == 35);
  CHECK(quad.dim_projective == 34);
  // [3;3] at (0:0:1) with tangent y: monomials x^a y^b outside (x^6, x^4 y, x^2 y^2, y^3)
  int outside = 0;
  for (int b = 0; b <= 8; ++b)
    for (int a = 0; a + b <= 8; ++a)
      if (!(a >= 6 || (a >= 4 && b >= 1) || (a >= 2 && b >= 2) || b >= 3)) ++outside;
  CHECK(outside == 12);
  CHECK(condition_ideal_graded_piece({AnchoredCondition::nn_point(O, y(), 3)}, 8).dim_forms == static_cast<std::size_t>(45 - outside));
  CHECK(condition_ideal_graded_piece({AnchoredCondition::multiplicity(O, 4)}, 6).dim_projective == 17);
  CHECK(condition_ideal_graded_piece({}, 8).dim_forms == 45);
  CHECK(sextic_33_fixed_tangent(O, y()).dim_projective == 15);
  // Two [3;3]-points with fixed tangents: triples of conics from the pencil through both, a P^3.
  // The torus fixing both flags has dimension 2, leaving the one-dimensional moduli count.
  auto two = condition_ideal_graded_piece({AnchoredCondition::nn_point(O, x(), 3), AnchoredCondition::nn_point(Q, z(), 3)}, 6);
  CHECK(two.dim_projective == 3);
  CHECK(two.dim_projective - 2 == 1);
}

TEST_CASE("anchor errors") {
  CHECK_THROWS_AS(AnchoredCondition::nn_point(O, x() + z(), 3), AnchorError);
  CHECK_THROWS_AS(AnchoredCondition::multiplicity(Point{Rational(0), Rational(0), Rational(0)}, 2), AnchorError);
  CHECK_THROWS_AS(AnchoredCondition::nn_point(O, x() * y(), 3), AnchorError);
}

TEST_CASE("divisibility multiplicity") {
  CHECK(divisibility_multiplicity(y().pow(2) * (x().pow(6) + z().pow(6)), y()) == 2);
  CHECK(divisibility_multiplicity(x().pow(8), y()) == 0);
  QPoly l = x() - qconst(2, xyz()) * y() + z();
  CHECK(divisibility_multiplicity(l.pow(3) * x().pow(5), l) == 3);
}

TEST_CASE("multiplicity conditions are independent for d >= m") {
  for (int d = 2; d <= 10; ++d)
    for (int m = 2; m <= d; ++m)
      CHECK(condition_ideal_graded_piece({AnchoredCondition::multiplicity(Point{Rational(2), Rational(-1), Rational(3)}, m)}, d).dim_forms ==
            static_cast<std::size_t>(binomial(d + 2, 2) - binomial(m + 1, 2)));
}

TEST_CASE("basis forms satisfy their conditions") {
  Gen g(21);
  for (int k = 0; k < 5; ++k) {
    Point p = random_point(g), q = random_point(g);
    if (same_point(p, q)) continue;
    auto ls = condition_ideal_graded_piece({AnchoredCondition::multiplicity(p, 4), AnchoredCondition::multiplicity(q, 3)}, 7);
    CHECK(ls.dim_forms == static_cast<std::size_t>(36 - 10 - 6));
    for (const auto& f : ls.basis) {
      CHECK(jets_vanish(f, p, 4));
      CHECK(jets_vanish(f, q, 3));
    }
    QPoly generic(xyz());
    for (const auto& f : ls.basis) generic += qconst(g.rat(), xyz()) * f;
    CHECK_FALSE(jets_vanish(generic, p, 5));
  }
  // [3;3] members: the curve through p with local equation in (x^2, y)^3 vanishes to order 3.
  auto nn = condition_ideal_graded_piece({AnchoredCondition::nn_point(Q, y() - z(), 3)}, 8);
  CHECK(nn.dim_forms == 33);
  for (const auto& f : nn.basis) {
    CHECK(jets_vanish(f, Q, 3));
    // restriction to the tangent line vanishes to order 6 at the point
    QPoly r = f.substitute(1, z()).substitute(0, qconst(1, xyz()));
    CHECK((r.is_zero() || r.low_degree() >= 6));
  }
}

TEST_CASE("contained curves") {
  QPoly conic = x() * z() - y().pow(2);
  auto ls = condition_ideal_graded_piece({AnchoredCondition::contains_curve(conic, 2)}, 6);
  CHECK(ls.dim_forms == 6);
  for (const auto& f : ls.basis) CHECK(divides(conic.pow(2), f));
  CHECK(condition_ideal_graded_piece({AnchoredCondition::contains_curve(conic, 4)}, 6).dim_forms == 0);
}

TEST_CASE("cone and degenerate conditions") {
  // mult 4 with cone divisible by y^2: 35 - 2
  CHECK(condition_ideal_graded_piece({AnchoredCondition::cone_multiple(O, y(), 4, 2)}, 8).dim_forms == 33);
  auto deg = condition_ideal_graded_piece({AnchoredCondition::nn_degenerate(O, y(), 3, Rational(1))}, 6);
  // fixed second-order direction: one fewer dimension than the family over all directions (14)
  CHECK(deg.dim_projective == 13);
  // every member has weighted initial form with a double root at u = 1
  for (const auto& f : deg.basis) {
    Rational p0 = 0, p1 = 0;
    for (int b = 0; b <= 3; ++b) {
      Rational c = f.coeff({6 - 2 * b, b, b});
      p0 += c;
      p1 += Rational(b) * c;
    }
    CHECK(p0 == 0);
    CHECK(p1 == 0);
  }
}

TEST_CASE("transport invariance of dimensions") {
  Gen g(99);
  auto random_projectivity = [&g]() {
    for (;;) {
      std::array<std::array<Rational, 3>, 3> a;
      for (auto& r : a)
        for (auto& e : r) e = g.rat();
      Rational det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                     a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
      if (det != 0) return a;
    }
  };
  auto move_point = [](const std::array<std::array<Rational, 3>, 3>& a, const Point& p) {
    Point q;
    for (std::size_t i = 0; i < 3; ++i) q[i] = a[i][0] * p[0] + a[i][1] * p[1] + a[i][2] * p[2];
    return q;
  };
  struct Config {
    std::vector<AnchoredCondition> conds;
    int degree;
  };
  const Point R{Rational(0), Rational(1), Rational(0)};
  std::vector<Config> configs{
      {{AnchoredCondition::multiplicity(O, 4)}, 8},
      {{AnchoredCondition::nn_point(O, y(), 3)}, 8},
      {{AnchoredCondition::nn_point(O, y(), 3), AnchoredCondition::multiplicity(Q, 4)}, 8},
      {{AnchoredCondition::nn_point(O, x(), 3), AnchoredCondition::nn_point(Q, z(), 3)}, 6},
      {{AnchoredCondition::multiplicity(O, 3), AnchoredCondition::multiplicity(Q, 3), AnchoredCondition::multiplicity(R, 2)}, 6},
  };
  for (const auto& cfg : configs) {
    std::size_t base = condition_ideal_graded_piece(cfg.conds, cfg.degree).dim_forms;
    for (int k = 0; k < 10; ++k) {
      auto a = random_projectivity();
      // lines transform by the inverse transpose: l'(v) = l(a^{-1} v), i.e. l' = l composed with a^{-1}
      RationalMatrix am(3, 6);
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) am(i, j) = a[i][j];
        am(i, 3 + i) = 1;
      }
      RationalMatrix inv = rref(am);
      std::array<std::array<Rational, 3>, 3> ai;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) ai[i][j] = inv(i, 3 + j);
      std::vector<AnchoredCondition> moved;
      for (auto c : cfg.conds) {
        c.point = move_point(a, c.point);
        if (!c.tangent.is_zero()) c.tangent = apply_matrix(c.tangent, ai);
        c.validate();
        moved.push_back(c);
      }
      CHECK(condition_ideal_graded_piece(moved, cfg.degree).dim_forms == base);
    }
  }
}

TEST_CASE("an extra condition never enlarges the system") {
  Gen g(5);
  for (int k = 0; k < 10; ++k) {
    std::vector<AnchoredCondition> conds;
    std::size_t prev = 45;
    for (int j = 0; j < 4; ++j) {
      conds.push_back(AnchoredCondition::multiplicity(random_point(g), static_cast<int>(g.range(1, 4))));
      std::size_t now = condition_ideal_graded_piece(conds, 8).dim_forms;
      CHECK(now <= prev);
      prev = now;
    }
  }
}
