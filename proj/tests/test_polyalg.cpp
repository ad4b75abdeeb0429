#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "octica/polyalg.hpp"
#include "support.hpp"

using namespace octica;
using testing_support::Gen;

namespace {

const VarList XY{"x", "y"};
QPoly X() { return qvar(XY, "x"); }
QPoly Y() { return qvar(XY, "y"); }
QPoly c(long v) { return qconst(v, XY); }

}  // namespace

TEST_CASE("monomial basis sizes and order") {
  CHECK(monomial_basis(3, 8).size() == 45);
  CHECK(monomial_basis(2, 4).size() == 5);
  auto lin = monomial_basis(3, 1);
  REQUIRE(lin.size() == 3);
  CHECK(lin[0] == Exponents{1, 0, 0});
  CHECK(lin[1] == Exponents{0, 1, 0});
  CHECK(lin[2] == Exponents{0, 0, 1});
  // grevlex: among equal degree, the smaller power of the last variable wins
  auto b = monomial_basis(3, 8);
  CHECK(b[0] == Exponents{8, 0, 0});
  CHECK(b[1] == Exponents{7, 1, 0});
  CHECK(b[2] == Exponents{6, 2, 0});
  CHECK(b[8] == Exponents{0, 8, 0});
  CHECK(b[9] == Exponents{7, 0, 1});
  CHECK(b[44] == Exponents{0, 0, 8});
  for (int d = 0; d <= 12; ++d) CHECK(monomial_basis(3, d).size() == static_cast<std::size_t>((d + 2) * (d + 1) / 2));
}

TEST_CASE("basic operations") {
  QPoly f = X().pow(3) + Y().pow(4);
  CHECK(f.derivative(0) == qconst(3, XY) * X().pow(2));
  VarList ft{"x", "y", "t"};
  QPoly l = qvar(ft, "y") - qvar(ft, "t") * qvar(ft, "x");
  CHECK(l.substitute(2, qconst(0, ft)) == qvar(ft, "y"));
  CHECK(((X().pow(2) + Y()) * c(0)).is_zero());
  CHECK(to_string(f) == "y^4 + x^3");
  CHECK_THROWS_AS(X() + qvar(VarList{"x", "z"}, "z"), VariableMismatch);
}

TEST_CASE("resultant examples") {
  CHECK(resultant(Y() - X(), Y() + X(), 1) == c(2) * X());
  QPoly f = X().pow(2) * Y() + Y().pow(3) - X();
  CHECK(resultant(f, f, 1).is_zero());
  // Res(f,g) = (-1)^(mn) lc(g)^m f(root of g) for g = y - 1.
  QPoly r = resultant(X().pow(2) - Y(), Y() - c(1), 1);
  QPoly by_hand = (X().pow(2) - Y()).substitute(1, c(1));
  CHECK(r == -by_hand);
  CHECK_THROWS_AS(resultant(X(), Y(), 1), std::invalid_argument);
}

TEST_CASE("resultant agrees with the product formula") {
  // f = (y-a)(y-b), g = (y-c): Res = g-roots formula (-1)^(2) * f(c)
  Gen g(7);
  for (int k = 0; k < 20; ++k) {
    Rational a = g.rat(), b = g.rat(), cc = g.rat();
    QPoly f = (Y() - qconst(a, XY) * X()) * (Y() - qconst(b, XY));
    QPoly h = Y() - qconst(cc, XY) * X().pow(2);
    QPoly expected = f.substitute(1, qconst(cc, XY) * X().pow(2));
    CHECK(resultant(f, h, 1) == expected);
  }
}

TEST_CASE("two-variable resultant matches the general elimination path") {
  // Embedding into three variables routes through fraction-free elimination over Q[x, z].
  const VarList XYZ{"x", "y", "z"};
  Gen g(23);
  for (int k = 0; k < 25; ++k) {
    QPoly f = g.poly(XY, 5, 6), h = g.poly(XY, 4, 6);
    if (f.degree_in(1) < 1 || h.degree_in(1) < 1) continue;
    auto up = [&](const QPoly& p) { return p.compose({qvar(XYZ, "x"), qvar(XYZ, "y")}, XYZ); };
    QPoly wide = resultant(up(f), up(h), 1);
    CHECK(up(resultant(f, h, 1)) == wide);
    CHECK(resultant(f, h, 0 + 1) == resultant(h, f, 1) * qconst((f.degree_in(1) * h.degree_in(1)) % 2 ? -1 : 1, XY));
  }
}

TEST_CASE("univariate gcd and squarefree structure") {
  const VarList V{"x"};
  QPoly x = qvar(V, "x"), one = qconst(1, V);
  auto sf = squarefree_decomposition(x.pow(2) * (x - one));
  REQUIRE(sf.factors.size() == 2);
  CHECK(sf.factors.at(1) == x - one);
  CHECK(sf.factors.at(2) == x);
  CHECK(sf.squarefree_part() == x * (x - one));
  CHECK(gcd(x.pow(2) - one, x - one) == x - one);
  auto sq = squarefree_decomposition((x.pow(2) + one).pow(2));
  REQUIRE(sq.factors.size() == 1);
  CHECK(sq.factors.at(2) == x.pow(2) + one);
}

TEST_CASE("multivariate gcd recovers a planted factor") {
  Gen g(11);
  for (int k = 0; k < 30; ++k) {
    QPoly common = g.poly(XY, 3, 3) + X();
    QPoly a = g.poly(XY, 3, 4) + Y().pow(2), b = g.poly(XY, 3, 4) + X().pow(3) + c(1);
    QPoly d = gcd(common * a, common * b);
    CHECK(divides(make_monic(common), d));
    CHECK(divides(d, common * a));
    CHECK(divides(d, common * b));
    // Whatever extra factor d has must divide both cofactors.
    QPoly extra = divide_exact(d, make_monic(common));
    CHECK(divides(extra, a));
    CHECK(divides(extra, b));
  }
}

TEST_CASE("squarefree decomposition reassembles") {
  Gen g(5);
  for (int k = 0; k < 20; ++k) {
    QPoly p1 = g.poly(XY, 2, 3) + X() + c(1), p2 = g.poly(XY, 2, 3) + Y() - c(2);
    QPoly f = qconst(3, XY) * p1 * p2.pow(2);
    auto sf = squarefree_decomposition(f);
    QPoly back = qconst(sf.unit, XY);
    for (const auto& [i, q] : sf.factors) back = back * q.pow(i);
    CHECK(back == f);
    for (const auto& [i, q] : sf.factors) CHECK(gcd(std::vector<QPoly>{q, q.derivative(0), q.derivative(1)}).is_constant());
  }
}

TEST_CASE("resultant vanishes exactly when a common factor exists") {
  Gen g(13);
  for (int k = 0; k < 40; ++k) {
    QPoly a = g.poly(XY, 2, 3) + Y(), b = g.poly(XY, 2, 3) + Y().pow(2) + c(1);
    bool plant = k % 2 == 0;
    QPoly common = Y() - g.poly(XY, 1, 2);
    if (plant) {
      a = a * common;
      b = b * common;
    }
    if (a.degree_in(1) < 1 || b.degree_in(1) < 1) continue;
    bool res_zero = resultant(a, b, 1).is_zero();
    bool shared = gcd(a, b).degree_in(1) > 0;
    CHECK(res_zero == shared);
    if (plant) CHECK(res_zero);
  }
}

TEST_CASE("rational roots are found exactly") {
  const VarList V{"x"};
  QPoly x = qvar(V, "x");
  Gen g(17);
  for (int k = 0; k < 20; ++k) {
    std::vector<Rational> planted;
    QPoly f = qconst(g.range(1, 9), V) * (x.pow(2) + qconst(g.range(1, 7), V));
    for (int i = 0; i < 3; ++i) {
      Rational r = g.rat(40);
      planted.push_back(r);
      f = f * (x - qconst(r, V));
    }
    std::sort(planted.begin(), planted.end());
    planted.erase(std::unique(planted.begin(), planted.end()), planted.end());
    CHECK(rational_roots(f, 0) == planted);
  }
  CHECK(rational_roots(x.pow(2) - qconst(2, V), 0).empty());
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(RationalMatrix::identity(3)).empty());
  CHECK(kernel_basis(RationalMatrix(2, 4)).size() == 4);
  Gen g(3);
  for (int k = 0; k < 30; ++k) {
    std::size_t r = static_cast<std::size_t>(g.range(1, 6)), cc = static_cast<std::size_t>(g.range(1, 8));
    RationalMatrix m(r, cc);
    for (auto& v : m.a) v = g.range(0, 2) == 0 ? Rational(0) : g.rat();
    auto ker = kernel_basis(m);
    CHECK(ker.size() == cc - rank(m));
    for (const auto& v : ker)
      for (const auto& e : multiply(m, v)) CHECK(e == 0);
  }
}

TEST_CASE("ring laws on random operands") {
  Gen g(1);
  for (int k = 0; k < 100; ++k) {
    QPoly a = g.poly(XY, 3, 4), b = g.poly(XY, 3, 4), d = g.poly(XY, 3, 4);
    CHECK((a + b) + d == a + (b + d));
    CHECK((a * b) * d == a * (b * d));
    CHECK(a * (b + d) == a * b + a * d);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    // substitution of y commutes with d/dx
    QPoly s = g.poly(XY, 2, 3).substitute(1, c(0));
    CHECK(a.substitute(1, s).derivative(0) == a.derivative(0).substitute(1, s) + (a.derivative(1).substitute(1, s) * s.derivative(0)));
    QPoly s2 = g.poly(XY, 2, 3).substitute(0, c(0));
    CHECK(a.substitute(1, s2).derivative(0) == a.derivative(0).substitute(1, s2));
  }
}

TEST_CASE("fraction-free echelon and determinant over Q[t]") {
  const VarList T{"t"};
  QPoly t = qvar(T, "t"), one = qconst(1, T);
  PolyMatrix d(2, 2);
  d(0, 0) = t;
  d(0, 1) = QPoly(T);
  d(1, 0) = QPoly(T);
  d(1, 1) = t;
  CHECK(determinant(d) == t.pow(2));
  PolyMatrix m(2, 3);
  m(0, 0) = t;
  m(0, 1) = one;
  m(0, 2) = t + one;
  m(1, 0) = t.pow(2);
  m(1, 1) = t;
  m(1, 2) = t.pow(2) + t;
  CHECK(fraction_free_echelon(m).pivot_cols.size() == 1);
}
