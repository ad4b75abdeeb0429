#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "octica/strata.hpp"
#include "octica/verify.hpp"
#include "support.hpp"

using namespace octica;
using testing_support::Gen;

namespace {

const QPoly x = qvar(xyz(), "x");
const QPoly y = qvar(xyz(), "y");
const QPoly z = qvar(xyz(), "z");
QPoly k(long v) { return qconst(Rational(v), xyz()); }
const Point O{Rational(0), Rational(0), Rational(1)};

std::string failures(const LemmaCheckResult& r) {
  std::string out;
  for (const auto& f : r.failures) out += f + "\n";
  return out;
}

}  // namespace

TEST_CASE("intersection multiplicity at a point") {
  CHECK(intersection_multiplicity(y * z - x * x, y, O) == 2);  // conic and its tangent
  CHECK(intersection_multiplicity(x, y, O) == 1);
  CHECK(intersection_multiplicity(x - z, y, O) == 0);
  CHECK_FALSE(intersection_multiplicity(x * y, x * (x + y), O));
  // Three conics tangent along y = 0 at O: the tangent meets their union with multiplicity 6 > 3.
  QPoly c = (y * z - x * x) * (y * z - k(2) * x * x) * (y * z - k(3) * x * x);
  CHECK(intersection_multiplicity(c, y, O) == 6);
  // y^2 z^2 - x^4 cut by x - y: local equation y^2 - x^4 on x = y gives order 2.
  CHECK(intersection_multiplicity(y * y * z * z - x.pow(4), x - y, O) == 2);
}

TEST_CASE("Bezout bound holds on random products of lines and conics") {
  Gen g(11);
  std::vector<std::pair<QPoly, QPoly>> pairs;
  auto line = [&] { return linear_form(Rational(g.range(-3, 3)), Rational(g.range(-3, 3)), Rational(g.range(-3, 3))); };
  for (int i = 0; i < 40; ++i) {
    QPoly f = line() * line(), h = line() * line() * line();
    if (f.is_zero() || h.is_zero() || f.total_degree() != 2 || h.total_degree() != 3) continue;
    pairs.emplace_back(f, h);
  }
  auto r = check_bezout(pairs);
  CHECK(r.all_passed);
  CHECK_FALSE(r.counterexample);
}

TEST_CASE("linear systems forced by the degree bounds") {
  auto r = check_degree_bound_systems();
  CHECK(r.instances_checked == 8);
  INFO(failures(r));
  CHECK(r.all_passed);
}

TEST_CASE("degree bounds on witness octics with several elliptic points") {
  std::vector<QPoly> curves;
  for (const char* s : {"N_111_p", "N_111_pp", "N_1112_p", "N_1112_pp", "N_112_ppp", "N_1b1b1b_pp", "N_11b2_pp1b"})
    curves.push_back(witness(parse_label(s)));
  auto r = check_degree_bounds(curves);
  INFO(failures(r));
  CHECK(r.all_passed);
  CHECK(r.instances_checked >= curves.size());
}

TEST_CASE("degree bounds flag a non-reduced curve") {
  auto r = check_degree_bounds({x * x * y * z * (x + y + z).pow(5)});
  CHECK_FALSE(r.all_passed);
  CHECK(r.counterexample);
}

TEST_CASE("Milnor lemma on the component family") {
  auto fam = milnor_family();
  auto r = check_milnor_lemma(fam);
  INFO(failures(r));
  CHECK(r.all_passed);
  for (const auto& u : fam) {
    auto mu = total_milnor_number(u.curve());
    REQUIRE(mu);
    int d = u.curve().total_degree();
    if (u.name.find("concurrent") != std::string::npos) CHECK(*mu == (d - 1) * (d - 1));
    else CHECK(*mu < (d - 1) * (d - 1));
  }
}

TEST_CASE("Milnor totals of specific unions") {
  CHECK(total_milnor_number(x * y * (x - y) * (x + y)) == 9);
  QPoly three = (x * y - z * z) * (x * y - k(2) * z * z) * (x * y - k(3) * z * z);
  CHECK(total_milnor_number(three) == 20);
  // Normalisation is three rational curves; each J10 has three branches.
  CHECK((3 - 6) * 6 + 2 * (10 + 3 - 1) == 3 * 2);
  CHECK(total_milnor_number(x.pow(8) + y.pow(8) + z.pow(8)) == 0);
  CHECK_FALSE(total_milnor_number(x * x * y));
}

TEST_CASE("Milnor bound rejects non-reduced input") {
  auto r = check_milnor_bound({x * x * y});
  CHECK_FALSE(r.all_passed);
}

TEST_CASE("nonexistence suite") {
  auto r = check_nonexistence_suite();
  INFO(failures(r));
  CHECK(r.all_passed);
  CHECK(r.instances_checked == 2 + 20 + 1 + 3);
}

TEST_CASE("lemma dispatch") {
  CHECK(lemma_ids().size() == 5);
  CHECK(run_lemma("four-33-points").all_passed);
  CHECK_THROWS_AS(run_lemma("no-such-lemma"), std::invalid_argument);
}
