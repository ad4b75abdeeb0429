#pragma once

#include "octica/polyalg.hpp"

#include <array>
#include <string>
#include <vector>

namespace octica {

using Point = std::array<Rational, 3>;

std::string to_string(const Point& p);
bool same_point(const Point& a, const Point& b);
bool on_line(const Point& p, const QPoly& line);

// Linear form a*x + b*y + c*z in the frame x,y,z.
QPoly linear_form(const Rational& a, const Rational& b, const Rational& c);
std::array<Rational, 3> linear_coeffs(const QPoly& line);

class AnchorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct AnchoredCondition {
  enum class Kind {
    Multiplicity,    // (x,y)^order at point
    NNPoint,         // (x^2, tangent)^order at point
    ContainsCurve,   // form^order divides
    ConeMultiple,    // multiplicity >= order and tangent^cone_power divides the tangent cone
    NNDegenerate,    // NNPoint whose strict-transform cone has a double root at second_order
  };
  Kind kind = Kind::Multiplicity;
  Point point{};
  QPoly tangent;
  QPoly form;
  int order = 0;
  int cone_power = 0;
  Rational second_order;

  static AnchoredCondition multiplicity(const Point& p, int m);
  static AnchoredCondition nn_point(const Point& p, const QPoly& tangent, int n);
  static AnchoredCondition contains_curve(const QPoly& form, int mult);
  static AnchoredCondition cone_multiple(const Point& p, const QPoly& line, int m, int power);
  static AnchoredCondition nn_degenerate(const Point& p, const QPoly& tangent, int n, const Rational& s);

  // Throws AnchorError on inconsistent data.
  void validate() const;
  std::string describe() const;
};

// Rows are linear functionals on coefficient vectors indexed by monomial_basis(3, degree).
struct ConditionSystem {
  int degree = 0;
  RationalMatrix constraint_matrix;
};

struct LinearSystem {
  int degree = 0;
  std::vector<QPoly> basis;
  std::vector<RationalVector> basis_vectors;
  std::size_t dim_forms = 0;
  long dim_projective = -1;
};

// Projective change of coordinates: columns a1, a2, a3 with a3 = p and,
// when a tangent is given, tangent(a1) = 0 and tangent(a2) != 0. Composing a
// form with this matrix moves p to (0:0:1) and the tangent to a multiple of y.
std::array<std::array<Rational, 3>, 3> anchor_frame(const Point& p, const QPoly* tangent);
QPoly apply_matrix(const QPoly& f, const std::array<std::array<Rational, 3>, 3>& a);

// Coefficient vector of a degree-d form in the monomial basis and back.
RationalVector coefficient_vector(const QPoly& f, int degree);
QPoly form_from_vector(const RationalVector& v, int degree);

ConditionSystem condition_system(const std::vector<AnchoredCondition>& conditions, int degree);
RationalMatrix condition_rows(const AnchoredCondition& c, int degree);

LinearSystem condition_ideal_graded_piece(const std::vector<AnchoredCondition>& conditions, int degree);

// Sextics with a [3;3]-point at p with tangent l.
LinearSystem sextic_33_fixed_tangent(const Point& p, const QPoly& tangent);

// Largest k with line^k dividing f; throws on a zero form.
int divisibility_multiplicity(const QPoly& f, const QPoly& line);

// Is the monomial x^a y^b a member of (x^2, y)^n?
inline bool in_nn_ideal(int a, int b, int n) { return b + a / 2 >= n; }

}  // namespace octica
