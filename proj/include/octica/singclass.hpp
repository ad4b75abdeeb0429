#pragma once

#include "octica/linsys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace octica {

// Germs live in the frame {x, y} with the singular point at the origin.
VarList local_frame();

struct LocalCurve {
  QPoly f_local;
  Point original_point{};
  // Columns map local coordinates (x, y, 1) to the original ones.
  std::array<std::array<Rational, 3>, 3> transport{};
};

// Throws std::invalid_argument if p is not on C.
LocalCurve localize(const QPoly& form, const Point& p);

// Lowest total degree of a term; 0 if the germ does not pass through the origin.
int multiplicity(const QPoly& germ);

struct TangentCone {
  QPoly form;
  // Exponent -> product of the factors occurring with that exponent.
  std::map<int, QPoly> factors;
  bool ordinary = false;
  // (exponent, degree of the squarefree factor) pairs, ascending by exponent.
  std::vector<std::pair<int, int>> structure() const;
};
TangentCone tangent_cone_structure(const QPoly& germ);

struct BlowUpPoint {
  std::array<Rational, 2> direction;
  // Strict transform at the point of the exceptional line for this direction.
  QPoly germ;
  int multiplicity = 0;
};
struct BlowUp {
  int multiplicity = 0;
  QPoly chart_x;  // f(x, x*y) / x^m
  QPoly chart_y;  // f(x*y, y) / y^m
  std::vector<BlowUpPoint> rational_points;
  int distinct_directions = 0;
};
BlowUp blow_up_strict_transform(const QPoly& germ);
// Strict transform at the direction (a:b) moved to the origin.
QPoly strict_transform_at(const QPoly& germ, const std::array<Rational, 2>& direction);

// Local intersection multiplicity at the origin; nullopt when the germs share a component there.
std::optional<long> intersection_multiplicity(const QPoly& f, const QPoly& g);
// nullopt means infinite (non-isolated).
std::optional<long> milnor_number(const QPoly& germ);

enum class SingKind { Smooth, A, D, E, X, Y, J10, J2, AInf, DInf, J2Inf, XInf, YInf, YInfInf, NotHLC };

struct SingType {
  SingKind kind = SingKind::Smooth;
  int p = 0;
  int q = 0;
  std::string symbol() const;
  bool half_log_canonical() const { return kind != SingKind::NotHLC; }
  bool simple() const { return kind == SingKind::Smooth || kind == SingKind::A || kind == SingKind::D || kind == SingKind::E; }
  bool isolated() const;
  // Degree of the elliptic double-cover singularity: 1 for J types, 2 for X and Y types, 0 otherwise.
  int elliptic_degree() const;
  bool simply_elliptic() const { return kind == SingKind::J10 || (kind == SingKind::X && p == 9); }
  bool operator==(const SingType&) const = default;
};
SingType parse_sing_type(const std::string& symbol);

struct SingularityReport {
  SingType type;
  int multiplicity = 0;
  std::optional<long> milnor;
  std::optional<long> table_mu;
  std::optional<int> branches;
  std::optional<QPoly> distinguished_tangent;
  std::string reason;
};
SingularityReport classify(const QPoly& germ);
inline SingularityReport classify(const LocalCurve& g) { return classify(g.f_local); }

// All rational points where the forms vanish together; throws std::domain_error
// if the common zero set is a curve.
std::vector<Point> rational_common_zeros(const std::vector<QPoly>& forms);
// Number of distinct common zeros over the algebraic closure, in generic coordinates.
std::optional<long> count_common_zeros(const std::vector<QPoly>& forms);

// Sum of the Milnor numbers over all singular points, rational or not;
// nullopt for non-reduced curves.
std::optional<long> total_milnor_number(const QPoly& form);

struct PointReport {
  Point point;
  SingularityReport report;
  std::optional<QPoly> tangent_line;  // distinguished tangent as a projective line
};

struct CurveSingularityProfile {
  int degree = 0;
  std::vector<PointReport> points;
  // Forms occurring with exponent >= 2 in the squarefree decomposition.
  std::map<int, QPoly> multiple_components;
  long total_milnor_rational = 0;
  std::optional<long> residual_milnor_budget;
  std::optional<long> high_multiplicity_points;
  bool half_log_canonical = false;
  std::string verdict;

  int count(SingKind kind) const;
  // Counts for the label (a, b, c, d): J10, J2, X9, other X and Y.
  std::array<int, 4> elliptic_counts() const;
};
CurveSingularityProfile curve_profile(const QPoly& form, const std::vector<Point>& hints = {});

}  // namespace octica
