#pragma once

#include "octica/linsys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace octica {

// Matrix over Q[params]; entries live in the params frame.
struct ParamMatrix {
  VarList params;
  PolyMatrix m;
};

// Forms sum_i a_i * basis[i] whose basis depends polynomially on params.
struct UniversalFamily {
  VarList params;
  int degree = 0;
  std::vector<PPoly> basis;

  std::size_t size() const { return basis.size(); }
  // Coefficient matrix: row = monomial of monomial_basis(3, degree), column = family member.
  PolyMatrix coefficient_matrix() const;
  QPoly member(const RationalVector& a, const std::vector<Rational>& param_values) const;
};

// Basis of `base` composed with the substitution x,y,z -> images (forms over Q[params]).
UniversalFamily transported_family(const LinearSystem& base, const std::vector<PPoly>& images, const VarList& params);

// Forms with an [n;n]-point at (0:0:1) whose distinguished tangent is y - t*x.
UniversalFamily moving_tangent_family(int n, int degree);

ParamMatrix build_condition_matrix(const UniversalFamily& family, const std::vector<AnchoredCondition>& extra);

RationalMatrix specialize(const ParamMatrix& m, const std::vector<Rational>& values);
std::size_t generic_rank(const ParamMatrix& m);

struct RankDropLocus {
  std::size_t generic_rank = 0;
  // Monic gcd of the maximal nonvanishing minors; constant 1 means no drop.
  QPoly minor_gcd;
  // Several parameters: the minors examined (capped); one parameter: empty.
  std::vector<QPoly> minors;
  bool complete = true;
  // One parameter: rational values where the rank drops.
  std::vector<Rational> rational_points;
  bool empty() const { return minor_gcd.is_constant(); }
};
RankDropLocus rank_drop_locus(const ParamMatrix& m, std::size_t max_minors = 4000);

struct KernelComparison {
  std::vector<RationalVector> special_kernel;
  std::vector<RationalVector> limit_kernel;
  bool inclusion_holds = false;
  bool strict = false;
  int saturation_steps = 0;
};
// Throws std::logic_error if the limit kernel is not contained in the special one.
KernelComparison compare_kernels_at(const ParamMatrix& m, const std::vector<Rational>& point);

struct SplitReport {
  bool split = false;
  int special_multiplicity = 0;
  int limit_multiplicity = 0;
};
SplitReport component_split_report(const UniversalFamily& family, const KernelComparison& comparison,
                                   const std::vector<Rational>& point, const QPoly& witness_line);

class ConicError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ConicConstraint {
  Point point;
  std::optional<QPoly> tangent;
};
// The unique conic meeting exactly five linear conditions, scaled to coprime
// integer coefficients with positive leading coefficient.
QPoly conic_through(const std::vector<ConicConstraint>& constraints);

struct FourPointSetup {
  Point p1, p2, p3;
  QPoly l1, l2;
  // Replaces the tangent at p3 induced by C0 (used as a negative control).
  std::optional<QPoly> l3_override;
};
FourPointSetup default_four_point_setup();

struct FourPointCertificate {
  QPoly c0;
  QPoly l3;
  // Coincidence conditions on p4 = (u:v:1).
  std::vector<QPoly> minors;
  QPoly common_factor;
  // Common zeros of the minors off the common factor.
  std::vector<std::array<Rational, 2>> residual_points;
  bool residual_all_rational = true;
  bool certified = false;
  std::string summary;
};
FourPointCertificate verify_no_four_33_points(const FourPointSetup& setup = default_four_point_setup());

}  // namespace octica
