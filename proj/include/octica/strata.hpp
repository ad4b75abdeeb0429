#pragma once

#include "octica/singclass.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace octica {

// n is the degree of the doubled component B''; a, b, c, d count J_10,
// J_2,p, X_9 and the other X/Y points. The tag marks a component: "", "'",
// "''", "'''", optionally refined as "''[1]", "''[1b]", "''[2]", "''[2b]"
// (the point whose type is named carries the tangent, see README).
struct StratumLabel {
  int n = 0;
  int a = 0, b = 0, c = 0, d = 0;
  std::string tag;

  int elliptic() const { return a + b + c + d; }
  bool normal() const { return n == 0; }
  StratumLabel stratum() const { return {n, a, b, c, d, ""}; }
  // Unicode display form, e.g. N_{11̄2}'' or M_{1;2̄}.
  std::string name() const;
  // ASCII form used by the CLI and DOT output, e.g. N_11b2_pp or M_1_2b.
  std::string ascii() const;
  auto operator<=>(const StratumLabel&) const = default;
};
StratumLabel parse_label(const std::string& ascii);

// 36 - 9a - 10b - 8c - 9d; throws std::invalid_argument for n > 0.
int expected_dimension(const StratumLabel& label);

struct HodgeType {
  int r = 0;
  int s = 0;
  std::string name() const;
  auto operator<=>(const HodgeType&) const = default;
};
// nullopt for non-normal labels.
std::optional<HodgeType> hodge_type(const StratumLabel& label);
// Known possibilities for the non-normal strata where they are recorded.
std::vector<HodgeType> possible_hodge_types(const StratumLabel& label);
bool hodge_leq(const HodgeType& lo, const HodgeType& hi);

// Throws std::out_of_range for labels outside the catalogue.
std::string birational_type(const StratumLabel& component);

// Label-level degeneration rule between normal labels (reflexive).
bool may_degenerate(const StratumLabel& from, const StratumLabel& to);

struct Configuration {
  std::vector<Point> points;
  // Fixed curves (lines, conics, ...) given by their equations.
  std::vector<QPoly> curves;
  int free_parameters = 0;
  std::string describe() const;
};
// 8 minus the rank of the infinitesimal action of sl_3 on the configuration.
int stabilizer_dimension(const Configuration& config);
// q + (k - 1) - s for a linear system with k-dimensional space of forms.
long stratum_dimension(const Configuration& config, std::size_t k);

struct DimensionPipeline {
  StratumLabel label;
  int degree = 8;
  std::vector<AnchoredCondition> conditions;
  Configuration configuration;
};
struct DimensionResult {
  std::size_t k = 0;
  int stabilizer = 0;
  long dimension = 0;
};
DimensionResult run_pipeline(const DimensionPipeline& pipeline);
// Every component with an anchored pipeline, normal and non-normal.
std::vector<DimensionPipeline> dimension_pipelines();
std::optional<DimensionPipeline> dimension_pipeline(const StratumLabel& component);

// The tabulated values used by the non-normal strata.
int table4_dimension(const StratumLabel& label);

struct StratumRecord {
  StratumLabel label;
  int dimension = 0;
  std::string dimension_source;
  std::optional<HodgeType> hodge;
  std::vector<HodgeType> possible_hodge;
  std::string birational_type;
  std::string configuration;
  std::string witness;
};
struct EmptyStratum {
  StratumLabel label;
  std::string reason;
};
struct Catalogue {
  std::vector<StratumRecord> components;
  std::vector<EmptyStratum> empty;
  std::size_t stratum_count() const;
  std::size_t normal_stratum_count() const;
  std::size_t normal_component_count() const;
  // Number of components of every inhabited normal stratum, descending.
  std::vector<int> normal_component_multiset() const;
};
// Lookup-backed: witnesses come from the stored fixtures and are not re-validated.
Catalogue build_catalogue();
std::vector<StratumLabel> catalogue_components();

struct WitnessCheck {
  bool valid = false;
  std::string reason;
  CurveSingularityProfile profile;
};
// Does the octic realise the component: types and counts, B'' degree and the
// incidences that distinguish the tagged components.
WitnessCheck validate_witness(const StratumLabel& component, const QPoly& octic);
// The stored fixture for a component.
QPoly witness(const StratumLabel& component);
// Members of the component's linear system drawn from the seeded sequence;
// the first that validates is returned.
std::optional<QPoly> search_witness(const StratumLabel& component, int max_candidates = 20);

struct DegenerationGraph {
  std::vector<StratumLabel> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::string to_dot() const;
};
// The components with simply elliptic points only and their adjacencies.
DegenerationGraph simply_elliptic_diagram();
// Covering relations of the label-level rule on the inhabited normal strata.
DegenerationGraph label_degeneration_graph();

}  // namespace octica
