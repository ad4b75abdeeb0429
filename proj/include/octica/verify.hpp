#pragma once

#include "octica/paramfam.hpp"
#include "octica/singclass.hpp"

#include <optional>
#include <string>
#include <vector>

namespace octica {

struct LemmaCheckResult {
  std::string lemma_id;
  std::size_t instances_checked = 0;
  bool all_passed = true;
  std::optional<QPoly> counterexample;
  std::vector<std::string> failures;

  // Counts one instance; the first failing curve becomes the counterexample.
  void record(bool ok, const QPoly& curve, const std::string& what);
  void merge(const LemmaCheckResult& other);
};

// Local intersection multiplicity of two plane curves at p; 0 off either
// curve, nullopt when they share a component through p.
std::optional<long> intersection_multiplicity(const QPoly& f, const QPoly& g, const Point& p);

// Sum of intersection multiplicities over the rational common points never
// exceeds the product of degrees.
LemmaCheckResult check_bezout(const std::vector<std::pair<QPoly, QPoly>>& pairs);

// Degree bounds for curves with n-fold and [n;n]-points, checked on the
// rational singular points of each curve.
LemmaCheckResult check_degree_bounds(const std::vector<QPoly>& curves);
// Linear systems that the degree bounds force to contain a line or to be non-reduced.
LemmaCheckResult check_degree_bound_systems();
// Both of the above, on the normal witness octics.
LemmaCheckResult check_degree_bounds();

// A reduced curve given by its components, each smooth and irreducible.
struct ComponentUnion {
  std::string name;
  std::vector<QPoly> components;
  QPoly curve() const;
};
std::vector<ComponentUnion> milnor_family();
// Total Milnor bound with the concurrent-lines equality case, and the Euler
// characteristic of the normalisation against the sum of genera.
LemmaCheckResult check_milnor_lemma(const std::vector<ComponentUnion>& curves);
// The bound alone, for arbitrary reduced curves.
LemmaCheckResult check_milnor_bound(const std::vector<QPoly>& curves);
// milnor_family plus the bound on every reduced witness octic.
LemmaCheckResult check_milnor_lemma();

// Emptiness of the four-elliptic-point strata that carry no component, as
// computational certificates, with an inhabited control.
LemmaCheckResult check_nonexistence_suite();
LemmaCheckResult check_four_33_points();

std::vector<std::string> lemma_ids();
// Throws std::invalid_argument for unknown ids.
LemmaCheckResult run_lemma(const std::string& id);

}  // namespace octica
