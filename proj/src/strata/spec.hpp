#pragma once

#include "octica/strata.hpp"

#include <optional>
#include <string>
#include <vector>

namespace octica::detail {

// Anchored realisation of a component: B' is a member of the linear system
// cut out by `conditions` in degree `degree`, the octic is B' * B''^2.
struct ComponentSpec {
  StratumLabel label;
  int degree = 8;
  std::vector<AnchoredCondition> conditions;
  Configuration configuration;
  // B'' when it is anchored; otherwise drawn at random in degree label.n.
  std::optional<QPoly> double_curve;
};

ComponentSpec component_spec(const StratumLabel& component);

}  // namespace octica::detail
