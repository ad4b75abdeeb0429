#pragma once

#include "octica/poly.hpp"

#include <cstdint>
#include <random>

namespace testing_support {

using namespace octica;

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  long range(long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Rational rat(long span = 5) {
    Rational r(range(-span, span), range(1, 3));
    r.canonicalize();
    return r;
  }
  QPoly poly(const VarList& vars, int max_deg, int max_terms) {
    QPoly p(vars);
    int n = static_cast<int>(range(0, max_terms));
    for (int k = 0; k < n; ++k) {
      Exponents e(vars.size(), 0);
      int budget = static_cast<int>(range(0, max_deg));
      for (int i = 0; i < budget; ++i) ++e[range(0, static_cast<long>(vars.size()) - 1)];
      p.add_term(e, rat());
    }
    return p;
  }
};

}  // namespace testing_support
