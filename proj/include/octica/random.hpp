#pragma once

#include <cstdint>
#include <random>

namespace octica {

// Seed shared by every randomised routine; the CLI overrides it from --seed or OCTICA_SEED.
std::uint64_t global_seed();
void set_global_seed(std::uint64_t seed);

// Generator derived from the global seed and a per-call-site salt.
std::mt19937_64 seeded_rng(std::uint64_t salt);

// Integer in [lo, hi] from raw generator output, identical on every platform.
inline long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace octica
