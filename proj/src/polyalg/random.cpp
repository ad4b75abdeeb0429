#include "octica/random.hpp"

#include <atomic>

namespace octica {

namespace {
std::atomic<std::uint64_t> seed{20180812};
}

std::uint64_t global_seed() { return seed.load(); }
void set_global_seed(std::uint64_t s) { seed.store(s); }

std::mt19937_64 seeded_rng(std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(global_seed()), static_cast<std::uint32_t>(global_seed() >> 32),
                    static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(salt >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace octica
