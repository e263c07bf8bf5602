#pragma once

#include <random>
#include <vector>

#include "sdst/set_family.hpp"

namespace sdst::testing {

inline SetFamily f1() { return SetFamily::from_values({{1, 2}, {1, 2, 3}, {2, 3, 4}}); }

// Random family with values in [1..max_u]; sets are never empty.
inline SetFamily random_family(std::mt19937_64& rng, std::uint32_t max_sets, std::uint32_t max_u) {
  const std::uint32_t s = 1 + rng() % max_sets;
  const std::uint32_t u = 1 + rng() % max_u;
  const double density = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
  std::vector<std::vector<std::uint64_t>> raw(s);
  for (auto& set : raw) {
    for (std::uint64_t x = 1; x <= u; ++x)
      if (std::bernoulli_distribution(density)(rng)) set.push_back(x);
    if (set.empty()) set.push_back(1 + rng() % u);
  }
  return SetFamily::from_values(raw);
}

}  // namespace sdst::testing
