#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "sdst/set_family.hpp"

namespace sdst {

enum class FamilyShape : std::uint8_t {
  random,      // independent uniform subsets of random size
  nested,      // chains S1 ⊂ S2 ⊂ ... growing by a few elements per step
  clustered,   // small perturbations of a few centroids
  duplicates,  // repeated copies from a small pool, some lightly perturbed
};

const char* to_string(FamilyShape shape);
std::optional<FamilyShape> parse_shape(std::string_view name);

struct GeneratorParams {
  FamilyShape shape = FamilyShape::random;
  std::uint32_t sets = 10;
  std::uint64_t universe = 64;  // values are drawn from [1..universe]
  std::uint64_t seed = 1;
  // Clustered shape: 0 picks a default from `sets` and `universe`.
  std::uint32_t clusters = 0;
  std::uint32_t centroid_size = 0;
  std::uint32_t max_flips = 3;
  // Make the last set the whole value range, so the dense universe has
  // exactly `universe` elements.
  bool cover_universe = false;
};

std::vector<std::vector<std::uint64_t>> generate_sets(const GeneratorParams& params);
SetFamily generate_family(const GeneratorParams& params);

}  // namespace sdst
