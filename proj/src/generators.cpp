#include "sdst/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

namespace sdst {

const char* to_string(FamilyShape shape) {
  switch (shape) {
    case FamilyShape::random: return "random";
    case FamilyShape::nested: return "nested";
    case FamilyShape::clustered: return "clustered";
    case FamilyShape::duplicates: return "duplicates";
  }
  return "?";
}

std::optional<FamilyShape> parse_shape(std::string_view name) {
  for (auto shape : {FamilyShape::random, FamilyShape::nested, FamilyShape::clustered, FamilyShape::duplicates})
    if (name == to_string(shape)) return shape;
  return std::nullopt;
}

namespace {

using Rng = std::mt19937_64;
using Set = std::vector<std::uint64_t>;

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

// k distinct values from [1..u] (Floyd's sampling), sorted.
Set sample(Rng& rng, std::uint64_t u, std::uint64_t k) {
  k = std::min(k, u);
  std::unordered_set<std::uint64_t> picked;
  for (std::uint64_t j = u - k + 1; j <= u; ++j) {
    const auto t = uniform(rng, 1, j);
    picked.insert(picked.count(t) ? j : t);
  }
  Set out(picked.begin(), picked.end());
  std::sort(out.begin(), out.end());
  return out;
}

void toggle(Set& set, std::uint64_t x) {
  auto it = std::lower_bound(set.begin(), set.end(), x);
  if (it != set.end() && *it == x)
    set.erase(it);
  else
    set.insert(it, x);
}

Set perturb(Rng& rng, Set set, std::uint64_t u, std::uint32_t max_flips) {
  const auto flips = max_flips ? uniform(rng, 0, max_flips) : 0;
  for (std::uint64_t f = 0; f < flips; ++f) toggle(set, uniform(rng, 1, u));
  if (set.empty()) set.push_back(uniform(rng, 1, u));
  return set;
}

std::vector<Set> random_sets(Rng& rng, const GeneratorParams& p) {
  std::vector<Set> out;
  for (std::uint32_t i = 0; i < p.sets; ++i) out.push_back(sample(rng, p.universe, uniform(rng, 1, p.universe)));
  return out;
}

std::vector<Set> nested_sets(Rng& rng, const GeneratorParams& p) {
  std::vector<Set> out;
  const std::uint32_t chains = std::max<std::uint32_t>(1, p.sets / 6);
  std::vector<Set> tips(chains);
  for (std::uint32_t i = 0; i < p.sets; ++i) {
    auto& tip = tips[uniform(rng, 0, chains - 1)];
    if (tip.empty() || tip.size() == p.universe) {
      tip = sample(rng, p.universe, uniform(rng, 1, std::min<std::uint64_t>(3, p.universe)));
    } else {
      const auto add = uniform(rng, 1, 3);
      for (std::uint64_t a = 0; a < add && tip.size() < p.universe; ++a) {
        std::uint64_t x;
        do x = uniform(rng, 1, p.universe);
        while (std::binary_search(tip.begin(), tip.end(), x));
        tip.insert(std::lower_bound(tip.begin(), tip.end(), x), x);
      }
    }
    out.push_back(tip);
  }
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

std::vector<Set> clustered_sets(Rng& rng, const GeneratorParams& p) {
  const std::uint32_t clusters = p.clusters ? p.clusters : std::max<std::uint32_t>(1, p.sets / 10);
  std::vector<Set> centroids;
  for (std::uint32_t c = 0; c < clusters; ++c) {
    const std::uint64_t size = p.centroid_size ? p.centroid_size : uniform(rng, 1, p.universe);
    centroids.push_back(sample(rng, p.universe, size));
  }
  std::vector<Set> out;
  for (std::uint32_t i = 0; i < p.sets; ++i)
    out.push_back(perturb(rng, centroids[uniform(rng, 0, clusters - 1)], p.universe, p.max_flips));
  return out;
}

std::vector<Set> duplicate_sets(Rng& rng, const GeneratorParams& p) {
  const std::uint32_t pool_size = std::max<std::uint32_t>(1, p.sets / 4);
  std::vector<Set> pool;
  for (std::uint32_t i = 0; i < pool_size; ++i) pool.push_back(sample(rng, p.universe, uniform(rng, 1, p.universe)));
  std::vector<Set> out;
  for (std::uint32_t i = 0; i < p.sets; ++i) {
    const auto& base = pool[uniform(rng, 0, pool_size - 1)];
    out.push_back(uniform(rng, 0, 3) == 0 ? perturb(rng, base, p.universe, 1) : base);
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::uint64_t>> generate_sets(const GeneratorParams& params) {
  if (params.universe == 0 || params.sets == 0) return {};
  Rng rng(params.seed);
  std::vector<Set> sets;
  switch (params.shape) {
    case FamilyShape::random: sets = random_sets(rng, params); break;
    case FamilyShape::nested: sets = nested_sets(rng, params); break;
    case FamilyShape::clustered: sets = clustered_sets(rng, params); break;
    case FamilyShape::duplicates: sets = duplicate_sets(rng, params); break;
  }
  if (params.cover_universe) {
    sets.back().resize(params.universe);
    std::iota(sets.back().begin(), sets.back().end(), std::uint64_t(1));
  }
  return sets;
}

SetFamily generate_family(const GeneratorParams& params) { return SetFamily::from_values(generate_sets(params)); }

}  // namespace sdst
