#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdst/generators.hpp"
#include "sdst/set_family.hpp"

namespace sdst {

struct VerifyConfig {
  std::uint64_t seed = 1;
  std::uint32_t trials = 100;
  std::uint32_t max_sets = 30;
  std::uint32_t max_universe = 64;
  // Route symdiff access through the whole-interval UNIV correction, which
  // is known to be wrong. Used to check that the harness catches faults.
  bool inject_fault = false;
};

struct FamilyCheck {
  std::uint64_t queries = 0;
  std::optional<std::string> mismatch;  // first failed check
};

// Builds both store kinds for the family and compares every query on every
// set and argument, the MST weight, the insertion parents, the
// compressibility ordering and the structural identities against the
// brute-force oracle.
FamilyCheck check_family(const SetFamily& family, bool inject_fault = false);

struct VerifyFailure {
  std::uint32_t trial = 0;
  GeneratorParams params;
  std::string what;
  std::vector<std::vector<std::uint64_t>> sets;
};

struct VerifyReport {
  std::uint32_t trials = 0;
  std::uint64_t queries = 0;
  std::optional<VerifyFailure> failure;

  bool passed() const { return !failure; }
};

// Trial t uses shape t mod 4 and a family drawn with seed + t.
GeneratorParams verify_params(const VerifyConfig& config, std::uint32_t trial);
VerifyReport run_verify(const VerifyConfig& config);

}  // namespace sdst
