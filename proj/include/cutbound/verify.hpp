#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cutbound/cutwidth.hpp"

namespace cutbound {

/// Outcome of one verification check. `seed` is the seed of the random
/// instance the check ran on, or 0 for deterministic checks; `detail`
/// explains a failure (and is empty on success).
struct CheckResult {
  std::string name;
  std::uint64_t seed = 0;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  int subdivision_trials = 200;
  int composition_trials = 300;
  int subdivision_max_n = 8;
  int composition_max_n = 12;
  int budget = kDefaultSolverBudget;
};

/// Known suite names accepted by run_suite: "prop1" (subdivision keeps the
/// exact cutwidth), "thm1" (composition certificates hold and dominate the
/// exact value), "claim1" (per-class orientation dichotomy and quotient-cut
/// block bounds), "claim2" (closed-form family values, tight composition
/// instances, and the subdivided directed family's values), "prop3" (the
/// family whose condensation width grows while its own width stays <= 5),
/// and "all".
extern const std::vector<std::string> kSuiteNames;

/// Runs one suite and returns its checks sorted by (name, seed). Throws
/// std::invalid_argument for unknown suite names.
std::vector<CheckResult> run_suite(const std::string& suite,
                                   const VerifyOptions& options);

}  // namespace cutbound
