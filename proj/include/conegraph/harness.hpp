#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "conegraph/analysis.hpp"

namespace conegraph {

enum class Distribution { Uniform, Clustered, JitteredGrid, JitteredCollinear };

const char* to_string(Distribution d);
Distribution distribution_from_string(const std::string& name);

/// Deterministic generation recipe: the same spec always produces the same
/// point set. Generated coordinates are integers in [-bound, bound], so
/// exact mode is always available; candidates violating strict general
/// position (for each m in `ms`) are re-rolled up to max_attempts times.
struct GenSpec {
  std::uint64_t seed = 0;
  int n_min = 1;
  int n_max = 64;
  Distribution dist = Distribution::Uniform;
  int clusters = 4;
  long long bound = 1000000;
  std::vector<int> ms = {3};
  bool yao_ties_checked = false;  // also forbid exact Euclidean ties
  int max_attempts = 64;
};

PointSet generate(const GenSpec& spec);

struct PropertyResult {
  std::string property;
  int trials = 0;
  int failures = 0;
  std::vector<int> failing_trials;
  std::vector<PointSet> witnesses;  // minimized failing sets
};

/// Names accepted by run_property.
std::vector<std::string> registered_properties();

/// Runs the named property over `trials` generated sets derived from the
/// base spec (per-trial seeds are mixed deterministically); failures are
/// shrunk to locally minimal witnesses.
PropertyResult run_property(const std::string& name, const GenSpec& base,
                            int trials);

/// Greedy shrink: repeatedly drop single points, then halves, while the
/// predicate keeps failing (predicate returns true on failing input). The
/// result still fails and every single-point deletion of it passes.
PointSet minimize(const PointSet& points,
                  const std::function<bool(const PointSet&)>& still_failing);

}  // namespace conegraph
