#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twosided/fl.hpp"
#include "twosided/types.hpp"

namespace twosided {

enum class Algorithm { UC, FL, LC, CR1, CR2 };

std::string to_string(Algorithm alg);
/// Accepts the lowercase names "uc", "fl", "lc", "cr1", "cr2".
Algorithm parse_algorithm(std::string_view name);

struct TrajectoryStep {
  PlatformState state;
  Matching matching;
  double engagement = 0.0;
};

struct Trajectory {
  std::vector<TrajectoryStep> steps;
  std::size_t converged_at = 0;
  double long_term_engagement = 0.0;

  const PlatformState& final_state() const { return steps.back().state; }
};

/**
 * Runs recommend / engage / depart from the full player set until a step
 * leaves the state unchanged. All algorithms are deterministic functions of the
 * state, so the engagement at that step is the long-term engagement.
 */
Trajectory run_dynamics(const Instance& inst, Algorithm alg, const FlOptions& fl_options = {});

/// Long-term engagement of `alg` over that of FL; nullopt when FL's is zero.
std::optional<double> approximation_ratio(const Instance& inst, Algorithm alg, const FlOptions& fl_options = {});

}  // namespace twosided
