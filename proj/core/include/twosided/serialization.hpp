#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "twosided/analysis.hpp"
#include "twosided/dynamics.hpp"
#include "twosided/types.hpp"

namespace twosided {

// JSON text in and out. Floating-point values are written with 17 significant
// digits; player indices are 0-based. Malformed input raises ValidationError.

/// {"dim", "k", "e_bar", "a_bar", "users": [[...]], "creators": [[...]]}
std::string instance_to_json(const Instance& inst);
Instance instance_from_json(std::string_view text);

std::string report_to_json(const StableSetReport& report);
std::string trajectory_to_json(const Trajectory& traj, Algorithm alg);
std::string bound_to_json(const BoundEstimate& bound, std::size_t c, std::size_t k, std::uint64_t trials,
                          std::uint64_t seed);

/// A list of {"u", "c", "k", "a_bar", "dim", "e_m", "algorithms", "trials"} objects.
std::vector<GridPoint> grid_from_json(std::string_view text);

}  // namespace twosided
