#pragma once

#include <cstddef>

#include "twosided/types.hpp"

namespace twosided {

struct FlOptions {
  /// Creator subsets are enumerated exhaustively, so the creator count is capped.
  std::size_t max_creators = 20;
};

/**
 * Exact maximum stable set. For each creator subset, every user happy with at
 * least K of its creators is included and the best assignment is found by
 * min-cost flow. Returns the empty stable set when nothing else is feasible.
 * Throws CapExceededError when the instance has more creators than the cap.
 */
StableSetReport fl_solve(const Instance& inst, const FlOptions& options = {});

}  // namespace twosided
