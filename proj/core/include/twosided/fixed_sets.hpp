#pragma once

#include <optional>

#include "twosided/types.hpp"

namespace twosided {

struct FixedSetsSolution {
  Matching matching;
  double engagement = 0.0;
};

/// Engagement is scaled by this factor and rounded to get integer arc costs.
inline constexpr double kFlowCostScale = 1e9;

/**
 * Best matching in which every listed user gets exactly K happy creators from
 * `creators` and every listed creator gets at least a_bar of the listed users.
 * Returns nullopt when no such matching exists.
 */
std::optional<FixedSetsSolution> solve_fixed_sets(const Instance& inst, const IndexSet& users,
                                                  const IndexSet& creators);

/// Same, with each user receiving `recs_per_user` recommendations instead of K.
std::optional<FixedSetsSolution> solve_fixed_sets(const Instance& inst, const IndexSet& users,
                                                  const IndexSet& creators, std::size_t recs_per_user);

}  // namespace twosided
