#pragma once

#include <optional>

#include "twosided/types.hpp"

namespace twosided {

/**
 * Best engagement with fixed player sets, where each user receives
 * min(K, |creators|) recommendations. nullopt when infeasible.
 */
std::optional<double> fixed_sets_value(const Instance& inst, const IndexSet& users, const IndexSet& creators);

/**
 * Diminishing-returns test for adding c0 on top of c1:
 *   f(U, C + c0 + c1) - f(U, C + c1) <= f(U, C + c0) - f(U, C).
 * Holds vacuously when any of the four values is infeasible. Requires e_bar = 0
 * and c0, c1 distinct and outside `creators`; throws ValidationError otherwise.
 */
bool submodularity_check(const Instance& inst, const IndexSet& users, const IndexSet& creators, Index c0, Index c1);

}  // namespace twosided
