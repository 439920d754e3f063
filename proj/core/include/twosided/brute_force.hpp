#pragma once

#include <functional>
#include <optional>

#include "twosided/types.hpp"

namespace twosided {

struct BruteForceCaps {
  std::size_t max_users = 8;
  std::size_t max_creators = 4;
  std::size_t max_k = 2;
};

using StableSetVisitor = std::function<void(const PlatformState&, const Matching&)>;

/**
 * Calls `visit` once for every stable set: every creator subset, every user
 * subset and every choice of K happy creators per included user. Throws
 * CapExceededError outside the caps.
 */
void for_each_stable_set(const Instance& inst, const StableSetVisitor& visit, const BruteForceCaps& caps = {});

/// Maximum-engagement stable set by exhaustive enumeration.
StableSetReport brute_force_mss(const Instance& inst, const BruteForceCaps& caps = {});

/// Exhaustive counterpart of solve_fixed_sets: the best engagement, or nullopt if infeasible.
std::optional<double> brute_force_fixed_sets(const Instance& inst, const IndexSet& users, const IndexSet& creators,
                                             std::size_t recs_per_user, const BruteForceCaps& caps = {});

}  // namespace twosided
