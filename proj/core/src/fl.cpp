#include "twosided/fl.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "twosided/error.hpp"
#include "twosided/fixed_sets.hpp"
#include "twosided/model.hpp"

namespace twosided {

StableSetReport fl_solve(const Instance& inst, const FlOptions& options) {
  const std::size_t n_creators = inst.num_creators();
  const std::size_t n_users = inst.num_users();
  if (n_creators > options.max_creators || n_creators >= 63) {
    throw CapExceededError("fl_solve: " + std::to_string(n_creators) + " creators exceeds cap of " +
                           std::to_string(options.max_creators));
  }

  // happy_mask[i]: bit j set when user i is happy with creator j.
  std::vector<std::uint64_t> happy_mask(n_users, 0);
  for (Index i = 0; i < n_users; ++i) {
    for (Index j = 0; j < n_creators; ++j) {
      if (is_happy(inst, i, j)) happy_mask[i] |= std::uint64_t{1} << j;
    }
  }

  const std::size_t k = inst.k();
  const std::size_t a_bar = inst.a_bar();
  StableSetReport best = check_stable_set(inst, PlatformState{}, Matching{});
  const std::uint64_t end = std::uint64_t{1} << n_creators;

  std::vector<Index> eligible;
  for (std::uint64_t mask = 1; mask < end; ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size < k || size * a_bar > n_users * k) continue;

    eligible.clear();
    for (Index i = 0; i < n_users; ++i) {
      if (static_cast<std::size_t>(std::popcount(happy_mask[i] & mask)) >= k) eligible.push_back(i);
    }
    if (size * a_bar > eligible.size() * k) continue;

    // Each creator needs a_bar happy eligible users before any flow is worth running.
    bool reachable = true;
    for (Index j = 0; j < n_creators && reachable; ++j) {
      if (!(mask >> j & 1)) continue;
      std::size_t fans = 0;
      for (Index i : eligible) fans += happy_mask[i] >> j & 1;
      reachable = fans >= a_bar;
    }
    if (!reachable) continue;

    IndexSet users(eligible.begin(), eligible.end());
    IndexSet creators;
    for (Index j = 0; j < n_creators; ++j) {
      if (mask >> j & 1) creators.insert(creators.end(), j);
    }
    auto solution = solve_fixed_sets(inst, users, creators);
    if (!solution || solution->engagement <= best.engagement) continue;
    best = check_stable_set(inst, PlatformState{std::move(users), std::move(creators)}, solution->matching);
  }
  return best;
}

}  // namespace twosided
