#pragma once

#include <optional>
#include <vector>

#include "twosided/types.hpp"

namespace twosided {

enum class TerminalKind { User, Creator };

/**
 * Alternating path creator, user, creator, ... starting at the creator that
 * gains an audience member. Creator-to-user steps are edges outside the
 * matching; user-to-creator steps are edges inside it.
 */
struct AugmentingPath {
  std::vector<Index> nodes;
  TerminalKind terminal = TerminalKind::User;

  Index start() const { return nodes.front(); }
  bool operator==(const AugmentingPath&) const = default;
};

/**
 * Breadth-first search from creator `j`. Terminals are users holding fewer
 * than K recommendations and creators other than `j` whose audience exceeds
 * a_bar. Prefers the shortest path to a user terminal, then the shortest path
 * to a creator terminal. Neighbours are explored in ascending index order.
 */
std::optional<AugmentingPath> find_augmenting_path(const Instance& inst, const PlatformState& state,
                                                   const Matching& m, Index j);

/// Flips every edge of `p` in `m`. Throws ValidationError if `p` does not alternate against `m`.
Matching apply_augmenting_path(const Matching& m, const AugmentingPath& p);

/// Creators are examined by smallest potential audience; each takes all of it or is skipped.
Matching cr1_recommend(const Instance& inst, const PlatformState& state);

/// As cr1_recommend, but each examined creator grows its audience through augmenting
/// paths and is rolled back if it still ends below a_bar.
Matching cr2_recommend(const Instance& inst, const PlatformState& state);

}  // namespace twosided
