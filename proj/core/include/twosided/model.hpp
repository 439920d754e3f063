#pragma once

#include <map>

#include "twosided/types.hpp"

namespace twosided {

/// Pairs within this distance below the threshold still count as happy, so
/// constructions that sit exactly on the boundary survive rounding.
inline constexpr double kHappyTolerance = 1e-9;

double engagement(const TypeVector& u, const TypeVector& c);
bool is_happy(const TypeVector& u, const TypeVector& c, double e_bar);
bool is_happy(const Instance& inst, Index user, Index creator);

/// Sum of u_i . c_j over active users and their recommendations.
double total_engagement(const Instance& inst, const PlatformState& state, const Matching& m);

/// Audience per active creator; creators nobody was sent to map to 0.
std::map<Index, std::size_t> audience_sizes(const PlatformState& state, const Matching& m);

/// Users with exactly K happy recommendations and creators with audience >= a_bar.
PlatformState surviving_players(const Instance& inst, const PlatformState& state, const Matching& m);

StableSetReport check_stable_set(const Instance& inst, const PlatformState& state, const Matching& m);

}  // namespace twosided
