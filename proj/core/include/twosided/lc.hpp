#pragma once

#include "twosided/types.hpp"

namespace twosided {

/// Largest distance between two happy unit vectors: 2 sin(arccos(e_bar) / 2).
double happy_distance(double e_bar);

/// Radius of the ball around a unit vector whose spherical cap has chord diameter happy_distance.
double neighborhood_radius(double e_bar);

bool neighborhood_ball_contains(const TypeVector& center, const TypeVector& x, double e_bar);

/**
 * Local clustering: scan users by index; whenever the ball around an
 * unassigned user holds at least a_bar unassigned users and K unassigned
 * creators, assign all those users to the K lowest-index creators in it.
 * Users never placed in a cluster get an empty recommendation set.
 */
Matching lc_recommend(const Instance& inst, const PlatformState& state);

}  // namespace twosided
