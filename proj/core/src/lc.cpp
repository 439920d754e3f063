#include "twosided/lc.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace twosided {

namespace {

// Absorbs rounding in the distance computation only; membership is otherwise exact.
constexpr double kBallTolerance = 1e-12;

double distance(const TypeVector& a, const TypeVector& b) {
  double sq = 0.0;
  for (std::size_t d = 0; d < a.dim(); ++d) sq += (a[d] - b[d]) * (a[d] - b[d]);
  return std::sqrt(sq);
}

}  // namespace

double happy_distance(double e_bar) { return 2.0 * std::sin(std::acos(std::clamp(e_bar, -1.0, 1.0)) / 2.0); }

double neighborhood_radius(double e_bar) { return 2.0 * std::sin(std::asin(happy_distance(e_bar) / 2.0) / 2.0); }

bool neighborhood_ball_contains(const TypeVector& center, const TypeVector& x, double e_bar) {
  return distance(center, x) <= neighborhood_radius(e_bar) + kBallTolerance;
}

Matching lc_recommend(const Instance& inst, const PlatformState& state) {
  Matching m;
  IndexSet free_users = state.users;
  IndexSet free_creators = state.creators;
  for (Index i : state.users) m.add_user(i);

  for (Index i : state.users) {
    if (!free_users.contains(i)) continue;
    const TypeVector& center = inst.user(i);
    std::vector<Index> ball_users, ball_creators;
    for (Index v : free_users) {
      if (neighborhood_ball_contains(center, inst.user(v), inst.e_bar())) ball_users.push_back(v);
    }
    for (Index j : free_creators) {
      if (neighborhood_ball_contains(center, inst.creator(j), inst.e_bar())) ball_creators.push_back(j);
    }
    if (ball_users.size() < inst.a_bar() || ball_creators.size() < inst.k()) continue;

    IndexSet cluster(ball_creators.begin(), ball_creators.begin() + static_cast<std::ptrdiff_t>(inst.k()));
    for (Index v : ball_users) {
      m.set(v, cluster);
      free_users.erase(v);
    }
    for (Index j : cluster) free_creators.erase(j);
  }
  return m;
}

}  // namespace twosided
