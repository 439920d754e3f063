#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "twosided/brute_force.hpp"
#include "twosided/error.hpp"
#include "twosided/fixed_sets.hpp"
#include "twosided/fl.hpp"
#include "twosided/instances.hpp"
#include "twosided/lc.hpp"
#include "twosided/min_cost_flow.hpp"
#include "twosided/model.hpp"
#include "twosided/uc.hpp"

namespace twosided {
namespace {

using std::numbers::pi;

IndexSet range(std::size_t n) {
  IndexSet s;
  for (Index i = 0; i < n; ++i) s.insert(i);
  return s;
}

// --- min-cost flow ---------------------------------------------------------

TEST(FlowNetwork, CirculationWithLowerBounds) {
  // One positive cycle: the cheapest circulation runs it exactly at the lower bound.
  FlowNetwork net(3);
  auto a = net.add_arc(0, 1, 2, 3, 1);
  auto b = net.add_arc(1, 2, 0, 5, 2);
  net.add_arc(2, 0, 0, 10, 0);
  auto cost = net.solve();
  ASSERT_TRUE(cost);
  EXPECT_EQ(*cost, 6);
  EXPECT_EQ(net.flow(a), 2);
  EXPECT_EQ(net.flow(b), 2);
}

TEST(FlowNetwork, NegativeCycleIsRejected) {
  FlowNetwork net(3);
  net.add_arc(0, 1, 2, 3, 1);
  net.add_arc(1, 2, 0, 5, -2);
  net.add_arc(2, 0, 0, 10, 0);
  EXPECT_THROW(net.solve(), std::logic_error);
}

TEST(FlowNetwork, PositiveCostsStayAtLowerBound) {
  FlowNetwork net(2);
  auto a = net.add_arc(0, 1, 2, 7, 5);
  net.add_arc(1, 0, 0, 10, 1);
  auto cost = net.solve();
  ASSERT_TRUE(cost);
  EXPECT_EQ(*cost, 12);
  EXPECT_EQ(net.flow(a), 2);
}

TEST(FlowNetwork, DetectsInfeasibleLowerBounds) {
  FlowNetwork net(3);
  net.add_arc(0, 1, 4, 5, 0);
  net.add_arc(1, 2, 0, 3, 0);
  net.add_arc(2, 0, 0, 10, 0);
  EXPECT_FALSE(net.solve());
}

TEST(FlowNetwork, RejectsBadArcs) {
  FlowNetwork net(2);
  EXPECT_THROW(net.add_arc(0, 5, 0, 1, 0), std::out_of_range);
  EXPECT_THROW(net.add_arc(0, 1, 3, 2, 0), std::invalid_argument);
}

// Small assignment problems solved by the flow match exhaustive search over
// every 0/1 arc assignment.
TEST(FlowNetwork, MatchesExhaustiveTransport) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int sources = 3, sinks = 2;
    std::uniform_int_distribution<int> cost_dist(-9, 9);
    int cost[sources][sinks];
    for (auto& row : cost) {
      for (int& c : row) c = cost_dist(rng);
    }
    const int lower = std::uniform_int_distribution<int>(0, 2)(rng);

    // Node 0 = s, 1 = t, 2..4 sources, 5..6 sinks. Every source ships exactly one unit.
    FlowNetwork net(7);
    for (int s = 0; s < sources; ++s) net.add_arc(0, 2 + s, 1, 1, 0);
    for (int s = 0; s < sources; ++s) {
      for (int d = 0; d < sinks; ++d) net.add_arc(2 + s, 5 + d, 0, 1, cost[s][d]);
    }
    for (int d = 0; d < sinks; ++d) net.add_arc(5 + d, 1, lower, sources, 0);
    net.add_arc(1, 0, 0, FlowNetwork::kInfinite, 0);

    std::optional<int> best;
    for (int choice = 0; choice < 8; ++choice) {
      int load[sinks] = {0, 0}, total = 0;
      for (int s = 0; s < sources; ++s) {
        int d = choice >> s & 1;
        ++load[d];
        total += cost[s][d];
      }
      if (load[0] >= lower && load[1] >= lower && (!best || total < *best)) best = total;
    }
    auto got = net.solve();
    ASSERT_EQ(got.has_value(), best.has_value());
    if (best) ASSERT_EQ(*got, *best);
  }
}

// --- solve_fixed_sets ------------------------------------------------------

TEST(SolveFixedSets, SimpleExample) {
  Instance inst = example_simple();
  auto sol = solve_fixed_sets(inst, range(6), {0, 1});
  ASSERT_TRUE(sol);
  EXPECT_NEAR(sol->engagement, 5.5, 1e-9);
  auto report = check_stable_set(inst, PlatformState::full(inst), sol->matching);
  EXPECT_TRUE(report.is_stable);
}

TEST(SolveFixedSets, NoCreatorsIsInfeasible) {
  Instance inst = example_simple();
  EXPECT_FALSE(solve_fixed_sets(inst, {0, 1}, {}));
}

TEST(SolveFixedSets, EmptyPlayersIsFeasible) {
  Instance inst = example_simple();
  auto sol = solve_fixed_sets(inst, {}, {});
  ASSERT_TRUE(sol);
  EXPECT_EQ(sol->engagement, 0.0);
}

TEST(SolveFixedSets, ZeroThresholdKnapsackFeasibleOnRandomFiveUserInstances) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t c = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(c, 2))(rng);
    const std::size_t a_bar = std::uniform_int_distribution<std::size_t>(0, 5 * k / c)(rng);
    Instance inst = sample_uniform_instance(5, c, k, a_bar, 3, 0.0, rng());
    ASSERT_LE(c * a_bar, 5 * k);
    auto sol = solve_fixed_sets(inst, range(5), range(c));
    auto oracle = brute_force_fixed_sets(inst, range(5), range(c), k);
    ASSERT_TRUE(oracle);
    ASSERT_TRUE(sol);
    EXPECT_NEAR(sol->engagement, *oracle, 1e-9);
  }
}

TEST(SolveFixedSets, MatchesExhaustiveOnRandomSubsets) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t u = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const std::size_t c = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
    const std::size_t a_bar = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
    const double e_bar = std::uniform_real_distribution<double>(0.0, 0.9)(rng);
    Instance inst = sample_uniform_instance(u, c, k, a_bar, 3, e_bar, rng());
    IndexSet users, creators;
    for (Index i = 0; i < u; ++i) {
      if (std::bernoulli_distribution(0.7)(rng)) users.insert(i);
    }
    for (Index j = 0; j < c; ++j) {
      if (std::bernoulli_distribution(0.7)(rng)) creators.insert(j);
    }
    auto sol = solve_fixed_sets(inst, users, creators);
    auto oracle = brute_force_fixed_sets(inst, users, creators, k);
    ASSERT_EQ(sol.has_value(), oracle.has_value());
    if (!oracle) continue;
    EXPECT_NEAR(sol->engagement, *oracle, 1e-9);
    PlatformState state{users, creators};
    EXPECT_TRUE(check_stable_set(inst, state, sol->matching).is_stable);
  }
}

// --- fl_solve and the brute-force oracle ----------------------------------

TEST(FlSolve, SimpleExampleRetainsEveryone) {
  Instance inst = example_simple();
  auto report = fl_solve(inst);
  EXPECT_NEAR(report.engagement, 5.5, 1e-9);
  EXPECT_TRUE(report.is_stable);
  EXPECT_EQ(report.state, PlatformState::full(inst));
}

// With m = 3 and a_bar = 3 the four users hold 8 recommendation slots but the
// three creators need 9, so no stable set keeps every player. It must still
// keep someone.
TEST(FlSolve, MegacrownKeepsPositiveEngagement) {
  Instance inst = example_megacrown(3, 4);
  ASSERT_EQ(inst.num_users() * inst.k(), 8u);
  ASSERT_EQ(inst.num_creators() * inst.a_bar(), 9u);
  auto report = fl_solve(inst);
  EXPECT_TRUE(report.is_stable);
  EXPECT_GT(report.engagement, 0.0);
  EXPECT_LT(report.state.creators.size(), 3u);
  EXPECT_NEAR(report.engagement, brute_force_mss(inst).engagement, 1e-9);
}

TEST(FlSolve, NothingFeasibleGivesEmptySet) {
  TypeVector a({1.0, 0.0});
  Instance inst(2, 1, 0.5, 3, {a, a}, {a, a});
  auto report = fl_solve(inst);
  EXPECT_TRUE(report.is_stable);
  EXPECT_TRUE(report.state.empty());
  EXPECT_EQ(report.engagement, 0.0);
}

TEST(FlSolve, CapIsEnforced) {
  Instance inst = sample_uniform_instance(3, 5, 1, 0, 2, 0.1, 1);
  EXPECT_THROW(fl_solve(inst, FlOptions{4}), CapExceededError);
  EXPECT_NO_THROW(fl_solve(inst, FlOptions{5}));
}

TEST(BruteForce, SimpleExample) { EXPECT_NEAR(brute_force_mss(example_simple()).engagement, 5.5, 1e-9); }

TEST(BruteForce, UnreachableThresholdGivesEmptySet) {
  TypeVector a({0.0, 1.0});
  Instance inst(2, 1, 0.2, 4, {a, a, a}, {a, a});
  auto report = brute_force_mss(inst);
  EXPECT_TRUE(report.state.empty());
  EXPECT_EQ(report.engagement, 0.0);
}

TEST(BruteForce, CapsAreEnforced) {
  Instance inst = sample_uniform_instance(9, 2, 1, 1, 2, 0.1, 1);
  EXPECT_THROW(brute_force_mss(inst), CapExceededError);
}

TEST(BruteForce, VisitsOnlyStableSets) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    Instance inst = sample_uniform_instance(4, 3, 1 + trial % 2, 1 + trial % 3, 2, 0.5, rng());
    std::size_t visited = 0;
    for_each_stable_set(inst, [&](const PlatformState& state, const Matching& m) {
      ++visited;
      ASSERT_TRUE(check_stable_set(inst, state, m).is_stable);
    });
    EXPECT_GE(visited, 1u);  // the empty set
  }
}

TEST(FlSolve, MatchesBruteForceOnRandomInstances) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t u = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const std::size_t c = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(2, c))(rng);
    const std::size_t a_bar = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
    const std::size_t dim = 2 + trial % 2;
    const double e_bar = std::uniform_real_distribution<double>(0.3, 0.95)(rng);
    Instance inst = sample_uniform_instance(u, c, k, a_bar, dim, e_bar, rng());
    auto fl = fl_solve(inst);
    auto bf = brute_force_mss(inst);
    ASSERT_TRUE(fl.is_stable);
    ASSERT_NEAR(fl.engagement, bf.engagement, 1e-9) << "trial " << trial;
  }
}

// --- UC --------------------------------------------------------------------

TEST(Uc, SimpleExampleSendsMiddleUserToSecondCreator) {
  Instance inst = example_simple();
  Matching m = uc_recommend(inst, PlatformState::full(inst));
  EXPECT_EQ(m.creators_of(2), IndexSet{1});
  EXPECT_EQ(m.creators_of(0), IndexSet{0});
}

TEST(Uc, SingleCreatorTakesEveryone) {
  Instance inst = sample_uniform_instance(5, 1, 1, 0, 3, 0.0, 4);
  Matching m = uc_recommend(inst, PlatformState::full(inst));
  for (Index i = 0; i < 5; ++i) EXPECT_EQ(m.creators_of(i), IndexSet{0});
}

TEST(Uc, MegacrownCornersFallOneShort) {
  Instance inst = example_megacrown(3, 4);
  auto audience = audience_sizes(PlatformState::full(inst), uc_recommend(inst, PlatformState::full(inst)));
  EXPECT_EQ(audience.at(0), inst.a_bar() - 1);
  EXPECT_EQ(audience.at(2), inst.a_bar() - 1);
}

TEST(Uc, TiesGoToLowerIndex) {
  TypeVector a({1.0, 0.0});
  Instance inst(2, 2, 0.0, 0, {a}, {a, a, a});
  EXPECT_EQ(uc_recommend(inst, PlatformState::full(inst)).creators_of(0), (IndexSet{0, 1}));
}

// Each user's UC engagement equals the best K-subset found by enumeration.
TEST(Uc, MaximisesEachUsersEngagement) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t c = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, c)(rng);
    Instance inst = sample_uniform_instance(4, c, k, 0, 3, 0.0, rng());
    Matching m = uc_recommend(inst, PlatformState::full(inst));
    for (Index i = 0; i < 4; ++i) {
      double best = 0.0;
      for (std::size_t mask = 0; mask < (std::size_t{1} << c); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
        double e = 0.0;
        for (Index j = 0; j < c; ++j) {
          if (mask >> j & 1) e += oracle::dot(inst.user(i).coords(), inst.creator(j).coords());
        }
        best = std::max(best, e);
      }
      double got = 0.0;
      for (Index j : m.creators_of(i)) got += oracle::dot(inst.user(i).coords(), inst.creator(j).coords());
      ASSERT_NEAR(got, best, 1e-12);
    }
  }
}

// --- LC --------------------------------------------------------------------

TEST(NeighborhoodBall, Radius) {
  EXPECT_NEAR(happy_distance(std::cos(pi / 3)), 1.0, 1e-15);
  EXPECT_NEAR(neighborhood_radius(std::cos(pi / 3)), 2 * std::sin(std::asin(0.5) / 2), 1e-15);
  EXPECT_NEAR(neighborhood_radius(std::cos(pi / 3)), 0.5176380902050415, 1e-15);
  TypeVector c({0.6, 0.8});
  EXPECT_TRUE(neighborhood_ball_contains(c, c, 0.7));
  EXPECT_TRUE(neighborhood_ball_contains(c, c, 1.0));
  EXPECT_FALSE(neighborhood_ball_contains(c, TypeVector({0.8, 0.6}), 1.0));
}

// Random members of one ball are pairwise within the happy distance.
TEST(NeighborhoodBall, MembersAreMutuallyHappy) {
  const double e_bar = std::cos(pi / 3);
  const double d = happy_distance(e_bar);
  std::mt19937_64 rng(37);
  std::size_t pairs = 0;
  while (pairs < 10'000) {
    TypeVector center(sample_orthant_direction(3, rng));
    std::vector<TypeVector> members;
    while (members.size() < 2) {
      TypeVector x(sample_orthant_direction(3, rng));
      if (neighborhood_ball_contains(center, x, e_bar)) members.push_back(x);
    }
    double sq = 0.0;
    for (int i = 0; i < 3; ++i) sq += (members[0][i] - members[1][i]) * (members[0][i] - members[1][i]);
    ASSERT_LE(std::sqrt(sq), d + 1e-9);
    ASSERT_TRUE(is_happy(members[0], members[1], e_bar));
    ++pairs;
  }
}

TEST(Lc, IdenticalPlayersFormOneCluster) {
  TypeVector a({0.6, 0.8});
  Instance inst(2, 2, 0.9, 3, {a, a, a, a}, {a, a, a});
  Matching m = lc_recommend(inst, PlatformState::full(inst));
  for (Index i = 0; i < 4; ++i) EXPECT_EQ(m.creators_of(i), (IndexSet{0, 1}));
}

// The middle user's ball reaches the right-hand cluster (which sits exactly on
// the ball boundary) but not the first creator, so only that cluster forms.
TEST(Lc, SimpleExampleClustersAroundMiddleUser) {
  Instance inst = example_simple();
  EXPECT_TRUE(neighborhood_ball_contains(inst.user(2), inst.creator(1), inst.e_bar()));
  EXPECT_FALSE(neighborhood_ball_contains(inst.user(2), inst.creator(0), inst.e_bar()));
  Matching m = lc_recommend(inst, PlatformState::full(inst));
  EXPECT_TRUE(m.creators_of(0).empty());
  EXPECT_TRUE(m.creators_of(1).empty());
  for (Index i : {2, 3, 4, 5}) EXPECT_EQ(m.creators_of(i), IndexSet{1});
}

TEST(Lc, FlowerCentreAndCornersAreTooSmall) {
  Instance inst = example_flower(8, 0.3);
  Matching m = lc_recommend(inst, PlatformState::full(inst));
  for (const auto& [i, rec] : m) EXPECT_TRUE(rec.empty()) << "user " << i;
}

TEST(Lc, ClustersShareCreatorsAndAreMutuallyHappy) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 1 + trial % 2;
    Instance inst = sample_uniform_instance(12, 6, k, 2, 2, 0.85, rng());
    Matching m = lc_recommend(inst, PlatformState::full(inst));
    std::map<IndexSet, std::vector<Index>> clusters;
    for (const auto& [i, rec] : m) {
      if (rec.empty()) continue;
      ASSERT_EQ(rec.size(), k);
      clusters[rec].push_back(i);
    }
    for (const auto& [creators, users] : clusters) {
      EXPECT_GE(users.size(), inst.a_bar());
      for (Index a : users) {
        for (Index b : users) EXPECT_TRUE(is_happy(inst.user(a), inst.user(b), inst.e_bar()));
        for (Index j : creators) EXPECT_TRUE(is_happy(inst, a, j));
      }
    }
  }
}

}  // namespace
}  // namespace twosided
