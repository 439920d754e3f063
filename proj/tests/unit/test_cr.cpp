#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "twosided/cr.hpp"
#include "twosided/error.hpp"
#include "twosided/instances.hpp"
#include "twosided/model.hpp"

namespace twosided {
namespace {

using std::numbers::pi;

// Two creators at right angles; groups of a_bar / 2 users sit on each creator
// and two more groups between them, happy with both. K = 1.
// Users: [0, h) on creator 0, [h, 2h) on creator 1, [2h, 4h) in between.
Instance two_creator_instance(std::size_t a_bar) {
  const std::size_t h = a_bar / 2;
  TypeVector up({0.0, 1.0}), right({1.0, 0.0}), mid({std::cos(pi / 4), std::sin(pi / 4)});
  std::vector<TypeVector> users(h, up);
  users.insert(users.end(), h, right);
  users.insert(users.end(), 2 * h, mid);
  return Instance(2, 1, std::cos(pi / 3), a_bar, std::move(users), {up, right});
}

void expect_cr_invariants(const Instance& inst, const PlatformState& state, const Matching& m) {
  for (const auto& [i, rec] : m) {
    ASSERT_LE(rec.size(), inst.k());
    for (Index j : rec) ASSERT_TRUE(is_happy(inst, i, j));
  }
  for (const auto& [j, a] : audience_sizes(state, m)) {
    if (a > 0) ASSERT_GE(a, inst.a_bar()) << "creator " << j;
  }
}

TEST(Cr1, TwoCreatorInstanceSkipsSecondCreator) {
  Instance inst = two_creator_instance(4);
  Matching m = cr1_recommend(inst, PlatformState::full(inst));
  auto audience = audience_sizes(PlatformState::full(inst), m);
  EXPECT_EQ(audience.at(0), 6u);
  EXPECT_EQ(audience.at(1), 0u);
  std::size_t unmatched = 0;
  for (const auto& [i, rec] : m) unmatched += rec.empty() ? 1 : 0;
  EXPECT_EQ(unmatched, 2u);
}

TEST(Cr1, SingleCreatorTakesAllUsers) {
  TypeVector a({0.6, 0.8});
  Instance inst(2, 1, 0.5, 3, {a, a, a, a}, {a});
  Matching m = cr1_recommend(inst, PlatformState::full(inst));
  for (Index i = 0; i < 4; ++i) EXPECT_EQ(m.creators_of(i), IndexSet{0});
}

TEST(Cr1, SimpleExampleSatisfiesBothCreators) {
  Instance inst = example_simple();
  Matching m = cr1_recommend(inst, PlatformState::full(inst));
  auto audience = audience_sizes(PlatformState::full(inst), m);
  EXPECT_EQ(audience.at(0), 3u);
  EXPECT_EQ(audience.at(1), 3u);
  EXPECT_EQ(m.creators_of(2), IndexSet{0});
}

TEST(Cr2, TwoCreatorInstanceSatisfiesBoth) {
  Instance inst = two_creator_instance(4);
  Matching m = cr2_recommend(inst, PlatformState::full(inst));
  auto audience = audience_sizes(PlatformState::full(inst), m);
  EXPECT_EQ(audience.at(0), 4u);
  EXPECT_EQ(audience.at(1), 4u);
  for (const auto& [i, rec] : m) EXPECT_EQ(rec.size(), 1u) << "user " << i;
}

TEST(Cr2, SingleCreatorMatchesCr1) {
  TypeVector a({0.6, 0.8}), b({0.8, 0.6});
  Instance inst(2, 1, 0.99, 2, {a, a, b, a}, {a});
  EXPECT_EQ(cr2_recommend(inst, PlatformState::full(inst)), cr1_recommend(inst, PlatformState::full(inst)));
}

TEST(Cr2, SimpleExampleAtLeastCr1) {
  Instance inst = example_simple();
  PlatformState full = PlatformState::full(inst);
  EXPECT_GE(total_engagement(inst, full, cr2_recommend(inst, full)) + 1e-12,
            total_engagement(inst, full, cr1_recommend(inst, full)));
}

TEST(AugmentingPath, SlackUserGivesLengthOnePath) {
  Instance inst = two_creator_instance(4);
  Matching m;
  auto p = find_augmenting_path(inst, PlatformState::full(inst), m, 1);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->nodes, (std::vector<Index>{1, 2}));
  EXPECT_EQ(p->terminal, TerminalKind::User);
  Matching after = apply_augmenting_path(m, *p);
  EXPECT_EQ(after.creators_of(2), IndexSet{1});
}

TEST(AugmentingPath, StealsFromCreatorAboveThreshold) {
  Instance inst = two_creator_instance(4);
  PlatformState full = PlatformState::full(inst);
  Matching m;
  for (Index i : {0, 1, 4, 5, 6, 7}) m.assign(i, 0);
  for (Index i : {2, 3}) m.assign(i, 1);
  auto p = find_augmenting_path(inst, full, m, 1);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->nodes, (std::vector<Index>{1, 4, 0}));
  EXPECT_EQ(p->terminal, TerminalKind::Creator);
  Matching after = apply_augmenting_path(m, *p);
  EXPECT_EQ(after.creators_of(4), IndexSet{1});
  auto audience = audience_sizes(full, after);
  EXPECT_EQ(audience.at(0), 5u);
  EXPECT_EQ(audience.at(1), 3u);
}

TEST(AugmentingPath, NoneWhenSaturated) {
  Instance inst = two_creator_instance(4);
  Matching m;
  for (Index i : {0, 1, 4, 5}) m.assign(i, 0);
  for (Index i : {2, 3, 6, 7}) m.assign(i, 1);
  EXPECT_FALSE(find_augmenting_path(inst, PlatformState::full(inst), m, 1));
  EXPECT_FALSE(find_augmenting_path(inst, PlatformState::full(inst), m, 0));
}

TEST(AugmentingPath, InactiveStartIsRejected) {
  Instance inst = two_creator_instance(4);
  PlatformState state = PlatformState::full(inst);
  state.creators.erase(1);
  EXPECT_THROW(find_augmenting_path(inst, state, Matching{}, 1), ValidationError);
}

TEST(AugmentingPath, ApplyRejectsInvalidPaths) {
  Matching m;
  m.assign(0, 0);
  EXPECT_THROW(apply_augmenting_path(m, AugmentingPath{{0}, TerminalKind::User}), ValidationError);
  EXPECT_THROW(apply_augmenting_path(m, AugmentingPath{{0, 0}, TerminalKind::User}), ValidationError);
  EXPECT_THROW(apply_augmenting_path(m, AugmentingPath{{1, 1, 2}, TerminalKind::Creator}), ValidationError);
  EXPECT_THROW(apply_augmenting_path(m, AugmentingPath{{1, 0}, TerminalKind::Creator}), ValidationError);
  EXPECT_NO_THROW(apply_augmenting_path(m, AugmentingPath{{1, 0, 0}, TerminalKind::Creator}));
}

// Recommendation counts and audiences change only at the path ends.
TEST(AugmentingPath, DeltasOnRandomMatchings) {
  std::mt19937_64 rng(43);
  std::size_t applied = 0, creator_terminals = 0;
  while (applied < 300) {
    Instance inst = sample_uniform_instance(10, 5, 2, 2, 2, 0.6, rng());
    PlatformState full = PlatformState::full(inst);
    Matching m;
    for (Index i = 0; i < 10; ++i) {
      m.add_user(i);
      for (Index j = 0; j < 5; ++j) {
        if (m.count(i) < 2 && is_happy(inst, i, j) && std::bernoulli_distribution(0.5)(rng)) m.assign(i, j);
      }
    }
    Index start = std::uniform_int_distribution<Index>(0, 4)(rng);
    auto p = find_augmenting_path(inst, full, m, start);
    if (!p) continue;
    Matching after = apply_augmenting_path(m, *p);
    auto before_aud = audience_sizes(full, m), after_aud = audience_sizes(full, after);
    for (Index j = 0; j < 5; ++j) {
      long delta = static_cast<long>(after_aud.at(j)) - static_cast<long>(before_aud.at(j));
      long expected = j == start ? 1 : (p->terminal == TerminalKind::Creator && j == p->nodes.back() ? -1 : 0);
      ASSERT_EQ(delta, expected);
    }
    for (Index i = 0; i < 10; ++i) {
      long delta = static_cast<long>(after.count(i)) - static_cast<long>(m.count(i));
      long expected = p->terminal == TerminalKind::User && i == p->nodes.back() ? 1 : 0;
      ASSERT_EQ(delta, expected);
    }
    creator_terminals += p->terminal == TerminalKind::Creator ? 1 : 0;
    ++applied;
  }
  EXPECT_GT(creator_terminals, 0u);
}

TEST(CrInvariants, RandomInstances) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t k = 1 + trial % 3;
    const std::size_t a_bar = 1 + trial % 4;
    Instance inst = sample_uniform_instance(14, 5, k, a_bar, 3, 0.6, rng());
    PlatformState full = PlatformState::full(inst);
    expect_cr_invariants(inst, full, cr1_recommend(inst, full));
    expect_cr_invariants(inst, full, cr2_recommend(inst, full));
  }
}

}  // namespace
}  // namespace twosided
