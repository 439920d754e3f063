#include "twosided/brute_force.hpp"

#include <string>
#include <vector>

#include "twosided/error.hpp"
#include "twosided/model.hpp"

namespace twosided {

namespace {

void check_caps(const Instance& inst, std::size_t n_users, std::size_t recs, const BruteForceCaps& caps) {
  if (n_users > caps.max_users || inst.num_creators() > caps.max_creators || recs > caps.max_k) {
    throw CapExceededError("brute force caps exceeded (U<=" + std::to_string(caps.max_users) +
                           ", C<=" + std::to_string(caps.max_creators) + ", K<=" + std::to_string(caps.max_k) + ")");
  }
}

void combinations(const std::vector<Index>& pool, std::size_t r, std::size_t start, std::vector<Index>& current,
                  std::vector<std::vector<Index>>& out) {
  if (current.size() == r) {
    out.push_back(current);
    return;
  }
  for (std::size_t p = start; p < pool.size(); ++p) {
    current.push_back(pool[p]);
    combinations(pool, r, p + 1, current, out);
    current.pop_back();
  }
}

// Depth-first search over one creator subset. Users in `optional_users` may be
// left out; the callback fires for every assignment meeting the audience floor.
class SubsetSearch {
 public:
  using Leaf = std::function<void(const std::vector<Index>& users, const std::vector<const std::vector<Index>*>&)>;

  SubsetSearch(const Instance& inst, const std::vector<Index>& users, const std::vector<Index>& creators,
               std::size_t recs, bool users_optional, Leaf leaf)
      : inst_(inst), users_(users), creators_(creators), optional_(users_optional), leaf_(std::move(leaf)),
        audience_(inst.num_creators(), 0), recs_(recs) {
    options_.resize(users_.size());
    for (std::size_t u = 0; u < users_.size(); ++u) {
      std::vector<Index> happy;
      for (Index j : creators_) {
        if (is_happy(inst_, users_[u], j)) happy.push_back(j);
      }
      std::vector<Index> current;
      combinations(happy, recs, 0, current, options_[u]);
    }
  }

  void run() { descend(0); }

 private:
  std::size_t deficit() const {
    std::size_t total = 0;
    for (Index j : creators_) {
      if (audience_[j] < inst_.a_bar()) total += inst_.a_bar() - audience_[j];
    }
    return total;
  }

  void descend(std::size_t u) {
    if (deficit() > (users_.size() - u) * recs_) return;
    if (u == users_.size()) {
      leaf_(chosen_users_, chosen_);
      return;
    }
    if (optional_) descend(u + 1);
    for (const auto& combo : options_[u]) {
      for (Index j : combo) ++audience_[j];
      chosen_users_.push_back(users_[u]);
      chosen_.push_back(&combo);
      descend(u + 1);
      chosen_.pop_back();
      chosen_users_.pop_back();
      for (Index j : combo) --audience_[j];
    }
  }

  const Instance& inst_;
  const std::vector<Index>& users_;
  const std::vector<Index>& creators_;
  bool optional_;
  Leaf leaf_;
  std::vector<std::size_t> audience_;
  std::size_t recs_;
  std::vector<std::vector<std::vector<Index>>> options_;
  std::vector<Index> chosen_users_;
  std::vector<const std::vector<Index>*> chosen_;
};

Matching build_matching(const std::vector<Index>& users, const std::vector<const std::vector<Index>*>& chosen) {
  Matching m;
  for (std::size_t p = 0; p < users.size(); ++p) m.set(users[p], IndexSet(chosen[p]->begin(), chosen[p]->end()));
  return m;
}

}  // namespace

void for_each_stable_set(const Instance& inst, const StableSetVisitor& visit, const BruteForceCaps& caps) {
  check_caps(inst, inst.num_users(), inst.k(), caps);
  std::vector<Index> all_users;
  for (Index i = 0; i < inst.num_users(); ++i) all_users.push_back(i);

  const std::size_t n_creators = inst.num_creators();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n_creators); ++mask) {
    std::vector<Index> creators;
    for (Index j = 0; j < n_creators; ++j) {
      if (mask >> j & 1) creators.push_back(j);
    }
    SubsetSearch search(inst, all_users, creators, inst.k(), true,
                        [&](const std::vector<Index>& users, const std::vector<const std::vector<Index>*>& chosen) {
                          PlatformState state{IndexSet(users.begin(), users.end()),
                                              IndexSet(creators.begin(), creators.end())};
                          visit(state, build_matching(users, chosen));
                        });
    search.run();
  }
}

StableSetReport brute_force_mss(const Instance& inst, const BruteForceCaps& caps) {
  StableSetReport best = check_stable_set(inst, PlatformState{}, Matching{});
  for_each_stable_set(
      inst,
      [&](const PlatformState& state, const Matching& m) {
        double e = total_engagement(inst, state, m);
        if (e > best.engagement) best = check_stable_set(inst, state, m);
      },
      caps);
  return best;
}

std::optional<double> brute_force_fixed_sets(const Instance& inst, const IndexSet& users, const IndexSet& creators,
                                             std::size_t recs_per_user, const BruteForceCaps& caps) {
  check_caps(inst, users.size(), recs_per_user, caps);
  std::vector<Index> user_list(users.begin(), users.end());
  std::vector<Index> creator_list(creators.begin(), creators.end());
  std::optional<double> best;
  SubsetSearch search(inst, user_list, creator_list, recs_per_user, false,
                      [&](const std::vector<Index>& chosen_users, const std::vector<const std::vector<Index>*>& chosen) {
                        double e = 0.0;
                        for (std::size_t p = 0; p < chosen_users.size(); ++p) {
                          for (Index j : *chosen[p]) e += engagement(inst.user(chosen_users[p]), inst.creator(j));
                        }
                        if (!best || e > *best) best = e;
                      });
  search.run();
  return best;
}

}  // namespace twosided
