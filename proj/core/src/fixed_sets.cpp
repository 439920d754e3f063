#include "twosided/fixed_sets.hpp"

#include <cmath>
#include <vector>

#include "twosided/error.hpp"
#include "twosided/min_cost_flow.hpp"
#include "twosided/model.hpp"

namespace twosided {

std::optional<FixedSetsSolution> solve_fixed_sets(const Instance& inst, const IndexSet& users,
                                                  const IndexSet& creators) {
  return solve_fixed_sets(inst, users, creators, inst.k());
}

std::optional<FixedSetsSolution> solve_fixed_sets(const Instance& inst, const IndexSet& users,
                                                  const IndexSet& creators, std::size_t recs_per_user) {
  if (!users.empty() && *users.rbegin() >= inst.num_users()) throw ValidationError("user index out of range");
  if (!creators.empty() && *creators.rbegin() >= inst.num_creators()) {
    throw ValidationError("creator index out of range");
  }

  const auto r = static_cast<std::int64_t>(recs_per_user);
  const auto a_bar = static_cast<std::int64_t>(inst.a_bar());
  const auto n_users = static_cast<std::int64_t>(users.size());
  if (!creators.empty() && a_bar > n_users) return std::nullopt;
  if (static_cast<std::int64_t>(creators.size()) * a_bar > n_users * r) return std::nullopt;

  std::vector<Index> user_list(users.begin(), users.end());
  std::vector<Index> creator_list(creators.begin(), creators.end());
  for (Index i : user_list) {
    std::int64_t happy = 0;
    for (Index j : creator_list) happy += is_happy(inst, i, j) ? 1 : 0;
    if (happy < r) return std::nullopt;
  }

  const std::size_t source = 0, sink = 1;
  const std::size_t first_user = 2;
  const std::size_t first_creator = first_user + user_list.size();
  FlowNetwork net(first_creator + creator_list.size());

  for (std::size_t u = 0; u < user_list.size(); ++u) net.add_arc(source, first_user + u, r, r, 0);

  struct PairArc {
    Index user, creator;
    FlowNetwork::ArcId arc;
  };
  std::vector<PairArc> pair_arcs;
  for (std::size_t u = 0; u < user_list.size(); ++u) {
    for (std::size_t c = 0; c < creator_list.size(); ++c) {
      Index i = user_list[u], j = creator_list[c];
      if (!is_happy(inst, i, j)) continue;
      double w = engagement(inst.user(i), inst.creator(j));
      auto cost = -static_cast<std::int64_t>(std::llround(w * kFlowCostScale));
      pair_arcs.push_back({i, j, net.add_arc(first_user + u, first_creator + c, 0, 1, cost)});
    }
  }
  for (std::size_t c = 0; c < creator_list.size(); ++c) {
    net.add_arc(first_creator + c, sink, a_bar, n_users, 0);
  }
  net.add_arc(sink, source, 0, FlowNetwork::kInfinite, 0);

  if (!net.solve()) return std::nullopt;

  FixedSetsSolution solution;
  for (Index i : user_list) solution.matching.add_user(i);
  for (const auto& pa : pair_arcs) {
    if (net.flow(pa.arc) > 0) {
      solution.matching.assign(pa.user, pa.creator);
      solution.engagement += engagement(inst.user(pa.user), inst.creator(pa.creator));
    }
  }
  return solution;
}

}  // namespace twosided
