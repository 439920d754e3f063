#include "twosided/cr.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>

#include "twosided/error.hpp"
#include "twosided/model.hpp"

namespace twosided {

namespace {

std::vector<Index> potential_audience(const Instance& inst, const PlatformState& state, const Matching& m, Index j) {
  std::vector<Index> out;
  for (Index i : state.users) {
    if (m.count(i) < inst.k() && !m.contains(i, j) && is_happy(inst, i, j)) out.push_back(i);
  }
  return out;
}

// Unexamined creator with the smallest potential audience; ties go to the lower index.
Index next_creator(const Instance& inst, const PlatformState& state, const Matching& m, const IndexSet& pending) {
  Index best = *pending.begin();
  std::size_t best_size = std::numeric_limits<std::size_t>::max();
  for (Index j : pending) {
    std::size_t size = potential_audience(inst, state, m, j).size();
    if (size < best_size) {
      best = j;
      best_size = size;
    }
  }
  return best;
}

Matching empty_matching(const PlatformState& state) {
  Matching m;
  for (Index i : state.users) m.add_user(i);
  return m;
}

std::size_t audience_of(const Matching& m, Index j) {
  std::size_t a = 0;
  for (const auto& [i, rec] : m) a += rec.contains(j) ? 1 : 0;
  return a;
}

}  // namespace

std::optional<AugmentingPath> find_augmenting_path(const Instance& inst, const PlatformState& state,
                                                   const Matching& m, Index j) {
  if (!state.creators.contains(j)) throw ValidationError("augmenting path must start at an active creator");
  const auto audience = audience_sizes(state, m);

  // Node keys: creators as (0, j), users as (1, i).
  using Node = std::pair<int, Index>;
  std::map<Node, Node> parent;
  std::deque<Node> queue;
  const Node root{0, j};
  parent.emplace(root, root);
  queue.push_back(root);
  std::optional<Node> creator_terminal;

  auto trace = [&](Node end, TerminalKind kind) {
    AugmentingPath p;
    p.terminal = kind;
    for (Node v = end; v != root; v = parent.at(v)) p.nodes.push_back(v.second);
    p.nodes.push_back(j);
    std::reverse(p.nodes.begin(), p.nodes.end());
    return p;
  };

  while (!queue.empty()) {
    Node v = queue.front();
    queue.pop_front();
    if (v.first == 0) {
      for (Index i : state.users) {
        Node next{1, i};
        if (parent.contains(next) || m.contains(i, v.second) || !is_happy(inst, i, v.second)) continue;
        parent.emplace(next, v);
        if (m.count(i) < inst.k()) return trace(next, TerminalKind::User);
        queue.push_back(next);
      }
    } else {
      for (Index c : m.creators_of(v.second)) {
        Node next{0, c};
        if (parent.contains(next) || !state.creators.contains(c)) continue;
        parent.emplace(next, v);
        if (!creator_terminal && audience.at(c) > inst.a_bar()) creator_terminal = next;
        queue.push_back(next);
      }
    }
  }
  if (creator_terminal) return trace(*creator_terminal, TerminalKind::Creator);
  return std::nullopt;
}

Matching apply_augmenting_path(const Matching& m, const AugmentingPath& p) {
  const auto& nodes = p.nodes;
  if (nodes.size() < 2) throw ValidationError("augmenting path needs at least one edge");
  const bool ends_at_user = nodes.size() % 2 == 0;
  if (ends_at_user != (p.terminal == TerminalKind::User)) {
    throw ValidationError("augmenting path terminal kind does not match its length");
  }
  std::set<Index> seen_users, seen_creators;
  for (std::size_t pos = 0; pos < nodes.size(); ++pos) {
    auto& seen = pos % 2 == 0 ? seen_creators : seen_users;
    if (!seen.insert(nodes[pos]).second) throw ValidationError("augmenting path repeats a node");
  }

  Matching out = m;
  for (std::size_t pos = 0; pos + 1 < nodes.size(); ++pos) {
    const bool creator_to_user = pos % 2 == 0;
    const Index user = creator_to_user ? nodes[pos + 1] : nodes[pos];
    const Index creator = creator_to_user ? nodes[pos] : nodes[pos + 1];
    if (creator_to_user) {
      if (m.contains(user, creator)) throw ValidationError("augmenting path adds an edge already matched");
      out.assign(user, creator);
    } else {
      if (!m.contains(user, creator)) throw ValidationError("augmenting path removes an unmatched edge");
      out.unassign(user, creator);
    }
  }
  return out;
}

Matching cr1_recommend(const Instance& inst, const PlatformState& state) {
  Matching m = empty_matching(state);
  IndexSet pending = state.creators;
  while (!pending.empty()) {
    Index j = next_creator(inst, state, m, pending);
    pending.erase(j);
    auto audience = potential_audience(inst, state, m, j);
    if (audience.size() < inst.a_bar()) continue;
    for (Index i : audience) m.assign(i, j);
  }
  return m;
}

Matching cr2_recommend(const Instance& inst, const PlatformState& state) {
  Matching m = empty_matching(state);
  IndexSet pending = state.creators;
  while (!pending.empty()) {
    Index j = next_creator(inst, state, m, pending);
    pending.erase(j);
    const Matching snapshot = m;
    while (auto path = find_augmenting_path(inst, state, m, j)) m = apply_augmenting_path(m, *path);
    if (audience_of(m, j) < inst.a_bar()) m = snapshot;
  }
  return m;
}

}  // namespace twosided
