#include "twosided/min_cost_flow.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <utility>

namespace twosided {

namespace {

struct ResidualEdge {
  std::size_t to;
  std::size_t rev;
  std::int64_t cap;
  std::int64_t cost;
};

class Residual {
 public:
  explicit Residual(std::size_t n) : adj_(n) {}

  std::pair<std::size_t, std::size_t> add(std::size_t from, std::size_t to, std::int64_t cap, std::int64_t cost) {
    std::size_t fi = adj_[from].size();
    std::size_t ti = adj_[to].size() + (from == to ? 1 : 0);
    adj_[from].push_back({to, ti, cap, cost});
    adj_[to].push_back({from, fi, 0, -cost});
    return {from, fi};
  }

  std::int64_t cap(std::pair<std::size_t, std::size_t> ref) const { return adj_[ref.first][ref.second].cap; }

  // Sends up to `limit` units from s to t along successive cheapest paths.
  // Returns (flow sent, cost incurred).
  std::pair<std::int64_t, std::int64_t> min_cost_flow(std::size_t s, std::size_t t, std::int64_t limit) {
    const std::size_t n = adj_.size();
    constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> potential = initial_potentials();
    std::vector<std::int64_t> dist(n);
    std::vector<std::size_t> prev_node(n), prev_edge(n);
    std::int64_t sent = 0, cost = 0;

    using Entry = std::pair<std::int64_t, std::size_t>;
    while (sent < limit) {
      std::fill(dist.begin(), dist.end(), kUnreached);
      std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
      dist[s] = 0;
      pq.emplace(0, s);
      while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (d != dist[v]) continue;
        for (std::size_t e = 0; e < adj_[v].size(); ++e) {
          const auto& edge = adj_[v][e];
          if (edge.cap <= 0) continue;
          std::int64_t nd = d + edge.cost + potential[v] - potential[edge.to];
          if (nd < dist[edge.to]) {
            dist[edge.to] = nd;
            prev_node[edge.to] = v;
            prev_edge[edge.to] = e;
            pq.emplace(nd, edge.to);
          }
        }
      }
      if (dist[t] == kUnreached) break;
      for (std::size_t v = 0; v < n; ++v) potential[v] += std::min(dist[v], dist[t]);

      std::int64_t push = limit - sent;
      for (std::size_t v = t; v != s; v = prev_node[v]) {
        push = std::min(push, adj_[prev_node[v]][prev_edge[v]].cap);
      }
      for (std::size_t v = t; v != s; v = prev_node[v]) {
        auto& edge = adj_[prev_node[v]][prev_edge[v]];
        edge.cap -= push;
        adj_[v][edge.rev].cap += push;
        cost += push * edge.cost;
      }
      sent += push;
    }
    return {sent, cost};
  }

 private:
  // Bellman-Ford from a virtual root joined to every node with zero-cost arcs.
  std::vector<std::int64_t> initial_potentials() const {
    const std::size_t n = adj_.size();
    std::vector<std::int64_t> pot(n, 0);
    for (std::size_t round = 0; round <= n; ++round) {
      bool changed = false;
      for (std::size_t v = 0; v < n; ++v) {
        for (const auto& edge : adj_[v]) {
          if (edge.cap > 0 && pot[v] + edge.cost < pot[edge.to]) {
            pot[edge.to] = pot[v] + edge.cost;
            changed = true;
          }
        }
      }
      if (!changed) return pot;
    }
    throw std::logic_error("flow network contains a negative-cost cycle");
  }

  std::vector<std::vector<ResidualEdge>> adj_;
};

}  // namespace

FlowNetwork::ArcId FlowNetwork::add_arc(std::size_t from, std::size_t to, std::int64_t lower, std::int64_t upper,
                                        std::int64_t cost) {
  if (from >= num_nodes_ || to >= num_nodes_) throw std::out_of_range("arc endpoint out of range");
  if (lower < 0 || upper < lower) throw std::invalid_argument("arc bounds must satisfy 0 <= lower <= upper");
  arcs_.push_back({from, to, lower, upper, cost});
  return arcs_.size() - 1;
}

std::optional<std::int64_t> FlowNetwork::solve() {
  const std::size_t super_source = num_nodes_;
  const std::size_t super_sink = num_nodes_ + 1;
  Residual residual(num_nodes_ + 2);

  std::vector<std::int64_t> excess(num_nodes_, 0);
  std::vector<std::pair<std::size_t, std::size_t>> refs;
  refs.reserve(arcs_.size());
  std::int64_t base_cost = 0;
  for (const auto& a : arcs_) {
    refs.push_back(residual.add(a.from, a.to, a.upper - a.lower, a.cost));
    excess[a.to] += a.lower;
    excess[a.from] -= a.lower;
    base_cost += a.lower * a.cost;
  }

  std::int64_t demand = 0;
  for (std::size_t v = 0; v < num_nodes_; ++v) {
    if (excess[v] > 0) {
      residual.add(super_source, v, excess[v], 0);
      demand += excess[v];
    } else if (excess[v] < 0) {
      residual.add(v, super_sink, -excess[v], 0);
    }
  }

  auto [sent, cost] = residual.min_cost_flow(super_source, super_sink, demand);
  if (sent < demand) return std::nullopt;

  flow_.assign(arcs_.size(), 0);
  for (std::size_t a = 0; a < arcs_.size(); ++a) {
    flow_[a] = arcs_[a].upper - residual.cap(refs[a]);
  }
  return base_cost + cost;
}

}  // namespace twosided
