#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace twosided {

/**
 * Minimum-cost circulation with integer lower and upper arc bounds.
 *
 * Lower bounds are removed by the usual excess transformation and the
 * resulting transshipment problem is solved with successive shortest paths
 * (Dijkstra over reduced costs). The network left after removing lower
 * bounds must not contain a negative-cost cycle; solve() throws
 * std::logic_error if it does.
 */
class FlowNetwork {
 public:
  using ArcId = std::size_t;
  static constexpr std::int64_t kInfinite = std::numeric_limits<std::int64_t>::max() / 4;

  explicit FlowNetwork(std::size_t num_nodes = 0) : num_nodes_(num_nodes) {}

  std::size_t add_node() { return num_nodes_++; }
  std::size_t num_nodes() const noexcept { return num_nodes_; }

  ArcId add_arc(std::size_t from, std::size_t to, std::int64_t lower, std::int64_t upper, std::int64_t cost);

  /// Total cost of a cheapest feasible circulation, or nullopt if none exists.
  std::optional<std::int64_t> solve();

  /// Flow on an arc after a successful solve().
  std::int64_t flow(ArcId arc) const { return flow_.at(arc); }

 private:
  struct Arc {
    std::size_t from, to;
    std::int64_t lower, upper, cost;
  };

  std::size_t num_nodes_;
  std::vector<Arc> arcs_;
  std::vector<std::int64_t> flow_;
};

}  // namespace twosided
