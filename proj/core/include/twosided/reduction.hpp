#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "twosided/types.hpp"

namespace twosided {

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  using Edge = std::pair<Index, Index>;

  Graph(std::size_t n, std::vector<Edge> edges);

  /// Parses "u v" lines with 1-indexed vertices; blank lines and '#' comments are skipped.
  static Graph parse_edge_list(std::string_view text);

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t degree(Index v) const { return degree_.at(v); }
  std::size_t max_degree() const noexcept;
  bool is_regular() const noexcept;
  bool adjacent(Index a, Index b) const;
  bool is_independent(const IndexSet& vertices) const;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> degree_;
};

struct ReductionTypes {
  std::vector<TypeVector> users;     // one per edge, in edge order
  std::vector<TypeVector> creators;  // one per vertex
  double e_bar = 0.0;
};

/**
 * Six-dimensional types for which user i (edge {p, q}) reaches engagement
 * exactly e_bar with creator j when j is an endpoint of the edge, and strictly
 * less otherwise.
 */
ReductionTypes reduction_type_vectors(const Graph& g);

/// K = 1, a_bar = degree. Throws ValidationError unless g is regular with degree >= 1.
Instance reduce_regular(const Graph& g);

/// As reduce_regular, padding vertex j with max_degree - deg(j) auxiliary users of type g(j, j).
Instance reduce_general(const Graph& g);

/**
 * Seven-dimensional construction with K = k. Each edge user i gets k - 1
 * private creators and a_bar - 1 satellite users, and a global creator X
 * serves all satellites. Requires g regular with degree >= 3 and k >= 3.
 *
 * Layout: creators are the n vertices, then k - 1 per edge, then X. Users are
 * the m edges, then a_bar - 1 satellites per edge.
 */
Instance reduce_fixed_k(const Graph& g, std::size_t k);

/// Original-vertex creators of a stable set built on a reduction of g.
IndexSet stable_to_independent(const Graph& g, const Instance& inst, const StableSetReport& report);

/// The stable set a reduction of g induces from independent set s.
StableSetReport independent_to_stable(const Graph& g, const Instance& inst, const IndexSet& s);

}  // namespace twosided
