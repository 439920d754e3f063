#include "twosided/reduction.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>
#include <string>

#include "twosided/error.hpp"
#include "twosided/model.hpp"

namespace twosided {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), degree_(n, 0) {
  std::set<Edge> seen;
  for (auto [a, b] : edges_) {
    if (a >= n_ || b >= n_) throw ValidationError("edge endpoint out of range");
    if (a == b) throw ValidationError("graph has a self-loop");
    if (!seen.insert(std::minmax(a, b)).second) throw ValidationError("graph has a duplicate edge");
    ++degree_[a];
    ++degree_[b];
  }
}

Graph Graph::parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::size_t n = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long long a = 0, b = 0;
    if (!(fields >> a)) continue;
    std::string rest;
    if (!(fields >> b) || (fields >> rest)) {
      throw ValidationError("edge list line " + std::to_string(line_no) + ": expected two vertex ids");
    }
    if (a < 1 || b < 1) throw ValidationError("edge list line " + std::to_string(line_no) + ": ids are 1-indexed");
    edges.emplace_back(static_cast<Index>(a - 1), static_cast<Index>(b - 1));
    n = std::max({n, static_cast<std::size_t>(a), static_cast<std::size_t>(b)});
  }
  return Graph(n, std::move(edges));
}

std::size_t Graph::max_degree() const noexcept {
  return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
}

bool Graph::is_regular() const noexcept {
  return std::all_of(degree_.begin(), degree_.end(), [&](std::size_t d) { return d == degree_.front(); });
}

bool Graph::adjacent(Index a, Index b) const {
  return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) {
    return (e.first == a && e.second == b) || (e.first == b && e.second == a);
  });
}

bool Graph::is_independent(const IndexSet& vertices) const {
  for (Index v : vertices) {
    if (v >= n_) throw ValidationError("vertex out of range");
  }
  return std::none_of(edges_.begin(), edges_.end(), [&](const Edge& e) {
    return vertices.contains(e.first) && vertices.contains(e.second);
  });
}

namespace {

// Polynomial pieces on 1-indexed vertex labels. For edge {p, q} and vertex j,
// dot(edge_raw(p, q), vertex_raw(j)) = scale(p, q) - (j - p)^2 (j - q)^2.
class TypeBuilder {
 public:
  TypeBuilder(std::size_t n, double g_floor) : n_(static_cast<double>(n)) {
    g_norm_ = g_floor;
    for (std::size_t p = 1; p <= n; ++p) {
      for (std::size_t q = 1; q <= n; ++q) g_norm_ = std::max(g_norm_, norm(edge_scaled(label(p), label(q)), 5));
    }
    h_norm_ = 1.0;
    for (std::size_t j = 1; j <= n; ++j) h_norm_ = std::max(h_norm_, norm(vertex_raw(label(j)), 5));
  }

  double e_bar() const { return 1.0 / (g_norm_ * h_norm_); }

  /// Six coordinates; vertices are 0-indexed here.
  std::vector<double> user(Index p, Index q) const {
    auto g = edge_scaled(label(p + 1), label(q + 1));
    std::vector<double> out(6, 0.0);
    for (int x = 0; x < 4; ++x) out[x] = g[x] / g_norm_;
    out[4] = balance(out, 4);
    return out;
  }

  std::vector<double> creator(Index j) const {
    auto h = vertex_raw(label(j + 1));
    std::vector<double> out(6, 0.0);
    for (int x = 0; x < 4; ++x) out[x] = h[x] / h_norm_;
    out[5] = balance(out, 4);
    return out;
  }

 private:
  static double label(std::size_t v) { return static_cast<double>(v); }

  static double norm(const std::array<double, 5>& v, int len) {
    double sq = 0.0;
    for (int x = 0; x < len; ++x) sq += v[x] * v[x];
    return std::sqrt(sq);
  }

  static double balance(const std::vector<double>& v, int len) {
    double sq = 0.0;
    for (int x = 0; x < len; ++x) sq += v[x] * v[x];
    return std::sqrt(std::max(0.0, 1.0 - sq));
  }

  std::array<double, 5> edge_scaled(double p, double q) const {
    const double mid = p * p + 4 * p * q + q * q;
    const double scale = n_ * n_ * n_ * n_ + n_ * n_ * mid + p * p * q * q;
    return {1.0 / scale, (p + q) / scale, mid / scale, (p * p * q + q * q * p) / scale, p * p * q * q / scale};
  }

  std::array<double, 5> vertex_raw(double j) const {
    return {n_ * n_ * n_ * n_ - j * j * j * j, 2 * j * j * j, n_ * n_ - j * j, 2 * j, 0.0};
  }

  double n_;
  double g_norm_ = 1.0;
  double h_norm_ = 1.0;
};

ReductionTypes build_types(const Graph& g, double g_floor) {
  if (g.n() == 0) throw ValidationError("graph has no vertices");
  TypeBuilder builder(g.n(), g_floor);
  ReductionTypes types;
  types.e_bar = builder.e_bar();
  for (auto [p, q] : g.edges()) types.users.emplace_back(builder.user(p, q));
  for (Index j = 0; j < g.n(); ++j) types.creators.emplace_back(builder.creator(j));
  return types;
}

std::vector<double> pad(const std::vector<double>& v, std::size_t dim) {
  std::vector<double> out = v;
  out.resize(dim, 0.0);
  return out;
}

std::size_t auxiliary_count(const Graph& g) {
  std::size_t total = 0;
  for (Index j = 0; j < g.n(); ++j) total += g.max_degree() - g.degree(j);
  return total;
}

enum class Layout { Base, FixedK };

Layout detect_layout(const Graph& g, const Instance& inst) {
  const std::size_t delta = g.max_degree();
  if (inst.a_bar() == delta && inst.k() == 1 && inst.num_creators() == g.n() &&
      inst.num_users() == g.m() + auxiliary_count(g)) {
    return Layout::Base;
  }
  if (inst.a_bar() == delta && inst.k() >= 3 && delta >= 1 &&
      inst.num_creators() == g.n() + g.m() * (inst.k() - 1) + 1 && inst.num_users() == g.m() * delta) {
    return Layout::FixedK;
  }
  throw ValidationError("instance does not match the graph's reduction layout");
}

}  // namespace

ReductionTypes reduction_type_vectors(const Graph& g) { return build_types(g, 1.0); }

Instance reduce_regular(const Graph& g) {
  if (g.m() == 0 || !g.is_regular()) throw ValidationError("reduce_regular needs a regular graph with degree >= 1");
  auto types = build_types(g, 1.0);
  return Instance(6, 1, types.e_bar, g.max_degree(), std::move(types.users), std::move(types.creators));
}

Instance reduce_general(const Graph& g) {
  if (g.m() == 0) throw ValidationError("reduce_general needs at least one edge");
  auto types = build_types(g, 1.0);
  TypeBuilder builder(g.n(), 1.0);
  for (Index j = 0; j < g.n(); ++j) {
    for (std::size_t a = g.degree(j); a < g.max_degree(); ++a) types.users.emplace_back(builder.user(j, j));
  }
  return Instance(6, 1, types.e_bar, g.max_degree(), std::move(types.users), std::move(types.creators));
}

Instance reduce_fixed_k(const Graph& g, std::size_t k) {
  if (k < 3) throw ValidationError("reduce_fixed_k needs k >= 3");
  if (g.m() == 0 || !g.is_regular() || g.max_degree() < 3) {
    throw ValidationError("reduce_fixed_k needs a regular graph with degree >= 3");
  }
  const std::size_t a_bar = g.max_degree();
  auto base = build_types(g, std::sqrt(2.0));
  const double e = base.e_bar;
  const double rest = std::sqrt(1.0 - e * e);

  std::vector<TypeVector> users, creators;
  for (const auto& u : base.users) users.emplace_back(pad(u.coords(), 7));
  for (const auto& c : base.creators) creators.emplace_back(pad(c.coords(), 7));
  for (const auto& u : base.users) {
    std::vector<double> satellite(7, 0.0);
    for (int x = 0; x < 5; ++x) satellite[x] = e * u[x];
    satellite[5] = rest;
    for (std::size_t t = 0; t + 1 < k; ++t) creators.emplace_back(satellite);
  }
  {
    std::vector<double> x_axis(7, 0.0);
    x_axis[6] = 1.0;
    creators.emplace_back(x_axis);
  }
  for (const auto& u : base.users) {
    std::vector<double> satellite(7, 0.0);
    for (int x = 0; x < 5; ++x) satellite[x] = e * e * u[x];
    satellite[5] = e * rest;
    satellite[6] = rest;
    for (std::size_t t = 0; t + 1 < a_bar; ++t) users.emplace_back(satellite);
  }
  return Instance(7, k, e, a_bar, std::move(users), std::move(creators));
}

IndexSet stable_to_independent(const Graph& g, const Instance& inst, const StableSetReport& report) {
  detect_layout(g, inst);
  if (!report.is_stable) throw ValidationError("report is not a stable set");
  IndexSet out;
  for (Index j : report.state.creators) {
    if (j >= inst.num_creators()) throw ValidationError("report references a creator outside the instance");
    if (j < g.n()) out.insert(j);
  }
  return out;
}

StableSetReport independent_to_stable(const Graph& g, const Instance& inst, const IndexSet& s) {
  const Layout layout = detect_layout(g, inst);
  if (!g.is_independent(s)) throw ValidationError("vertex set is not independent");

  PlatformState state;
  Matching m;
  auto match = [&](Index user, Index creator) {
    state.users.insert(user);
    state.creators.insert(creator);
    m.assign(user, creator);
  };

  if (layout == Layout::Base) {
    for (Index i = 0; i < g.m(); ++i) {
      auto [p, q] = g.edges()[i];
      if (s.contains(p)) match(i, p);
      if (s.contains(q)) match(i, q);
    }
    Index next = g.m();
    for (Index j = 0; j < g.n(); ++j) {
      for (std::size_t a = g.degree(j); a < g.max_degree(); ++a, ++next) {
        if (s.contains(j)) match(next, j);
      }
    }
    return check_stable_set(inst, state, m);
  }

  const std::size_t k = inst.k();
  const std::size_t satellites = inst.a_bar() - 1;
  const Index x_creator = g.n() + g.m() * (k - 1);
  for (Index i = 0; i < g.m(); ++i) {
    auto [p, q] = g.edges()[i];
    if (!s.contains(p) && !s.contains(q)) continue;
    const Index endpoint = s.contains(p) ? p : q;
    match(i, endpoint);
    for (std::size_t t = 0; t + 1 < k; ++t) match(i, g.n() + i * (k - 1) + t);
    for (std::size_t a = 0; a < satellites; ++a) {
      const Index user = g.m() + i * satellites + a;
      for (std::size_t t = 0; t + 1 < k; ++t) match(user, g.n() + i * (k - 1) + t);
      match(user, x_creator);
    }
  }
  return check_stable_set(inst, state, m);
}

}  // namespace twosided
