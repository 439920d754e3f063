#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace twosided {

using Index = std::size_t;
using IndexSet = std::set<Index>;

/// Nonnegative unit vector describing a user's preferences or a creator's content.
class TypeVector {
 public:
  static constexpr double kNormTolerance = 1e-9;

  /** Throws ValidationError on empty input, negative coordinates or a norm off 1. */
  explicit TypeVector(std::vector<double> coords);

  std::size_t dim() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<double>& coords() const noexcept { return coords_; }

  bool operator==(const TypeVector&) const = default;

 private:
  std::vector<double> coords_;
};

class Instance {
 public:
  Instance(std::size_t dim, std::size_t k, double e_bar, std::size_t a_bar,
           std::vector<TypeVector> users, std::vector<TypeVector> creators);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t k() const noexcept { return k_; }
  double e_bar() const noexcept { return e_bar_; }
  std::size_t a_bar() const noexcept { return a_bar_; }

  std::size_t num_users() const noexcept { return users_.size(); }
  std::size_t num_creators() const noexcept { return creators_.size(); }
  const std::vector<TypeVector>& users() const noexcept { return users_; }
  const std::vector<TypeVector>& creators() const noexcept { return creators_; }
  const TypeVector& user(Index i) const { return users_.at(i); }
  const TypeVector& creator(Index j) const { return creators_.at(j); }

  bool operator==(const Instance&) const = default;

 private:
  std::size_t dim_;
  std::size_t k_;
  double e_bar_;
  std::size_t a_bar_;
  std::vector<TypeVector> users_;
  std::vector<TypeVector> creators_;
};

/// Players still on the platform at some time step.
struct PlatformState {
  IndexSet users;
  IndexSet creators;

  static PlatformState full(const Instance& inst);

  bool empty() const noexcept { return users.empty() && creators.empty(); }
  bool operator==(const PlatformState&) const = default;
};

/// Recommendation sets R(i), keyed by user index.
class Matching {
 public:
  using Map = std::map<Index, IndexSet>;

  Matching() = default;

  /// Makes `user` present with an empty recommendation set if absent.
  void add_user(Index user) { assignments_.try_emplace(user); }
  void assign(Index user, Index creator) { assignments_[user].insert(creator); }
  void unassign(Index user, Index creator);
  void set(Index user, IndexSet creators) { assignments_[user] = std::move(creators); }

  bool contains(Index user, Index creator) const;
  bool has_user(Index user) const { return assignments_.contains(user); }
  const IndexSet& creators_of(Index user) const;
  std::size_t count(Index user) const { return creators_of(user).size(); }

  const Map& assignments() const noexcept { return assignments_; }
  Map::const_iterator begin() const noexcept { return assignments_.begin(); }
  Map::const_iterator end() const noexcept { return assignments_.end(); }

  bool operator==(const Matching&) const = default;

 private:
  Map assignments_;
};

enum class PlayerKind { User, Creator };

struct Violation {
  PlayerKind kind;
  Index index;
  std::string reason;

  bool operator==(const Violation&) const = default;
};

struct StableSetReport {
  PlatformState state;
  Matching matching;
  double engagement = 0.0;
  bool is_stable = true;
  std::vector<Violation> violations;
};

std::string to_string(PlayerKind kind);

}  // namespace twosided
