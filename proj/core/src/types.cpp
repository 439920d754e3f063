#include "twosided/types.hpp"

#include <cmath>

#include "twosided/error.hpp"

namespace twosided {

TypeVector::TypeVector(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw ValidationError("type vector must have at least one coordinate");
  double sq = 0.0;
  for (double x : coords_) {
    if (!std::isfinite(x)) throw ValidationError("type vector coordinate is not finite");
    if (x < 0.0) throw ValidationError("type vector coordinate is negative");
    sq += x * x;
  }
  if (std::abs(std::sqrt(sq) - 1.0) > kNormTolerance) {
    throw ValidationError("type vector is not unit norm");
  }
}

Instance::Instance(std::size_t dim, std::size_t k, double e_bar, std::size_t a_bar,
                   std::vector<TypeVector> users, std::vector<TypeVector> creators)
    : dim_(dim), k_(k), e_bar_(e_bar), a_bar_(a_bar), users_(std::move(users)),
      creators_(std::move(creators)) {
  if (dim_ == 0) throw ValidationError("dim must be positive");
  if (k_ == 0) throw ValidationError("k must be at least 1");
  if (!(e_bar_ >= 0.0 && e_bar_ <= 1.0)) throw ValidationError("e_bar must lie in [0, 1]");
  if (users_.empty()) throw ValidationError("instance needs at least one user");
  if (creators_.empty()) throw ValidationError("instance needs at least one creator");
  for (const auto& u : users_) {
    if (u.dim() != dim_) throw ValidationError("user vector length differs from dim");
  }
  for (const auto& c : creators_) {
    if (c.dim() != dim_) throw ValidationError("creator vector length differs from dim");
  }
}

PlatformState PlatformState::full(const Instance& inst) {
  PlatformState s;
  for (Index i = 0; i < inst.num_users(); ++i) s.users.insert(s.users.end(), i);
  for (Index j = 0; j < inst.num_creators(); ++j) s.creators.insert(s.creators.end(), j);
  return s;
}

void Matching::unassign(Index user, Index creator) {
  auto it = assignments_.find(user);
  if (it != assignments_.end()) it->second.erase(creator);
}

bool Matching::contains(Index user, Index creator) const {
  auto it = assignments_.find(user);
  return it != assignments_.end() && it->second.contains(creator);
}

const IndexSet& Matching::creators_of(Index user) const {
  static const IndexSet kEmpty;
  auto it = assignments_.find(user);
  return it == assignments_.end() ? kEmpty : it->second;
}

std::string to_string(PlayerKind kind) {
  return kind == PlayerKind::User ? "user" : "creator";
}

}  // namespace twosided
