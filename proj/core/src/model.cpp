#include "twosided/model.hpp"

#include <string>

#include "twosided/error.hpp"

namespace twosided {

double engagement(const TypeVector& u, const TypeVector& c) {
  if (u.dim() != c.dim()) throw ValidationError("engagement: dimension mismatch");
  double dot = 0.0;
  for (std::size_t d = 0; d < u.dim(); ++d) dot += u[d] * c[d];
  return dot;
}

bool is_happy(const TypeVector& u, const TypeVector& c, double e_bar) {
  return engagement(u, c) >= e_bar - kHappyTolerance;
}

bool is_happy(const Instance& inst, Index user, Index creator) {
  return is_happy(inst.user(user), inst.creator(creator), inst.e_bar());
}

double total_engagement(const Instance& inst, const PlatformState& state, const Matching& m) {
  double total = 0.0;
  for (const auto& [user, creators] : m) {
    if (creators.empty()) continue;
    if (!state.users.contains(user)) {
      throw ValidationError("matching references inactive user " + std::to_string(user));
    }
    for (Index j : creators) {
      if (!state.creators.contains(j)) {
        throw ValidationError("matching references inactive creator " + std::to_string(j));
      }
      total += engagement(inst.user(user), inst.creator(j));
    }
  }
  return total;
}

std::map<Index, std::size_t> audience_sizes(const PlatformState& state, const Matching& m) {
  std::map<Index, std::size_t> audience;
  for (Index j : state.creators) audience.emplace_hint(audience.end(), j, 0);
  for (const auto& [user, creators] : m) {
    if (!state.users.contains(user)) continue;
    for (Index j : creators) {
      auto it = audience.find(j);
      if (it != audience.end()) ++it->second;
    }
  }
  return audience;
}

namespace {

bool user_satisfied(const Instance& inst, Index user, const Matching& m) {
  const auto& rec = m.creators_of(user);
  if (rec.size() != inst.k()) return false;
  for (Index j : rec) {
    if (!is_happy(inst, user, j)) return false;
  }
  return true;
}

}  // namespace

PlatformState surviving_players(const Instance& inst, const PlatformState& state, const Matching& m) {
  PlatformState next;
  for (Index i : state.users) {
    if (user_satisfied(inst, i, m)) next.users.insert(next.users.end(), i);
  }
  for (const auto& [j, a] : audience_sizes(state, m)) {
    if (a >= inst.a_bar()) next.creators.insert(next.creators.end(), j);
  }
  return next;
}

StableSetReport check_stable_set(const Instance& inst, const PlatformState& state, const Matching& m) {
  StableSetReport report{state, m, 0.0, true, {}};
  for (Index i : state.users) {
    const auto& rec = m.creators_of(i);
    if (rec.size() != inst.k()) {
      report.violations.push_back({PlayerKind::User, i,
                                   "has " + std::to_string(rec.size()) + " recommendations, needs " +
                                       std::to_string(inst.k())});
      continue;
    }
    for (Index j : rec) {
      if (!state.creators.contains(j)) {
        report.violations.push_back({PlayerKind::User, i, "recommended inactive creator " + std::to_string(j)});
      } else if (!is_happy(inst, i, j)) {
        report.violations.push_back({PlayerKind::User, i, "unhappy with creator " + std::to_string(j)});
      }
    }
  }
  for (const auto& [j, a] : audience_sizes(state, m)) {
    if (a < inst.a_bar()) {
      report.violations.push_back({PlayerKind::Creator, j,
                                   "audience " + std::to_string(a) + " < " + std::to_string(inst.a_bar())});
    }
  }
  for (const auto& [i, rec] : m) {
    if (!rec.empty() && !state.users.contains(i)) {
      report.violations.push_back({PlayerKind::User, i, "inactive user holds recommendations"});
    }
  }
  report.is_stable = report.violations.empty();
  for (Index i : state.users) {
    for (Index j : m.creators_of(i)) {
      if (state.creators.contains(j)) report.engagement += engagement(inst.user(i), inst.creator(j));
    }
  }
  return report;
}

}  // namespace twosided
