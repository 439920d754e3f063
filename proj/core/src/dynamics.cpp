#include "twosided/dynamics.hpp"

#include <functional>
#include <stdexcept>

#include "twosided/cr.hpp"
#include "twosided/error.hpp"
#include "twosided/lc.hpp"
#include "twosided/model.hpp"
#include "twosided/uc.hpp"

namespace twosided {

std::string to_string(Algorithm alg) {
  switch (alg) {
    case Algorithm::UC: return "uc";
    case Algorithm::FL: return "fl";
    case Algorithm::LC: return "lc";
    case Algorithm::CR1: return "cr1";
    case Algorithm::CR2: return "cr2";
  }
  throw std::logic_error("unknown algorithm");
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm alg : {Algorithm::UC, Algorithm::FL, Algorithm::LC, Algorithm::CR1, Algorithm::CR2}) {
    if (name == to_string(alg)) return alg;
  }
  throw ValidationError("unknown algorithm '" + std::string(name) + "'");
}

namespace {

using Recommender = std::function<Matching(const PlatformState&)>;

// Replays a maximum stable set. Users outside it get the lowest-index K of its
// creators, which they are free to leave.
Recommender fl_recommender(const Instance& inst, const FlOptions& options) {
  StableSetReport mss = fl_solve(inst, options);
  IndexSet fallback;
  for (Index j : mss.state.creators) {
    if (fallback.size() == inst.k()) break;
    fallback.insert(j);
  }
  return [mss = std::move(mss), fallback = std::move(fallback)](const PlatformState& state) {
    Matching m;
    for (Index i : state.users) {
      const IndexSet& source = mss.state.users.contains(i) ? mss.matching.creators_of(i) : fallback;
      IndexSet rec;
      for (Index j : source) {
        if (state.creators.contains(j)) rec.insert(j);
      }
      m.set(i, std::move(rec));
    }
    return m;
  };
}

Recommender make_recommender(const Instance& inst, Algorithm alg, const FlOptions& options) {
  switch (alg) {
    case Algorithm::UC: return [&inst](const PlatformState& s) { return uc_recommend(inst, s); };
    case Algorithm::LC: return [&inst](const PlatformState& s) { return lc_recommend(inst, s); };
    case Algorithm::CR1: return [&inst](const PlatformState& s) { return cr1_recommend(inst, s); };
    case Algorithm::CR2: return [&inst](const PlatformState& s) { return cr2_recommend(inst, s); };
    case Algorithm::FL: return fl_recommender(inst, options);
  }
  throw std::logic_error("unknown algorithm");
}

}  // namespace

Trajectory run_dynamics(const Instance& inst, Algorithm alg, const FlOptions& fl_options) {
  Recommender recommend = make_recommender(inst, alg, fl_options);
  const std::size_t cap = inst.num_users() + inst.num_creators() + 2;

  Trajectory traj;
  PlatformState state = PlatformState::full(inst);
  for (std::size_t t = 0; t < cap; ++t) {
    Matching m = recommend(state);
    double e = total_engagement(inst, state, m);
    PlatformState next = surviving_players(inst, state, m);
    traj.steps.push_back({state, std::move(m), e});
    if (next == state) {
      traj.converged_at = t;
      traj.long_term_engagement = e;
      return traj;
    }
    state = std::move(next);
  }
  throw std::logic_error("dynamics did not reach a fixed point within U + C + 2 steps");
}

std::optional<double> approximation_ratio(const Instance& inst, Algorithm alg, const FlOptions& fl_options) {
  double fl = run_dynamics(inst, Algorithm::FL, fl_options).long_term_engagement;
  if (fl <= 0.0) return std::nullopt;
  if (alg == Algorithm::FL) return 1.0;
  return run_dynamics(inst, alg, fl_options).long_term_engagement / fl;
}

}  // namespace twosided
