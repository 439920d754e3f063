#include "twosided/submodularity.hpp"

#include <algorithm>

#include "twosided/error.hpp"
#include "twosided/fixed_sets.hpp"

namespace twosided {

namespace {
constexpr double kSlack = 1e-9;
}

std::optional<double> fixed_sets_value(const Instance& inst, const IndexSet& users, const IndexSet& creators) {
  auto solution = solve_fixed_sets(inst, users, creators, std::min(inst.k(), creators.size()));
  if (!solution) return std::nullopt;
  return solution->engagement;
}

bool submodularity_check(const Instance& inst, const IndexSet& users, const IndexSet& creators, Index c0, Index c1) {
  if (inst.e_bar() != 0.0) throw ValidationError("submodularity_check requires e_bar = 0");
  if (c0 == c1) throw ValidationError("c0 and c1 must differ");
  if (c0 >= inst.num_creators() || c1 >= inst.num_creators()) throw ValidationError("creator index out of range");
  if (creators.contains(c0) || creators.contains(c1)) throw ValidationError("c0 and c1 must lie outside creators");

  IndexSet with0 = creators, with1 = creators, with_both = creators;
  with0.insert(c0);
  with1.insert(c1);
  with_both.insert(c0);
  with_both.insert(c1);

  auto base = fixed_sets_value(inst, users, creators);
  auto f0 = fixed_sets_value(inst, users, with0);
  auto f1 = fixed_sets_value(inst, users, with1);
  auto f01 = fixed_sets_value(inst, users, with_both);
  if (!base || !f0 || !f1 || !f01) return true;
  return *f01 - *f1 <= *f0 - *base + kSlack;
}

}  // namespace twosided
