#include "twosided/uc.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "twosided/model.hpp"

namespace twosided {

Matching uc_recommend(const Instance& inst, const PlatformState& state) {
  Matching m;
  const std::size_t take = std::min(inst.k(), state.creators.size());
  std::vector<std::pair<double, Index>> ranked;
  for (Index i : state.users) {
    ranked.clear();
    for (Index j : state.creators) ranked.emplace_back(engagement(inst.user(i), inst.creator(j)), j);
    std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(take), ranked.end(),
                      [](const auto& a, const auto& b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
    m.add_user(i);
    for (std::size_t r = 0; r < take; ++r) m.assign(i, ranked[r].second);
  }
  return m;
}

}  // namespace twosided
