#pragma once

#include "twosided/types.hpp"

namespace twosided {

/// Each active user gets the min(K, |active creators|) creators she engages with most.
/// Ties go to the lower creator index.
Matching uc_recommend(const Instance& inst, const PlatformState& state);

}  // namespace twosided
