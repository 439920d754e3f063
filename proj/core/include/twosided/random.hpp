#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace twosided {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

/// Seed for an independent stream identified by a master seed and a path of counters.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path);

}  // namespace twosided
