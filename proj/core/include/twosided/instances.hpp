#pragma once

#include <cstdint>
#include <vector>

#include "twosided/random.hpp"
#include "twosided/types.hpp"

namespace twosided {

/// Two creators and six users in the plane; u3 sits between the two clusters.
Instance example_simple();

/**
 * Family where greedy top-K recommendation loses every player: two corner
 * creators with a_bar - 2 users each, m - 2 middle creators, and two users
 * between the corners. K = m - 1, a_bar = max(ceil(n_hint / 2) + 1, 3).
 */
Instance example_megacrown(std::size_t m, std::size_t n_hint);

/// 2n creators and 2n users on an arc where greedy recommendation peels off one player per step.
Instance example_cascade(std::size_t n);

/**
 * Four center creators with five users, surrounded by five corners with one
 * creator and a_bar - 5 users each. `d` is the chord distance from the center
 * to every corner and also the happy distance. K = 5.
 */
Instance example_flower(std::size_t a_bar, double d);

/// Uniform draw from the nonnegative part of the unit sphere.
std::vector<double> sample_orthant_direction(std::size_t dim, Rng& rng);

Instance sample_uniform_instance(std::size_t u, std::size_t c, std::size_t k, std::size_t a_bar, std::size_t dim,
                                 double e_bar, std::uint64_t seed);

/// e_m times the Monte-Carlo mean of u . c over `samples` independent pairs.
double calibrate_e_bar(std::size_t dim, double e_m, std::size_t samples = 10'000, std::uint64_t seed = 0);

/**
 * Turns arbitrary nonnegative nonzero vectors into unit types in dimension
 * D + 2 without changing which pairs are happy. Engagements scale by
 * 1 / (l_u l_c) where l_u, l_c are the largest user and creator norms, and
 * e_bar scales the same way. Throws ValidationError if the scaled threshold
 * exceeds 1.
 */
Instance embed_unit_vectors(const std::vector<std::vector<double>>& raw_users,
                            const std::vector<std::vector<double>>& raw_creators, double e_bar, std::size_t k,
                            std::size_t a_bar);

}  // namespace twosided
