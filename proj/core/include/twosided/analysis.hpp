#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "twosided/dynamics.hpp"

namespace twosided {

struct BoundEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

/**
 * Monte-Carlo estimate of
 *   sum_{i=1}^{C-K+1} Pr[(X_i + X_{K+i}) / 2 >= K/C and (X_{i-1} + X_{K+i-1}) / 2 <= 1 - K/C]
 * where X_1 <= ... <= X_C are sorted uniforms, X_0 = -inf and X_{C+1} = +inf.
 * Requires C/2 < K < C. Trials run in fixed-size chunks with their own seeds,
 * so the result does not depend on `threads`.
 */
BoundEstimate evaluate_bound_mc(std::size_t c, std::size_t k, std::uint64_t trials, std::uint64_t seed,
                                std::size_t threads = 1);

struct GridPoint {
  std::size_t u = 0;
  std::size_t c = 0;
  std::size_t k = 0;
  std::size_t a_bar = 0;
  std::size_t dim = 0;
  double e_m = 0.0;
  std::vector<Algorithm> algorithms;
  std::size_t trials = 0;
};

struct AlgorithmSummary {
  Algorithm algorithm = Algorithm::FL;
  /// Mean of long-term ratios to FL over trials where FL is positive; NaN if there are none.
  double mean_ratio = 0.0;
  /// Normal-approximation 95% half-width of that mean.
  double ci_half_width = 0.0;
  /// Fraction of trials where FL's long-term engagement is zero.
  double eps_hat = 0.0;
  std::size_t n_trials = 0;
  std::size_t n_conditioned = 0;
};

struct ExperimentResult {
  GridPoint point;
  double e_bar = 0.0;
  std::vector<AlgorithmSummary> summaries;  // FL first, then the requested algorithms
};

/**
 * Samples `trials` instances per point with e_bar calibrated from e_m and
 * reports conditional mean ratios. Per-trial seeds are derived from the master
 * seed, the point index and the trial index, so output is independent of
 * `threads`.
 */
std::vector<ExperimentResult> run_experiment_grid(const std::vector<GridPoint>& points, std::uint64_t seed,
                                                  std::size_t threads = 1);

/// Overrides every point's algorithm list and trial count.
std::vector<ExperimentResult> run_experiment_grid(std::vector<GridPoint> points, const std::vector<Algorithm>& algorithms,
                                                  std::size_t trials_per_point, std::uint64_t seed,
                                                  std::size_t threads = 1);

struct CsvRow {
  std::size_t u = 0, c = 0, k = 0, a_bar = 0, dim = 0;
  double e_m = 0.0;
  double e_bar = 0.0;
  std::string algorithm;
  double mean_ratio = 0.0;
  double ci_half_width = 0.0;
  double eps_hat = 0.0;
  std::size_t n_trials = 0;
  std::size_t n_conditioned = 0;
};

/// One row per point and algorithm.
std::vector<CsvRow> summarize(const std::vector<ExperimentResult>& results);

std::string to_csv(const std::vector<CsvRow>& rows);
std::vector<CsvRow> parse_csv(std::string_view text);

}  // namespace twosided
