#include "twosided/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "twosided/error.hpp"
#include "twosided/instances.hpp"
#include "twosided/random.hpp"

namespace twosided {

namespace {

constexpr std::uint64_t kBoundChunk = 1 << 16;
constexpr std::size_t kCalibrationSamples = 10'000;

// Runs job(0..count-1) on up to `threads` workers; rethrows the first failure.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& job) {
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> workers;
  for (std::size_t w = 0; w < threads; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          job(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  workers.clear();
  if (failure) std::rethrow_exception(failure);
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

BoundEstimate evaluate_bound_mc(std::size_t c, std::size_t k, std::uint64_t trials, std::uint64_t seed,
                                std::size_t threads) {
  if (!(2 * k > c && k < c)) throw ValidationError("bound needs C/2 < K < C");
  if (trials == 0) throw ValidationError("bound needs at least one trial");

  const double hi = static_cast<double>(k) / static_cast<double>(c);
  const double lo = 1.0 - hi;
  const std::uint64_t chunks = (trials + kBoundChunk - 1) / kBoundChunk;
  std::vector<std::uint64_t> sums(chunks, 0), squares(chunks, 0);

  parallel_for(chunks, threads, [&](std::size_t chunk) {
    Rng rng(derive_seed(seed, {chunk}));
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::vector<double> x(c + 2);
    x.front() = -std::numeric_limits<double>::infinity();
    x.back() = std::numeric_limits<double>::infinity();
    const std::uint64_t begin = chunk * kBoundChunk;
    const std::uint64_t end = std::min(trials, begin + kBoundChunk);
    std::uint64_t sum = 0, sq = 0;
    for (std::uint64_t t = begin; t < end; ++t) {
      for (std::size_t i = 1; i <= c; ++i) x[i] = uniform(rng);
      std::sort(x.begin() + 1, x.begin() + static_cast<std::ptrdiff_t>(c) + 1);
      std::uint64_t hits = 0;
      for (std::size_t i = 1; i + k <= c + 1; ++i) {
        if ((x[i] + x[k + i]) / 2.0 >= hi && (x[i - 1] + x[k + i - 1]) / 2.0 <= lo) ++hits;
      }
      sum += hits;
      sq += hits * hits;
    }
    sums[chunk] = sum;
    squares[chunk] = sq;
  });

  std::uint64_t sum = 0, sq = 0;
  for (std::uint64_t ch = 0; ch < chunks; ++ch) {
    sum += sums[ch];
    sq += squares[ch];
  }
  const double n = static_cast<double>(trials);
  const double mean = static_cast<double>(sum) / n;
  double var = 0.0;
  if (trials > 1) var = std::max(0.0, (static_cast<double>(sq) - n * mean * mean) / (n - 1.0));
  return {mean, std::sqrt(var / n)};
}

std::vector<ExperimentResult> run_experiment_grid(const std::vector<GridPoint>& points, std::uint64_t seed,
                                                  std::size_t threads) {
  // Algorithms scored per point: FL first, then the requested ones without repeats.
  std::vector<std::vector<Algorithm>> scored(points.size());
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
  for (std::size_t p = 0; p < points.size(); ++p) {
    const auto& pt = points[p];
    if (pt.c > FlOptions{}.max_creators) throw CapExceededError("grid point exceeds the FL creator cap");
    if (pt.u == 0 || pt.c == 0 || pt.k == 0 || pt.dim < 2) throw ValidationError("grid point has a zero size");
    scored[p].push_back(Algorithm::FL);
    for (Algorithm a : pt.algorithms) {
      if (std::find(scored[p].begin(), scored[p].end(), a) == scored[p].end()) scored[p].push_back(a);
    }
    offsets.push_back(total);
    total += pt.trials;
  }

  std::vector<double> e_bars(points.size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    e_bars[p] = calibrate_e_bar(points[p].dim, points[p].e_m, kCalibrationSamples, derive_seed(seed, {p, 0}));
  }

  // long_term[trial][a] for the flattened (point, trial) index.
  std::vector<std::vector<double>> long_term(total);
  auto locate = [&](std::size_t flat) {
    std::size_t p = static_cast<std::size_t>(std::upper_bound(offsets.begin(), offsets.end(), flat) - offsets.begin()) - 1;
    return std::pair{p, flat - offsets[p]};
  };
  parallel_for(total, threads, [&](std::size_t flat) {
    auto [p, t] = locate(flat);
    const auto& pt = points[p];
    Instance inst = sample_uniform_instance(pt.u, pt.c, pt.k, pt.a_bar, pt.dim, e_bars[p], derive_seed(seed, {p, 1, t}));
    std::vector<double> values;
    for (Algorithm a : scored[p]) values.push_back(run_dynamics(inst, a).long_term_engagement);
    long_term[flat] = std::move(values);
  });

  std::vector<ExperimentResult> results;
  for (std::size_t p = 0; p < points.size(); ++p) {
    ExperimentResult res{points[p], e_bars[p], {}};
    for (std::size_t a = 0; a < scored[p].size(); ++a) {
      std::vector<double> ratios;
      for (std::size_t t = 0; t < points[p].trials; ++t) {
        const auto& v = long_term[offsets[p] + t];
        if (v[0] > 0.0) ratios.push_back(v[a] / v[0]);
      }
      AlgorithmSummary s;
      s.algorithm = scored[p][a];
      s.n_trials = points[p].trials;
      s.n_conditioned = ratios.size();
      s.eps_hat = s.n_trials == 0 ? 0.0
                                  : static_cast<double>(s.n_trials - s.n_conditioned) / static_cast<double>(s.n_trials);
      if (ratios.empty()) {
        s.mean_ratio = std::numeric_limits<double>::quiet_NaN();
      } else {
        double sum = 0.0;
        for (double r : ratios) sum += r;
        s.mean_ratio = sum / static_cast<double>(ratios.size());
        if (ratios.size() > 1) {
          double ss = 0.0;
          for (double r : ratios) ss += (r - s.mean_ratio) * (r - s.mean_ratio);
          double sd = std::sqrt(ss / static_cast<double>(ratios.size() - 1));
          s.ci_half_width = 1.96 * sd / std::sqrt(static_cast<double>(ratios.size()));
        }
      }
      res.summaries.push_back(s);
    }
    results.push_back(std::move(res));
  }
  return results;
}

std::vector<ExperimentResult> run_experiment_grid(std::vector<GridPoint> points, const std::vector<Algorithm>& algorithms,
                                                  std::size_t trials_per_point, std::uint64_t seed,
                                                  std::size_t threads) {
  for (auto& pt : points) {
    pt.algorithms = algorithms;
    pt.trials = trials_per_point;
  }
  return run_experiment_grid(points, seed, threads);
}

std::vector<CsvRow> summarize(const std::vector<ExperimentResult>& results) {
  std::vector<CsvRow> rows;
  for (const auto& res : results) {
    const auto& pt = res.point;
    for (const auto& s : res.summaries) {
      rows.push_back({pt.u, pt.c, pt.k, pt.a_bar, pt.dim, pt.e_m, res.e_bar, to_string(s.algorithm), s.mean_ratio,
                      s.ci_half_width, s.eps_hat, s.n_trials, s.n_conditioned});
    }
  }
  return rows;
}

namespace {
constexpr const char* kCsvHeader =
    "u,c,k,a_bar,dim,e_m,e_bar,algorithm,mean_ratio,ci_half_width,eps_hat,n_trials,n_conditioned";
}

std::string to_csv(const std::vector<CsvRow>& rows) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& r : rows) {
    out += std::to_string(r.u) + "," + std::to_string(r.c) + "," + std::to_string(r.k) + "," +
           std::to_string(r.a_bar) + "," + std::to_string(r.dim) + "," + format_double(r.e_m) + "," +
           format_double(r.e_bar) + "," + r.algorithm + "," + format_double(r.mean_ratio) + "," +
           format_double(r.ci_half_width) + "," + format_double(r.eps_hat) + "," + std::to_string(r.n_trials) + "," +
           std::to_string(r.n_conditioned) + "\n";
  }
  return out;
}

std::vector<CsvRow> parse_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw ValidationError("CSV header does not match");
  std::vector<CsvRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) f.push_back(cell);
    if (f.size() != 13) throw ValidationError("CSV row has " + std::to_string(f.size()) + " fields, expected 13");
    try {
      rows.push_back({std::stoul(f[0]), std::stoul(f[1]), std::stoul(f[2]), std::stoul(f[3]), std::stoul(f[4]),
                      std::stod(f[5]), std::stod(f[6]), f[7], std::stod(f[8]), std::stod(f[9]), std::stod(f[10]),
                      std::stoul(f[11]), std::stoul(f[12])});
    } catch (const std::logic_error&) {
      throw ValidationError("CSV row has a malformed number: " + line);
    }
  }
  return rows;
}

}  // namespace twosided
