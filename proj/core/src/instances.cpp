#include "twosided/instances.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "twosided/error.hpp"
#include "twosided/model.hpp"

namespace twosided {

namespace {

TypeVector polar(double angle) { return TypeVector({std::max(0.0, std::cos(angle)), std::max(0.0, std::sin(angle))}); }

std::vector<TypeVector> repeat(const TypeVector& v, std::size_t count) { return std::vector<TypeVector>(count, v); }

void append(std::vector<TypeVector>& to, const std::vector<TypeVector>& from) { to.insert(to.end(), from.begin(), from.end()); }

double norm(const std::vector<double>& v) {
  double sq = 0.0;
  for (double x : v) sq += x * x;
  return std::sqrt(sq);
}

}  // namespace

Instance example_simple() {
  using std::numbers::pi;
  const TypeVector up({0.0, 1.0});
  const TypeVector right({1.0, 0.0});
  std::vector<TypeVector> users{up, up, TypeVector({std::cos(pi / 6), std::sin(pi / 6)}), right, right, right};
  return Instance(2, 1, std::cos(pi / 3), 3, std::move(users), {up, right});
}

Instance example_megacrown(std::size_t m, std::size_t n_hint) {
  using std::numbers::pi;
  if (m < 3) throw ValidationError("megacrown needs m >= 3");
  const std::size_t a_bar = std::max<std::size_t>((n_hint + 1) / 2 + 1, 3);

  std::vector<TypeVector> creators{polar(pi / 2)};
  append(creators, repeat(polar(pi / 4), m - 2));
  creators.push_back(polar(0.0));

  std::vector<TypeVector> users{polar(pi / 3), polar(pi / 6)};
  append(users, repeat(polar(pi / 2), a_bar - 2));
  append(users, repeat(polar(0.0), a_bar - 2));
  return Instance(2, m - 1, std::cos(pi / 3), a_bar, std::move(users), std::move(creators));
}

Instance example_cascade(std::size_t n) {
  using std::numbers::pi;
  if (n < 2) throw ValidationError("cascade needs n >= 2");
  const double theta = pi / (6.0 * static_cast<double>(2 * n - 1));
  std::vector<TypeVector> creators, users;
  for (std::size_t i = 0; i < 2 * n; ++i) creators.push_back(polar(3.0 * static_cast<double>(i) * theta));
  for (std::size_t i = 0; i + 1 < 2 * n; ++i) users.push_back(polar(3.0 * static_cast<double>(i) * theta + theta));
  users.push_back(polar(3.0 * static_cast<double>(2 * n - 1) * theta - theta));
  return Instance(2, 2, std::cos(4.0 * theta), 2, std::move(users), std::move(creators));
}

Instance example_flower(std::size_t a_bar, double d) {
  using std::numbers::pi;
  if (a_bar < 7) throw ValidationError("flower needs a_bar >= 7");
  if (!(d > 0.0 && d < 2.0)) throw ValidationError("flower distance must lie in (0, 2)");

  const double s3 = std::sqrt(3.0), s2 = std::sqrt(2.0), s6 = std::sqrt(6.0);
  const std::vector<double> center{1 / s3, 1 / s3, 1 / s3};
  const std::vector<double> e1{1 / s2, -1 / s2, 0.0};
  const std::vector<double> e2{1 / s6, 1 / s6, -2 / s6};
  const double phi = 2.0 * std::asin(d / 2.0);

  std::vector<std::vector<double>> corners;
  for (int c = 0; c < 5; ++c) {
    const double a = 2.0 * pi * c / 5.0;
    std::vector<double> v(3);
    for (int x = 0; x < 3; ++x) {
      v[x] = std::cos(phi) * center[x] + std::sin(phi) * (std::cos(a) * e1[x] + std::sin(a) * e2[x]);
      if (v[x] < -1e-12) throw ValidationError("flower corner leaves the nonnegative orthant");
      v[x] = std::max(v[x], 0.0);
    }
    corners.push_back(v);
  }
  for (std::size_t a = 0; a < corners.size(); ++a) {
    for (std::size_t b = a + 1; b < corners.size(); ++b) {
      double sq = 0.0;
      for (int x = 0; x < 3; ++x) sq += (corners[a][x] - corners[b][x]) * (corners[a][x] - corners[b][x]);
      if (std::sqrt(sq) <= d) throw ValidationError("flower corners are within happy distance of each other");
    }
  }

  const TypeVector mid(center);
  std::vector<TypeVector> creators = repeat(mid, 4);
  std::vector<TypeVector> users = repeat(mid, 5);
  for (const auto& corner : corners) creators.emplace_back(corner);
  for (const auto& corner : corners) append(users, repeat(TypeVector(corner), a_bar - 5));
  return Instance(3, 5, std::cos(phi), a_bar, std::move(users), std::move(creators));
}

std::vector<double> sample_orthant_direction(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> v(dim);
  double n = 0.0;
  while (n == 0.0) {
    for (double& x : v) x = std::abs(gauss(rng));
    n = norm(v);
  }
  for (double& x : v) x /= n;
  return v;
}

Instance sample_uniform_instance(std::size_t u, std::size_t c, std::size_t k, std::size_t a_bar, std::size_t dim,
                                 double e_bar, std::uint64_t seed) {
  if (dim < 2) throw ValidationError("sampling needs dim >= 2");
  Rng rng(seed);
  std::vector<TypeVector> users, creators;
  for (std::size_t i = 0; i < u; ++i) users.emplace_back(sample_orthant_direction(dim, rng));
  for (std::size_t j = 0; j < c; ++j) creators.emplace_back(sample_orthant_direction(dim, rng));
  return Instance(dim, k, e_bar, a_bar, std::move(users), std::move(creators));
}

double calibrate_e_bar(std::size_t dim, double e_m, std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw ValidationError("calibration needs at least one sample");
  if (dim == 0) throw ValidationError("calibration needs dim >= 1");
  Rng rng(seed);
  double sum = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    auto u = sample_orthant_direction(dim, rng);
    auto c = sample_orthant_direction(dim, rng);
    for (std::size_t x = 0; x < dim; ++x) sum += u[x] * c[x];
  }
  return e_m * sum / static_cast<double>(samples);
}

Instance embed_unit_vectors(const std::vector<std::vector<double>>& raw_users,
                            const std::vector<std::vector<double>>& raw_creators, double e_bar, std::size_t k,
                            std::size_t a_bar) {
  if (raw_users.empty() || raw_creators.empty()) throw ValidationError("embedding needs users and creators");
  const std::size_t dim = raw_users.front().size();
  double l_u = 0.0, l_c = 0.0;
  auto scan = [&](const std::vector<std::vector<double>>& vs, double& longest) {
    for (const auto& v : vs) {
      if (v.size() != dim) throw ValidationError("raw vectors differ in length");
      if (std::any_of(v.begin(), v.end(), [](double x) { return x < 0.0 || !std::isfinite(x); })) {
        throw ValidationError("raw vectors must be nonnegative");
      }
      double n = norm(v);
      if (n == 0.0) throw ValidationError("raw vectors must be nonzero");
      longest = std::max(longest, n);
    }
  };
  scan(raw_users, l_u);
  scan(raw_creators, l_c);

  const double scaled_e_bar = e_bar / (l_u * l_c);
  if (scaled_e_bar > 1.0) throw ValidationError("threshold exceeds every achievable engagement");

  auto lift = [&](const std::vector<double>& v, double l, std::size_t slot) {
    std::vector<double> out(dim + 2, 0.0);
    for (std::size_t x = 0; x < dim; ++x) out[x] = v[x] / l;
    // Norms equal up to rounding get no balancing mass, so unit inputs pass through unchanged.
    const double n = norm(v);
    const double gap = l - n;
    if (gap > 4.0 * std::numeric_limits<double>::epsilon() * l) out[dim + slot] = std::sqrt(gap * (l + n)) / l;
    return TypeVector(std::move(out));
  };
  std::vector<TypeVector> users, creators;
  for (const auto& v : raw_users) users.push_back(lift(v, l_u, 0));
  for (const auto& v : raw_creators) creators.push_back(lift(v, l_c, 1));
  return Instance(dim + 2, k, scaled_e_bar, a_bar, std::move(users), std::move(creators));
}

}  // namespace twosided
