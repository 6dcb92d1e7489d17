#include "denopt/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace denopt {

namespace {

// Low-order random Fourier field on the grid interval: smooth, O(1) amplitude.
std::vector<double> random_field(const Grid& grid, std::mt19937_64& rng) {
  constexpr int kModes = 4;
  std::normal_distribution<double> gauss(0.0, 1.0);
  double a[kModes], b[kModes];
  for (int j = 0; j < kModes; ++j) {
    const double scale = 0.8 / (1.0 + j);
    a[j] = scale * gauss(rng);
    b[j] = scale * gauss(rng);
  }
  const double span = grid.upper() - grid.lower();
  std::vector<double> field(grid.size(), 0.0);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double u = (grid.node(k) - grid.lower()) / span;
    for (int j = 0; j < kModes; ++j) {
      const double w = 2.0 * std::numbers::pi * (j + 1) * u;
      field[k] += a[j] * std::cos(w) + b[j] * std::sin(w);
    }
  }
  return field;
}

double softplus(double x) { return x > 30.0 ? x : std::log1p(std::exp(x)); }

}  // namespace

Density random_smooth_density(const Grid& grid, std::mt19937_64& rng, double floor_fraction) {
  if (!(floor_fraction >= 0.0 && floor_fraction < 1.0))
    throw std::invalid_argument("random_smooth_density: floor_fraction must be in [0, 1)");
  std::vector<double> v = random_field(grid, rng);
  for (double& x : v) x = softplus(x) + 1e-3;
  Density base = normalize(grid, v);
  const double uniform = 1.0 / (grid.upper() - grid.lower());
  std::vector<double> mixed(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k)
    mixed[k] = (1.0 - floor_fraction) * base.value(k) + floor_fraction * uniform;
  return Density(grid, std::move(mixed), 1e-6);
}

PerturbationDirection random_smooth_perturbation(const Grid& grid, std::mt19937_64& rng,
                                                 double amplitude) {
  if (!(amplitude > 0.0))
    throw std::invalid_argument("random_smooth_perturbation: amplitude must be > 0");
  std::vector<double> field = random_field(grid, rng);
  auto eta = PerturbationDirection::recentered(grid, std::move(field));
  double peak = 0.0;
  for (double v : eta.values()) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) throw std::runtime_error("random_smooth_perturbation: degenerate draw");
  std::vector<double> scaled(eta.values().begin(), eta.values().end());
  for (double& v : scaled) v *= amplitude / peak;
  return PerturbationDirection(grid, std::move(scaled));
}

}  // namespace denopt
