#pragma once

#include <random>

#include "denopt/density.hpp"
#include "denopt/functional.hpp"
#include "denopt/grid.hpp"

namespace denopt {

// Deterministic smooth random densities: softplus of a low-order random
// Fourier field, normalized, then mixed with the uniform density so the
// result is bounded away from 0 (min >= floor_fraction / interval length).
Density random_smooth_density(const Grid& grid, std::mt19937_64& rng,
                              double floor_fraction = 0.1);

// Smooth zero-integral direction scaled to max |eta| = amplitude.
PerturbationDirection random_smooth_perturbation(const Grid& grid, std::mt19937_64& rng,
                                                 double amplitude = 1.0);

}  // namespace denopt
