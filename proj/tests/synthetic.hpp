#pragma once

// Test-only generator of synthetic force-distance datasets.

#include <random>

#include "casimir/analysis.hpp"
#include "casimir/vertical_force.hpp"

namespace casimir::testing {

inline MeasurementSet synthetic_dataset(const ExperimentConfig& config, PositionDistribution dist,
                                        int n, double noise_rms, unsigned long long seed,
                                        double a_min = kValidityMin, double a_max = kValidityMax) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, noise_rms > 0.0 ? noise_rms : 1.0);
  MeasurementSet set;
  for (int i = 0; i < n; ++i) {
    const double a = n == 1 ? a_min : a_min + (a_max - a_min) * i / (n - 1);
    const double f = averaged_force(a, config, dist);
    set.points.push_back({a, noise_rms > 0.0 ? f + noise(rng) : f});
  }
  return set;
}

}  // namespace casimir::testing
