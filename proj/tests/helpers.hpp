#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "lpfr/families.hpp"
#include "lpfr/grid.hpp"

// Shared fixtures for the test suites: deterministic smooth fields, random
// densities/tangents from seeded generators, and the p=2 great-circle
// geodesic used as an independent reference.

namespace testutil {

using namespace lpfr;

inline std::vector<double> trig_field(const GridSpec& grid,
                                      std::mt19937& rng, int max_mode = 4) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::vector<double> v(grid.nodes.size(), 0.0);
  for (int k = 1; k <= max_mode; ++k) {
    const double ck = coef(rng), dk = coef(rng);
    for (std::size_t i = 0; i < v.size(); ++i) {
      const double arg = 2.0 * M_PI * k * grid.nodes[i];
      v[i] += ck * std::sin(arg) + dk * std::cos(arg);
    }
  }
  return v;
}

inline DensityField random_density(GridPtr grid, std::mt19937& rng,
                                   bool probability) {
  std::vector<double> v = trig_field(*grid, rng, 3);
  for (double& x : v) x = std::exp(0.5 * x);
  if (probability) {
    const double m = integrate(*grid, v);
    for (double& x : v) x /= m;
  }
  return make_density(grid, std::move(v), probability);
}

inline TangentField random_tangent(GridPtr grid, std::mt19937& rng,
                                   bool mean_zero = false) {
  std::vector<double> v = trig_field(*grid, rng);
  if (mean_zero) {
    const double m = integrate(*grid, v);
    for (double& x : v) x -= m;  // weights sum to one
  }
  return make_tangent(grid, std::move(v));
}

// The canonical two-bump pair used across the Prob geodesic tests.
inline DensityField bump_left(GridPtr grid) {
  return family_bump(grid, 0.33, 0.10);
}
inline DensityField bump_right(GridPtr grid) {
  return family_bump(grid, 0.67, 0.10);
}

inline std::vector<double> uniform_times(int frames, double t_end = 1.0) {
  std::vector<double> t(frames);
  for (int k = 0; k < frames; ++k) t[k] = t_end * k / (frames - 1);
  return t;
}

// Fisher-Rao (p=2) geodesic between probability densities via the explicit
// great circle of square roots; the independent reference for everything
// the tau-ODE and the energy minimizer produce at p=2.
inline PathGrid great_circle_geodesic(const DensityField& mu0,
                                      const DensityField& mu1,
                                      const std::vector<double>& times) {
  const GridSpec& grid = *mu0.grid;
  const std::size_t n = grid.nodes.size();
  std::vector<double> g0(n), g1(n);
  for (std::size_t i = 0; i < n; ++i) {
    g0[i] = std::sqrt(mu0.f[i]);
    g1[i] = std::sqrt(mu1.f[i]);
  }
  double dot = 0.0;
  for (std::size_t i = 0; i < n; ++i) dot += grid.weights[i] * g0[i] * g1[i];
  const double theta = std::acos(std::min(1.0, std::max(-1.0, dot)));

  PathGrid path;
  path.grid = mu0.grid;
  path.probability = true;
  path.times = times;
  path.frames.resize(times.size());
  for (std::size_t k = 0; k < times.size(); ++k) {
    auto& frame = path.frames[k];
    frame.resize(n);
    if (theta == 0.0) {
      frame = mu0.f;
      continue;
    }
    const double c0 = std::sin((1.0 - times[k]) * theta) / std::sin(theta);
    const double c1 = std::sin(times[k] * theta) / std::sin(theta);
    for (std::size_t i = 0; i < n; ++i) {
      const double g = c0 * g0[i] + c1 * g1[i];
      frame[i] = g * g;
    }
  }
  return path;
}

inline double sup_path_difference(const PathGrid& a, const PathGrid& b) {
  double sup = 0.0;
  for (std::size_t k = 0; k < a.frames.size(); ++k)
    for (std::size_t i = 0; i < a.frames[k].size(); ++i)
      sup = std::max(sup, std::fabs(a.frames[k][i] - b.frames[k][i]));
  return sup;
}

// Unit-Fisher-norm, mean-zero velocity whose most negative value is mild, so
// p=2 trajectories from the uniform density stay positive past t = 1. Built
// from a narrow bump: tall positive spike, shallow negative trough.
inline TangentField gentle_unit_velocity(GridPtr grid) {
  const DensityField spike = family_bump(grid, 0.5, 0.05);
  std::vector<double> v(spike.f.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = spike.f[i] - 1.0;
  double norm2 = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    norm2 += grid->weights[i] * v[i] * v[i];
  const double norm = std::sqrt(norm2);
  for (double& x : v) x /= norm;
  return make_tangent(grid, std::move(v));
}

}  // namespace testutil
