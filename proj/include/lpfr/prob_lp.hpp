#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lpfr/grid.hpp"

// L^p-Fisher-Rao geodesics on Prob by direct minimization of the discrete
// p-energy over sphere-constrained root-space paths. There is no usable
// geodesic ODE on Prob for p != 2, so the boundary-value problem is attacked
// variationally: projected gradient descent with a radial retraction.

namespace lpfr {

// A discrete path on the L^p unit sphere: T frames of n root values,
// row-major, at uniform times on [0,1].
struct SpherePath {
  GridPtr grid;
  std::vector<double> times;
  std::vector<double> points;
  double p = 0.0;

  std::size_t frame_count() const { return times.size(); }
  const double* frame(std::size_t k) const {
    return points.data() + k * grid->nodes.size();
  }
};

// (1/p) dt^{1-p} sum_t sum_i w_i |g_{t+1,i} - g_{t,i}|^p.
double discrete_p_energy(const SpherePath& path);

// Analytic gradient of discrete_p_energy per frame and node (T x n,
// row-major); endpoint rows are zero so descent never moves them.
std::vector<double> energy_gradient(const SpherePath& path);

// Worst per-frame deviation |sum_i w_i |g_i|^p - 1| over the path.
double sphere_defect(const SpherePath& path);

enum class LpStatus { converged, max_iter_reached, stalled };

struct LpGeodesicOptions {
  std::size_t time_points = 30;
  double tol = 1e-8;
  std::size_t max_iter = 20000;
  double eta0 = 0.1;
  // Step growth after an accepted move is capped here; without the cap the
  // line search oscillates on flat p > 4 energy landscapes.
  double eta_cap = 10.0;
};

struct LpGeodesicResult {
  PathGrid path;
  SpherePath sphere;
  std::vector<double> energy_trace;  // accepted energies, strictly decreasing
  LpStatus status = LpStatus::converged;
  std::size_t iterations = 0;
  // Frames may leave the positive cone; offending (frame, node) pairs are
  // flagged on the pullback rather than clamped.
  std::vector<std::pair<int, int>> nonpositive;
};

LpGeodesicResult lp_geodesic_prob_bvp(const DensityField& mu0,
                                      const DensityField& mu1, double p,
                                      const LpGeodesicOptions& opts = {});

// Finsler speed F_p(mu(t), mu_t(t)) at interior times, mu_t by central
// differences. Entry k corresponds to path.times[k+1].
std::vector<double> speed_profile(const PathGrid& path, double p);

}  // namespace lpfr
