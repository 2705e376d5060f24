#include "lpfr/prob_lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include "lpfr/functionals.hpp"
#include "lpfr/kernels.hpp"
#include "lpfr/p_root.hpp"

namespace lpfr {

namespace {

double uniform_dt(const std::vector<double>& times, const char* who) {
  if (times.size() < 2)
    throw std::invalid_argument(std::string(who) + ": needs >= 2 frames");
  const double dt = times[1] - times[0];
  for (std::size_t k = 1; k < times.size(); ++k)
    if (std::fabs(times[k] - times[k - 1] - dt) > 1e-9)
      throw std::invalid_argument(std::string(who) +
                                  ": frames must be uniform in time");
  return dt;
}

}  // namespace

double discrete_p_energy(const SpherePath& path) {
  require_p(path.p, "discrete_p_energy");
  const double dt = uniform_dt(path.times, "discrete_p_energy");
  const std::size_t n = path.grid->nodes.size();
  return kernels::path_energy(path.grid->weights.data(), path.points.data(),
                              path.frame_count(), n, path.p, dt);
}

std::vector<double> energy_gradient(const SpherePath& path) {
  require_p(path.p, "energy_gradient");
  if (path.frame_count() < 3)
    throw std::invalid_argument("energy_gradient: needs >= 3 frames");
  const double dt = uniform_dt(path.times, "energy_gradient");
  const std::size_t n = path.grid->nodes.size();
  std::vector<double> grad(path.points.size());
  kernels::path_gradient(path.grid->weights.data(), path.points.data(),
                         path.frame_count(), n, path.p, dt, grad.data());
  return grad;
}

double sphere_defect(const SpherePath& path) {
  const std::size_t n = path.grid->nodes.size();
  double worst = 0.0;
  for (std::size_t k = 0; k < path.frame_count(); ++k) {
    const double s = kernels::lp_power_sum(path.grid->weights.data(),
                                           path.frame(k), n, path.p);
    worst = std::max(worst, std::fabs(s - 1.0));
  }
  return worst;
}

LpGeodesicResult lp_geodesic_prob_bvp(const DensityField& mu0,
                                      const DensityField& mu1, double p,
                                      const LpGeodesicOptions& opts) {
  require_p(p, "lp_geodesic_prob_bvp");
  require_same_grid(*mu0.grid, *mu1.grid, "lp_geodesic_prob_bvp");
  if (!mu0.probability || !mu1.probability)
    throw std::invalid_argument(
        "lp_geodesic_prob_bvp: endpoints must be probability densities");
  if (opts.time_points < 3)
    throw std::invalid_argument("lp_geodesic_prob_bvp: time_points < 3");

  const std::size_t T = opts.time_points;
  const std::size_t n = mu0.grid->nodes.size();
  const double* w = mu0.grid->weights.data();

  const RootPoint r0 = root_forward(mu0, p);
  const RootPoint r1 = root_forward(mu1, p);

  LpGeodesicResult out;
  out.sphere.grid = mu0.grid;
  out.sphere.p = p;
  out.sphere.times.resize(T);
  for (std::size_t k = 0; k < T; ++k)
    out.sphere.times[k] = static_cast<double>(k) / static_cast<double>(T - 1);
  const double dt = 1.0 / static_cast<double>(T - 1);

  // Normalized chord initialization.
  std::vector<double>& G = out.sphere.points;
  G.resize(T * n);
  for (std::size_t k = 0; k < T; ++k) {
    const double t = out.sphere.times[k];
    for (std::size_t i = 0; i < n; ++i)
      G[k * n + i] = r0.g[i] + t * (r1.g[i] - r0.g[i]);
  }
  kernels::project_frames(w, G.data(), T, n, p);
  auto pin_endpoints = [&]() {
    std::memcpy(G.data(), r0.g.data(), n * sizeof(double));
    std::memcpy(G.data() + (T - 1) * n, r1.g.data(), n * sizeof(double));
  };
  pin_endpoints();

  double energy = kernels::path_energy(w, G.data(), T, n, p, dt);
  out.energy_trace.push_back(energy);

  std::vector<double> grad(T * n);
  std::vector<double> trial(T * n);
  double eta = opts.eta0;
  out.status = LpStatus::max_iter_reached;

  if (energy == 0.0) {
    out.status = LpStatus::converged;
  } else {
    for (std::size_t it = 1; it <= opts.max_iter; ++it) {
      kernels::path_gradient(w, G.data(), T, n, p, dt, grad.data());
      double gmax = 0.0;
      for (double v : grad) gmax = std::max(gmax, std::fabs(v));
      if (gmax == 0.0) {
        out.status = LpStatus::converged;
        break;
      }

      // Halve the step until the retracted move decreases the energy.
      bool accepted = false;
      double new_energy = energy;
      for (int bt = 0; bt < 80; ++bt) {
        kernels::axpy(G.data(), grad.data(), -eta, T * n, trial.data());
        kernels::project_frames(w, trial.data(), T, n, p);
        std::memcpy(trial.data(), r0.g.data(), n * sizeof(double));
        std::memcpy(trial.data() + (T - 1) * n, r1.g.data(),
                    n * sizeof(double));
        new_energy = kernels::path_energy(w, trial.data(), T, n, p, dt);
        if (new_energy < energy) {
          accepted = true;
          break;
        }
        eta *= 0.5;
      }
      if (!accepted) {
        out.status = LpStatus::stalled;
        break;
      }

      G.swap(trial);
      out.iterations = it;
      out.energy_trace.push_back(new_energy);
      const double drop = (energy - new_energy) / energy;
      energy = new_energy;
      eta = std::min(eta * 2.0, opts.eta_cap);
      if (drop < opts.tol) {
        out.status = LpStatus::converged;
        break;
      }
    }
  }
  pin_endpoints();

  // Pull the sphere path back to densities, flagging sign losses.
  out.path.grid = mu0.grid;
  out.path.probability = true;
  out.path.times = out.sphere.times;
  out.path.frames.assign(T, std::vector<double>(n));
  for (std::size_t k = 0; k < T; ++k) {
    if (k == 0) {
      out.path.frames[k] = mu0.f;
      continue;
    }
    if (k == T - 1) {
      out.path.frames[k] = mu1.f;
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double g = G[k * n + i];
      if (g <= 0.0)
        out.nonpositive.emplace_back(static_cast<int>(k),
                                     static_cast<int>(i));
      out.path.frames[k][i] = std::pow(std::fabs(g), p);
    }
  }
  return out;
}

std::vector<double> speed_profile(const PathGrid& path, double p) {
  require_p(p, "speed_profile");
  if (path.times.size() < 3)
    throw std::invalid_argument("speed_profile: needs >= 3 frames");
  const double dt = uniform_dt(path.times, "speed_profile");
  const GridSpec& grid = *path.grid;
  const std::size_t n = grid.nodes.size();

  std::vector<double> speeds;
  speeds.reserve(path.times.size() - 2);
  std::vector<double> mu_t(n);
  for (std::size_t k = 1; k + 1 < path.times.size(); ++k) {
    const auto& f0 = path.frames[k];
    for (std::size_t i = 0; i < n; ++i) {
      if (f0[i] <= 0.0)
        throw std::invalid_argument("speed_profile: nonpositive frame value");
      mu_t[i] = (path.frames[k + 1][i] - path.frames[k - 1][i]) / (2.0 * dt);
    }
    const double s =
        kernels::fp_power_sum(grid.weights.data(), f0.data(), mu_t.data(), n,
                              p);
    speeds.push_back(std::pow(s, 1.0 / p));
  }
  return speeds;
}

}  // namespace lpfr
