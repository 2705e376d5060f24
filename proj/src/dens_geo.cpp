#include "lpfr/dens_geo.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lpfr/functionals.hpp"
#include "lpfr/kernels.hpp"
#include "lpfr/p_root.hpp"

namespace lpfr {

namespace {

void require_times_increasing(const std::vector<double>& times) {
  if (times.empty()) throw std::invalid_argument("empty time list");
  for (std::size_t k = 1; k < times.size(); ++k)
    if (!(times[k] > times[k - 1]))
      throw std::invalid_argument("times must be strictly increasing");
}

// Uniform spacing of path times, or an error.
double uniform_dt(const PathGrid& path, const char* who) {
  if (path.times.size() < 3)
    throw std::invalid_argument(std::string(who) + ": needs >= 3 frames");
  const double dt = path.times[1] - path.times[0];
  for (std::size_t k = 1; k < path.times.size(); ++k) {
    const double step = path.times[k] - path.times[k - 1];
    if (std::fabs(step - dt) > 1e-9 * std::max(1.0, std::fabs(dt)))
      throw std::invalid_argument(std::string(who) + ": frames must be uniform in time");
  }
  return dt;
}

}  // namespace

PathGrid geodesic_bvp_dens(const DensityField& mu0, const DensityField& mu1,
                           double p, const std::vector<double>& times) {
  require_p(p, "geodesic_bvp_dens");
  require_same_grid(*mu0.grid, *mu1.grid, "geodesic_bvp_dens");
  require_times_increasing(times);
  if (times.front() < 0.0 || times.back() > 1.0)
    throw std::invalid_argument("geodesic_bvp_dens: times must lie in [0,1]");

  const RootPoint g0 = root_forward(mu0, p);
  const RootPoint g1 = root_forward(mu1, p);
  std::vector<double> chord(g0.g.size());
  for (std::size_t i = 0; i < chord.size(); ++i) chord[i] = g1.g[i] - g0.g[i];

  PathGrid out;
  out.grid = mu0.grid;
  out.times = times;
  out.frames.resize(times.size());
  for (std::size_t k = 0; k < times.size(); ++k) {
    const double t = times[k];
    if (t == 0.0) {
      out.frames[k] = mu0.f;
    } else if (t == 1.0) {
      out.frames[k] = mu1.f;
    } else {
      out.frames[k].resize(g0.g.size());
      kernels::line_pow(g0.g.data(), chord.data(), g0.g.size(), t, p,
                        out.frames[k].data());
    }
  }
  return out;
}

DensGeodesicResult geodesic_ivp_dens(const DensityField& mu0,
                                     const TangentField& a, double p,
                                     const std::vector<double>& times) {
  require_p(p, "geodesic_ivp_dens");
  require_same_grid(*mu0.grid, *a.grid, "geodesic_ivp_dens");
  require_times_increasing(times);
  if (times.front() < 0.0)
    throw std::invalid_argument("geodesic_ivp_dens: times must be nonnegative");

  const RootPoint g0 = root_forward(mu0, p);
  const std::vector<double> xi = push_tangent(mu0, a, p);

  DensGeodesicResult out;
  // The root line g0 + t*xi stays positive until the first node with xi < 0
  // hits zero; in density terms the bound is p * min f0/(-a).
  for (std::size_t i = 0; i < xi.size(); ++i)
    if (xi[i] < 0.0)
      out.blowup_time = std::min(out.blowup_time, -g0.g[i] / xi[i]);

  out.path.grid = mu0.grid;
  for (double t : times) {
    if (!(t < out.blowup_time)) {
      out.left_space = true;
      break;
    }
    out.path.times.push_back(t);
    std::vector<double> frame(g0.g.size());
    if (t == 0.0)
      frame = mu0.f;
    else
      kernels::line_pow(g0.g.data(), xi.data(), g0.g.size(), t, p, frame.data());
    out.path.frames.push_back(std::move(frame));
  }
  return out;
}

double distance_dens(const DensityField& mu0, const DensityField& mu1,
                     double p) {
  require_p(p, "distance_dens");
  require_same_grid(*mu0.grid, *mu1.grid, "distance_dens");
  const RootPoint g0 = root_forward(mu0, p);
  const RootPoint g1 = root_forward(mu1, p);
  const double s = kernels::diff_power_sum(mu0.grid->weights.data(), g1.g.data(),
                                           g0.g.data(), g0.g.size(), p);
  return p * std::pow(s, 1.0 / p);
}

double dens_geodesic_residual(const PathGrid& path, double p) {
  require_p(p, "dens_geodesic_residual");
  const double dt = uniform_dt(path, "dens_geodesic_residual");
  const std::size_t K = path.times.size();
  const std::size_t n = path.frames[0].size();
  double sup = 0.0;
  for (std::size_t k = 1; k + 1 < K; ++k) {
    const auto& fm = path.frames[k - 1];
    const auto& f0 = path.frames[k];
    const auto& fp = path.frames[k + 1];
    for (std::size_t i = 0; i < n; ++i) {
      // One-sided logarithmic slopes at the half-steps make d/dt(mu_t/mu)
      // second-order accurate at frame k.
      const double s_minus = (f0[i] - fm[i]) / (dt * 0.5 * (f0[i] + fm[i]));
      const double s_plus = (fp[i] - f0[i]) / (dt * 0.5 * (fp[i] + f0[i]));
      const double dlog = (s_plus - s_minus) / dt;
      const double r = (fp[i] - fm[i]) / (2.0 * dt * f0[i]);
      sup = std::max(sup, std::fabs(dlog + r * r / p));
    }
  }
  return sup;
}

TangentField alpha_connection_dens(const DensityField& mu,
                                   const TangentField& a,
                                   const TangentField& b,
                                   const TangentField& Dba, double alpha) {
  if (!(alpha > -1.0 && alpha < 1.0))
    throw std::domain_error("alpha must lie in (-1,1), got " +
                            std::to_string(alpha));
  require_same_grid(*mu.grid, *a.grid, "alpha_connection_dens");
  require_same_grid(*mu.grid, *b.grid, "alpha_connection_dens");
  require_same_grid(*mu.grid, *Dba.grid, "alpha_connection_dens");
  const double inv_ps = (1.0 + alpha) / 2.0;  // 1/p* for p* = 2/(1+alpha)
  std::vector<double> out(mu.f.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = Dba.a[i] - inv_ps * (a.a[i] / mu.f[i]) * b.a[i];
  return make_tangent(mu.grid, std::move(out));
}

}  // namespace lpfr
