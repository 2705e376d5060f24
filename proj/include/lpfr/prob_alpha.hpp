#pragma once

#include <limits>
#include <vector>

#include "lpfr/dens_geo.hpp"
#include "lpfr/grid.hpp"

// Alpha-connection geodesics on the probability submanifold. A geodesic
// through mu0 is the normalized root line (f + tau(t) xi) / ||f + tau(t) xi||
// pulled back through the p-root transform, where tau solves a scalar
// second-order ODE. Everything here reduces to integrating that ODE and
// renormalizing.

namespace lpfr {

struct TauTrajectory {
  std::vector<double> times;
  std::vector<double> tau;
  std::vector<double> tau_dot;
  double p = 0.0;
  // First time f + tau*xi loses positivity at a node; +inf when the
  // trajectory stays interior over its whole time range.
  double crossing_time = std::numeric_limits<double>::infinity();
};

// Right-hand side of the tau ODE,
//   tau'' = 2 * (sum w |h|^{p-2} h xi / sum w |h|^p) * tau'^2,  h = f + tau*xi.
// Throws when the denominator integral falls below 1e-14.
double tau_rhs(const GridSpec& grid, const std::vector<double>& f,
               const std::vector<double>& xi, double tau, double tau_dot,
               double p);

// Integrate from tau(0)=0, tau'(0)=1 with classical RK4 at fixed step dt,
// recording every step up to t_end. xi must be tangent to the sphere at f
// (sum w xi |f|^{p-2} f = 0 within 1e-8). Stops early at the positivity
// crossing, located to 1e-10 by bisecting the step.
TauTrajectory tau_ivp(const GridSpec& grid, const std::vector<double>& f,
                      const std::vector<double>& xi, double p, double t_end,
                      double dt = 1e-3);

// Boundary-value problem tau(0)=0, tau(1)=1 with xi = g - f, solved by
// shooting on tau'(0) (secant, then a bracket scan if the secant wanders).
// f and g must lie on the unit sphere within 1e-8. Returns the trajectory
// on t_steps uniform steps over [0,1]. g = f degenerates to tau(t) = t.
TauTrajectory tau_bvp(const GridSpec& grid, const std::vector<double>& f,
                      const std::vector<double>& g, double p,
                      std::size_t t_steps);

// Geodesic between two probability densities, frames at the given times in
// [0,1]. The optional tau_out receives the reparametrization trajectory.
DensGeodesicResult alpha_geodesic_prob_bvp(const DensityField& mu0,
                                           const DensityField& mu1, double p,
                                           const std::vector<double>& times,
                                           TauTrajectory* tau_out = nullptr);

// Geodesic from mu0 with initial velocity a (mean-zero). Frames stop before
// the blow-up time; left_space is set when the requested times reach it.
DensGeodesicResult alpha_geodesic_prob_ivp(const DensityField& mu0,
                                           const TangentField& a, double p,
                                           const std::vector<double>& times,
                                           TauTrajectory* tau_out = nullptr);

// Upper bound p / (-min a) for the blow-up time of the geodesic with initial
// velocity a. +inf when a has no negative node; a == 0 is an error.
double blowup_estimate(const TangentField& a, double p);

// Sup-norm defect of the probability geodesic equation
//   mu_tt - (1/p*) mu_t^2 / mu + (1/p*) (integral (mu_t/mu)^2 mu) mu = 0
// over interior frames, time derivatives by central differences.
double prob_alpha_residual(const PathGrid& path, double p);

}  // namespace lpfr
