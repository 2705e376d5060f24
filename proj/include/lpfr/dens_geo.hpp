#pragma once

#include <limits>

#include "lpfr/grid.hpp"

// Geodesics of the L^p-Fisher-Rao metric on the space of positive densities
// (no mass constraint), where they are straight lines in p-root coordinates
// and everything is closed-form.

namespace lpfr {

struct DensGeodesicResult {
  PathGrid path;
  // First time a node density hits zero; +inf when the geodesic is global.
  double blowup_time = std::numeric_limits<double>::infinity();
  // True when requested times at or past the blow-up were dropped.
  bool left_space = false;
};

// Boundary-value geodesic: frame at t is ( (1-t) f0^{1/p} + t f1^{1/p} )^p.
// Endpoint frames are copied bitwise from the inputs. times must be strictly
// increasing within [0,1].
PathGrid geodesic_bvp_dens(const DensityField& mu0, const DensityField& mu1,
                           double p, const std::vector<double>& times);

// Initial-value geodesic (exponential map) with velocity a at t=0. Frames are
// produced for requested times strictly below the blow-up time; times must be
// nonnegative and strictly increasing.
DensGeodesicResult geodesic_ivp_dens(const DensityField& mu0,
                                     const TangentField& a, double p,
                                     const std::vector<double>& times);

// p * || mu1^{1/p} - mu0^{1/p} ||_{L^p}
double distance_dens(const DensityField& mu0, const DensityField& mu1,
                     double p);

// Sup over interior frames and nodes of the geodesic-equation defect
// d/dt(mu_t/mu) + (1/p)(mu_t/mu)^2 evaluated by central differences. Requires
// at least 3 uniformly spaced frames.
double dens_geodesic_residual(const PathGrid& path, double p);

// alpha-connection applied to tangent fields: Dba - (1/p*)(a/mu) b, with the
// directional derivative Dba supplied by the caller.
TangentField alpha_connection_dens(const DensityField& mu,
                                   const TangentField& a,
                                   const TangentField& b,
                                   const TangentField& Dba, double alpha);

}  // namespace lpfr
