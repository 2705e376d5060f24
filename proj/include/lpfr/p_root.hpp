#pragma once

#include "lpfr/grid.hpp"

// The p-root transform f -> f^{1/p} mapping densities onto positive L^p
// functions, its tangent map, and its inverse. All L^p-sphere geometry in the
// library goes through these coordinates; the factor-of-p convention (the
// transform scales the metric by 1/p) is applied exactly once, where root
// quantities are converted back to density-space lengths.

namespace lpfr {

struct RootPoint {
  GridPtr grid;
  std::vector<double> g;  // f^{1/p}
  double p = 0.0;
  bool on_sphere = false;  // set iff the source density was probability
};

RootPoint root_forward(const DensityField& mu, double p);

// f = |g|^p; nodes with g <= 0 are flagged on the result rather than clamped.
DensityField root_inverse(const RootPoint& g);

// Differential of the transform: xi = (1/p) a f^{1/p - 1}.
std::vector<double> push_tangent(const DensityField& mu, const TangentField& a,
                                 double p);

// L^p norm of root-space values: (sum w |g|^p)^{1/p}.
double root_norm(const GridSpec& grid, const std::vector<double>& g, double p);

}  // namespace lpfr
