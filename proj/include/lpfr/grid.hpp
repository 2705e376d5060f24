#pragma once

#include <memory>
#include <vector>

// Discretization of the base space: all densities live on a fixed quadrature
// grid over [0,1] (trapezoid rule) or the circle (midpoint rule). The
// quadrature measure plays the role of the reference probability measure, so
// weights always sum to one and every integral in the library is a weighted
// node sum. Fields store Radon-Nikodym derivatives against that measure.

namespace lpfr {

struct GridSpec {
  int n = 0;
  bool periodic = false;
  std::vector<double> nodes;    // strictly increasing in [0,1)
  std::vector<double> weights;  // nonnegative, sum 1
};

using GridPtr = std::shared_ptr<const GridSpec>;

// Trapezoid grid on [0,1] with nodes i/(n-1). Throws for n < 8.
GridPtr make_interval_grid(int n);

// Midpoint grid on the circle with nodes i/n and uniform weights.
GridPtr make_circle_grid(int n);

// Structural compatibility: same node count, same topology, same node
// positions. Fields may be built on distinct GridSpec instances.
bool compatible(const GridSpec& a, const GridSpec& b);

struct DensityField {
  GridPtr grid;
  std::vector<double> f;  // density values against the reference measure
  bool probability = false;
  // Nodes where positivity failed; only ever set by pullbacks of paths that
  // left the space. Constructed densities are strictly positive.
  std::vector<int> nonpositive_nodes;
};

struct TangentField {
  GridPtr grid;
  std::vector<double> a;
};

// Validating constructors. make_density rejects nonpositive values and, when
// probability is set, masses away from 1 by more than 1e-10.
DensityField make_density(GridPtr grid, std::vector<double> f,
                          bool probability = false);
TangentField make_tangent(GridPtr grid, std::vector<double> a);

double integrate(const GridSpec& grid, const std::vector<double>& values);
double mass(const DensityField& mu);

// Tangency to the probability submanifold: zero mean within tol.
bool is_prob_tangent(const TangentField& a, double tol = 1e-10);

// A time-indexed family of density frames on one shared grid.
struct PathGrid {
  GridPtr grid;
  std::vector<double> times;                // strictly increasing
  std::vector<std::vector<double>> frames;  // one value array per time
  bool probability = false;
};

DensityField frame_density(const PathGrid& path, std::size_t k);

}  // namespace lpfr
