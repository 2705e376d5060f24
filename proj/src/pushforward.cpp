#include "lpfr/pushforward.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lpfr/interp.hpp"

namespace lpfr {

namespace {

void validate_map(const DiffeoMap& map, const GridSpec& grid) {
  if (!map.phi || !map.dphi)
    throw std::invalid_argument("pushforward: map must supply phi and dphi");
  if (std::fabs(map.phi(0.0)) > 1e-12 || std::fabs(map.phi(1.0) - 1.0) > 1e-12)
    throw std::invalid_argument("pushforward: map must fix 0 and 1");
  for (double x : grid.nodes)
    if (!(map.dphi(x) > 0.0))
      throw std::invalid_argument(
          "pushforward: map is not strictly increasing (dphi <= 0 at x = " +
          std::to_string(x) + ")");
}

// Solve phi(t) = y on [0,1] by safeguarded Newton.
double invert(const DiffeoMap& map, double y) {
  double lo = 0.0, hi = 1.0;
  double t = std::min(1.0, std::max(0.0, y));
  for (int it = 0; it < 100; ++it) {
    const double r = map.phi(t) - y;
    if (std::fabs(r) <= 1e-14) return t;
    if (r > 0.0)
      hi = t;
    else
      lo = t;
    const double dp = map.dphi(t);
    double tn = t - r / dp;
    if (!(tn > lo && tn < hi)) tn = 0.5 * (lo + hi);
    t = tn;
  }
  return t;
}

std::vector<double> resample(const DiffeoMap& map, const GridSpec& grid,
                             const std::vector<double>& vals) {
  MonotoneCubic interp =
      grid.periodic ? MonotoneCubic::periodic(grid.nodes, vals, 1.0)
                    : MonotoneCubic(grid.nodes, vals);
  std::vector<double> out(grid.n);
  for (int i = 0; i < grid.n; ++i) {
    const double t = invert(map, grid.nodes[i]);
    out[i] = interp(t) / map.dphi(t);
  }
  return out;
}

}  // namespace

DensityField pushforward(const DiffeoMap& map, const DensityField& mu) {
  validate_map(map, *mu.grid);
  DensityField out;
  out.grid = mu.grid;
  out.f = resample(map, *mu.grid, mu.f);
  // Mass is conserved only to quadrature accuracy, so the probability flag is
  // inherited rather than revalidated.
  out.probability = mu.probability;
  for (int i = 0; i < mu.grid->n; ++i)
    if (!(out.f[i] > 0.0)) out.nonpositive_nodes.push_back(i);
  return out;
}

TangentField pushforward(const DiffeoMap& map, const TangentField& a) {
  validate_map(map, *a.grid);
  TangentField out;
  out.grid = a.grid;
  out.a = resample(map, *a.grid, a.a);
  return out;
}

}  // namespace lpfr
