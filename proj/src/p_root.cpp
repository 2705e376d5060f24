#include "lpfr/p_root.hpp"

#include <cmath>

#include "lpfr/functionals.hpp"
#include "lpfr/kernels.hpp"

namespace lpfr {

RootPoint root_forward(const DensityField& mu, double p) {
  require_p(p, "root_forward");
  RootPoint out;
  out.grid = mu.grid;
  out.p = p;
  out.on_sphere = mu.probability;
  out.g.resize(mu.f.size());
  kernels::pow_root(mu.f.data(), mu.f.size(), p, out.g.data());
  return out;
}

DensityField root_inverse(const RootPoint& g) {
  DensityField out;
  out.grid = g.grid;
  out.probability = g.on_sphere;
  out.f.resize(g.g.size());
  kernels::abs_pow(g.g.data(), g.g.size(), g.p, out.f.data());
  for (std::size_t i = 0; i < g.g.size(); ++i)
    if (!(g.g[i] > 0.0)) out.nonpositive_nodes.push_back(static_cast<int>(i));
  return out;
}

std::vector<double> push_tangent(const DensityField& mu, const TangentField& a,
                                 double p) {
  require_p(p, "push_tangent");
  require_same_grid(*mu.grid, *a.grid, "push_tangent");
  std::vector<double> xi(mu.f.size());
  const double e = 1.0 / p - 1.0;
  for (std::size_t i = 0; i < xi.size(); ++i)
    xi[i] = a.a[i] * std::pow(mu.f[i], e) / p;
  return xi;
}

double root_norm(const GridSpec& grid, const std::vector<double>& g, double p) {
  return std::pow(kernels::lp_power_sum(grid.weights.data(), g.data(), g.size(), p),
                  1.0 / p);
}

}  // namespace lpfr
