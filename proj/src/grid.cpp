#include "lpfr/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lpfr/kernels.hpp"

namespace lpfr {

GridPtr make_interval_grid(int n) {
  if (n < 8)
    throw std::invalid_argument("grid size must be at least 8, got " +
                                std::to_string(n));
  auto g = std::make_shared<GridSpec>();
  g->n = n;
  g->periodic = false;
  g->nodes.resize(n);
  g->weights.resize(n);
  const double h = 1.0 / (n - 1);
  for (int i = 0; i < n; ++i) {
    g->nodes[i] = i * h;
    g->weights[i] = (i == 0 || i == n - 1) ? 0.5 * h : h;
  }
  return g;
}

GridPtr make_circle_grid(int n) {
  if (n < 8)
    throw std::invalid_argument("grid size must be at least 8, got " +
                                std::to_string(n));
  auto g = std::make_shared<GridSpec>();
  g->n = n;
  g->periodic = true;
  g->nodes.resize(n);
  g->weights.assign(n, 1.0 / n);
  for (int i = 0; i < n; ++i) g->nodes[i] = static_cast<double>(i) / n;
  return g;
}

bool compatible(const GridSpec& a, const GridSpec& b) {
  if (a.n != b.n || a.periodic != b.periodic) return false;
  for (int i = 0; i < a.n; ++i)
    if (a.nodes[i] != b.nodes[i]) return false;
  return true;
}

DensityField make_density(GridPtr grid, std::vector<double> f,
                          bool probability) {
  if (!grid) throw std::invalid_argument("density requires a grid");
  if (static_cast<int>(f.size()) != grid->n)
    throw std::invalid_argument("density has " + std::to_string(f.size()) +
                                " values on a grid of size " +
                                std::to_string(grid->n));
  for (int i = 0; i < grid->n; ++i)
    if (!(f[i] > 0.0))
      throw std::invalid_argument("density not positive at node " +
                                  std::to_string(i) + " (value " +
                                  std::to_string(f[i]) + ")");
  DensityField mu;
  mu.grid = std::move(grid);
  mu.f = std::move(f);
  mu.probability = probability;
  if (probability) {
    const double m = mass(mu);
    if (std::fabs(m - 1.0) > 1e-10)
      throw std::invalid_argument(
          "probability-flagged density has mass " + std::to_string(m));
  }
  return mu;
}

TangentField make_tangent(GridPtr grid, std::vector<double> a) {
  if (!grid) throw std::invalid_argument("tangent field requires a grid");
  if (static_cast<int>(a.size()) != grid->n)
    throw std::invalid_argument("tangent field has " + std::to_string(a.size()) +
                                " values on a grid of size " +
                                std::to_string(grid->n));
  return TangentField{std::move(grid), std::move(a)};
}

double integrate(const GridSpec& grid, const std::vector<double>& values) {
  if (static_cast<int>(values.size()) != grid.n)
    throw std::invalid_argument("integrate: field length " +
                                std::to_string(values.size()) +
                                " does not match grid size " +
                                std::to_string(grid.n));
  return kernels::weighted_sum(grid.weights.data(), values.data(),
                               values.size());
}

double mass(const DensityField& mu) { return integrate(*mu.grid, mu.f); }

bool is_prob_tangent(const TangentField& a, double tol) {
  return std::fabs(integrate(*a.grid, a.a)) <= tol;
}

DensityField frame_density(const PathGrid& path, std::size_t k) {
  DensityField mu;
  mu.grid = path.grid;
  mu.f = path.frames.at(k);
  mu.probability = path.probability;
  return mu;
}

}  // namespace lpfr
