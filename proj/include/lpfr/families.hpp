#pragma once

#include <string>

#include "lpfr/grid.hpp"

// Built-in density families and the textual density specifier used by the
// CLI: "uniform", "bump(m,s)", "mixture(m1,s1,m2,s2,w)", or a CSV file path.

namespace lpfr {

DensityField family_uniform(GridPtr grid);

// Truncated Gaussian bump centered at m with width s, normalized to unit mass.
DensityField family_bump(GridPtr grid, double m, double s);

// Convex combination of two bumps with weight w on the first, normalized.
DensityField family_mixture(GridPtr grid, double m1, double s1, double m2,
                            double s2, double w);

struct LoadedDensity {
  DensityField field;        // probability-normalized
  double renorm_delta = 0.0; // |mass before normalization - 1|
};

// Parses a density specifier; anything that is not a recognized family name
// is treated as a CSV path (single column, header `f`).
LoadedDensity parse_density(GridPtr grid, const std::string& spec);

}  // namespace lpfr
