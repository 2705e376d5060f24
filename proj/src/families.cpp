#include "lpfr/families.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "lpfr/csv.hpp"

namespace lpfr {

namespace {

DensityField normalized(GridPtr grid, std::vector<double> vals,
                        double* delta_out = nullptr) {
  const double m = integrate(*grid, vals);
  if (!(m > 0.0))
    throw std::invalid_argument("density specifier has nonpositive mass");
  for (double& v : vals) v /= m;
  if (delta_out) *delta_out = std::fabs(m - 1.0);
  return make_density(std::move(grid), std::move(vals), true);
}

std::vector<double> parse_args(const std::string& spec, std::size_t open,
                               std::size_t expected) {
  if (spec.back() != ')')
    throw std::invalid_argument("malformed density specifier: " + spec);
  std::vector<double> args;
  std::size_t pos = open + 1;
  const std::size_t end = spec.size() - 1;
  while (pos < end) {
    std::size_t used = 0;
    args.push_back(std::stod(spec.substr(pos, end - pos), &used));
    pos += used;
    if (pos < end) {
      if (spec[pos] != ',')
        throw std::invalid_argument("malformed density specifier: " + spec);
      ++pos;
    }
  }
  if (args.size() != expected)
    throw std::invalid_argument("density specifier " + spec + " expects " +
                                std::to_string(expected) + " arguments");
  return args;
}

}  // namespace

DensityField family_uniform(GridPtr grid) {
  std::vector<double> vals(grid->n, 1.0);
  return make_density(std::move(grid), std::move(vals), true);
}

DensityField family_bump(GridPtr grid, double m, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("bump width must be positive");
  std::vector<double> vals(grid->n);
  for (int i = 0; i < grid->n; ++i) {
    const double z = (grid->nodes[i] - m) / s;
    vals[i] = std::exp(-0.5 * z * z);
  }
  return normalized(std::move(grid), std::move(vals));
}

DensityField family_mixture(GridPtr grid, double m1, double s1, double m2,
                            double s2, double w) {
  if (!(s1 > 0.0) || !(s2 > 0.0))
    throw std::invalid_argument("mixture widths must be positive");
  if (!(w >= 0.0 && w <= 1.0))
    throw std::invalid_argument("mixture weight must lie in [0,1]");
  std::vector<double> vals(grid->n);
  for (int i = 0; i < grid->n; ++i) {
    const double z1 = (grid->nodes[i] - m1) / s1;
    const double z2 = (grid->nodes[i] - m2) / s2;
    vals[i] = w * std::exp(-0.5 * z1 * z1) + (1.0 - w) * std::exp(-0.5 * z2 * z2);
  }
  return normalized(std::move(grid), std::move(vals));
}

LoadedDensity parse_density(GridPtr grid, const std::string& spec) {
  LoadedDensity out;
  if (spec == "uniform") {
    out.field = family_uniform(std::move(grid));
    return out;
  }
  if (spec.rfind("bump(", 0) == 0) {
    const auto args = parse_args(spec, 4, 2);
    out.field = family_bump(std::move(grid), args[0], args[1]);
    return out;
  }
  if (spec.rfind("mixture(", 0) == 0) {
    const auto args = parse_args(spec, 7, 5);
    out.field =
        family_mixture(std::move(grid), args[0], args[1], args[2], args[3], args[4]);
    return out;
  }
  auto vals = read_density_csv(spec);
  if (static_cast<int>(vals.size()) != grid->n)
    throw std::invalid_argument("file " + spec + " has " +
                                std::to_string(vals.size()) +
                                " rows, expected " + std::to_string(grid->n));
  out.field = normalized(std::move(grid), std::move(vals), &out.renorm_delta);
  return out;
}

}  // namespace lpfr
