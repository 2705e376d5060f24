#include "lpfr/functionals.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lpfr/kernels.hpp"

namespace lpfr {

double p_from_alpha(double alpha) {
  if (!(alpha > -1.0 && alpha < 1.0))
    throw std::domain_error("alpha must lie in (-1,1), got " +
                            std::to_string(alpha));
  return 2.0 / (1.0 - alpha);
}

double alpha_from_p(double p) {
  require_p(p, "alpha_from_p");
  return 1.0 - 2.0 / p;
}

double conjugate_exponent(double p) {
  require_p(p, "conjugate_exponent");
  return p / (p - 1.0);
}

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* who) {
  if (!compatible(a, b))
    throw std::invalid_argument(std::string(who) +
                                ": fields live on incompatible grids");
}

void require_p(double p, const char* who) {
  if (!(p > 1.0))
    throw std::invalid_argument(std::string(who) + ": requires p > 1, got " +
                                std::to_string(p));
}

double fp_norm(const DensityField& mu, const TangentField& a, double p) {
  require_p(p, "fp_norm");
  require_same_grid(*mu.grid, *a.grid, "fp_norm");
  const double s = kernels::fp_power_sum(mu.grid->weights.data(), mu.f.data(),
                                         a.a.data(), mu.f.size(), p);
  return std::pow(s, 1.0 / p);
}

double fisher_rao_inner(const DensityField& mu, const TangentField& a,
                        const TangentField& b) {
  require_same_grid(*mu.grid, *a.grid, "fisher_rao_inner");
  require_same_grid(*mu.grid, *b.grid, "fisher_rao_inner");
  return kernels::fisher_sum(mu.grid->weights.data(), mu.f.data(), a.a.data(),
                             b.a.data(), mu.f.size());
}

double alpha_divergence(const DensityField& mu, const DensityField& nu,
                        double alpha) {
  const double p = p_from_alpha(alpha);
  const double ps = 2.0 / (1.0 + alpha);
  require_same_grid(*mu.grid, *nu.grid, "alpha_divergence");
  const double cross =
      kernels::holder_sum(mu.grid->weights.data(), mu.f.data(), nu.f.data(),
                          mu.f.size(), 1.0 / p, 1.0 / ps);
  return p * mass(nu) + ps * mass(mu) - p * ps * cross;
}

}  // namespace lpfr
