#pragma once

#include "lpfr/grid.hpp"

// The metric and divergence functionals on density space.

namespace lpfr {

// Conversions between the exponent p > 1 and the connection parameter
// alpha in (-1,1): p = 2/(1-alpha).
double p_from_alpha(double alpha);
double alpha_from_p(double p);
// Holder conjugate p* = p/(p-1); equals 2/(1+alpha).
double conjugate_exponent(double p);

// Finsler norm ( sum w |a/f|^p f )^{1/p}. Requires p > 1.
double fp_norm(const DensityField& mu, const TangentField& a, double p);

// sum w (a/f)(b/f) f
double fisher_rao_inner(const DensityField& mu, const TangentField& a,
                        const TangentField& b);

// p*integral(nu) + p**integral(mu) - p p* * sum w mu^{1/p} nu^{1/p*},
// with p = 2/(1-alpha), p* = 2/(1+alpha).
double alpha_divergence(const DensityField& mu, const DensityField& nu,
                        double alpha);

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* who);
void require_p(double p, const char* who);

}  // namespace lpfr
