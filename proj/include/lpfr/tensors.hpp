#pragma once

#include "lpfr/grid.hpp"

// Pointwise tensors of the L^p geometry at a fixed base density mu and
// reference direction nu: the integral functionals I, K, J4, the Hessian
// metric, the Cartan tensor, and the Chern-connection correction on Prob.
// Each closed form has a finite-difference oracle next to it; the oracles
// are slow and exist for validation and the check-tensors table.

namespace lpfr {

// Shared (mu, nu, p) triple. nu must be nowhere zero on the grid; for p < 2
// the integrand weights |nu/mu|^{p-2} are singular at zeros of nu, so the
// constructor additionally requires min|nu| >= 1e-8 * max|nu| there.
struct TensorContext {
  DensityField mu;
  TangentField nu;
  double p = 0.0;
};

TensorContext make_tensor_context(DensityField mu, TangentField nu, double p);

// I(a,b)      = integral |nu/mu|^{p-2} (a/mu)(b/mu) mu
// K(a,b,c)    = integral |nu/mu|^{p-2} (a/mu)(b/mu)(c/mu) mu
// J4(a,b,c,d) = integral |nu/mu|^{p-4} (a/mu)(b/mu)(c/mu)(d/mu) mu
double functional_I(const TensorContext& ctx, const TangentField& a,
                    const TangentField& b);
double functional_K(const TensorContext& ctx, const TangentField& a,
                    const TangentField& b, const TangentField& c);
double functional_J4(const TensorContext& ctx, const TangentField& a,
                     const TangentField& b, const TangentField& c,
                     const TangentField& d);

// Hessian metric of the squared Finsler norm,
//   g^nu(a,b) = (p-1) I0^{2/p-1} I(a,b) - (p-2) I0^{2/p-2} I(nu,a) I(nu,b)
// with I0 = I(nu,nu). Equals (1/2) d^2/dsdt F_p^2(mu, nu+sa+tb) at 0.
double hessian_g(const TensorContext& ctx, const TangentField& a,
                 const TangentField& b);

// Cartan tensor
//   C^nu(a,b,c) = (1/2)(p-1)(p-2) I0^{2/p-3} ( 2 I(nu,a)I(nu,b)I(nu,c)
//       - I0 [I(nu,a)I(b,c) + I(nu,b)I(c,a) + I(nu,c)I(a,b)]
//       + I0^2 J4(nu,a,b,c) ).
double cartan_C(const TensorContext& ctx, const TangentField& a,
                const TangentField& b, const TangentField& c);

// Chern connection on Prob applied to the reference direction:
//   Dnu.a - ((p-1)/p)(a/mu)(nu/mu) mu + k1 |nu/mu|^{-p} (a/mu) nu
//        + k2 |nu/mu|^{2-p} mu,
// with k1, k2 integral constants of (mu, nu, a). The directional derivative
// Dnu.a is supplied by the caller; a must be tangent to Prob.
TangentField chern_prob_apply(const TensorContext& ctx, const TangentField& a,
                              const TangentField& Dnu_a);

// Finite-difference oracles over the squared norm F_p^2(mu, nu + s a + t b
// [+ u c]), central stencils. Step defaults match the validation tables.
double hessian_fd(const DensityField& mu, const TangentField& nu,
                  const TangentField& a, const TangentField& b, double p,
                  double h = 1e-4);
double cartan_fd(const DensityField& mu, const TangentField& nu,
                 const TangentField& a, const TangentField& b,
                 const TangentField& c, double p, double h = 1e-3);

}  // namespace lpfr
