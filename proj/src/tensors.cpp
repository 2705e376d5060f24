#include "lpfr/tensors.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "lpfr/functionals.hpp"
#include "lpfr/kernels.hpp"

namespace lpfr {

namespace {

void require_ctx_field(const TensorContext& ctx, const TangentField& a,
                       const char* who) {
  require_same_grid(*ctx.mu.grid, *a.grid, who);
}

double squared_norm(const DensityField& mu, const std::vector<double>& w,
                    double p) {
  const double s = kernels::fp_power_sum(mu.grid->weights.data(), mu.f.data(),
                                         w.data(), w.size(), p);
  return std::pow(s, 2.0 / p);
}

}  // namespace

TensorContext make_tensor_context(DensityField mu, TangentField nu, double p) {
  require_p(p, "make_tensor_context");
  require_same_grid(*mu.grid, *nu.grid, "make_tensor_context");
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (double v : nu.a) {
    lo = std::min(lo, std::fabs(v));
    hi = std::max(hi, std::fabs(v));
  }
  if (lo == 0.0)
    throw std::invalid_argument(
        "make_tensor_context: nu vanishes at a grid node");
  if (p < 2.0 && lo < 1e-8 * hi)
    throw std::invalid_argument(
        "make_tensor_context: nu is numerically degenerate for p < 2 "
        "(min/max ratio " +
        std::to_string(lo / hi) + ")");
  return TensorContext{std::move(mu), std::move(nu), p};
}

double functional_I(const TensorContext& ctx, const TangentField& a,
                    const TangentField& b) {
  require_ctx_field(ctx, a, "functional_I");
  require_ctx_field(ctx, b, "functional_I");
  const GridSpec& grid = *ctx.mu.grid;
  return kernels::ratio2_sum(grid.weights.data(), ctx.mu.f.data(),
                             ctx.nu.a.data(), a.a.data(), b.a.data(),
                             a.a.size(), ctx.p - 2.0);
}

double functional_K(const TensorContext& ctx, const TangentField& a,
                    const TangentField& b, const TangentField& c) {
  require_ctx_field(ctx, a, "functional_K");
  require_ctx_field(ctx, b, "functional_K");
  require_ctx_field(ctx, c, "functional_K");
  const GridSpec& grid = *ctx.mu.grid;
  return kernels::ratio3_sum(grid.weights.data(), ctx.mu.f.data(),
                             ctx.nu.a.data(), a.a.data(), b.a.data(),
                             c.a.data(), a.a.size(), ctx.p - 2.0);
}

double functional_J4(const TensorContext& ctx, const TangentField& a,
                     const TangentField& b, const TangentField& c,
                     const TangentField& d) {
  require_ctx_field(ctx, a, "functional_J4");
  require_ctx_field(ctx, b, "functional_J4");
  require_ctx_field(ctx, c, "functional_J4");
  require_ctx_field(ctx, d, "functional_J4");
  const GridSpec& grid = *ctx.mu.grid;
  return kernels::ratio4_sum(grid.weights.data(), ctx.mu.f.data(),
                             ctx.nu.a.data(), a.a.data(), b.a.data(),
                             c.a.data(), d.a.data(), a.a.size(), ctx.p - 4.0);
}

double hessian_g(const TensorContext& ctx, const TangentField& a,
                 const TangentField& b) {
  const double p = ctx.p;
  const double I0 = functional_I(ctx, ctx.nu, ctx.nu);
  return (p - 1.0) * std::pow(I0, 2.0 / p - 1.0) * functional_I(ctx, a, b) -
         (p - 2.0) * std::pow(I0, 2.0 / p - 2.0) * functional_I(ctx, ctx.nu, a) *
             functional_I(ctx, ctx.nu, b);
}

double cartan_C(const TensorContext& ctx, const TangentField& a,
                const TangentField& b, const TangentField& c) {
  const double p = ctx.p;
  const double I0 = functional_I(ctx, ctx.nu, ctx.nu);
  const double Ia = functional_I(ctx, ctx.nu, a);
  const double Ib = functional_I(ctx, ctx.nu, b);
  const double Ic = functional_I(ctx, ctx.nu, c);
  const double Iab = functional_I(ctx, a, b);
  const double Ibc = functional_I(ctx, b, c);
  const double Ica = functional_I(ctx, c, a);
  const double J = functional_J4(ctx, ctx.nu, a, b, c);
  const double bracket =
      2.0 * Ia * Ib * Ic - I0 * (Ia * Ibc + Ib * Ica + Ic * Iab) + I0 * I0 * J;
  return 0.5 * (p - 1.0) * (p - 2.0) * std::pow(I0, 2.0 / p - 3.0) * bracket;
}

TangentField chern_prob_apply(const TensorContext& ctx, const TangentField& a,
                              const TangentField& Dnu_a) {
  require_ctx_field(ctx, a, "chern_prob_apply");
  require_ctx_field(ctx, Dnu_a, "chern_prob_apply");
  if (std::fabs(integrate(*ctx.mu.grid, a.a)) > 1e-8)
    throw std::invalid_argument("chern_prob_apply: a must have zero mean");

  const GridSpec& grid = *ctx.mu.grid;
  const double* w = grid.weights.data();
  const double* f = ctx.mu.f.data();
  const double* nu = ctx.nu.a.data();
  const std::size_t n = ctx.mu.f.size();
  const double p = ctx.p;

  const double S2 = kernels::ratio2_sum(w, f, nu, nu, nu, n, 0.0);
  const double Sc = kernels::ratio2_sum(w, f, nu, f, f, n, 2.0 - p);
  const double Sa = kernels::ratio2_sum(w, f, nu, a.a.data(), nu, n, 0.0);
  const double Sna = kernels::ratio2_sum(w, f, nu, a.a.data(), nu, n, -p);

  const double half_pp = (p - 1.0) * (p - 2.0) / (2.0 * p);
  const double k1 = -half_pp * S2 / Sc;
  const double k2 =
      ((p - 1.0) / p) * Sa / Sc + half_pp * Sna * S2 / (Sc * Sc);

  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = nu[i] / f[i];
    const double ar = std::fabs(r);
    out[i] = Dnu_a.a[i] - ((p - 1.0) / p) * (a.a[i] / f[i]) * nu[i] +
             k1 * std::pow(ar, -p) * (a.a[i] / f[i]) * nu[i] +
             k2 * std::pow(ar, 2.0 - p) * f[i];
  }
  return make_tangent(ctx.mu.grid, std::move(out));
}

double hessian_fd(const DensityField& mu, const TangentField& nu,
                  const TangentField& a, const TangentField& b, double p,
                  double h) {
  require_p(p, "hessian_fd");
  const std::size_t n = mu.f.size();
  std::vector<double> v(n);
  auto F2 = [&](double s, double t) {
    for (std::size_t i = 0; i < n; ++i)
      v[i] = nu.a[i] + s * a.a[i] + t * b.a[i];
    return squared_norm(mu, v, p);
  };
  const double mixed =
      (F2(h, h) - F2(h, -h) - F2(-h, h) + F2(-h, -h)) / (4.0 * h * h);
  return 0.5 * mixed;
}

double cartan_fd(const DensityField& mu, const TangentField& nu,
                 const TangentField& a, const TangentField& b,
                 const TangentField& c, double p, double h) {
  require_p(p, "cartan_fd");
  const std::size_t n = mu.f.size();
  std::vector<double> v(n);
  auto F2 = [&](double s, double t, double u) {
    for (std::size_t i = 0; i < n; ++i)
      v[i] = nu.a[i] + s * a.a[i] + t * b.a[i] + u * c.a[i];
    return squared_norm(mu, v, p);
  };
  double third = 0.0;
  for (int sa = -1; sa <= 1; sa += 2)
    for (int sb = -1; sb <= 1; sb += 2)
      for (int sc = -1; sc <= 1; sc += 2)
        third += sa * sb * sc * F2(sa * h, sb * h, sc * h);
  third /= 8.0 * h * h * h;
  return 0.25 * third;
}

}  // namespace lpfr
