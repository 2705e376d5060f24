#include "lpfr/kernels.hpp"

#include <cmath>

#include "lpfr/exec.hpp"

namespace lpfr::kernels {

namespace {

inline bool parallel() { return exec::mode() == exec::Mode::Parallel; }

// |x|^{e} x, continuous for e > -1
inline double signed_pow(double x, double e) {
  return std::pow(std::fabs(x), e) * x;
}

}  // namespace

double weighted_sum_serial(const double* w, const double* v, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += w[i] * v[i];
  return s;
}

double weighted_sum_omp(const double* w, const double* v, std::size_t n) {
  double s = 0.0;
#pragma omp parallel for reduction(+ : s) schedule(static)
  for (std::size_t i = 0; i < n; ++i) s += w[i] * v[i];
  return s;
}

double weighted_sum(const double* w, const double* v, std::size_t n) {
  return parallel() ? weighted_sum_omp(w, v, n) : weighted_sum_serial(w, v, n);
}

double fisher_sum_serial(const double* w, const double* f, const double* a,
                         const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += w[i] * a[i] * b[i] / f[i];
  return s;
}

double fisher_sum_omp(const double* w, const double* f, const double* a,
                      const double* b, std::size_t n) {
  double s = 0.0;
#pragma omp parallel for reduction(+ : s) schedule(static)
  for (std::size_t i = 0; i < n; ++i) s += w[i] * a[i] * b[i] / f[i];
  return s;
}

double fisher_sum(const double* w, const double* f, const double* a,
                  const double* b, std::size_t n) {
  return parallel() ? fisher_sum_omp(w, f, a, b, n)
                    : fisher_sum_serial(w, f, a, b, n);
}

double fp_power_sum_serial(const double* w, const double* f, const double* a,
                           std::size_t n, double p) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    s += w[i] * std::pow(std::fabs(a[i] / f[i]), p) * f[i];
  return s;
}

double fp_power_sum_omp(const double* w, const double* f, const double* a,
                        std::size_t n, double p) {
  double s = 0.0;
#pragma omp parallel for reduction(+ : s) schedule(static)
  for (std::size_t i = 0; i < n; ++i)
    s += w[i] * std::pow(std::fabs(a[i] / f[i]), p) * f[i];
  return s;
}

double fp_power_sum(const double* w, const double* f, const double* a,
                    std::size_t n, double p) {
  return parallel() ? fp_power_sum_omp(w, f, a, n, p)
                    : fp_power_sum_serial(w, f, a, n, p);
}

double lp_power_sum_serial(const double* w, const double* v, std::size_t n,
                           double p) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += w[i] * std::pow(std::fabs(v[i]), p);
  return s;
}

double lp_power_sum_omp(const double* w, const double* v, std::size_t n,
                        double p) {
  double s = 0.0;
#pragma omp parallel for reduction(+ : s) schedule(static)
  for (std::size_t i = 0; i < n; ++i) s += w[i] * std::pow(std::fabs(v[i]), p);
  return s;
}

double lp_power_sum(const double* w, const double* v, std::size_t n, double p) {
  return parallel() ? lp_power_sum_omp(w, v, n, p)
                    : lp_power_sum_serial(w, v, n, p);
}

double diff_power_sum_serial(const double* w, const double* u, const double* v,
                             std::size_t n, double p) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    s += w[i] * std::pow(std::fabs(u[i] - v[i]), p);
  return s;
}

double diff_power_sum_omp(const double* w, const double* u, const double* v,
                          std::size_t n, double p) {
  double s = 0.0;
#pragma omp parallel for reduction(+ : s) schedule(static)
  for (std::size_t i = 0; i < n; ++i)
    s += w[i] * std::pow(std::fabs(u[i] - v[i]), p);
  return s;
}

double diff_power_sum(const double* w, const double* u, const double* v,
                      std::size_t n, double p) {
  return parallel() ? diff_power_sum_omp(w, u, v, n, p)
                    : diff_power_sum_serial(w, u, v, n, p);
}

double holder_sum_serial(const double* w, const double* fmu, const double* fnu,
                         std::size_t n, double s, double t) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    acc += w[i] * std::pow(fmu[i], s) * std::pow(fnu[i], t);
  return acc;
}

double holder_sum_omp(const double* w, const double* fmu, const double* fnu,
                      std::size_t n, double s, double t) {
  double acc = 0.0;
#pragma omp parallel for reduction(+ : acc) schedule(static)
  for (std::size_t i = 0; i < n; ++i)
    acc += w[i] * std::pow(fmu[i], s) * std::pow(fnu[i], t);
  return acc;
}

double holder_sum(const double* w, const double* fmu, const double* fnu,
                  std::size_t n, double s, double t) {
  return parallel() ? holder_sum_omp(w, fmu, fnu, n, s, t)
                    : holder_sum_serial(w, fmu, fnu, n, s, t);
}

double ratio2_sum_serial(const double* w, const double* f, const double* nu,
                         const double* a, const double* b, std::size_t n,
                         double e) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double fi = f[i];
    s += w[i] * std::pow(std::fabs(nu[i] / fi), e) * (a[i] / fi) *
         (b[i] / fi) * fi;
  }
  return s;
}

double ratio2_sum_omp(const double* w, const double* f, const double* nu,
                      const double* a, const double* b, std::size_t n,
                      double e) {
  double s = 0.0;
#pragma omp parallel for reduction(+ : s) schedule(static)
  for (std::size_t i = 0; i < n; ++i) {
    const double fi = f[i];
    s += w[i] * std::pow(std::fabs(nu[i] / fi), e) * (a[i] / fi) *
         (b[i] / fi) * fi;
  }
  return s;
}

double ratio2_sum(const double* w, const double* f, const double* nu,
                  const double* a, const double* b, std::size_t n, double e) {
  return parallel() ? ratio2_sum_omp(w, f, nu, a, b, n, e)
                    : ratio2_sum_serial(w, f, nu, a, b, n, e);
}

double ratio3_sum_serial(const double* w, const double* f, const double* nu,
                         const double* a, const double* b, const double* c,
                         std::size_t n, double e) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double fi = f[i];
    s += w[i] * std::pow(std::fabs(nu[i] / fi), e) * (a[i] / fi) *
         (b[i] / fi) * (c[i] / fi) * fi;
  }
  return s;
}

double ratio3_sum_omp(const double* w, const double* f, const double* nu,
                      const double* a, const double* b, const double* c,
                      std::size_t n, double e) {
  double s = 0.0;
#pragma omp parallel for reduction(+ : s) schedule(static)
  for (std::size_t i = 0; i < n; ++i) {
    const double fi = f[i];
    s += w[i] * std::pow(std::fabs(nu[i] / fi), e) * (a[i] / fi) *
         (b[i] / fi) * (c[i] / fi) * fi;
  }
  return s;
}

double ratio3_sum(const double* w, const double* f, const double* nu,
                  const double* a, const double* b, const double* c,
                  std::size_t n, double e) {
  return parallel() ? ratio3_sum_omp(w, f, nu, a, b, c, n, e)
                    : ratio3_sum_serial(w, f, nu, a, b, c, n, e);
}

double ratio4_sum_serial(const double* w, const double* f, const double* nu,
                         const double* a, const double* b, const double* c,
                         const double* d, std::size_t n, double e) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double fi = f[i];
    s += w[i] * std::pow(std::fabs(nu[i] / fi), e) * (a[i] / fi) *
         (b[i] / fi) * (c[i] / fi) * (d[i] / fi) * fi;
  }
  return s;
}

double ratio4_sum_omp(const double* w, const double* f, const double* nu,
                      const double* a, const double* b, const double* c,
                      const double* d, std::size_t n, double e) {
  double s = 0.0;
#pragma omp parallel for reduction(+ : s) schedule(static)
  for (std::size_t i = 0; i < n; ++i) {
    const double fi = f[i];
    s += w[i] * std::pow(std::fabs(nu[i] / fi), e) * (a[i] / fi) *
         (b[i] / fi) * (c[i] / fi) * (d[i] / fi) * fi;
  }
  return s;
}

double ratio4_sum(const double* w, const double* f, const double* nu,
                  const double* a, const double* b, const double* c,
                  const double* d, std::size_t n, double e) {
  return parallel() ? ratio4_sum_omp(w, f, nu, a, b, c, d, n, e)
                    : ratio4_sum_serial(w, f, nu, a, b, c, d, n, e);
}

void tau_terms_serial(const double* w, const double* f, const double* xi,
                      std::size_t n, double tau, double p, double* num,
                      double* den) {
  double sn = 0.0, sd = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double h = f[i] + tau * xi[i];
    const double ap = std::pow(std::fabs(h), p - 2.0);
    sn += w[i] * ap * h * xi[i];
    sd += w[i] * ap * h * h;
  }
  *num = sn;
  *den = sd;
}

void tau_terms_omp(const double* w, const double* f, const double* xi,
                   std::size_t n, double tau, double p, double* num,
                   double* den) {
  double sn = 0.0, sd = 0.0;
#pragma omp parallel for reduction(+ : sn, sd) schedule(static)
  for (std::size_t i = 0; i < n; ++i) {
    const double h = f[i] + tau * xi[i];
    const double ap = std::pow(std::fabs(h), p - 2.0);
    sn += w[i] * ap * h * xi[i];
    sd += w[i] * ap * h * h;
  }
  *num = sn;
  *den = sd;
}

void tau_terms(const double* w, const double* f, const double* xi,
               std::size_t n, double tau, double p, double* num, double* den) {
  if (parallel())
    tau_terms_omp(w, f, xi, n, tau, p, num, den);
  else
    tau_terms_serial(w, f, xi, n, tau, p, num, den);
}

void line_pow_serial(const double* base, const double* dir, std::size_t n,
                     double t, double p, double* out) {
  for (std::size_t i = 0; i < n; ++i)
    out[i] = std::pow(base[i] + t * dir[i], p);
}

void line_pow_omp(const double* base, const double* dir, std::size_t n,
                  double t, double p, double* out) {
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i)
    out[i] = std::pow(base[i] + t * dir[i], p);
}

void line_pow(const double* base, const double* dir, std::size_t n, double t,
              double p, double* out) {
  if (parallel())
    line_pow_omp(base, dir, n, t, p, out);
  else
    line_pow_serial(base, dir, n, t, p, out);
}

void abs_pow_serial(const double* v, std::size_t n, double p, double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::pow(std::fabs(v[i]), p);
}

void abs_pow_omp(const double* v, std::size_t n, double p, double* out) {
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) out[i] = std::pow(std::fabs(v[i]), p);
}

void abs_pow(const double* v, std::size_t n, double p, double* out) {
  if (parallel())
    abs_pow_omp(v, n, p, out);
  else
    abs_pow_serial(v, n, p, out);
}

void pow_root_serial(const double* f, std::size_t n, double p, double* out) {
  const double e = 1.0 / p;
  for (std::size_t i = 0; i < n; ++i) out[i] = std::pow(f[i], e);
}

void pow_root_omp(const double* f, std::size_t n, double p, double* out) {
  const double e = 1.0 / p;
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) out[i] = std::pow(f[i], e);
}

void pow_root(const double* f, std::size_t n, double p, double* out) {
  if (parallel())
    pow_root_omp(f, n, p, out);
  else
    pow_root_serial(f, n, p, out);
}

void axpy_serial(const double* x, const double* y, double alpha, std::size_t m,
                 double* out) {
  for (std::size_t i = 0; i < m; ++i) out[i] = x[i] + alpha * y[i];
}

void axpy_omp(const double* x, const double* y, double alpha, std::size_t m,
              double* out) {
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < m; ++i) out[i] = x[i] + alpha * y[i];
}

void axpy(const double* x, const double* y, double alpha, std::size_t m,
          double* out) {
  if (parallel())
    axpy_omp(x, y, alpha, m, out);
  else
    axpy_serial(x, y, alpha, m, out);
}

double path_energy_serial(const double* w, const double* G, std::size_t T,
                          std::size_t n, double p, double dt) {
  double s = 0.0;
  for (std::size_t t = 0; t + 1 < T; ++t)
    for (std::size_t i = 0; i < n; ++i)
      s += w[i] * std::pow(std::fabs(G[(t + 1) * n + i] - G[t * n + i]), p);
  return s * std::pow(dt, 1.0 - p) / p;
}

double path_energy_omp(const double* w, const double* G, std::size_t T,
                       std::size_t n, double p, double dt) {
  double s = 0.0;
#pragma omp parallel for collapse(2) reduction(+ : s) schedule(static)
  for (std::size_t t = 0; t < T - 1; ++t)
    for (std::size_t i = 0; i < n; ++i)
      s += w[i] * std::pow(std::fabs(G[(t + 1) * n + i] - G[t * n + i]), p);
  return s * std::pow(dt, 1.0 - p) / p;
}

double path_energy(const double* w, const double* G, std::size_t T,
                   std::size_t n, double p, double dt) {
  return parallel() ? path_energy_omp(w, G, T, n, p, dt)
                    : path_energy_serial(w, G, T, n, p, dt);
}

namespace {

inline void gradient_row(const double* w, const double* G, std::size_t t,
                         std::size_t n, double p, double scale, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double dm = G[t * n + i] - G[(t - 1) * n + i];
    const double dp = G[(t + 1) * n + i] - G[t * n + i];
    out[t * n + i] =
        w[i] * scale * (signed_pow(dm, p - 2.0) - signed_pow(dp, p - 2.0));
  }
}

}  // namespace

void path_gradient_serial(const double* w, const double* G, std::size_t T,
                          std::size_t n, double p, double dt, double* out) {
  const double scale = std::pow(dt, 1.0 - p);
  for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
  for (std::size_t i = 0; i < n; ++i) out[(T - 1) * n + i] = 0.0;
  for (std::size_t t = 1; t + 1 < T; ++t) gradient_row(w, G, t, n, p, scale, out);
}

void path_gradient_omp(const double* w, const double* G, std::size_t T,
                       std::size_t n, double p, double dt, double* out) {
  const double scale = std::pow(dt, 1.0 - p);
  for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
  for (std::size_t i = 0; i < n; ++i) out[(T - 1) * n + i] = 0.0;
#pragma omp parallel for schedule(static)
  for (std::size_t t = 1; t < T - 1; ++t) gradient_row(w, G, t, n, p, scale, out);
}

void path_gradient(const double* w, const double* G, std::size_t T,
                   std::size_t n, double p, double dt, double* out) {
  if (parallel())
    path_gradient_omp(w, G, T, n, p, dt, out);
  else
    path_gradient_serial(w, G, T, n, p, dt, out);
}

namespace {

inline void project_row(const double* w, double* g, std::size_t n, double p) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += w[i] * std::pow(std::fabs(g[i]), p);
  const double inv = 1.0 / std::pow(s, 1.0 / p);
  for (std::size_t i = 0; i < n; ++i) g[i] *= inv;
}

}  // namespace

void project_frames_serial(const double* w, double* G, std::size_t T,
                           std::size_t n, double p) {
  for (std::size_t t = 0; t < T; ++t) project_row(w, G + t * n, n, p);
}

void project_frames_omp(const double* w, double* G, std::size_t T,
                        std::size_t n, double p) {
#pragma omp parallel for schedule(static)
  for (std::size_t t = 0; t < T; ++t) project_row(w, G + t * n, n, p);
}

void project_frames(const double* w, double* G, std::size_t T, std::size_t n,
                    double p) {
  if (parallel())
    project_frames_omp(w, G, T, n, p);
  else
    project_frames_serial(w, G, T, n, p);
}

}  // namespace lpfr::kernels
