#pragma once

#include <cstddef>

// Hot numerical loops, each in a serial reference version and an OpenMP
// version. The unsuffixed name dispatches on exec::mode(). All arrays are
// raw pointers of length n (or T*n, row-major, for path kernels); callers
// own validation. Results are bitwise reproducible for a fixed thread
// count: static schedules only.

namespace lpfr::kernels {

// sum_i w_i v_i
double weighted_sum_serial(const double* w, const double* v, std::size_t n);
double weighted_sum_omp(const double* w, const double* v, std::size_t n);
double weighted_sum(const double* w, const double* v, std::size_t n);

// sum_i w_i a_i b_i / f_i
double fisher_sum_serial(const double* w, const double* f, const double* a,
                         const double* b, std::size_t n);
double fisher_sum_omp(const double* w, const double* f, const double* a,
                      const double* b, std::size_t n);
double fisher_sum(const double* w, const double* f, const double* a,
                  const double* b, std::size_t n);

// sum_i w_i |a_i/f_i|^p f_i
double fp_power_sum_serial(const double* w, const double* f, const double* a,
                           std::size_t n, double p);
double fp_power_sum_omp(const double* w, const double* f, const double* a,
                        std::size_t n, double p);
double fp_power_sum(const double* w, const double* f, const double* a,
                    std::size_t n, double p);

// sum_i w_i |v_i|^p
double lp_power_sum_serial(const double* w, const double* v, std::size_t n,
                           double p);
double lp_power_sum_omp(const double* w, const double* v, std::size_t n,
                        double p);
double lp_power_sum(const double* w, const double* v, std::size_t n, double p);

// sum_i w_i |u_i - v_i|^p
double diff_power_sum_serial(const double* w, const double* u, const double* v,
                             std::size_t n, double p);
double diff_power_sum_omp(const double* w, const double* u, const double* v,
                          std::size_t n, double p);
double diff_power_sum(const double* w, const double* u, const double* v,
                      std::size_t n, double p);

// sum_i w_i fmu_i^s fnu_i^t   (both fields positive)
double holder_sum_serial(const double* w, const double* fmu, const double* fnu,
                         std::size_t n, double s, double t);
double holder_sum_omp(const double* w, const double* fmu, const double* fnu,
                      std::size_t n, double s, double t);
double holder_sum(const double* w, const double* fmu, const double* fnu,
                  std::size_t n, double s, double t);

// sum_i w_i |nu_i/f_i|^e (a_i/f_i)(b_i/f_i) f_i   and the 3- and 4-slot
// variants. The exponent is passed explicitly so one kernel serves the
// metric (e=p-2), Cartan (e=p-4) and connection-correction (e=2-p, e=-p)
// integrals.
double ratio2_sum_serial(const double* w, const double* f, const double* nu,
                         const double* a, const double* b, std::size_t n,
                         double e);
double ratio2_sum_omp(const double* w, const double* f, const double* nu,
                      const double* a, const double* b, std::size_t n,
                      double e);
double ratio2_sum(const double* w, const double* f, const double* nu,
                  const double* a, const double* b, std::size_t n, double e);

double ratio3_sum_serial(const double* w, const double* f, const double* nu,
                         const double* a, const double* b, const double* c,
                         std::size_t n, double e);
double ratio3_sum_omp(const double* w, const double* f, const double* nu,
                      const double* a, const double* b, const double* c,
                      std::size_t n, double e);
double ratio3_sum(const double* w, const double* f, const double* nu,
                  const double* a, const double* b, const double* c,
                  std::size_t n, double e);

double ratio4_sum_serial(const double* w, const double* f, const double* nu,
                         const double* a, const double* b, const double* c,
                         const double* d, std::size_t n, double e);
double ratio4_sum_omp(const double* w, const double* f, const double* nu,
                      const double* a, const double* b, const double* c,
                      const double* d, std::size_t n, double e);
double ratio4_sum(const double* w, const double* f, const double* nu,
                  const double* a, const double* b, const double* c,
                  const double* d, std::size_t n, double e);

// Fused numerator/denominator of the tau ODE right-hand side at h = f+tau*xi:
//   num = sum_i w_i |h_i|^{p-2} h_i xi_i,  den = sum_i w_i |h_i|^p
void tau_terms_serial(const double* w, const double* f, const double* xi,
                      std::size_t n, double tau, double p, double* num,
                      double* den);
void tau_terms_omp(const double* w, const double* f, const double* xi,
                   std::size_t n, double tau, double p, double* num,
                   double* den);
void tau_terms(const double* w, const double* f, const double* xi,
               std::size_t n, double tau, double p, double* num, double* den);

// out_i = (base_i + t*dir_i)^p
void line_pow_serial(const double* base, const double* dir, std::size_t n,
                     double t, double p, double* out);
void line_pow_omp(const double* base, const double* dir, std::size_t n,
                  double t, double p, double* out);
void line_pow(const double* base, const double* dir, std::size_t n, double t,
              double p, double* out);

// out_i = |v_i|^p
void abs_pow_serial(const double* v, std::size_t n, double p, double* out);
void abs_pow_omp(const double* v, std::size_t n, double p, double* out);
void abs_pow(const double* v, std::size_t n, double p, double* out);

// out_i = f_i^{1/p}  (f positive)
void pow_root_serial(const double* f, std::size_t n, double p, double* out);
void pow_root_omp(const double* f, std::size_t n, double p, double* out);
void pow_root(const double* f, std::size_t n, double p, double* out);

// out_i = x_i + alpha*y_i over a flat array of length m
void axpy_serial(const double* x, const double* y, double alpha, std::size_t m,
                 double* out);
void axpy_omp(const double* x, const double* y, double alpha, std::size_t m,
              double* out);
void axpy(const double* x, const double* y, double alpha, std::size_t m,
          double* out);

// Discrete p-energy of a T x n root-space path (row-major frames):
//   (1/p) dt^{1-p} sum_{t<T-1} sum_i w_i |G[t+1,i]-G[t,i]|^p
double path_energy_serial(const double* w, const double* G, std::size_t T,
                          std::size_t n, double p, double dt);
double path_energy_omp(const double* w, const double* G, std::size_t T,
                       std::size_t n, double p, double dt);
double path_energy(const double* w, const double* G, std::size_t T,
                   std::size_t n, double p, double dt);

// Gradient of path_energy w.r.t. interior frames; first and last rows are
// written as zeros.
void path_gradient_serial(const double* w, const double* G, std::size_t T,
                          std::size_t n, double p, double dt, double* out);
void path_gradient_omp(const double* w, const double* G, std::size_t T,
                       std::size_t n, double p, double dt, double* out);
void path_gradient(const double* w, const double* G, std::size_t T,
                   std::size_t n, double p, double dt, double* out);

// Radial retraction: every row g of G is replaced by g / (sum_i w_i|g_i|^p)^{1/p}.
void project_frames_serial(const double* w, double* G, std::size_t T,
                           std::size_t n, double p);
void project_frames_omp(const double* w, double* G, std::size_t T,
                        std::size_t n, double p);
void project_frames(const double* w, double* G, std::size_t T, std::size_t n,
                    double p);

}  // namespace lpfr::kernels
