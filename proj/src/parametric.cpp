#include "lpfr/parametric.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lpfr/rk4.hpp"

namespace lpfr {

namespace {

constexpr double kSigmaFloor = 1e-6;

void require_sigma(const ThetaState& theta, const char* who) {
  if (!(theta.sigma > 0.0))
    throw std::invalid_argument(std::string(who) + ": sigma must be positive");
}

// E[poly(z) * |V(z)|^e * extra(z)] style sums appear below; everything is
// small enough that plain loops beat any abstraction.

double solve2x2_det(const Mat2& A) { return A[0] * A[3] - A[1] * A[2]; }

Vec2 solve2x2(const Mat2& A, const Vec2& b, const char* who) {
  const double det = solve2x2_det(A);
  if (!(std::fabs(det) > 1e-300))
    throw std::runtime_error(std::string(who) + ": singular 2x2 system");
  return Vec2{(A[3] * b[0] - A[1] * b[1]) / det,
              (A[0] * b[1] - A[2] * b[0]) / det};
}

}  // namespace

NormalModel NormalModel::gauss_hermite(int n) {
  if (n < 2) throw std::invalid_argument("gauss_hermite: need >= 2 nodes");
  // Roots of the n-th Hermite polynomial by Newton iteration on the
  // orthonormal recurrence, largest root first, exploiting symmetry.
  const double pim4 = 0.7511255444649425;  // pi^{-1/4}
  std::vector<double> x(n), wt(n);
  const int m = (n + 1) / 2;
  double z = 0.0;
  for (int i = 0; i < m; ++i) {
    if (i == 0) {
      z = std::sqrt(2.0 * n + 1.0) -
          1.85575 * std::pow(2.0 * n + 1.0, -0.16667);
    } else if (i == 1) {
      z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * x[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * x[1];
    } else {
      z = 2.0 * z - x[i - 2];
    }
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = pim4, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / j) * p2 -
             std::sqrt((j - 1.0) / j) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      const double dz = p1 / pp;
      z -= dz;
      if (std::fabs(dz) <= 1e-15) break;
    }
    x[i] = z;
    x[n - 1 - i] = -z;
    wt[i] = 2.0 / (pp * pp);
    wt[n - 1 - i] = wt[i];
  }

  // Physicist nodes t (weight e^{-t^2}) to probabilist z = sqrt(2) t with
  // weights summing to one.
  NormalModel model;
  model.z.resize(n);
  model.w.resize(n);
  const double inv_sqrt_pi = 1.0 / std::sqrt(M_PI);
  for (int i = 0; i < n; ++i) {
    model.z[i] = std::sqrt(2.0) * x[n - 1 - i];  // ascending order
    model.w[i] = wt[n - 1 - i] * inv_sqrt_pi;
  }
  return model;
}

Mat2 fisher_matrix(const NormalModel& model, const ThetaState& theta) {
  require_sigma(theta, "fisher_matrix");
  double e_mm = 0.0, e_ms = 0.0, e_ss = 0.0;
  for (std::size_t i = 0; i < model.z.size(); ++i) {
    const double z = model.z[i], w = model.w[i];
    const double dm = z;
    const double ds = z * z - 1.0;
    e_mm += w * dm * dm;
    e_ms += w * dm * ds;
    e_ss += w * ds * ds;
  }
  const double s2 = theta.sigma * theta.sigma;
  return Mat2{e_mm / s2, e_ms / s2, e_ms / s2, e_ss / s2};
}

double fp_theta(const NormalModel& model, const ThetaState& theta,
                const Vec2& v, double p) {
  require_sigma(theta, "fp_theta");
  if (!(p > 1.0)) throw std::domain_error("fp_theta: p must exceed 1");
  double s = 0.0;
  for (std::size_t i = 0; i < model.z.size(); ++i) {
    const double z = model.z[i];
    const double score = (v[0] * z + v[1] * (z * z - 1.0)) / theta.sigma;
    s += model.w[i] * std::pow(std::fabs(score), p);
  }
  return std::pow(s, 1.0 / p);
}

std::array<double, 5> omega(const ThetaState& theta, const Vec2& u,
                            const Vec2& v, double p) {
  require_sigma(theta, "omega");
  if (!(p > 1.0)) throw std::domain_error("omega: p must exceed 1");
  const double s2 = theta.sigma * theta.sigma;
  const double uv11 = u[0] * v[0];
  const double uv22 = u[1] * v[1];
  const double cross = u[0] * v[1] + u[1] * v[0];
  return std::array<double, 5>{
      (-uv11 + (1.0 + 1.0 / p) * uv22) / s2,
      ((-2.0 - 1.0 / p) * cross) / s2,
      (uv11 / p + (-3.0 - 2.0 / p) * uv22) / s2,
      (cross / p) / s2,
      (uv22 / p) / s2};
}

namespace {

double poly_eval(const std::array<double, 5>& c, double z) {
  return c[0] + z * (c[1] + z * (c[2] + z * (c[3] + z * c[4])));
}

// The I-functional on parameter space: E[|V|^{p-2} A B] with V the score of
// the direction v and A, B score representatives.
struct ScoreTensor {
  const NormalModel& model;
  const ThetaState& theta;
  Vec2 v;
  double p;

  double direction(double z) const {
    return (v[0] * z + v[1] * (z * z - 1.0)) / theta.sigma;
  }
  double basis(int k, double z) const {
    return (k == 0 ? z : z * z - 1.0) / theta.sigma;
  }
};

}  // namespace

Mat2 g_matrix(const NormalModel& model, const ThetaState& theta, const Vec2& v,
              double p) {
  require_sigma(theta, "g_matrix");
  if (!(p > 1.0)) throw std::domain_error("g_matrix: p must exceed 1");
  if (v[0] == 0.0 && v[1] == 0.0)
    throw std::invalid_argument("g_matrix: direction must be nonzero");
  ScoreTensor st{model, theta, v, p};

  double I0 = 0.0;
  Vec2 Inu{0.0, 0.0};
  Mat2 Ie{0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < model.z.size(); ++i) {
    const double z = model.z[i], w = model.w[i];
    const double V = st.direction(z);
    const double wt = w * std::pow(std::fabs(V), p - 2.0);
    const double e0 = st.basis(0, z), e1 = st.basis(1, z);
    I0 += wt * V * V;
    Inu[0] += wt * V * e0;
    Inu[1] += wt * V * e1;
    Ie[0] += wt * e0 * e0;
    Ie[1] += wt * e0 * e1;
    Ie[3] += wt * e1 * e1;
  }
  Ie[2] = Ie[1];

  const double c1 = (p - 1.0) * std::pow(I0, 2.0 / p - 1.0);
  const double c2 = (p - 2.0) * std::pow(I0, 2.0 / p - 2.0);
  Mat2 g;
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k)
      g[2 * j + k] = c1 * Ie[2 * j + k] - c2 * Inu[j] * Inu[k];
  return g;
}

Vec2 lp_geodesic_rhs(const NormalModel& model, const ThetaState& state,
                     double p) {
  require_sigma(state, "lp_geodesic_rhs");
  if (!(p > 1.0)) throw std::domain_error("lp_geodesic_rhs: p must exceed 1");
  const Vec2 v{state.m_dot, state.sigma_dot};
  if (v[0] == 0.0 && v[1] == 0.0)
    throw std::invalid_argument("lp_geodesic_rhs: zero velocity");

  const std::array<double, 5> A = omega(state, v, v, p);
  ScoreTensor st{model, state, v, p};

  double I0 = 0.0, IVA = 0.0;
  Vec2 Inu{0.0, 0.0}, IAe{0.0, 0.0};
  for (std::size_t i = 0; i < model.z.size(); ++i) {
    const double z = model.z[i], w = model.w[i];
    const double V = st.direction(z);
    const double wt = w * std::pow(std::fabs(V), p - 2.0);
    const double a = poly_eval(A, z);
    const double e0 = st.basis(0, z), e1 = st.basis(1, z);
    I0 += wt * V * V;
    IVA += wt * V * a;
    Inu[0] += wt * V * e0;
    Inu[1] += wt * V * e1;
    IAe[0] += wt * a * e0;
    IAe[1] += wt * a * e1;
  }

  const double c1 = (p - 1.0) * std::pow(I0, 2.0 / p - 1.0);
  const double c2 = (p - 2.0) * std::pow(I0, 2.0 / p - 2.0);
  const Vec2 b{c1 * IAe[0] - c2 * IVA * Inu[0],
               c1 * IAe[1] - c2 * IVA * Inu[1]};
  const Mat2 g = g_matrix(model, state, v, p);
  const Vec2 gb = solve2x2(g, b, "lp_geodesic_rhs");
  return Vec2{-gb[0], -gb[1]};
}

Vec2 alpha_normal_rhs(const ThetaState& state, double alpha) {
  require_sigma(state, "alpha_normal_rhs");
  const double md = state.m_dot, sd = state.sigma_dot, s = state.sigma;
  return Vec2{2.0 * (1.0 + alpha) * md * sd / s,
              -(1.0 - alpha) * md * md / (2.0 * s) +
                  (1.0 + 2.0 * alpha) * sd * sd / s};
}

namespace {

struct Trial {
  bool ok = false;
  ThetaState end;
  std::vector<ThetaState> states;
};

Trial integrate_theta(const ThetaRhs& rhs, const ThetaState& theta0,
                      const Vec2& v0, int t_steps, bool keep) {
  Trial trial;
  if (keep) trial.states.reserve(t_steps + 1);
  std::array<double, 4> y{theta0.m, theta0.sigma, v0[0], v0[1]};
  const double dt = 1.0 / t_steps;
  auto ode = [&](double, const std::array<double, 4>& s) {
    const ThetaState st{s[0], s[1], s[2], s[3]};
    const Vec2 acc = rhs(st);
    return std::array<double, 4>{s[2], s[3], acc[0], acc[1]};
  };
  auto push = [&](const std::array<double, 4>& s) {
    if (keep) trial.states.push_back(ThetaState{s[0], s[1], s[2], s[3]});
  };
  push(y);
  for (int k = 0; k < t_steps; ++k) {
    if (!(y[1] > kSigmaFloor)) return trial;
    try {
      y = rk4_step<4>(y, k * dt, dt, ode);
    } catch (const std::exception&) {
      return trial;
    }
    if (!std::isfinite(y[0]) || !std::isfinite(y[1]) || !std::isfinite(y[2]) ||
        !std::isfinite(y[3]))
      return trial;
    push(y);
  }
  if (!(y[1] > kSigmaFloor)) return trial;
  trial.ok = true;
  trial.end = ThetaState{y[0], y[1], y[2], y[3]};
  return trial;
}

}  // namespace

NormalShootResult shoot_bvp(const ThetaRhs& rhs, const ThetaState& theta0,
                            const ThetaState& theta1, int t_steps, double tol,
                            int max_newton, const Vec2* initial_guess) {
  require_sigma(theta0, "shoot_bvp");
  require_sigma(theta1, "shoot_bvp");
  if (t_steps < 2) throw std::invalid_argument("shoot_bvp: t_steps < 2");

  NormalShootResult out;
  out.times.resize(t_steps + 1);
  for (int k = 0; k <= t_steps; ++k)
    out.times[k] = static_cast<double>(k) / t_steps;

  if (theta0.m == theta1.m && theta0.sigma == theta1.sigma) {
    out.states.assign(t_steps + 1, ThetaState{theta0.m, theta0.sigma, 0, 0});
    out.converged = true;
    return out;
  }

  auto miss_of = [&](const Vec2& v0) -> Vec2 {
    const Trial t = integrate_theta(rhs, theta0, v0, t_steps, false);
    if (!t.ok) return Vec2{1e6, 1e6};
    return Vec2{t.end.m - theta1.m, t.end.sigma - theta1.sigma};
  };
  auto norm_of = [](const Vec2& m) {
    return std::max(std::fabs(m[0]), std::fabs(m[1]));
  };

  Vec2 v = initial_guess
               ? *initial_guess
               : Vec2{theta1.m - theta0.m,
                      theta1.sigma - theta0.sigma +
                          0.5 * std::fabs(theta1.m - theta0.m)};
  Vec2 miss = miss_of(v);
  double best = norm_of(miss);
  Vec2 best_v = v;

  for (int it = 0; it < max_newton && best > tol; ++it) {
    out.newton_iters = it + 1;
    // Forward-difference Jacobian of the endpoint miss.
    Mat2 J;
    bool j_ok = true;
    for (int j = 0; j < 2; ++j) {
      const double h = 1e-6 * std::max(1.0, std::fabs(v[j]));
      Vec2 vh = v;
      vh[j] += h;
      const Vec2 mh = miss_of(vh);
      if (norm_of(mh) >= 1e6) j_ok = false;
      J[j] = (mh[0] - miss[0]) / h;      // row 0: d miss_m
      J[2 + j] = (mh[1] - miss[1]) / h;  // row 1: d miss_sigma
    }
    if (!j_ok) break;

    Vec2 step;
    try {
      step = solve2x2(J, miss, "shoot_bvp");
    } catch (const std::runtime_error&) {
      break;
    }

    bool improved = false;
    double damp = 1.0;
    for (int half = 0; half < 7; ++half, damp *= 0.5) {
      const Vec2 cand{v[0] - damp * step[0], v[1] - damp * step[1]};
      const Vec2 cand_miss = miss_of(cand);
      if (norm_of(cand_miss) < norm_of(miss)) {
        v = cand;
        miss = cand_miss;
        improved = true;
        break;
      }
    }
    if (!improved) break;
    if (norm_of(miss) < best) {
      best = norm_of(miss);
      best_v = v;
    }
  }

  const Trial final_trial = integrate_theta(rhs, theta0, best_v, t_steps, true);
  if (!final_trial.ok)
    throw std::runtime_error(
        "shoot_bvp: accepted trajectory leaves sigma > 0");
  out.states = final_trial.states;
  out.miss = best;
  out.converged = best <= tol;
  return out;
}

}  // namespace lpfr
