#pragma once

#include <array>
#include <functional>
#include <vector>

// The two-parameter normal family N(m, sigma^2): Fisher matrix, the L^p
// Finsler norm on parameter space, the omega tensor, geodesic accelerations
// for the L^p metric and for the alpha-connections, and a shooting solver
// for the two-point problem. All expectations are over a standard normal z
// via Gauss-Hermite quadrature, using the score representation
//   d_m l = z/sigma,   d_sigma l = (z^2 - 1)/sigma.

namespace lpfr {

using Vec2 = std::array<double, 2>;
// Row-major 2x2: {a11, a12, a21, a22}.
using Mat2 = std::array<double, 4>;

struct NormalModel {
  std::vector<double> z;  // probabilist nodes
  std::vector<double> w;  // weights, sum 1

  static NormalModel gauss_hermite(int n = 64);
};

struct ThetaState {
  double m = 0.0;
  double sigma = 1.0;
  double m_dot = 0.0;
  double sigma_dot = 0.0;
};

// E[grad l grad l^T] = diag(1, 2)/sigma^2, independent of m.
Mat2 fisher_matrix(const NormalModel& model, const ThetaState& theta);

// F_p(theta, v) = (E|v1 z/sigma + v2 (z^2-1)/sigma|^p)^{1/p}.
double fp_theta(const NormalModel& model, const ThetaState& theta,
                const Vec2& v, double p);

// Coefficients of omega(u,v)/mu as a polynomial in z, degree <= 4, index =
// power of z. Bilinear in (u, v).
std::array<double, 5> omega(const ThetaState& theta, const Vec2& u,
                            const Vec2& v, double p);

// Hessian metric of F_p^2 on parameter space in direction v != 0.
Mat2 g_matrix(const NormalModel& model, const ThetaState& theta, const Vec2& v,
              double p);

// Accelerations (m'', sigma'') of the L^p geodesic equation at the given
// state; the velocity must be nonzero.
Vec2 lp_geodesic_rhs(const NormalModel& model, const ThetaState& state,
                     double p);

// Accelerations of the alpha-connection geodesic equation,
//   m''     =  2 (1+alpha) m' sigma' / sigma,
//   sigma'' = -(1-alpha) m'^2 / (2 sigma) + (1+2 alpha) sigma'^2 / sigma.
Vec2 alpha_normal_rhs(const ThetaState& state, double alpha);

using ThetaRhs = std::function<Vec2(const ThetaState&)>;

struct NormalShootResult {
  std::vector<double> times;
  std::vector<ThetaState> states;
  bool converged = false;
  double miss = 0.0;  // endpoint error of the accepted trajectory
  int newton_iters = 0;
};

// Two-point problem by shooting: damped Newton on the initial velocity with
// a finite-difference Jacobian, RK4 in between. Throws when sigma leaves
// the upper half-plane on the accepted trajectory; a failed Newton is
// reported through converged = false with the best miss found.
NormalShootResult shoot_bvp(const ThetaRhs& rhs, const ThetaState& theta0,
                            const ThetaState& theta1, int t_steps = 50,
                            double tol = 1e-10, int max_newton = 60,
                            const Vec2* initial_guess = nullptr);

}  // namespace lpfr
