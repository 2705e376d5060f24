#include "lpfr/prob_alpha.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "lpfr/functionals.hpp"
#include "lpfr/kernels.hpp"
#include "lpfr/p_root.hpp"
#include "lpfr/rk4.hpp"

namespace lpfr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Largest tau with f + tau*xi positive at every node (entering along
// increasing tau from 0, assuming f > 0).
double tau_ceiling(const std::vector<double>& f, const std::vector<double>& xi) {
  double ceiling = kInf;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (xi[i] < 0.0) ceiling = std::min(ceiling, -f[i] / xi[i]);
  return ceiling;
}

struct TauState {
  double t;
  double tau;
  double tau_dot;
};

bool state_ok(const TauState& s, double ceiling) {
  return std::isfinite(s.tau) && std::isfinite(s.tau_dot) && s.tau < ceiling;
}

// One RK4 step of the tau ODE. May return a state past the positivity
// ceiling; the caller checks.
TauState tau_step(const GridSpec& grid, const std::vector<double>& f,
                  const std::vector<double>& xi, double p, const TauState& s,
                  double h) {
  auto rhs = [&](double, const std::array<double, 2>& y) {
    return std::array<double, 2>{
        y[1], tau_rhs(grid, f, xi, y[0], y[1], p)};
  };
  std::array<double, 2> y{s.tau, s.tau_dot};
  std::array<double, 2> out;
  try {
    out = rk4_step<2>(y, s.t, h, rhs);
  } catch (const std::domain_error&) {
    out = {kInf, kInf};
  }
  return TauState{s.t + h, out[0], out[1]};
}

// Integrate the tau ODE from (0, 0, s0), recording the state at each
// requested time (record[0] may be 0). Substeps never exceed dt. On
// positivity loss, recording stops and the crossing time is bisected to
// 1e-10; out.times then ends before the crossing.
TauTrajectory integrate_tau(const GridSpec& grid, const std::vector<double>& f,
                            const std::vector<double>& xi, double p, double s0,
                            const std::vector<double>& record, double dt) {
  TauTrajectory out;
  out.p = p;
  const double ceiling = tau_ceiling(f, xi);

  TauState s{0.0, 0.0, s0};
  std::size_t next = 0;
  if (!record.empty() && record[0] == 0.0) {
    out.times.push_back(0.0);
    out.tau.push_back(0.0);
    out.tau_dot.push_back(s0);
    next = 1;
  }
  while (next < record.size()) {
    const double span = record[next] - s.t;
    const int m = std::max(1, static_cast<int>(std::ceil(span / dt - 1e-12)));
    const double h = span / m;
    bool crossed = false;
    for (int k = 0; k < m; ++k) {
      TauState trial = tau_step(grid, f, xi, p, s, h);
      if (!state_ok(trial, ceiling)) {
        // Bisect the step size; s stays the last state strictly inside.
        double lo = 0.0, hi = h;
        while (hi - lo > 1e-10) {
          const double mid = 0.5 * (lo + hi);
          TauState probe = tau_step(grid, f, xi, p, s, mid);
          if (state_ok(probe, ceiling)) {
            lo = mid;
            s = probe;
          } else {
            hi = mid;
          }
        }
        out.crossing_time = s.t + (hi - lo);
        crossed = true;
        break;
      }
      s = trial;
    }
    if (crossed) break;
    // Snap to the requested time; the substeps accumulate only rounding.
    s.t = record[next];
    out.times.push_back(s.t);
    out.tau.push_back(s.tau);
    out.tau_dot.push_back(s.tau_dot);
    ++next;
  }
  return out;
}

std::vector<double> uniform_times(double t_end, double dt) {
  const int m = std::max(1, static_cast<int>(std::ceil(t_end / dt - 1e-12)));
  std::vector<double> times(m + 1);
  for (int k = 0; k <= m; ++k) times[k] = t_end * k / m;
  return times;
}

void require_on_sphere(const GridSpec& grid, const std::vector<double>& g,
                       double p, const char* who) {
  const double s = kernels::lp_power_sum(grid.weights.data(), g.data(),
                                         g.size(), p);
  if (std::fabs(s - 1.0) > 1e-8)
    throw std::invalid_argument(std::string(who) +
                                ": point is off the unit sphere, |g|_p^p = " +
                                std::to_string(s));
}

TauTrajectory identity_trajectory(const std::vector<double>& times, double p) {
  TauTrajectory out;
  out.p = p;
  out.times = times;
  out.tau = times;
  out.tau_dot.assign(times.size(), 1.0);
  return out;
}

// Sphere point at parameter tau, pulled back to a density frame with unit
// mass. Callers only request frames strictly inside the positive cone.
void pullback_frame(const GridSpec& grid, const std::vector<double>& f,
                    const std::vector<double>& xi, double tau, double p,
                    std::vector<double>& frame) {
  const std::size_t n = f.size();
  std::vector<double> h(n);
  kernels::axpy(f.data(), xi.data(), tau, n, h.data());
  const double norm = root_norm(grid, h, p);
  frame.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    frame[i] = std::pow(std::fabs(h[i] / norm), p);
}

}  // namespace

double tau_rhs(const GridSpec& grid, const std::vector<double>& f,
               const std::vector<double>& xi, double tau, double tau_dot,
               double p) {
  double num = 0.0, den = 0.0;
  kernels::tau_terms(grid.weights.data(), f.data(), xi.data(), f.size(), tau,
                     p, &num, &den);
  if (!(den > 1e-14))
    throw std::domain_error("tau_rhs: degenerate denominator " +
                            std::to_string(den));
  return 2.0 * (num / den) * tau_dot * tau_dot;
}

TauTrajectory tau_ivp(const GridSpec& grid, const std::vector<double>& f,
                      const std::vector<double>& xi, double p, double t_end,
                      double dt) {
  require_p(p, "tau_ivp");
  if (!(dt > 0.0)) throw std::invalid_argument("tau_ivp: dt must be positive");
  if (!(t_end > 0.0))
    throw std::invalid_argument("tau_ivp: t_end must be positive");
  double moment = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    moment +=
        grid.weights[i] * xi[i] * std::pow(std::fabs(f[i]), p - 2.0) * f[i];
  if (std::fabs(moment) > 1e-8)
    throw std::invalid_argument(
        "tau_ivp: xi is not tangent to the sphere (moment " +
        std::to_string(moment) + ")");
  return integrate_tau(grid, f, xi, p, 1.0, uniform_times(t_end, dt), dt);
}

TauTrajectory tau_bvp(const GridSpec& grid, const std::vector<double>& f,
                      const std::vector<double>& g, double p,
                      std::size_t t_steps) {
  require_p(p, "tau_bvp");
  if (t_steps < 2) throw std::invalid_argument("tau_bvp: t_steps < 2");
  require_on_sphere(grid, f, p, "tau_bvp");
  require_on_sphere(grid, g, p, "tau_bvp");

  std::vector<double> record(t_steps + 1);
  for (std::size_t k = 0; k <= t_steps; ++k)
    record[k] = static_cast<double>(k) / static_cast<double>(t_steps);

  std::vector<double> xi(f.size());
  double diff = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    xi[i] = g[i] - f[i];
    diff = std::max(diff, std::fabs(xi[i]));
  }
  if (diff == 0.0) return identity_trajectory(record, p);

  const double dt = 1e-3;
  // Shooting miss tau(1) - 1; trajectories that leave positivity before t=1
  // overshot the target, reported as a large positive miss.
  auto miss = [&](double s0) {
    TauTrajectory traj =
        integrate_tau(grid, f, xi, p, s0, {0.0, 1.0}, dt);
    if (traj.times.size() < 2) return 1e6;
    return traj.tau.back() - 1.0;
  };

  double s_prev = 0.5, s_cur = 1.5;
  double m_prev = miss(s_prev), m_cur = miss(s_cur);
  double root = kInf;
  for (int it = 0; it < 80; ++it) {
    if (std::fabs(m_cur) <= 1e-10) {
      root = s_cur;
      break;
    }
    if (m_cur == m_prev) break;
    double s_next = s_cur - m_cur * (s_cur - s_prev) / (m_cur - m_prev);
    s_next = std::clamp(s_next, 1e-4, 1e4);
    s_prev = s_cur;
    m_prev = m_cur;
    s_cur = s_next;
    m_cur = miss(s_cur);
  }

  if (!std::isfinite(root)) {
    // Scan for sign changes of the miss over a wide slope range.
    constexpr int kScan = 16;
    std::vector<double> s_grid(kScan), m_grid(kScan);
    for (int k = 0; k < kScan; ++k) {
      s_grid[k] = 0.05 * std::pow(8.0 / 0.05, k / double(kScan - 1));
      m_grid[k] = miss(s_grid[k]);
    }
    std::vector<std::pair<double, double>> brackets;
    for (int k = 0; k + 1 < kScan; ++k)
      if (m_grid[k] * m_grid[k + 1] < 0.0)
        brackets.emplace_back(s_grid[k], s_grid[k + 1]);
    if (brackets.empty()) {
      std::ostringstream msg;
      msg << "tau_bvp: shooting failed to bracket tau(1)=1; last secant pair "
          << s_prev << " -> " << m_prev << ", " << s_cur << " -> " << m_cur;
      throw std::runtime_error(msg.str());
    }
    if (brackets.size() > 1) {
      std::ostringstream msg;
      msg << "tau_bvp: multiple shooting roots bracketed:";
      for (const auto& b : brackets)
        msg << " [" << b.first << ", " << b.second << "]";
      throw std::runtime_error(msg.str());
    }
    double lo = brackets[0].first, hi = brackets[0].second;
    double m_lo = miss(lo);
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double m_mid = miss(mid);
      if (std::fabs(m_mid) <= 1e-10) {
        root = mid;
        break;
      }
      if (m_lo * m_mid < 0.0) {
        hi = mid;
      } else {
        lo = mid;
        m_lo = m_mid;
      }
    }
    if (!std::isfinite(root))
      throw std::runtime_error("tau_bvp: bisection stalled inside bracket [" +
                               std::to_string(lo) + ", " + std::to_string(hi) +
                               "]");
  }

  return integrate_tau(grid, f, xi, p, root, record, dt);
}

DensGeodesicResult alpha_geodesic_prob_bvp(const DensityField& mu0,
                                           const DensityField& mu1, double p,
                                           const std::vector<double>& times,
                                           TauTrajectory* tau_out) {
  require_p(p, "alpha_geodesic_prob_bvp");
  require_same_grid(*mu0.grid, *mu1.grid, "alpha_geodesic_prob_bvp");
  if (!mu0.probability || !mu1.probability)
    throw std::invalid_argument(
        "alpha_geodesic_prob_bvp: endpoints must be probability densities");
  if (times.empty())
    throw std::invalid_argument("alpha_geodesic_prob_bvp: empty time list");
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (times[k] < 0.0 || times[k] > 1.0)
      throw std::invalid_argument(
          "alpha_geodesic_prob_bvp: times must lie in [0,1]");
    if (k > 0 && !(times[k] > times[k - 1]))
      throw std::invalid_argument(
          "alpha_geodesic_prob_bvp: times must be strictly increasing");
  }

  const RootPoint r0 = root_forward(mu0, p);
  const RootPoint r1 = root_forward(mu1, p);
  std::vector<double> xi(r0.g.size());
  for (std::size_t i = 0; i < xi.size(); ++i) xi[i] = r1.g[i] - r0.g[i];

  const GridSpec& grid = *mu0.grid;
  // Solve on a fine uniform grid once, then refine at the requested times.
  TauTrajectory coarse = tau_bvp(grid, r0.g, r1.g, p, 64);
  TauTrajectory traj;
  bool is_identity = true;
  for (double x : xi)
    if (x != 0.0) is_identity = false;
  if (is_identity) {
    traj = identity_trajectory(times, p);
  } else {
    traj = integrate_tau(grid, r0.g, xi, p, coarse.tau_dot.front(), times,
                         1e-3);
  }
  if (tau_out) *tau_out = traj;

  DensGeodesicResult out;
  out.path.grid = mu0.grid;
  out.path.probability = true;
  out.path.times = traj.times;
  out.path.frames.resize(traj.times.size());
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    if (traj.times[k] == 0.0) {
      out.path.frames[k] = mu0.f;
    } else if (traj.times[k] == 1.0) {
      out.path.frames[k] = mu1.f;
    } else {
      pullback_frame(grid, r0.g, xi, traj.tau[k], p, out.path.frames[k]);
    }
  }
  if (traj.times.size() < times.size()) {
    out.left_space = true;
    out.blowup_time = traj.crossing_time;
  }
  return out;
}

DensGeodesicResult alpha_geodesic_prob_ivp(const DensityField& mu0,
                                           const TangentField& a, double p,
                                           const std::vector<double>& times,
                                           TauTrajectory* tau_out) {
  require_p(p, "alpha_geodesic_prob_ivp");
  require_same_grid(*mu0.grid, *a.grid, "alpha_geodesic_prob_ivp");
  if (!mu0.probability)
    throw std::invalid_argument(
        "alpha_geodesic_prob_ivp: mu0 must be a probability density");
  if (!is_prob_tangent(a, 1e-8))
    throw std::invalid_argument(
        "alpha_geodesic_prob_ivp: velocity must have zero mean");
  if (times.empty())
    throw std::invalid_argument("alpha_geodesic_prob_ivp: empty time list");
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (times[k] < 0.0)
      throw std::invalid_argument(
          "alpha_geodesic_prob_ivp: times must be nonnegative");
    if (k > 0 && !(times[k] > times[k - 1]))
      throw std::invalid_argument(
          "alpha_geodesic_prob_ivp: times must be strictly increasing");
  }

  const RootPoint r0 = root_forward(mu0, p);
  const std::vector<double> xi = push_tangent(mu0, a, p);
  const GridSpec& grid = *mu0.grid;

  TauTrajectory traj = integrate_tau(grid, r0.g, xi, p, 1.0, times, 1e-3);
  if (tau_out) *tau_out = traj;

  DensGeodesicResult out;
  out.path.grid = mu0.grid;
  out.path.probability = true;
  out.path.times = traj.times;
  out.path.frames.resize(traj.times.size());
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    if (traj.times[k] == 0.0)
      out.path.frames[k] = mu0.f;
    else
      pullback_frame(grid, r0.g, xi, traj.tau[k], p, out.path.frames[k]);
  }
  if (traj.times.size() < times.size()) {
    out.left_space = true;
    out.blowup_time = traj.crossing_time;
  }
  return out;
}

double blowup_estimate(const TangentField& a, double p) {
  require_p(p, "blowup_estimate");
  double min_a = kInf;
  bool all_zero = true;
  for (double v : a.a) {
    if (v != 0.0) all_zero = false;
    min_a = std::min(min_a, v);
  }
  if (all_zero)
    throw std::invalid_argument("blowup_estimate: zero velocity field");
  if (min_a >= 0.0) return kInf;
  return p / (-min_a);
}

double prob_alpha_residual(const PathGrid& path, double p) {
  require_p(p, "prob_alpha_residual");
  if (path.times.size() < 3)
    throw std::invalid_argument("prob_alpha_residual: needs >= 3 frames");
  const double dt = path.times[1] - path.times[0];
  for (std::size_t k = 1; k < path.times.size(); ++k)
    if (std::fabs(path.times[k] - path.times[k - 1] - dt) > 1e-9)
      throw std::invalid_argument(
          "prob_alpha_residual: frames must be uniform in time");

  const double inv_ps = 1.0 / conjugate_exponent(p);
  const GridSpec& grid = *path.grid;
  const std::size_t n = grid.nodes.size();
  std::vector<double> mu_t(n);
  double sup = 0.0;
  for (std::size_t k = 1; k + 1 < path.times.size(); ++k) {
    const auto& fm = path.frames[k - 1];
    const auto& f0 = path.frames[k];
    const auto& fp = path.frames[k + 1];
    for (std::size_t i = 0; i < n; ++i) mu_t[i] = (fp[i] - fm[i]) / (2.0 * dt);
    const double bracket = kernels::fp_power_sum(grid.weights.data(),
                                                 f0.data(), mu_t.data(), n,
                                                 2.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double mu_tt = (fp[i] - 2.0 * f0[i] + fm[i]) / (dt * dt);
      const double defect =
          mu_tt - inv_ps * mu_t[i] * mu_t[i] / f0[i] + inv_ps * bracket * f0[i];
      sup = std::max(sup, std::fabs(defect));
    }
  }
  return sup;
}

}  // namespace lpfr
