// Command-line front end for the L^p-Fisher-Rao toolkit. Subcommands map
// one-to-one onto the solver modules; every run writes plain CSV so the
// results can be plotted with anything. Exit codes: 0 success, 1 usage or
// input error, 2 solver failure, 3 positivity loss (partial path written).

#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lpfr/csv.hpp"
#include "lpfr/dens_geo.hpp"
#include "lpfr/exec.hpp"
#include "lpfr/families.hpp"
#include "lpfr/functionals.hpp"
#include "lpfr/grid.hpp"
#include "lpfr/parametric.hpp"
#include "lpfr/prob_alpha.hpp"
#include "lpfr/prob_lp.hpp"
#include "lpfr/tensors.hpp"

namespace {

using namespace lpfr;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSolver = 2;
constexpr int kExitLeftSpace = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  double p = 0.0;
  double alpha = 0.0;
  int grid_n = 100;
  int steps = 0;  // frames for path commands, RK4 steps for normal-geodesic
  double tol = 0.0;
  int max_iter = 20000;
  std::string mu0_spec, mu1_spec, vel_spec;
  double vel_scale = 1.0;
  double t_end = 1.0;
  std::string out, tau_out, trace_out;
  std::string theta0_spec, theta1_spec;
};

void add_p_alpha(CLI::App* cmd, Common& o) {
  cmd->add_option("--p", o.p, "exponent p > 1");
  cmd->add_option("--alpha", o.alpha,
                  "alpha in (-1,1), equivalent to p = 2/(1-alpha)");
}

// Enforces the exactly-one rule; figure presets fall back to p=2.
double pick_p(const CLI::App* cmd, const Common& o, bool required) {
  const bool has_p = cmd->count("--p") > 0;
  const bool has_a = cmd->count("--alpha") > 0;
  if (has_p && has_a)
    throw UsageError("give exactly one of --p / --alpha, not both");
  if (!has_p && !has_a) {
    if (required) throw UsageError("one of --p / --alpha is required");
    return 2.0;
  }
  double p = 0.0;
  try {
    p = has_p ? o.p : p_from_alpha(o.alpha);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (!(p > 1.0))
    throw UsageError("p must exceed 1, got " + std::to_string(p));
  return p;
}

DensityField load_density(const GridPtr& grid, const std::string& spec,
                          const char* flag) {
  if (spec.empty()) throw UsageError(std::string(flag) + " is required");
  LoadedDensity loaded = parse_density(grid, spec);
  if (loaded.renorm_delta > 1e-6)
    std::cerr << "warning: " << flag << " '" << spec
              << "' renormalized, mass was off by "
              << format_number(loaded.renorm_delta) << "\n";
  return loaded.field;
}

TangentField load_velocity(const GridPtr& grid, const std::string& spec,
                           double scale) {
  if (spec.empty()) throw UsageError("--vel is required");
  const std::size_t n = grid->nodes.size();
  std::vector<double> a(n);
  if (spec.rfind("sinmode:", 0) == 0 || spec.rfind("cosmode:", 0) == 0) {
    const bool sine = spec[0] == 's';
    int k = 0;
    try {
      k = std::stoi(spec.substr(8));
    } catch (const std::exception&) {
      throw UsageError("bad mode number in velocity spec '" + spec + "'");
    }
    if (k <= 0) throw UsageError("velocity mode number must be positive");
    for (std::size_t i = 0; i < n; ++i) {
      const double arg = 2.0 * M_PI * k * grid->nodes[i];
      a[i] = sine ? std::sin(arg) : std::cos(arg);
    }
  } else {
    a = read_density_csv(spec);
    if (a.size() != n)
      throw UsageError("velocity file '" + spec + "' has " +
                       std::to_string(a.size()) + " rows, grid has " +
                       std::to_string(n));
  }
  for (double& v : a) v *= scale;
  return make_tangent(grid, std::move(a));
}

std::vector<double> frame_times(int frames, double t_end) {
  if (frames < 2) throw UsageError("--steps must be at least 2");
  std::vector<double> t(frames);
  for (int k = 0; k < frames; ++k) t[k] = t_end * k / (frames - 1);
  return t;
}

std::vector<std::string> run_preamble(const std::string& command, double p,
                                      const Common& o) {
  std::vector<std::string> lines;
  lines.push_back("command: " + command);
  lines.push_back("p: " + format_number(p));
  lines.push_back("alpha: " + format_number(alpha_from_p(p)));
  lines.push_back("grid-n: " + std::to_string(o.grid_n));
  if (!o.mu0_spec.empty()) lines.push_back("mu0: " + o.mu0_spec);
  if (!o.mu1_spec.empty()) lines.push_back("mu1: " + o.mu1_spec);
  if (!o.vel_spec.empty()) lines.push_back("vel: " + o.vel_spec);
  return lines;
}

void write_tau_csv(const std::string& path, const TauTrajectory& traj,
                   const std::vector<std::string>& preamble) {
  write_columns_csv(path, {"t", "tau", "tau_dot"},
                    {traj.times, traj.tau, traj.tau_dot}, preamble);
}

int run_dens_geodesic(const CLI::App* cmd, const Common& o) {
  double p;
  GridPtr grid;
  DensityField mu0, mu1;
  try {
    p = pick_p(cmd, o, true);
    grid = make_interval_grid(o.grid_n);
    mu0 = load_density(grid, o.mu0_spec, "--mu0");
    mu1 = load_density(grid, o.mu1_spec, "--mu1");
    if (o.out.empty()) throw UsageError("--out is required");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  PathGrid path = geodesic_bvp_dens(mu0, mu1, p, frame_times(o.steps, 1.0));
  write_path_csv(o.out, path, run_preamble("dens-geodesic", p, o));
  return kExitOk;
}

int run_dens_exp(const CLI::App* cmd, const Common& o) {
  double p;
  GridPtr grid;
  DensityField mu0;
  TangentField a;
  try {
    p = pick_p(cmd, o, true);
    grid = make_interval_grid(o.grid_n);
    mu0 = load_density(grid, o.mu0_spec, "--mu0");
    a = load_velocity(grid, o.vel_spec, o.vel_scale);
    if (o.out.empty()) throw UsageError("--out is required");
    if (!(o.t_end > 0.0)) throw UsageError("--t-end must be positive");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  DensGeodesicResult res =
      geodesic_ivp_dens(mu0, a, p, frame_times(o.steps, o.t_end));
  std::vector<std::string> pre = run_preamble("dens-exp", p, o);
  if (std::isfinite(res.blowup_time))
    pre.push_back("blowup-time: " + format_number(res.blowup_time));
  write_path_csv(o.out, res.path, pre);
  if (res.left_space) {
    std::cerr << "geodesic left the density space at t = "
              << format_number(res.blowup_time) << "; partial path written\n";
    return kExitLeftSpace;
  }
  return kExitOk;
}

int run_distance(const CLI::App* cmd, const Common& o) {
  double p;
  GridPtr grid;
  DensityField mu0, mu1;
  try {
    p = pick_p(cmd, o, true);
    grid = make_interval_grid(o.grid_n);
    mu0 = load_density(grid, o.mu0_spec, "--mu0");
    mu1 = load_density(grid, o.mu1_spec, "--mu1");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const double d = distance_dens(mu0, mu1, p);
  std::cout << format_number(d) << "\n";
  if (!o.out.empty())
    write_columns_csv(o.out, {"p", "alpha", "distance"},
                      {{p}, {alpha_from_p(p)}, {d}},
                      run_preamble("distance", p, o));
  return kExitOk;
}

int run_prob_alpha(const CLI::App* cmd, const Common& o) {
  double p;
  GridPtr grid;
  DensityField mu0, mu1;
  TangentField a;
  bool bvp = false;
  try {
    p = pick_p(cmd, o, true);
    grid = make_interval_grid(o.grid_n);
    mu0 = load_density(grid, o.mu0_spec, "--mu0");
    const bool has_mu1 = !o.mu1_spec.empty();
    const bool has_vel = !o.vel_spec.empty();
    if (has_mu1 == has_vel)
      throw UsageError(
          "give exactly one of --mu1 (two-point problem) or --vel "
          "(initial-velocity problem)");
    bvp = has_mu1;
    if (bvp) {
      mu1 = load_density(grid, o.mu1_spec, "--mu1");
    } else {
      a = load_velocity(grid, o.vel_spec, o.vel_scale);
      // Probability tangents have zero mean; remove whatever the named mode
      // or file carried along the normal direction.
      const double mean = integrate(*grid, a.a);
      for (std::size_t i = 0; i < a.a.size(); ++i) a.a[i] -= mean * mu0.f[i];
    }
    if (o.out.empty()) throw UsageError("--out is required");
    if (!(o.t_end > 0.0)) throw UsageError("--t-end must be positive");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  DensGeodesicResult res;
  TauTrajectory traj;
  try {
    if (bvp)
      res = alpha_geodesic_prob_bvp(mu0, mu1, p, frame_times(o.steps, 1.0),
                                    &traj);
    else
      res = alpha_geodesic_prob_ivp(mu0, a, p, frame_times(o.steps, o.t_end),
                                    &traj);
  } catch (const std::exception& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return kExitSolver;
  }

  std::vector<std::string> pre = run_preamble("prob-alpha-geodesic", p, o);
  if (std::isfinite(res.blowup_time))
    pre.push_back("blowup-time: " + format_number(res.blowup_time));
  write_path_csv(o.out, res.path, pre);
  if (!o.tau_out.empty()) write_tau_csv(o.tau_out, traj, pre);
  if (res.left_space) {
    std::cerr << "geodesic left the probability simplex at t = "
              << format_number(res.blowup_time) << "; partial path written\n";
    return kExitLeftSpace;
  }
  return kExitOk;
}

int run_prob_lp(const CLI::App* cmd, const Common& o) {
  double p;
  GridPtr grid;
  DensityField mu0, mu1;
  LpGeodesicOptions opts;
  try {
    p = pick_p(cmd, o, true);
    grid = make_interval_grid(o.grid_n);
    mu0 = load_density(grid, o.mu0_spec, "--mu0");
    mu1 = load_density(grid, o.mu1_spec, "--mu1");
    if (o.out.empty()) throw UsageError("--out is required");
    if (o.steps < 3) throw UsageError("--steps must be at least 3");
    opts.time_points = static_cast<std::size_t>(o.steps);
    opts.tol = o.tol > 0.0 ? o.tol : 1e-8;
    if (o.max_iter < 1) throw UsageError("--max-iter must be positive");
    opts.max_iter = static_cast<std::size_t>(o.max_iter);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  LpGeodesicResult res;
  try {
    res = lp_geodesic_prob_bvp(mu0, mu1, p, opts);
  } catch (const std::exception& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return kExitSolver;
  }

  std::vector<std::string> pre = run_preamble("prob-lp-geodesic", p, o);
  pre.push_back("iterations: " + std::to_string(res.iterations));
  pre.push_back("final-energy: " + format_number(res.energy_trace.back()));
  write_path_csv(o.out, res.path, pre);
  if (!o.trace_out.empty()) {
    std::vector<double> iters(res.energy_trace.size());
    for (std::size_t k = 0; k < iters.size(); ++k)
      iters[k] = static_cast<double>(k);
    write_columns_csv(o.trace_out, {"iteration", "energy"},
                      {iters, res.energy_trace}, pre);
  }
  if (!res.nonpositive.empty())
    std::cerr << "note: " << res.nonpositive.size()
              << " frame nodes left the positive cone (flagged, not "
                 "clamped)\n";
  if (res.status == LpStatus::stalled) {
    std::cerr << "solver failure: energy stopped decreasing at the minimal "
                 "step; path written as-is\n";
    return kExitSolver;
  }
  if (res.status == LpStatus::max_iter_reached)
    std::cerr << "note: iteration limit " << opts.max_iter
              << " reached before the tolerance\n";
  return kExitOk;
}

ThetaState parse_theta(const std::string& spec, const char* flag) {
  const auto comma = spec.find(',');
  if (comma == std::string::npos)
    throw UsageError(std::string(flag) + " expects 'm,sigma'");
  ThetaState theta;
  try {
    std::size_t used = 0;
    theta.m = std::stod(spec.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(spec);
    const std::string rest = spec.substr(comma + 1);
    theta.sigma = std::stod(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(spec);
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + ": cannot parse '" + spec + "'");
  }
  if (!(theta.sigma > 0.0))
    throw UsageError(std::string(flag) + ": sigma must be positive");
  return theta;
}

int run_normal_geodesic(const CLI::App* cmd, const Common& o) {
  double p;
  bool use_lp = false;
  ThetaState theta0, theta1;
  try {
    p = pick_p(cmd, o, true);
    use_lp = cmd->count("--p") > 0;
    theta0 = parse_theta(o.theta0_spec, "--theta0");
    theta1 = parse_theta(o.theta1_spec, "--theta1");
    if (o.steps < 2) throw UsageError("--steps must be at least 2");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  NormalShootResult res;
  try {
    const double tol = o.tol > 0.0 ? o.tol : 1e-10;
    if (use_lp) {
      const NormalModel model = NormalModel::gauss_hermite();
      res = shoot_bvp(
          [&](const ThetaState& s) { return lp_geodesic_rhs(model, s, p); },
          theta0, theta1, o.steps, tol);
    } else {
      const double alpha = alpha_from_p(p);
      res = shoot_bvp(
          [&](const ThetaState& s) { return alpha_normal_rhs(s, alpha); },
          theta0, theta1, o.steps, tol);
    }
    if (!res.converged)
      throw std::runtime_error("shooting did not converge; best miss " +
                               format_number(res.miss) + " after " +
                               std::to_string(res.newton_iters) +
                               " Newton steps");
  } catch (const std::exception& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return kExitSolver;
  }

  if (!o.out.empty()) {
    std::vector<double> m, s, md, sd;
    for (const ThetaState& st : res.states) {
      m.push_back(st.m);
      s.push_back(st.sigma);
      md.push_back(st.m_dot);
      sd.push_back(st.sigma_dot);
    }
    std::vector<std::string> pre;
    pre.push_back("command: normal-geodesic");
    pre.push_back(std::string("metric: ") + (use_lp ? "lp" : "alpha"));
    pre.push_back("p: " + format_number(p));
    pre.push_back("alpha: " + format_number(alpha_from_p(p)));
    pre.push_back("theta0: " + o.theta0_spec);
    pre.push_back("theta1: " + o.theta1_spec);
    write_columns_csv(o.out, {"t", "m", "sigma", "m_dot", "sigma_dot"},
                      {res.times, m, s, md, sd}, pre);
  } else {
    const ThetaState& mid = res.states[res.states.size() / 2];
    std::cout << "converged in " << res.newton_iters
              << " Newton steps; midpoint m = " << format_number(mid.m)
              << ", sigma = " << format_number(mid.sigma) << "\n";
  }
  return kExitOk;
}

int run_check_tensors(const CLI::App* cmd, const Common& o) {
  std::vector<double> ps;
  GridPtr grid;
  try {
    if (cmd->count("--p") > 0 || cmd->count("--alpha") > 0)
      ps.push_back(pick_p(cmd, o, true));
    else
      ps = {1.5, 2.0, 3.0, 5.0};
    grid = make_interval_grid(o.grid_n);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::size_t n = grid->nodes.size();
  std::vector<double> fmu(n), fnu(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = grid->nodes[i];
    fmu[i] = 1.0 + 0.3 * std::sin(2.0 * M_PI * x) +
             0.2 * std::cos(4.0 * M_PI * x);
    fnu[i] = 1.0 + 0.5 * std::sin(2.0 * M_PI * x + 0.7);
  }
  const DensityField mu = make_density(grid, fmu);
  const TangentField nu = make_tangent(grid, fnu);

  // Deterministic trigonometric test fields.
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  auto random_field = [&]() {
    std::vector<double> v(n, 0.0);
    for (int k = 1; k <= 3; ++k) {
      const double ck = coef(rng), dk = coef(rng);
      for (std::size_t i = 0; i < n; ++i) {
        const double arg = 2.0 * M_PI * k * grid->nodes[i];
        v[i] += ck * std::sin(arg) + dk * std::cos(arg);
      }
    }
    return make_tangent(grid, std::move(v));
  };

  std::printf("%-8s %-6s %-14s\n", "tensor", "p", "max_rel_err");
  for (double p : ps) {
    const TensorContext ctx = make_tensor_context(mu, nu, p);
    double hess_err = 0.0, cartan_err = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      const TangentField a = random_field();
      const TangentField b = random_field();
      const TangentField c = random_field();
      const double g_cf = hessian_g(ctx, a, b);
      const double g_fd = hessian_fd(mu, nu, a, b, p);
      hess_err = std::max(hess_err, std::fabs(g_cf - g_fd) /
                                        std::max(std::fabs(g_cf),
                                                 std::fabs(g_fd)));
      const double c_cf = cartan_C(ctx, a, b, c);
      const double c_fd = cartan_fd(mu, nu, a, b, c, p);
      const double scale =
          std::max({std::fabs(c_cf), std::fabs(c_fd), 1e-6});
      cartan_err = std::max(cartan_err, std::fabs(c_cf - c_fd) / scale);
    }
    std::printf("%-8s %-6g %-14.3e\n", "hessian", p, hess_err);
    std::printf("%-8s %-6g %-14.3e\n", "cartan", p, cartan_err);
  }
  return kExitOk;
}

int run_figure(int figure, const CLI::App* root, const Common& o) {
  double p;
  try {
    p = pick_p(root, o, false);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::string prefix = o.out.empty() ? ("fig" + std::to_string(figure)) : o.out;
  if (prefix.size() > 4 && prefix.substr(prefix.size() - 4) == ".csv")
    prefix = prefix.substr(0, prefix.size() - 4);

  if (figure == 2) {
    // Two-bump pair, all three geodesic notions on the documented
    // 30-frame/100-node discretization.
    Common fig = o;
    fig.mu0_spec = "bump(0.33,0.10)";
    fig.mu1_spec = "bump(0.67,0.10)";
    const int frames = fig.steps > 0 ? fig.steps : 30;
    GridPtr grid;
    DensityField mu0, mu1;
    std::vector<double> times;
    try {
      grid = make_interval_grid(fig.grid_n);
      mu0 = load_density(grid, fig.mu0_spec, "--mu0");
      mu1 = load_density(grid, fig.mu1_spec, "--mu1");
      times = frame_times(frames, 1.0);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    try {
      DensGeodesicResult alpha_res =
          alpha_geodesic_prob_bvp(mu0, mu1, p, times, nullptr);
      write_path_csv(prefix + "_alpha.csv", alpha_res.path,
                     run_preamble("prob-alpha-geodesic", p, fig));

      LpGeodesicOptions opts;
      opts.time_points = static_cast<std::size_t>(frames);
      LpGeodesicResult lp_res = lp_geodesic_prob_bvp(mu0, mu1, p, opts);
      if (lp_res.status == LpStatus::stalled)
        throw std::runtime_error("p-energy minimizer stalled");
      write_path_csv(prefix + "_lp.csv", lp_res.path,
                     run_preamble("prob-lp-geodesic", p, fig));

      PathGrid dens = geodesic_bvp_dens(mu0, mu1, p, times);
      write_path_csv(prefix + "_dens.csv", dens,
                     run_preamble("dens-geodesic", p, fig));
    } catch (const std::exception& e) {
      std::cerr << "solver failure: " << e.what() << "\n";
      return kExitSolver;
    }
    std::cout << "wrote " << prefix << "_alpha.csv, " << prefix
              << "_lp.csv, " << prefix << "_dens.csv\n";
    return kExitOk;
  }

  // Figure 3: normal-family two-point problem, L^p versus alpha trajectory.
  const int steps = o.steps > 0 ? o.steps : 50;
  const ThetaState theta0{-2.0, 1.0, 0.0, 0.0};
  const ThetaState theta1{2.0, 1.0, 0.0, 0.0};
  try {
    const NormalModel model = NormalModel::gauss_hermite();
    const NormalShootResult lp_res = shoot_bvp(
        [&](const ThetaState& s) { return lp_geodesic_rhs(model, s, p); },
        theta0, theta1, steps);
    const double alpha = alpha_from_p(p);
    const NormalShootResult al_res = shoot_bvp(
        [&](const ThetaState& s) { return alpha_normal_rhs(s, alpha); },
        theta0, theta1, steps);
    if (!lp_res.converged || !al_res.converged)
      throw std::runtime_error("shooting did not converge on figure data");
    auto dump = [&](const NormalShootResult& res, const std::string& path,
                    const char* metric) {
      std::vector<double> m, s, md, sd;
      for (const ThetaState& st : res.states) {
        m.push_back(st.m);
        s.push_back(st.sigma);
        md.push_back(st.m_dot);
        sd.push_back(st.sigma_dot);
      }
      std::vector<std::string> pre;
      pre.push_back("command: normal-geodesic");
      pre.push_back(std::string("metric: ") + metric);
      pre.push_back("p: " + format_number(p));
      pre.push_back("alpha: " + format_number(alpha_from_p(p)));
      pre.push_back("theta0: -2,1");
      pre.push_back("theta1: 2,1");
      write_columns_csv(path, {"t", "m", "sigma", "m_dot", "sigma_dot"},
                        {res.times, m, s, md, sd}, pre);
    };
    dump(lp_res, prefix + "_lp.csv", "lp");
    dump(al_res, prefix + "_alpha.csv", "alpha");
  } catch (const std::exception& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return kExitSolver;
  }
  std::cout << "wrote " << prefix << "_lp.csv, " << prefix << "_alpha.csv\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Geodesics, distances and tensors of the L^p-Fisher-Rao geometry on "
      "densities over [0,1]"};
  app.require_subcommand(0, 1);

  bool serial = false;
  app.add_flag("--serial", serial,
               "run all kernels through the serial reference implementation");

  int figure = 0;
  Common fig_o;
  app.add_option("--figure", figure,
                 "write the plot data for a documented figure (2 or 3)")
      ->check(CLI::IsMember({2, 3}));
  add_p_alpha(&app, fig_o);
  app.add_option("--out", fig_o.out, "output file or prefix");
  app.add_option("--grid-n", fig_o.grid_n, "grid size (default 100)");
  app.add_option("--steps", fig_o.steps, "time discretization");

  Common o_geo;
  CLI::App* c_geo = app.add_subcommand(
      "dens-geodesic", "closed-form geodesic between two densities");
  add_p_alpha(c_geo, o_geo);
  c_geo->add_option("--mu0", o_geo.mu0_spec, "start density")->required();
  c_geo->add_option("--mu1", o_geo.mu1_spec, "end density")->required();
  c_geo->add_option("--grid-n", o_geo.grid_n, "grid size (default 100)");
  o_geo.steps = 30;
  c_geo->add_option("--steps", o_geo.steps, "number of frames (default 30)");
  c_geo->add_option("--out", o_geo.out, "path CSV output")->required();

  Common o_exp;
  CLI::App* c_exp = app.add_subcommand(
      "dens-exp", "exponential map: geodesic from a density and a velocity");
  add_p_alpha(c_exp, o_exp);
  c_exp->add_option("--mu0", o_exp.mu0_spec, "start density")->required();
  c_exp->add_option("--vel", o_exp.vel_spec,
                    "velocity: sinmode:k, cosmode:k, or a CSV file")
      ->required();
  c_exp->add_option("--vel-scale", o_exp.vel_scale, "velocity scale factor");
  c_exp->add_option("--t-end", o_exp.t_end, "final time (default 1)");
  c_exp->add_option("--grid-n", o_exp.grid_n, "grid size (default 100)");
  o_exp.steps = 30;
  c_exp->add_option("--steps", o_exp.steps, "number of frames (default 30)");
  c_exp->add_option("--out", o_exp.out, "path CSV output")->required();

  Common o_dist;
  CLI::App* c_dist = app.add_subcommand(
      "distance", "geodesic distance between two densities");
  add_p_alpha(c_dist, o_dist);
  c_dist->add_option("--mu0", o_dist.mu0_spec, "first density")->required();
  c_dist->add_option("--mu1", o_dist.mu1_spec, "second density")->required();
  c_dist->add_option("--grid-n", o_dist.grid_n, "grid size (default 100)");
  c_dist->add_option("--out", o_dist.out, "optional CSV output");

  Common o_pa;
  CLI::App* c_pa = app.add_subcommand(
      "prob-alpha-geodesic",
      "alpha-connection geodesic on probability densities");
  add_p_alpha(c_pa, o_pa);
  c_pa->add_option("--mu0", o_pa.mu0_spec, "start density")->required();
  c_pa->add_option("--mu1", o_pa.mu1_spec, "end density (two-point problem)");
  c_pa->add_option("--vel", o_pa.vel_spec,
                   "initial velocity (initial-value problem)");
  c_pa->add_option("--vel-scale", o_pa.vel_scale, "velocity scale factor");
  c_pa->add_option("--t-end", o_pa.t_end,
                   "final time for the initial-value problem (default 1)");
  c_pa->add_option("--grid-n", o_pa.grid_n, "grid size (default 100)");
  o_pa.steps = 30;
  c_pa->add_option("--steps", o_pa.steps, "number of frames (default 30)");
  c_pa->add_option("--out", o_pa.out, "path CSV output")->required();
  c_pa->add_option("--tau-out", o_pa.tau_out,
                   "optional CSV with the tau reparametrization");

  Common o_lp;
  CLI::App* c_lp = app.add_subcommand(
      "prob-lp-geodesic",
      "L^p-Fisher-Rao geodesic on probability densities by energy "
      "minimization");
  add_p_alpha(c_lp, o_lp);
  c_lp->add_option("--mu0", o_lp.mu0_spec, "start density")->required();
  c_lp->add_option("--mu1", o_lp.mu1_spec, "end density")->required();
  c_lp->add_option("--grid-n", o_lp.grid_n, "grid size (default 100)");
  o_lp.steps = 30;
  c_lp->add_option("--steps", o_lp.steps, "number of frames (default 30)");
  c_lp->add_option("--tol", o_lp.tol,
                   "relative energy decrease tolerance (default 1e-8)");
  c_lp->add_option("--max-iter", o_lp.max_iter,
                   "iteration limit (default 20000)");
  c_lp->add_option("--out", o_lp.out, "path CSV output")->required();
  c_lp->add_option("--trace-out", o_lp.trace_out,
                   "optional CSV with the energy trace");

  Common o_ng;
  CLI::App* c_ng = app.add_subcommand(
      "normal-geodesic", "two-point geodesic in the normal family N(m, s^2)");
  add_p_alpha(c_ng, o_ng);
  c_ng->add_option("--theta0", o_ng.theta0_spec, "start point 'm,sigma'")
      ->required();
  c_ng->add_option("--theta1", o_ng.theta1_spec, "end point 'm,sigma'")
      ->required();
  o_ng.steps = 50;
  c_ng->add_option("--steps", o_ng.steps,
                   "RK4 integration steps (default 50)");
  c_ng->add_option("--tol", o_ng.tol, "endpoint tolerance (default 1e-10)");
  c_ng->add_option("--out", o_ng.out, "trajectory CSV output");

  Common o_ct;
  CLI::App* c_ct = app.add_subcommand(
      "check-tensors",
      "validate tensor evaluators against finite-difference oracles");
  add_p_alpha(c_ct, o_ct);
  c_ct->add_option("--grid-n", o_ct.grid_n, "grid size (default 100)");

  for (CLI::App* sub : {c_geo, c_exp, c_dist, c_pa, c_lp, c_ng, c_ct})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (serial) exec::set_mode(exec::Mode::Serial);

  try {
    if (figure != 0) return run_figure(figure, &app, fig_o);
    if (c_geo->parsed()) return run_dens_geodesic(c_geo, o_geo);
    if (c_exp->parsed()) return run_dens_exp(c_exp, o_exp);
    if (c_dist->parsed()) return run_distance(c_dist, o_dist);
    if (c_pa->parsed()) return run_prob_alpha(c_pa, o_pa);
    if (c_lp->parsed()) return run_prob_lp(c_lp, o_lp);
    if (c_ng->parsed()) return run_normal_geodesic(c_ng, o_ng);
    if (c_ct->parsed()) return run_check_tensors(c_ct, o_ct);
  } catch (const std::exception& e) {
    // Solver failures are mapped inside the handlers; anything escaping to
    // here is an input or output problem.
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::cerr << "no command given; see --help\n";
  return kExitUsage;
}
