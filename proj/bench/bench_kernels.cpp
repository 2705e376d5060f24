// Serial reference vs OpenMP kernels over the grid sizes the solvers
// actually use. Path kernels run with 30 frames, matching the default
// time discretization.

#include <benchmark/benchmark.h>

#include <cstddef>
#include <random>
#include <vector>

#include "lpfr/kernels.hpp"

namespace {

constexpr std::size_t kFrames = 30;

struct Fields {
  std::vector<double> w, f, nu, a, b, c, d, xi, G, out;

  explicit Fields(std::size_t n) {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> pos(0.5, 1.5);
    std::uniform_real_distribution<double> any(-1.0, 1.0);
    auto fill_pos = [&](std::vector<double>& v) {
      v.resize(n);
      for (double& x : v) x = pos(rng);
    };
    auto fill_any = [&](std::vector<double>& v) {
      v.resize(n);
      for (double& x : v) x = any(rng);
    };
    fill_pos(w);
    double s = 0.0;
    for (double x : w) s += x;
    for (double& x : w) x /= s;
    fill_pos(f);
    fill_pos(nu);
    fill_any(a);
    fill_any(b);
    fill_any(c);
    fill_any(d);
    fill_any(xi);
    G.resize(kFrames * n);
    for (double& x : G) x = pos(rng);
    out.resize(kFrames * n);
  }
};

void bm_fp_power_sum_serial(benchmark::State& state) {
  Fields fx(state.range(0));
  const std::size_t n = fx.f.size();
  for (auto _ : state)
    benchmark::DoNotOptimize(lpfr::kernels::fp_power_sum_serial(
        fx.w.data(), fx.f.data(), fx.a.data(), n, 3.0));
}

void bm_fp_power_sum_omp(benchmark::State& state) {
  Fields fx(state.range(0));
  const std::size_t n = fx.f.size();
  for (auto _ : state)
    benchmark::DoNotOptimize(lpfr::kernels::fp_power_sum_omp(
        fx.w.data(), fx.f.data(), fx.a.data(), n, 3.0));
}

void bm_ratio4_sum_serial(benchmark::State& state) {
  Fields fx(state.range(0));
  const std::size_t n = fx.f.size();
  for (auto _ : state)
    benchmark::DoNotOptimize(lpfr::kernels::ratio4_sum_serial(
        fx.w.data(), fx.f.data(), fx.nu.data(), fx.a.data(), fx.b.data(),
        fx.c.data(), fx.d.data(), n, -1.0));
}

void bm_ratio4_sum_omp(benchmark::State& state) {
  Fields fx(state.range(0));
  const std::size_t n = fx.f.size();
  for (auto _ : state)
    benchmark::DoNotOptimize(lpfr::kernels::ratio4_sum_omp(
        fx.w.data(), fx.f.data(), fx.nu.data(), fx.a.data(), fx.b.data(),
        fx.c.data(), fx.d.data(), n, -1.0));
}

void bm_line_pow_serial(benchmark::State& state) {
  Fields fx(state.range(0));
  const std::size_t n = fx.f.size();
  for (auto _ : state) {
    lpfr::kernels::line_pow_serial(fx.f.data(), fx.xi.data(), n, 0.37, 3.0,
                                   fx.out.data());
    benchmark::DoNotOptimize(fx.out.data());
  }
}

void bm_line_pow_omp(benchmark::State& state) {
  Fields fx(state.range(0));
  const std::size_t n = fx.f.size();
  for (auto _ : state) {
    lpfr::kernels::line_pow_omp(fx.f.data(), fx.xi.data(), n, 0.37, 3.0,
                                fx.out.data());
    benchmark::DoNotOptimize(fx.out.data());
  }
}

void bm_path_energy_serial(benchmark::State& state) {
  Fields fx(state.range(0));
  const std::size_t n = fx.f.size();
  for (auto _ : state)
    benchmark::DoNotOptimize(lpfr::kernels::path_energy_serial(
        fx.w.data(), fx.G.data(), kFrames, n, 3.0, 1.0 / (kFrames - 1)));
}

void bm_path_energy_omp(benchmark::State& state) {
  Fields fx(state.range(0));
  const std::size_t n = fx.f.size();
  for (auto _ : state)
    benchmark::DoNotOptimize(lpfr::kernels::path_energy_omp(
        fx.w.data(), fx.G.data(), kFrames, n, 3.0, 1.0 / (kFrames - 1)));
}

void bm_path_gradient_serial(benchmark::State& state) {
  Fields fx(state.range(0));
  const std::size_t n = fx.f.size();
  for (auto _ : state) {
    lpfr::kernels::path_gradient_serial(fx.w.data(), fx.G.data(), kFrames, n,
                                        3.0, 1.0 / (kFrames - 1),
                                        fx.out.data());
    benchmark::DoNotOptimize(fx.out.data());
  }
}

void bm_path_gradient_omp(benchmark::State& state) {
  Fields fx(state.range(0));
  const std::size_t n = fx.f.size();
  for (auto _ : state) {
    lpfr::kernels::path_gradient_omp(fx.w.data(), fx.G.data(), kFrames, n,
                                     3.0, 1.0 / (kFrames - 1), fx.out.data());
    benchmark::DoNotOptimize(fx.out.data());
  }
}

void bm_project_frames_serial(benchmark::State& state) {
  Fields fx(state.range(0));
  const std::size_t n = fx.f.size();
  for (auto _ : state) {
    fx.out = fx.G;
    lpfr::kernels::project_frames_serial(fx.w.data(), fx.out.data(), kFrames,
                                         n, 3.0);
    benchmark::DoNotOptimize(fx.out.data());
  }
}

void bm_project_frames_omp(benchmark::State& state) {
  Fields fx(state.range(0));
  const std::size_t n = fx.f.size();
  for (auto _ : state) {
    fx.out = fx.G;
    lpfr::kernels::project_frames_omp(fx.w.data(), fx.out.data(), kFrames, n,
                                      3.0);
    benchmark::DoNotOptimize(fx.out.data());
  }
}

void grid_sizes(benchmark::internal::Benchmark* b) {
  b->Arg(100)->Arg(400)->Arg(1600)->Arg(6400);
}

BENCHMARK(bm_fp_power_sum_serial)->Apply(grid_sizes);
BENCHMARK(bm_fp_power_sum_omp)->Apply(grid_sizes);
BENCHMARK(bm_ratio4_sum_serial)->Apply(grid_sizes);
BENCHMARK(bm_ratio4_sum_omp)->Apply(grid_sizes);
BENCHMARK(bm_line_pow_serial)->Apply(grid_sizes);
BENCHMARK(bm_line_pow_omp)->Apply(grid_sizes);
BENCHMARK(bm_path_energy_serial)->Apply(grid_sizes);
BENCHMARK(bm_path_energy_omp)->Apply(grid_sizes);
BENCHMARK(bm_path_gradient_serial)->Apply(grid_sizes);
BENCHMARK(bm_path_gradient_omp)->Apply(grid_sizes);
BENCHMARK(bm_project_frames_serial)->Apply(grid_sizes);
BENCHMARK(bm_project_frames_omp)->Apply(grid_sizes);

}  // namespace

BENCHMARK_MAIN();
