#pragma once

#include <array>
#include <cstddef>

// Classical fixed-step Runge-Kutta on small autonomous-or-not systems.

namespace lpfr {

template <std::size_t N, class Rhs>
std::array<double, N> rk4_step(const std::array<double, N>& y, double t,
                               double dt, Rhs&& rhs) {
  const std::array<double, N> k1 = rhs(t, y);
  std::array<double, N> tmp;
  for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * dt * k1[i];
  const std::array<double, N> k2 = rhs(t + 0.5 * dt, tmp);
  for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * dt * k2[i];
  const std::array<double, N> k3 = rhs(t + 0.5 * dt, tmp);
  for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + dt * k3[i];
  const std::array<double, N> k4 = rhs(t + dt, tmp);
  std::array<double, N> out;
  for (std::size_t i = 0; i < N; ++i)
    out[i] = y[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

}  // namespace lpfr
