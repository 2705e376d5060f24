#pragma once

#include <vector>

// Shape-preserving cubic Hermite interpolation (Fritsch-Carlson slopes,
// PCHIM variant). Monotone data produce a monotone interpolant, which is what
// keeps resampled densities positive.

namespace lpfr {

class MonotoneCubic {
public:
  // Interval data: x strictly increasing, at least 2 points. Evaluation
  // outside [x.front(), x.back()] clamps to the boundary value.
  MonotoneCubic(std::vector<double> x, std::vector<double> y);

  // Periodic data with the given period: x strictly increasing within one
  // period; the sample set is extended by wrapping before slope fitting.
  static MonotoneCubic periodic(const std::vector<double>& x,
                                const std::vector<double>& y, double period);

  double operator()(double q) const;

private:
  MonotoneCubic() = default;
  void fit_slopes();

  std::vector<double> x_, y_, d_;
  bool periodic_ = false;
  double period_ = 0.0;
};

}  // namespace lpfr
