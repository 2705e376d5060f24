#include "lpfr/interp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lpfr {

namespace {

inline double sgn(double v) { return (v > 0.0) - (v < 0.0); }

// Non-centered three-point end slope with the standard monotonicity clips.
double edge_slope(double h0, double h1, double s0, double s1) {
  double d = ((2.0 * h0 + h1) * s0 - h0 * s1) / (h0 + h1);
  if (sgn(d) != sgn(s0))
    d = 0.0;
  else if (sgn(s0) != sgn(s1) && std::fabs(d) > 3.0 * std::fabs(s0))
    d = 3.0 * s0;
  return d;
}

}  // namespace

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  if (x_.size() != y_.size() || x_.size() < 2)
    throw std::invalid_argument("interpolation needs matching arrays, >= 2 points");
  for (std::size_t i = 1; i < x_.size(); ++i)
    if (!(x_[i] > x_[i - 1]))
      throw std::invalid_argument("interpolation abscissae must increase");
  fit_slopes();
}

void MonotoneCubic::fit_slopes() {
  const std::size_t n = x_.size();
  d_.assign(n, 0.0);
  if (n == 2) {
    d_[0] = d_[1] = (y_[1] - y_[0]) / (x_[1] - x_[0]);
    return;
  }
  std::vector<double> h(n - 1), s(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    h[k] = x_[k + 1] - x_[k];
    s[k] = (y_[k + 1] - y_[k]) / h[k];
  }
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (s[k - 1] * s[k] <= 0.0) {
      d_[k] = 0.0;
    } else {
      const double w1 = 2.0 * h[k] + h[k - 1];
      const double w2 = h[k] + 2.0 * h[k - 1];
      d_[k] = (w1 + w2) / (w1 / s[k - 1] + w2 / s[k]);
    }
  }
  d_[0] = edge_slope(h[0], h[1], s[0], s[1]);
  d_[n - 1] = edge_slope(h[n - 2], h[n - 3], s[n - 2], s[n - 3]);
}

MonotoneCubic MonotoneCubic::periodic(const std::vector<double>& x,
                                      const std::vector<double>& y,
                                      double period) {
  if (x.size() != y.size() || x.size() < 4)
    throw std::invalid_argument("periodic interpolation needs >= 4 points");
  if (!(period > 0.0)) throw std::invalid_argument("period must be positive");
  const std::size_t n = x.size();
  const std::size_t pad = 3;
  std::vector<double> xs, ys;
  xs.reserve(n + 2 * pad);
  ys.reserve(n + 2 * pad);
  for (std::size_t j = 0; j < pad; ++j) {
    xs.push_back(x[n - pad + j] - period);
    ys.push_back(y[n - pad + j]);
  }
  xs.insert(xs.end(), x.begin(), x.end());
  ys.insert(ys.end(), y.begin(), y.end());
  for (std::size_t j = 0; j < pad; ++j) {
    xs.push_back(x[j] + period);
    ys.push_back(y[j]);
  }
  MonotoneCubic out(std::move(xs), std::move(ys));
  out.periodic_ = true;
  out.period_ = period;
  return out;
}

double MonotoneCubic::operator()(double q) const {
  if (periodic_) {
    q -= period_ * std::floor(q / period_);
  } else {
    if (q <= x_.front()) return y_.front();
    if (q >= x_.back()) return y_.back();
  }
  const auto it = std::upper_bound(x_.begin(), x_.end(), q);
  const std::size_t k = (it == x_.begin()) ? 0 : (it - x_.begin() - 1);
  const std::size_t kk = std::min(k, x_.size() - 2);
  const double h = x_[kk + 1] - x_[kk];
  const double t = (q - x_[kk]) / h;
  const double t2 = t * t, t3 = t2 * t;
  return (2.0 * t3 - 3.0 * t2 + 1.0) * y_[kk] + (t3 - 2.0 * t2 + t) * h * d_[kk] +
         (-2.0 * t3 + 3.0 * t2) * y_[kk + 1] + (t3 - t2) * h * d_[kk + 1];
}

}  // namespace lpfr
