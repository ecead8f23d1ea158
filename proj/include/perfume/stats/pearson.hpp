#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace perfume {

class StatsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Product-moment correlation over two equally long, non-constant series.
// The result is clamped to [-1, 1]; floating-point overshoot beyond that
// range stays below 1e-12 for the centered two-pass evaluation used here.
inline double pearson(const std::vector<double>& xs,
                      const std::vector<double>& ys) {
  if (xs.size() != ys.size())
    throw StatsError("pearson: series lengths differ (" +
                     std::to_string(xs.size()) + " vs " +
                     std::to_string(ys.size()) + ")");
  const std::size_t n = xs.size();
  if (n < 2) throw StatsError("pearson: need at least 2 samples");

  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);

  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mean_x;
    const double dy = ys[i] - mean_y;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0) throw StatsError("pearson: first series is constant");
  if (syy == 0.0) throw StatsError("pearson: second series is constant");

  double r = sxy / std::sqrt(sxx * syy);
  if (r > 1.0) r = 1.0;
  if (r < -1.0) r = -1.0;
  return r;
}

}  // namespace perfume
