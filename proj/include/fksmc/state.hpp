#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace fksmc {

// A point in sample space: x_t, x_0 or a Tweedie estimate x_{0|t}.
using StateVector = std::vector<double>;

inline bool all_finite(const StateVector& x) {
  for (double v : x) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

inline double squared_distance(const StateVector& a, const StateVector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

}  // namespace fksmc
