#pragma once

#include <vector>

namespace jct {

struct ScalingFit {
  double exponent;       // slope of ln|y| vs ln(x)
  double log_prefactor;  // intercept
  double r_squared;
  double x_min, x_max;   // fit window
};

// Least-squares line through (ln x_i, ln |y_i|). Requires at least 8 samples,
// all x > 0 and |y| > 0 (std::invalid_argument otherwise).
ScalingFit fit_scaling(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace jct
