#include "jctriangle/fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace jct {

ScalingFit fit_scaling(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("x/y size mismatch");
  if (x.size() < 8) throw std::invalid_argument("scaling fit needs at least 8 samples");

  const std::size_t n = x.size();
  std::vector<double> lx(n), ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(x[i] > 0.0)) throw std::invalid_argument("scaling fit needs x > 0");
    const double ay = std::abs(y[i]);
    if (!(ay > 0.0)) throw std::invalid_argument("scaling fit needs |y| > 0");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(ay);
  }

  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;

  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("scaling fit needs spread in x");

  ScalingFit f;
  f.exponent = sxy / sxx;
  f.log_prefactor = my - f.exponent * mx;
  f.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  f.x_min = *std::min_element(x.begin(), x.end());
  f.x_max = *std::max_element(x.begin(), x.end());
  return f;
}

}  // namespace jct
