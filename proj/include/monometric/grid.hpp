#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace monometric {

inline std::vector<double> linear_grid(double lo, double hi, std::size_t n) {
  if (n == 1) return {lo};
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  out.back() = hi;
  return out;
}

/// n points log-spaced on [lo, hi], endpoints exact.
inline std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  std::vector<double> out = linear_grid(std::log(lo), std::log(hi), n);
  for (double& x : out) x = std::exp(x);
  out.front() = lo;
  out.back() = hi;
  return out;
}

}  // namespace monometric
