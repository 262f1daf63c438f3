#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "monometric/error.hpp"

namespace monometric {

struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 200;

  void validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_subdivisions < 1)
      throw Error(ErrorKind::InvalidArgument, "quadrature tolerances must be > 0 and cap >= 1");
  }

  /// Defaults, with abs_tol overridden by MONOMETRIC_QUAD_TOL when set.
  static QuadratureConfig from_env();
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
};

namespace detail {

// Kronrod 15-point abscissae/weights with the embedded 7-point Gauss rule
// (QUADPACK qk15 tables).
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

template <class F>
Segment gauss_kronrod_15(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double eps = std::numeric_limits<double>::epsilon();

  std::array<double, 15> fx{};
  fx[7] = f(center);
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    fx[i] = f(center - dx);
    fx[14 - i] = f(center + dx);
  }

  double kronrod = kKronrodWeights[7] * fx[7];
  double gauss = kGaussWeights[3] * fx[7];
  double abs_sum = std::abs(kronrod);
  for (std::size_t i = 0; i < 7; ++i) {
    const double pair = fx[i] + fx[14 - i];
    kronrod += kKronrodWeights[i] * pair;
    abs_sum += kKronrodWeights[i] * (std::abs(fx[i]) + std::abs(fx[14 - i]));
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  const double mean = 0.5 * kronrod;
  double asc = kKronrodWeights[7] * std::abs(fx[7] - mean);
  for (std::size_t i = 0; i < 7; ++i)
    asc += kKronrodWeights[i] * (std::abs(fx[i] - mean) + std::abs(fx[14 - i] - mean));

  const double scale = std::abs(half);
  double error = std::abs((kronrod - gauss) * half);
  asc *= scale;
  abs_sum *= scale;
  if (asc != 0.0 && error != 0.0)
    error = asc * std::min(1.0, std::pow(200.0 * error / asc, 1.5));
  if (abs_sum > std::numeric_limits<double>::min() / (50.0 * eps))
    error = std::max(50.0 * eps * abs_sum, error);
  return {a, b, kronrod * half, error};
}

}  // namespace detail

/// Globally adaptive 7/15 Gauss-Kronrod on [a, b]: bisects the interval with
/// the largest error estimate until the total estimate is within
/// max(abs_tol, rel_tol * |I|). Throws QuadratureFailure when the interval
/// cap is reached first or the integrand is not finite.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, const QuadratureConfig& config) {
  if (a == b) return {0.0, 0.0, 0};
  std::priority_queue<detail::Segment> heap;
  heap.push(detail::gauss_kronrod_15(f, a, b));
  double total = heap.top().value;
  double error = heap.top().error;
  int intervals = 1;

  auto within_tolerance = [&] {
    return error <= std::max(config.abs_tol, config.rel_tol * std::abs(total));
  };
  while (!within_tolerance()) {
    if (!std::isfinite(total))
      throw Error(ErrorKind::QuadratureFailure, "integrand not finite on the interval");
    if (intervals >= config.max_subdivisions)
      throw Error(ErrorKind::QuadratureFailure,
                  "error estimate " + std::to_string(error) + " above tolerance after " +
                      std::to_string(intervals) + " intervals");
    const detail::Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const detail::Segment left = detail::gauss_kronrod_15(f, worst.a, mid);
    const detail::Segment right = detail::gauss_kronrod_15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++intervals;
  }
  // Re-sum to shed the drift from incremental updates.
  double value = 0.0;
  double err = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  if (!std::isfinite(value))
    throw Error(ErrorKind::QuadratureFailure, "integrand not finite on the interval");
  return {value, err, intervals};
}

}  // namespace monometric
