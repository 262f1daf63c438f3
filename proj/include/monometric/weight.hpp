#pragma once

#include <span>
#include <vector>

namespace monometric {

/// Piecewise-constant h : [0,1] -> [0,1]. Interval k is
/// [breakpoints[k], breakpoints[k+1]) with value values[k]; the last
/// interval is closed at 1.
class WeightFunction {
 public:
  /// Throws InvalidArgument unless breakpoints run strictly increasing from
  /// 0 to 1, there is one value per interval, and every value lies in [0,1].
  WeightFunction(std::vector<double> breakpoints, std::vector<double> values);

  static WeightFunction constant(double value);

  double operator()(double lambda) const;

  std::span<const double> breakpoints() const noexcept { return breakpoints_; }
  std::span<const double> values() const noexcept { return values_; }
  std::size_t interval_count() const noexcept { return values_.size(); }

  /// s*h + (1-s)*g on the common refinement of both partitions.
  static WeightFunction mix(double s, const WeightFunction& h, const WeightFunction& g);

  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

/// True if h <= g everywhere (checked on the common refinement).
bool pointwise_leq(const WeightFunction& h, const WeightFunction& g);

/// Piecewise-constant weight on (-inf, 0]. breakpoints start at -inf and end
/// at 0; values[k] holds on [breakpoints[k], breakpoints[k+1]).
struct ExtendedWeight {
  std::vector<double> breakpoints;
  std::vector<double> values;

  double operator()(double lambda) const;
};

/// Reflects h to [-1,0] by h(-l) = h(l), then continues to (-inf,-1) by the
/// duality h(1/l) = 1 - h(l).
ExtendedWeight extend_weight(const WeightFunction& h);

}  // namespace monometric
