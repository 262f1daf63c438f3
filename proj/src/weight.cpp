#include "monometric/weight.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "monometric/error.hpp"

namespace monometric {

WeightFunction::WeightFunction(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.size() < 2 || breakpoints_.front() != 0.0 || breakpoints_.back() != 1.0)
    throw Error(ErrorKind::InvalidArgument, "weight breakpoints must start at 0 and end at 1");
  for (std::size_t k = 0; k + 1 < breakpoints_.size(); ++k)
    if (!(breakpoints_[k] < breakpoints_[k + 1]))
      throw Error(ErrorKind::InvalidArgument, "weight breakpoints must be strictly increasing");
  if (values_.size() + 1 != breakpoints_.size())
    throw Error(ErrorKind::InvalidArgument,
                "expected " + std::to_string(breakpoints_.size() - 1) + " weight values, got " +
                    std::to_string(values_.size()));
  for (double v : values_)
    if (!(v >= 0.0 && v <= 1.0))
      throw Error(ErrorKind::InvalidArgument, "weight value outside [0,1]: " + std::to_string(v));
}

WeightFunction WeightFunction::constant(double value) { return WeightFunction({0.0, 1.0}, {value}); }

double WeightFunction::operator()(double lambda) const {
  if (lambda < 0.0 || lambda > 1.0)
    throw Error(ErrorKind::DomainError, "weight evaluated outside [0,1]");
  const auto it = std::upper_bound(breakpoints_.begin() + 1, breakpoints_.end() - 1, lambda);
  return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

namespace {

std::vector<double> merged_breakpoints(const WeightFunction& h, const WeightFunction& g) {
  std::vector<double> out;
  std::set_union(h.breakpoints().begin(), h.breakpoints().end(), g.breakpoints().begin(),
                 g.breakpoints().end(), std::back_inserter(out));
  return out;
}

}  // namespace

WeightFunction WeightFunction::mix(double s, const WeightFunction& h, const WeightFunction& g) {
  if (!(s >= 0.0 && s <= 1.0)) throw Error(ErrorKind::InvalidArgument, "mixing weight outside [0,1]");
  std::vector<double> points = merged_breakpoints(h, g);
  std::vector<double> values;
  values.reserve(points.size() - 1);
  for (std::size_t k = 0; k + 1 < points.size(); ++k) {
    const double mid = 0.5 * (points[k] + points[k + 1]);
    values.push_back(std::clamp(s * h(mid) + (1.0 - s) * g(mid), 0.0, 1.0));
  }
  return WeightFunction(std::move(points), std::move(values));
}

bool pointwise_leq(const WeightFunction& h, const WeightFunction& g) {
  const std::vector<double> points = merged_breakpoints(h, g);
  for (std::size_t k = 0; k + 1 < points.size(); ++k) {
    const double mid = 0.5 * (points[k] + points[k + 1]);
    if (h(mid) > g(mid)) return false;
  }
  return true;
}

double ExtendedWeight::operator()(double lambda) const {
  if (!(lambda <= 0.0)) throw Error(ErrorKind::DomainError, "extended weight lives on (-inf, 0]");
  const auto it = std::upper_bound(breakpoints.begin() + 1, breakpoints.end() - 1, lambda);
  return values[static_cast<std::size_t>(it - breakpoints.begin()) - 1];
}

ExtendedWeight extend_weight(const WeightFunction& h) {
  const auto b = h.breakpoints();
  const auto v = h.values();
  const std::size_t count = v.size();

  ExtendedWeight out;
  out.breakpoints.reserve(2 * count + 1);
  out.values.reserve(2 * count);

  // (-inf, -1]: lambda = -1/mu with mu in [b_k, b_{k+1}] carries 1 - v_k.
  out.breakpoints.push_back(-std::numeric_limits<double>::infinity());
  for (std::size_t k = 0; k < count; ++k) {
    out.values.push_back(1.0 - v[k]);
    out.breakpoints.push_back(-1.0 / b[k + 1]);
  }
  // [-1, 0]: mirror image.
  for (std::size_t k = count; k-- > 0;) {
    out.values.push_back(v[k]);
    out.breakpoints.push_back(-b[k]);
  }
  out.breakpoints.back() = 0.0;
  return out;
}

}  // namespace monometric
