#include "monometric/chentsov.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "monometric/error.hpp"
#include "monometric/grid.hpp"

namespace monometric {

namespace {

void require_positive_pair(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0) || !std::isfinite(x) || !std::isfinite(y))
    throw Error(ErrorKind::DomainError, "Morozova-Chentsov arguments must be positive");
}

double canonical_c_log_integral(const WeightFunction& h, double x, double y,
                                const QuadratureConfig& quad) {
  const double hi = std::max(x, y);
  const double lo = std::min(x, y);
  const double num = hi * hi + lo * lo;
  auto kernel = [hi, lo, num](double l) {
    const double l2 = l * l;
    return (1.0 - l2) / (l2 + 1.0) * num / ((hi + l * lo) * (l * hi + lo));
  };
  const auto b = h.breakpoints();
  const auto v = h.values();
  double total = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0.0) continue;
    total += v[k] * integrate(kernel, b[k], b[k + 1], quad).value;
  }
  return total;
}

}  // namespace

double c_from_f(const MonotoneFunction& f, double x, double y) {
  require_positive_pair(x, y);
  return 1.0 / (y * f(x / y));
}

double eval_canonical_c(double c0, const WeightFunction& h, double x, double y,
                        const QuadratureConfig& quad) {
  require_positive_pair(x, y);
  if (!(c0 > 0.0)) throw Error(ErrorKind::DomainError, "C0 must be positive");
  return c0 / (x + y) * std::exp(canonical_c_log_integral(h, x, y, quad));
}

double eval_bridge(double gamma, double x, double y) {
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw Error(ErrorKind::DomainError, "bridge exponent must lie in [0,1]");
  require_positive_pair(x, y);
  return std::pow(x, -gamma) * std::pow(y, -gamma) * std::pow(0.5 * (x + y), 2.0 * gamma - 1.0);
}

double normalize_C0(const WeightFunction& h, const QuadratureConfig& quad) {
  return 2.0 * std::exp(-canonical_c_log_integral(h, 1.0, 1.0, quad));
}

MCFunction MCFunction::canonical(double c0, WeightFunction h, QuadratureConfig quad) {
  quad.validate();
  if (!(c0 > 0.0) || !std::isfinite(c0))
    throw Error(ErrorKind::InvalidArgument, "C0 must be positive and finite");
  return MCFunction(Canonical{c0, std::move(h), quad});
}

MCFunction MCFunction::normalized_canonical(WeightFunction h, QuadratureConfig quad) {
  const double c0 = normalize_C0(h, quad);
  return canonical(c0, std::move(h), quad);
}

MCFunction MCFunction::bridge(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw Error(ErrorKind::InvalidArgument, "bridge exponent must lie in [0,1]");
  return MCFunction(Bridge{gamma});
}

double MCFunction::operator()(double x, double y) const {
  struct Visitor {
    double x, y;
    double operator()(const FromMonotone& r) const { return c_from_f(r.f, x, y); }
    double operator()(const Canonical& r) const { return eval_canonical_c(r.c0, r.h, x, y, r.quad); }
    double operator()(const Bridge& r) const { return eval_bridge(r.gamma, x, y); }
    double operator()(const Custom& r) const {
      require_positive_pair(x, y);
      return r.fn(x, y);
    }
  };
  return std::visit(Visitor{x, y}, rep_);
}

std::string MCFunction::describe() const {
  struct Visitor {
    std::string operator()(const FromMonotone& r) const { return "from_f(" + r.f.describe() + ")"; }
    std::string operator()(const Canonical& r) const {
      std::ostringstream os;
      os << "canonical(c0=" << r.c0 << ", " << r.h.interval_count() << " intervals)";
      return os.str();
    }
    std::string operator()(const Bridge& r) const {
      std::ostringstream os;
      os << "bridge(" << r.gamma << ")";
      return os.str();
    }
    std::string operator()(const Custom& r) const { return r.name; }
  };
  return std::visit(Visitor{}, rep_);
}

std::vector<std::pair<double, double>> default_mc_grid(std::size_t points, double lo, double hi) {
  const std::vector<double> axis = log_grid(lo, hi, points);
  std::vector<std::pair<double, double>> out;
  out.reserve(points * points);
  for (double x : axis)
    for (double y : axis) out.emplace_back(x, y);
  return out;
}

McAxiomReport check_mc_axioms(const MCFunction& c, std::span<const std::pair<double, double>> grid) {
  McAxiomReport report;
  if (grid.empty()) return report;
  constexpr std::array<double, 4> kScales = {0.1, 0.5, 2.0, 10.0};

  report.diagonal_constant = grid.front().first * c(grid.front().first, grid.front().first);
  for (const auto& [x, y] : grid) {
    const double cxy = c(x, y);
    const double cyx = c(y, x);
    report.symmetry = std::max(report.symmetry,
                               std::abs(cxy - cyx) / std::max(std::abs(cxy), std::abs(cyx)));
    for (double t : kScales)
      report.homogeneity =
          std::max(report.homogeneity, std::abs(t * c(t * x, t * y) - cxy) / std::abs(cxy));
    for (double l : {x, y})
      report.diagonal = std::max(report.diagonal, std::abs(l * c(l, l) - report.diagonal_constant) /
                                                      report.diagonal_constant);
  }
  return report;
}

}  // namespace monometric
