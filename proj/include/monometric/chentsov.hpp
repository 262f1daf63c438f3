#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "monometric/monotone.hpp"
#include "monometric/quadrature.hpp"
#include "monometric/weight.hpp"

namespace monometric {

/// 1 / (y f(x/y)).
double c_from_f(const MonotoneFunction& f, double x, double y);

/// (c0/(x+y)) exp \int_0^1 (1-l^2)/(l^2+1) (x^2+y^2)/((x+l y)(l x+y)) h(l) dl.
/// Arguments are ordered (max, min) before integrating, so the result is
/// exactly symmetric.
double eval_canonical_c(double c0, const WeightFunction& h, double x, double y,
                        const QuadratureConfig& quad = {});

/// x^-gamma y^-gamma ((x+y)/2)^(2 gamma - 1).
double eval_bridge(double gamma, double x, double y);

/// c0 with eval_canonical_c(c0, h, 1, 1) == 1, i.e. 2 exp(-J) for the
/// diagonal integral J at x = y = 1.
double normalize_C0(const WeightFunction& h, const QuadratureConfig& quad = {});

/// A Morozova-Chentsov function c(x, y).
class MCFunction {
 public:
  struct FromMonotone {
    MonotoneFunction f;
  };
  struct Canonical {
    double c0;
    WeightFunction h;
    QuadratureConfig quad;
  };
  struct Bridge {
    double gamma;
  };
  /// Arbitrary bivariate function, for injecting invalid candidates.
  struct Custom {
    std::string name;
    std::function<double(double, double)> fn;
  };
  using Representation = std::variant<FromMonotone, Canonical, Bridge, Custom>;

  static MCFunction from_monotone(MonotoneFunction f) { return MCFunction(FromMonotone{std::move(f)}); }
  static MCFunction canonical(double c0, WeightFunction h, QuadratureConfig quad = {});
  /// Fisher-adjusted canonical form: c0 from normalize_C0.
  static MCFunction normalized_canonical(WeightFunction h, QuadratureConfig quad = {});
  static MCFunction bridge(double gamma);
  static MCFunction custom(std::string name, std::function<double(double, double)> fn) {
    return MCFunction(Custom{std::move(name), std::move(fn)});
  }

  /// DomainError unless x, y > 0.
  double operator()(double x, double y) const;

  const Representation& representation() const noexcept { return rep_; }
  std::string describe() const;

 private:
  explicit MCFunction(Representation rep) : rep_(std::move(rep)) {}
  Representation rep_;
};

/// 25 x 25 log-spaced pairs on [1e-3, 1e3]^2.
std::vector<std::pair<double, double>> default_mc_grid(std::size_t points = 25, double lo = 1e-3,
                                                       double hi = 1e3);

struct McAxiomReport {
  double symmetry = 0.0;     // max |c(x,y) - c(y,x)| / max(|c(x,y)|, |c(y,x)|)
  double homogeneity = 0.0;  // max |t c(tx,ty) - c(x,y)| / |c(x,y)|, t in {0.1, 0.5, 2, 10}
  double diagonal = 0.0;     // max |l c(l,l) - C| / C
  double diagonal_constant = 0.0;  // C estimated at the first grid point

  bool passed(double tol) const { return symmetry <= tol && homogeneity <= tol && diagonal <= tol; }
};

McAxiomReport check_mc_axioms(const MCFunction& c, std::span<const std::pair<double, double>> grid);

}  // namespace monometric
