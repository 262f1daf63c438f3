#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "monometric/quadrature.hpp"
#include "monometric/weight.hpp"

namespace monometric {

// Positive operator monotone functions on (0, inf), their transforms, and
// the canonical representations for functions satisfying f(t) = t f(1/t).

/// t^gamma ((1+t)/2)^(1-2 gamma), gamma in [0,1].
double eval_gamma_family(double gamma, double t);

/// Closed form of the h == 1 kernel integral: log(2t / (1+t)^2).
double closed_form_kernel_integral(double t);

/// Integrand kernel of the canonical representation of f at (lambda, t).
double canonical_f_kernel(double lambda, double t);

/// \int_0^1 kernel(lambda, t) h(lambda) dlambda, one adaptive quadrature per
/// h-interval with nonzero value.
double canonical_f_log_integral(const WeightFunction& h, double t, const QuadratureConfig& quad);

/// e^beta (1+t)/sqrt(2) exp(canonical_f_log_integral(h, t)).
double eval_canonical_f(double beta, const WeightFunction& h, double t,
                        const QuadratureConfig& quad = {});

/// beta with eval_canonical_f(beta, h, 1) == 1.
double normalize_beta(const WeightFunction& h, const QuadratureConfig& quad = {});

/// One atom of a discrete Kubo-Ando measure; s may be +infinity.
struct KuboAndoAtom {
  double s;
  double weight;
};

/// sum_i w_i t (1+s_i)/(t+s_i); an atom at s = inf contributes w_i t.
double eval_kubo_ando(std::span<const KuboAndoAtom> atoms, double t);

enum class ClosedFormKind { Gamma, Min, Max, Sqrt, Identity, ConstantOne };

class MonotoneFunction {
 public:
  struct ClosedForm {
    ClosedFormKind kind;
    double gamma = 0.0;
  };
  struct Canonical {
    double beta;
    WeightFunction h;
    QuadratureConfig quad;
  };
  struct KuboAndo {
    std::vector<KuboAndoAtom> atoms;
  };
  struct Sharp {
    std::shared_ptr<const MonotoneFunction> inner;
  };
  struct Tilde {
    std::shared_ptr<const MonotoneFunction> inner;
  };
  /// Arbitrary scalar function; used to inject counterexamples into checks.
  struct Custom {
    std::string name;
    std::function<double(double)> fn;
  };
  using Representation = std::variant<ClosedForm, Canonical, KuboAndo, Sharp, Tilde, Custom>;

  static MonotoneFunction gamma(double gamma);
  static MonotoneFunction min() { return MonotoneFunction(ClosedForm{ClosedFormKind::Min}); }
  static MonotoneFunction max() { return MonotoneFunction(ClosedForm{ClosedFormKind::Max}); }
  static MonotoneFunction sqrt() { return MonotoneFunction(ClosedForm{ClosedFormKind::Sqrt}); }
  static MonotoneFunction identity() {
    return MonotoneFunction(ClosedForm{ClosedFormKind::Identity});
  }
  static MonotoneFunction constant_one() {
    return MonotoneFunction(ClosedForm{ClosedFormKind::ConstantOne});
  }
  static MonotoneFunction canonical(double beta, WeightFunction h, QuadratureConfig quad = {});
  /// Canonical form with beta chosen by normalize_beta, so f(1) = 1.
  static MonotoneFunction normalized_canonical(WeightFunction h, QuadratureConfig quad = {});
  static MonotoneFunction kubo_ando(std::vector<KuboAndoAtom> atoms);
  static MonotoneFunction custom(std::string name, std::function<double(double)> fn);

  /// DomainError for t <= 0 (or non-finite t).
  double operator()(double t) const;

  const Representation& representation() const noexcept { return rep_; }
  std::string describe() const;

 private:
  explicit MonotoneFunction(Representation rep) : rep_(std::move(rep)) {}
  friend MonotoneFunction sharp(const MonotoneFunction& f);
  friend MonotoneFunction tilde(const MonotoneFunction& f);

  Representation rep_;
};

/// t -> t f(1/t).
MonotoneFunction sharp(const MonotoneFunction& f);

/// Harmonic mean of f and sharp(f).
MonotoneFunction tilde(const MonotoneFunction& f);

/// max over the grid of |f(t) - t f(1/t)|.
double check_functional_equation(const MonotoneFunction& f, std::span<const double> grid);

/// Symmetric class-E function F(x) = beta + log((1+e^x)/sqrt 2) + integral,
/// i.e. the subclass with F(x) = x + F(-x).
struct ExpClassFunction {
  double beta;
  WeightFunction h;
};

double eval_class_E(const ExpClassFunction& F, double x, const QuadratureConfig& quad = {});

/// General class-E representation
///   beta + \int_{-inf}^0 (1/(l - e^x) - l/(l^2+1)) h(l) dl
/// for a weight on (-inf, 0]. The tail (-inf, -1) is folded onto (-1, 0)
/// through l -> 1/l before integrating.
double eval_class_E_general(double beta, const ExtendedWeight& h, double x,
                            const QuadratureConfig& quad = {});

/// t -> exp F(log t), carried as Canonical(beta, h).
MonotoneFunction phi_transform(const ExpClassFunction& F, const QuadratureConfig& quad = {});

/// \int_{-1}^0 2 sin(theta) / (l^2 - 2 l cos(theta) + 1) dl, which equals
/// theta on (0, pi).
double angle_integral(double theta, const QuadratureConfig& quad = {});

struct OperatorMonotoneReport {
  int trials = 0;
  double worst_min_eigenvalue = 0.0;
  std::size_t worst_trial = 0;
  std::size_t worst_dimension = 0;
  bool passed = false;
};

inline constexpr double kOrderingShift = 0.05;

/// Samples A = eps I + G*G and B = A + H*H (G, H Ginibre, eps = 0.05) and
/// records the smallest eigenvalue of f(B) - f(A). Trial i draws its
/// dimension and matrices from derive_seed(seed, ., i).
OperatorMonotoneReport check_operator_monotone(const MonotoneFunction& f, int trials,
                                               std::span<const std::size_t> dims,
                                               std::uint64_t seed, double tol);

}  // namespace monometric
