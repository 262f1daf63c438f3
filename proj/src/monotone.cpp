#include "monometric/monotone.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "monometric/error.hpp"
#include "monometric/linalg.hpp"
#include "monometric/parallel.hpp"
#include "monometric/random.hpp"

namespace monometric {

namespace {

constexpr double kLargeArgument = 1e8;
constexpr std::uint64_t kOperatorMonotoneStream = 0x6f706d6f6e;  // "opmon"

void require_positive(double t) {
  if (!(t > 0.0) || !std::isfinite(t))
    throw Error(ErrorKind::DomainError, "argument must be positive and finite, got " +
                                            std::to_string(t));
}

void require_unit_interval(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw Error(ErrorKind::DomainError, "gamma must lie in [0,1], got " + std::to_string(gamma));
}

// Integrates `kernel` against the piecewise-constant h, skipping zero pieces.
template <class Kernel>
double weighted_integral(const WeightFunction& h, Kernel&& kernel, const QuadratureConfig& quad) {
  const auto b = h.breakpoints();
  const auto v = h.values();
  double total = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0.0) continue;
    total += v[k] * integrate(kernel, b[k], b[k + 1], quad).value;
  }
  return total;
}

// log(1 + e^x) without overflow.
double log1p_exp(double x) { return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }

}  // namespace

double eval_gamma_family(double gamma, double t) {
  require_unit_interval(gamma);
  require_positive(t);
  return std::pow(t, gamma) * std::pow(0.5 * (1.0 + t), 1.0 - 2.0 * gamma);
}

double closed_form_kernel_integral(double t) {
  require_positive(t);
  return std::log(2.0 * t / ((1.0 + t) * (1.0 + t)));
}

double canonical_f_kernel(double lambda, double t) {
  const double l2 = lambda * lambda;
  return (l2 - 1.0) / (l2 + 1.0) * (1.0 + t * t) / ((lambda + t) * (1.0 + lambda * t));
}

double canonical_f_log_integral(const WeightFunction& h, double t, const QuadratureConfig& quad) {
  require_positive(t);
  return weighted_integral(h, [t](double lambda) { return canonical_f_kernel(lambda, t); }, quad);
}

double eval_canonical_f(double beta, const WeightFunction& h, double t, const QuadratureConfig& quad) {
  require_positive(t);
  if (t > kLargeArgument) return t * eval_canonical_f(beta, h, 1.0 / t, quad);
  return std::exp(beta + std::log1p(t) - 0.5 * std::numbers::ln2 +
                  canonical_f_log_integral(h, t, quad));
}

double normalize_beta(const WeightFunction& h, const QuadratureConfig& quad) {
  return -0.5 * std::numbers::ln2 - canonical_f_log_integral(h, 1.0, quad);
}

double eval_kubo_ando(std::span<const KuboAndoAtom> atoms, double t) {
  require_positive(t);
  double sum = 0.0;
  for (const auto& atom : atoms) {
    if (std::isinf(atom.s)) {
      sum += atom.weight * t;
    } else {
      sum += atom.weight * t * (1.0 + atom.s) / (t + atom.s);
    }
  }
  return sum;
}

MonotoneFunction MonotoneFunction::gamma(double gamma) {
  require_unit_interval(gamma);
  return MonotoneFunction(ClosedForm{ClosedFormKind::Gamma, gamma});
}

MonotoneFunction MonotoneFunction::canonical(double beta, WeightFunction h, QuadratureConfig quad) {
  quad.validate();
  if (!std::isfinite(beta)) throw Error(ErrorKind::InvalidArgument, "beta must be finite");
  return MonotoneFunction(Canonical{beta, std::move(h), quad});
}

MonotoneFunction MonotoneFunction::normalized_canonical(WeightFunction h, QuadratureConfig quad) {
  const double beta = normalize_beta(h, quad);
  return canonical(beta, std::move(h), quad);
}

MonotoneFunction MonotoneFunction::kubo_ando(std::vector<KuboAndoAtom> atoms) {
  if (atoms.empty()) throw Error(ErrorKind::InvalidArgument, "Kubo-Ando measure must be non-zero");
  for (const auto& atom : atoms) {
    if (!(atom.weight > 0.0) || !std::isfinite(atom.weight))
      throw Error(ErrorKind::InvalidArgument, "Kubo-Ando weights must be positive");
    if (!(atom.s >= 0.0))
      throw Error(ErrorKind::InvalidArgument, "Kubo-Ando atoms must lie in [0, inf]");
  }
  return MonotoneFunction(KuboAndo{std::move(atoms)});
}

MonotoneFunction MonotoneFunction::custom(std::string name, std::function<double(double)> fn) {
  return MonotoneFunction(Custom{std::move(name), std::move(fn)});
}

double MonotoneFunction::operator()(double t) const {
  require_positive(t);
  struct Visitor {
    double t;
    double operator()(const ClosedForm& c) const {
      switch (c.kind) {
        case ClosedFormKind::Gamma: return eval_gamma_family(c.gamma, t);
        case ClosedFormKind::Min: return 2.0 * t / (1.0 + t);
        case ClosedFormKind::Max: return 0.5 * (1.0 + t);
        case ClosedFormKind::Sqrt: return std::sqrt(t);
        case ClosedFormKind::Identity: return t;
        case ClosedFormKind::ConstantOne: return 1.0;
      }
      return std::numeric_limits<double>::quiet_NaN();
    }
    double operator()(const Canonical& c) const { return eval_canonical_f(c.beta, c.h, t, c.quad); }
    double operator()(const KuboAndo& k) const { return eval_kubo_ando(k.atoms, t); }
    double operator()(const Sharp& s) const { return t * (*s.inner)(1.0 / t); }
    double operator()(const Tilde& s) const {
      const double f = (*s.inner)(t);
      const double f_sharp = t * (*s.inner)(1.0 / t);
      return 2.0 * f * f_sharp / (f + f_sharp);
    }
    double operator()(const Custom& c) const { return c.fn(t); }
  };
  return std::visit(Visitor{t}, rep_);
}

std::string MonotoneFunction::describe() const {
  struct Visitor {
    std::string operator()(const ClosedForm& c) const {
      switch (c.kind) {
        case ClosedFormKind::Gamma: {
          std::ostringstream os;
          os << "gamma(" << c.gamma << ")";
          return os.str();
        }
        case ClosedFormKind::Min: return "min";
        case ClosedFormKind::Max: return "max";
        case ClosedFormKind::Sqrt: return "sqrt";
        case ClosedFormKind::Identity: return "identity";
        case ClosedFormKind::ConstantOne: return "one";
      }
      return "?";
    }
    std::string operator()(const Canonical& c) const {
      std::ostringstream os;
      os << "canonical(beta=" << c.beta << ", " << c.h.interval_count() << " intervals)";
      return os.str();
    }
    std::string operator()(const KuboAndo& k) const {
      return "kubo_ando(" + std::to_string(k.atoms.size()) + " atoms)";
    }
    std::string operator()(const Sharp& s) const { return "sharp(" + s.inner->describe() + ")"; }
    std::string operator()(const Tilde& s) const { return "tilde(" + s.inner->describe() + ")"; }
    std::string operator()(const Custom& c) const { return c.name; }
  };
  return std::visit(Visitor{}, rep_);
}

MonotoneFunction sharp(const MonotoneFunction& f) {
  return MonotoneFunction(MonotoneFunction::Sharp{std::make_shared<const MonotoneFunction>(f)});
}

MonotoneFunction tilde(const MonotoneFunction& f) {
  return MonotoneFunction(MonotoneFunction::Tilde{std::make_shared<const MonotoneFunction>(f)});
}

double check_functional_equation(const MonotoneFunction& f, std::span<const double> grid) {
  double worst = 0.0;
  for (double t : grid) worst = std::max(worst, std::abs(f(t) - t * f(1.0 / t)));
  return worst;
}

double eval_class_E(const ExpClassFunction& F, double x, const QuadratureConfig& quad) {
  if (!std::isfinite(x)) throw Error(ErrorKind::DomainError, "class-E argument must be finite");
  // The kernel is invariant under u -> 1/u, so work with w = e^{-|x|} <= 1 and
  // split off the pole at l = -w (residue -1):
  //   kernel = -1/(l + w) + (w l^2 + 2 l - w) / ((l^2 + 1)(1 + l w)).
  // The pole part integrates in closed form; the remainder is smooth.
  const double log_w = -std::abs(x);
  const double w = std::exp(log_w);
  auto log_shifted = [w, log_w](double a) { return a == 0.0 ? log_w : std::log(a) + std::log1p(w / a); };
  auto smooth = [w](double l) { return (w * l * l + 2.0 * l - w) / ((l * l + 1.0) * (1.0 + l * w)); };

  const auto b = F.h.breakpoints();
  const auto v = F.h.values();
  double integral = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0.0) continue;
    const double pole = log_shifted(b[k]) - log_shifted(b[k + 1]);
    integral += v[k] * (pole + integrate(smooth, b[k], b[k + 1], quad).value);
  }
  return F.beta + log1p_exp(x) - 0.5 * std::numbers::ln2 + integral;
}

double eval_class_E_general(double beta, const ExtendedWeight& h, double x,
                            const QuadratureConfig& quad) {
  if (!std::isfinite(x) || std::abs(x) > 300.0)
    throw Error(ErrorKind::DomainError, "general class-E evaluation needs |x| <= 300");
  const double u = std::exp(x);
  // On [-1, 0]: 1/(l - u) - l/(l^2 + 1).
  auto inner = [u](double l) { return 1.0 / (l - u) - l / (l * l + 1.0); };
  // (-inf, -1] pulled back through l = 1/m, m in [-1, 0):
  // g(1/m)/m^2 = (m + u) / ((1 - m u)(1 + m^2)).
  auto folded = [u](double m) { return (m + u) / ((1.0 - m * u) * (1.0 + m * m)); };

  double total = beta;
  for (std::size_t k = 0; k + 1 < h.breakpoints.size(); ++k) {
    const double value = h.values[k];
    if (value == 0.0) continue;
    const double lo = h.breakpoints[k];
    const double hi = h.breakpoints[k + 1];
    if (hi <= -1.0) {
      const double m_lo = 1.0 / hi;
      const double m_hi = std::isinf(lo) ? 0.0 : 1.0 / lo;
      total += value * integrate(folded, m_lo, m_hi, quad).value;
    } else if (lo >= -1.0) {
      total += value * integrate(inner, lo, hi, quad).value;
    } else {
      const double m_hi = std::isinf(lo) ? 0.0 : 1.0 / lo;
      total += value * integrate(folded, -1.0, m_hi, quad).value;
      total += value * integrate(inner, -1.0, hi, quad).value;
    }
  }
  return total;
}

MonotoneFunction phi_transform(const ExpClassFunction& F, const QuadratureConfig& quad) {
  return MonotoneFunction::canonical(F.beta, F.h, quad);
}

double angle_integral(double theta, const QuadratureConfig& quad) {
  const double s = 2.0 * std::sin(theta);
  const double c = 2.0 * std::cos(theta);
  return integrate([s, c](double l) { return s / (l * l - c * l + 1.0); }, -1.0, 0.0, quad).value;
}

OperatorMonotoneReport check_operator_monotone(const MonotoneFunction& f, int trials,
                                               std::span<const std::size_t> dims,
                                               std::uint64_t seed, double tol) {
  if (trials < 1) throw Error(ErrorKind::InvalidArgument, "trials must be >= 1");
  if (dims.empty()) throw Error(ErrorKind::InvalidArgument, "no dimensions to sample");
  for (std::size_t d : dims)
    if (d < 2 || d > 8)
      throw Error(ErrorKind::InvalidArgument, "operator-monotone dimensions must lie in [2,8]");

  struct Outcome {
    double min_eigenvalue;
    std::size_t dimension;
  };
  std::vector<Outcome> outcomes(static_cast<std::size_t>(trials));
  const auto phi = [&f](double t) { return f(t); };

  detail::parallel_for(outcomes.size(), [&](std::size_t i) {
    Rng rng = make_rng(seed, kOperatorMonotoneStream, i);
    std::uniform_int_distribution<std::size_t> pick(0, dims.size() - 1);
    const std::size_t n = dims[pick(rng)];
    const ComplexMatrix g = ginibre(n, n, rng);
    const ComplexMatrix h = ginibre(n, n, rng);
    const ComplexMatrix a = kOrderingShift * ComplexMatrix::identity(n) + g.adjoint() * g;
    const ComplexMatrix b = a + h.adjoint() * h;
    const ComplexMatrix gap = matrix_function(b, phi, SpectralDomain::positive()) -
                              matrix_function(a, phi, SpectralDomain::positive());
    outcomes[i] = {min_eigenvalue(gap), n};
  });

  OperatorMonotoneReport report;
  report.trials = trials;
  report.worst_min_eigenvalue = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].min_eigenvalue < report.worst_min_eigenvalue) {
      report.worst_min_eigenvalue = outcomes[i].min_eigenvalue;
      report.worst_trial = i;
      report.worst_dimension = outcomes[i].dimension;
    }
  }
  report.passed = report.worst_min_eigenvalue >= -tol;
  return report;
}

}  // namespace monometric
