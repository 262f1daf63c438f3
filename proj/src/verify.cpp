#include "monometric/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numbers>

#include "monometric/channels.hpp"
#include "monometric/chentsov.hpp"
#include "monometric/error.hpp"
#include "monometric/grid.hpp"
#include "monometric/metric.hpp"
#include "monometric/monotone.hpp"
#include "monometric/random.hpp"

namespace monometric {

namespace {

// Tolerances. Where a check compares two evaluations of the same quantity,
// residuals are scaled by max(1, |reference|) unless noted as relative.
constexpr double kClosedFormRelTol = 1e-8;
constexpr double kKernelTol = 1e-10;
constexpr double kFunctionalEquationTol = 1e-9;
constexpr double kPointwiseTol = 1e-12;
constexpr double kRoundingRelTol = 1e-14;
constexpr double kEnvelopeRelTol = 1e-10;
constexpr double kAngleTol = 1e-10;
constexpr double kCrossRepTol = 1e-9;
constexpr double kOperatorMonotoneTol = 1e-9;
constexpr double kBridgeAgreementTol = 1e-8;
constexpr double kConsistencyTol = 1e-9;
constexpr double kBridgeAxiomTol = 1e-10;
constexpr double kCanonicalAxiomTol = 1e-8;
constexpr double kLogAffineTol = 1e-12;
constexpr double kMixtureTol = 1e-8;
constexpr double kRoundTripTol = 1e-10;
constexpr double kFormTol = 1e-11;
constexpr double kCovarianceTol = 1e-9;
constexpr double kContractionTol = 1e-9;
constexpr double kFalsificationThreshold = -1e-3;
constexpr double kInvalidSymmetryThreshold = 0.1;

std::uint64_t name_stream(const std::string& name) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char ch : name) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

double scaled(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }
double relative(double a, double b) { return std::abs(a - b) / std::abs(b); }

class Collector {
 public:
  Collector(std::string suite, const VerifyOptions& options, std::vector<PropertyResult>& out)
      : suite_(std::move(suite)), options_(options), out_(out) {}

  Rng rng(const std::string& property, std::uint64_t index = 0) const {
    return make_rng(options_.seed, name_stream(suite_ + "." + property), index);
  }

  void add(const std::string& name, double value, Relation relation, double threshold, int samples) {
    PropertyResult r{suite_, name, value, relation, threshold, samples, false};
    switch (relation) {
      case Relation::AtMost: r.passed = value <= threshold; break;
      case Relation::AtLeast: r.passed = value >= threshold; break;
      case Relation::Above: r.passed = value > threshold; break;
    }
    if (!std::isfinite(value)) r.passed = false;
    out_.push_back(std::move(r));
  }

  const VerifyOptions& options() const { return options_; }
  const QuadratureConfig& quad() const { return options_.quad; }
  bool injected(const std::string& what) const {
    return std::find(options_.injections.begin(), options_.injections.end(), what) !=
           options_.injections.end();
  }

 private:
  std::string suite_;
  const VerifyOptions& options_;
  std::vector<PropertyResult>& out_;
};

const std::vector<double>& t_grid() {
  static const std::vector<double> grid = log_grid(1e-2, 1e2, 41);
  return grid;
}

std::vector<MonotoneFunction> random_canonical_fs(const Collector& c, const std::string& property,
                                                  std::size_t count) {
  std::vector<MonotoneFunction> out;
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng = c.rng(property, i);
    out.push_back(MonotoneFunction::normalized_canonical(random_step_weight(rng), c.quad()));
  }
  return out;
}

MonotoneFunction random_kubo_ando(Rng& rng) {
  const std::size_t count = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
  std::vector<KuboAndoAtom> atoms;
  for (std::size_t i = 0; i < count; ++i) {
    const double s = uniform(rng) < 0.15 ? std::numeric_limits<double>::infinity()
                                         : std::exp(uniform(rng, -4.0, 4.0));
    atoms.push_back({s, uniform(rng, 0.1, 1.0)});
  }
  return MonotoneFunction::kubo_ando(std::move(atoms));
}

// ---------------------------------------------------------------------------
// monotone

void monotone_suite(Collector& c) {
  const auto& grid = t_grid();
  const auto& quad = c.quad();

  {
    double worst = 0.0;
    int samples = 0;
    const std::vector<double> ts = log_grid(1e-2, 1e2, 50);
    for (int k = 0; k <= 10; ++k) {
      const double gamma = 0.1 * k;
      const WeightFunction h = WeightFunction::constant(gamma);
      const double beta = (gamma - 0.5) * std::numbers::ln2;
      for (double t : ts) {
        worst = std::max(worst, relative(eval_canonical_f(beta, h, t, quad), eval_gamma_family(gamma, t)));
        ++samples;
      }
    }
    c.add("closed_form_agreement", worst, Relation::AtMost, kClosedFormRelTol, samples);
  }
  {
    double worst = 0.0;
    const WeightFunction one = WeightFunction::constant(1.0);
    const std::vector<double> ts = log_grid(1e-2, 1e2, 20);
    for (double t : ts)
      worst = std::max(worst, std::abs(canonical_f_log_integral(one, t, quad) -
                                       closed_form_kernel_integral(t)));
    c.add("kernel_integral", worst, Relation::AtMost, kKernelTol, static_cast<int>(ts.size()));
  }

  const std::vector<MonotoneFunction> canonical = random_canonical_fs(c, "random_canonical", 10);
  std::vector<MonotoneFunction> symmetric;
  for (int k = 0; k <= 10; ++k) symmetric.push_back(MonotoneFunction::gamma(0.1 * k));
  symmetric.insert(symmetric.end(), canonical.begin(), canonical.end());
  {
    double worst = 0.0;
    for (const auto& f : symmetric) worst = std::max(worst, check_functional_equation(f, grid));
    c.add("functional_equation", worst, Relation::AtMost, kFunctionalEquationTol,
          static_cast<int>(symmetric.size() * grid.size()));
  }

  std::vector<MonotoneFunction> asymmetric;
  for (std::size_t i = 0; i < 10; ++i) {
    Rng rng = c.rng("random_kubo_ando", i);
    asymmetric.push_back(random_kubo_ando(rng));
  }
  {
    double worst = 0.0;
    std::vector<MonotoneFunction> all = asymmetric;
    all.insert(all.end(), canonical.begin(), canonical.begin() + 3);
    for (const auto& f : all) {
      const MonotoneFunction twice = sharp(sharp(f));
      for (double t : grid) worst = std::max(worst, std::abs(twice(t) - f(t)));
    }
    c.add("sharp_involution", worst, Relation::AtMost, kPointwiseTol,
          static_cast<int>(all.size() * grid.size()));
  }
  {
    double worst = 0.0;
    for (const auto& f : asymmetric) {
      const MonotoneFunction ft = tilde(f);
      const MonotoneFunction fts = sharp(ft);
      for (double t : grid) worst = std::max(worst, std::abs(fts(t) - ft(t)));
    }
    c.add("tilde_fixed_point", worst, Relation::AtMost, kPointwiseTol,
          static_cast<int>(asymmetric.size() * grid.size()));
  }
  {
    // Relative: the squared values reach 1e4 on the grid.
    double worst = 0.0;
    int samples = 0;
    for (int i = 0; i < 20; ++i) {
      Rng rng = c.rng("midpoint_identity", static_cast<std::uint64_t>(i));
      const double gamma = uniform(rng);
      const double delta = uniform(rng);
      for (double t : grid) {
        const double mid = eval_gamma_family(0.5 * (gamma + delta), t);
        worst = std::max(worst, relative(mid * mid, eval_gamma_family(gamma, t) *
                                                        eval_gamma_family(delta, t)));
        ++samples;
      }
    }
    c.add("midpoint_identity", worst, Relation::AtMost, kPointwiseTol, samples);
  }
  {
    double worst = 0.0;
    int samples = 0;
    for (int i = 0; i <= 10; ++i)
      for (int j = i; j <= 10; ++j)
        for (double t : grid) {
          const double lower = eval_gamma_family(0.1 * i, t);
          const double upper = eval_gamma_family(0.1 * j, t);
          worst = std::max(worst, (upper - lower) / lower);
          ++samples;
        }
    c.add("gamma_ordering", worst, Relation::AtMost, kRoundingRelTol, samples);
  }
  {
    double worst = 0.0;
    for (const auto& f : canonical)
      for (double t : grid) {
        const double v = f(t);
        const double lo = 2.0 * t / (1.0 + t);
        const double hi = 0.5 * (1.0 + t);
        worst = std::max({worst, (lo - v) / lo, (v - hi) / hi});
      }
    c.add("extremality", worst, Relation::AtMost, kEnvelopeRelTol,
          static_cast<int>(canonical.size() * grid.size()));
  }
  {
    double worst = 0.0;
    for (double theta : {std::numbers::pi / 6, std::numbers::pi / 4, std::numbers::pi / 2,
                         3 * std::numbers::pi / 4})
      worst = std::max(worst, std::abs(angle_integral(theta, quad) - theta));
    c.add("angle_integral", worst, Relation::AtMost, kAngleTol, 4);
  }

  std::vector<ExpClassFunction> exp_class{{0.0, WeightFunction::constant(0.5)}};
  for (std::size_t i = 0; i < 5; ++i) {
    Rng rng = c.rng("random_class_E", i);
    const double beta = uniform(rng, -1.0, 1.0);
    exp_class.push_back({beta, random_step_weight(rng)});
  }
  const std::vector<double> xs = linear_grid(-5.0, 5.0, 41);
  {
    double worst = 0.0;
    for (const auto& F : exp_class) {
      const MonotoneFunction f = phi_transform(F, quad);
      for (double t : grid)
        worst = std::max(worst, scaled(std::exp(eval_class_E(F, std::log(t), quad)), f(t)));
    }
    c.add("class_E_consistency", worst, Relation::AtMost, kCrossRepTol,
          static_cast<int>(exp_class.size() * grid.size()));
  }
  {
    double worst = 0.0;
    for (const auto& F : exp_class)
      for (double x : xs)
        worst = std::max(worst, std::abs(eval_class_E(F, x, quad) - x - eval_class_E(F, -x, quad)));
    c.add("class_E_functional_equation", worst, Relation::AtMost, kCrossRepTol,
          static_cast<int>(exp_class.size() * xs.size()));
  }
  {
    double worst = 0.0;
    int samples = 0;
    for (std::size_t i = 0; i < exp_class.size(); ++i) {
      const ExtendedWeight ext = extend_weight(exp_class[i].h);
      Rng rng = c.rng("weight_duality", i);
      for (int k = 0; k < 50; ++k) {
        const double lambda = uniform(rng, -1.0, 0.0);
        if (lambda == 0.0) continue;
        worst = std::max(worst, std::abs(ext(1.0 / lambda) + ext(lambda) - 1.0));
        ++samples;
      }
    }
    c.add("weight_duality", worst, Relation::AtMost, std::numeric_limits<double>::epsilon(), samples);
  }
  {
    double worst = 0.0;
    for (const auto& F : exp_class) {
      const ExtendedWeight ext = extend_weight(F.h);
      for (double x : xs)
        worst = std::max(worst,
                         scaled(eval_class_E_general(F.beta, ext, x, quad), eval_class_E(F, x, quad)));
    }
    c.add("general_representation", worst, Relation::AtMost, kCrossRepTol,
          static_cast<int>(exp_class.size() * xs.size()));
  }

  const auto& dims = c.options().dims;
  const int trials = c.options().trials;
  const MonotoneFunction square = MonotoneFunction::custom("t^2", [](double t) { return t * t; });
  {
    std::vector<MonotoneFunction> candidates;
    for (double g : {0.0, 0.25, 0.5, 0.75, 1.0}) candidates.push_back(MonotoneFunction::gamma(g));
    candidates.insert(candidates.end(), canonical.begin(), canonical.begin() + 5);
    if (c.injected("square")) candidates.push_back(square);
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const auto report = check_operator_monotone(
          candidates[i], trials, dims, derive_seed(c.options().seed, name_stream("opmon"), i),
          kOperatorMonotoneTol);
      worst = std::min(worst, report.worst_min_eigenvalue);
    }
    c.add("operator_monotone", worst, Relation::AtLeast, -kOperatorMonotoneTol,
          static_cast<int>(candidates.size()) * trials);
  }
  {
    const auto report = check_operator_monotone(
        square, trials, dims, derive_seed(c.options().seed, name_stream("square")), kOperatorMonotoneTol);
    // The fixed pair A = [[2,1],[1,1]] <= B = [[3,1],[1,1]] violates t^2 at
    // any trial count; the random pairs show the sampler finds violations too.
    const ComplexMatrix a{{2.0, 1.0}, {1.0, 1.0}};
    const ComplexMatrix b{{3.0, 1.0}, {1.0, 1.0}};
    const double fixed = min_eigenvalue(b * b - a * a);
    c.add("square_counterexample", std::min(fixed, report.worst_min_eigenvalue), Relation::AtMost,
          -kOperatorMonotoneTol, trials + 1);
  }
  {
    // Smallest positive value and smallest forward difference over the grid.
    std::vector<MonotoneFunction> all = symmetric;
    all.insert(all.end(), asymmetric.begin(), asymmetric.end());
    all.push_back(tilde(asymmetric.front()));
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& f : all) {
      double previous = 0.0;
      for (double t : grid) {
        const double v = f(t);
        worst = std::min(worst, v - previous);
        previous = v;
      }
    }
    c.add("positive_nondecreasing", worst, Relation::AtLeast, 0.0,
          static_cast<int>(all.size() * grid.size()));
  }
}

// ---------------------------------------------------------------------------
// chentsov

void chentsov_suite(Collector& c) {
  const auto& quad = c.quad();
  const auto grid = default_mc_grid();
  const auto coarse = default_mc_grid(7);
  const std::vector<double> gammas = {0.0, 0.25, 0.5, 0.75, 1.0};

  {
    double worst = 0.0;
    for (double g : gammas) {
      const WeightFunction h = WeightFunction::constant(g);
      const double c0 = normalize_C0(h, quad);
      for (const auto& [x, y] : grid)
        worst = std::max(worst, relative(eval_canonical_c(c0, h, x, y, quad), eval_bridge(g, x, y)));
    }
    c.add("canonical_vs_bridge", worst, Relation::AtMost, kBridgeAgreementTol,
          static_cast<int>(gammas.size() * grid.size()));
  }
  {
    double worst = 0.0;
    for (std::size_t i = 0; i < 10; ++i) {
      Rng rng = c.rng("c0_beta_consistency", i);
      const WeightFunction h = random_step_weight(rng);
      worst = std::max(worst, std::abs(std::sqrt(2.0) * std::exp(-normalize_beta(h, quad)) -
                                       normalize_C0(h, quad)));
    }
    c.add("c0_beta_consistency", worst, Relation::AtMost, kConsistencyTol, 10);
  }
  {
    double worst = 0.0;
    for (double g : gammas) {
      const McAxiomReport r = check_mc_axioms(MCFunction::bridge(g), grid);
      worst = std::max({worst, r.symmetry, r.homogeneity, r.diagonal});
    }
    c.add("axioms_bridge", worst, Relation::AtMost, kBridgeAxiomTol,
          static_cast<int>(gammas.size() * grid.size()));
  }
  {
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      Rng rng = c.rng("axioms_canonical", i);
      const double c0 = uniform(rng, 0.5, 3.0);
      const McAxiomReport r = check_mc_axioms(MCFunction::canonical(c0, random_step_weight(rng), quad), grid);
      worst = std::max({worst, r.symmetry, r.homogeneity, r.diagonal});
    }
    for (std::size_t i = 0; i < 2; ++i) {
      Rng rng = c.rng("axioms_from_f", i);
      const MCFunction from_f = MCFunction::from_monotone(
          MonotoneFunction::normalized_canonical(random_step_weight(rng), quad));
      const McAxiomReport r = check_mc_axioms(from_f, coarse);
      worst = std::max({worst, r.symmetry, r.homogeneity, r.diagonal});
    }
    c.add("axioms_canonical", worst, Relation::AtMost, kCanonicalAxiomTol,
          static_cast<int>(3 * grid.size() + 2 * coarse.size()));
  }
  {
    const MCFunction invalid = MCFunction::custom("1/x", [](double x, double) { return 1.0 / x; });
    const McAxiomReport r = check_mc_axioms(invalid, grid);
    c.add("invalid_detected", r.symmetry, Relation::Above, kInvalidSymmetryThreshold,
          static_cast<int>(grid.size()));
  }
  {
    double worst = 0.0;
    int samples = 0;
    for (std::size_t i = 0; i < 10; ++i) {
      Rng rng = c.rng("log_affinity", i);
      const double g = uniform(rng);
      const double d = uniform(rng);
      for (double s : {0.0, 0.3, 0.5, 1.0})
        for (const auto& [x, y] : grid) {
          const double direct = eval_bridge(s * g + (1.0 - s) * d, x, y);
          const double product =
              std::pow(eval_bridge(g, x, y), s) * std::pow(eval_bridge(d, x, y), 1.0 - s);
          worst = std::max(worst, relative(product, direct));
          ++samples;
        }
    }
    c.add("log_affinity", worst, Relation::AtMost, kLogAffineTol, samples);
  }
  {
    double worst = 0.0;
    int samples = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      Rng rng = c.rng("mixture_law", i);
      const double c0 = uniform(rng, 0.5, 3.0);
      const WeightFunction h = random_step_weight(rng);
      const WeightFunction g = random_step_weight(rng);
      for (double s : {0.3, 0.5, 0.8}) {
        const WeightFunction mixed = WeightFunction::mix(s, h, g);
        for (const auto& [x, y] : coarse) {
          const double direct = eval_canonical_c(c0, mixed, x, y, quad);
          const double product = std::pow(eval_canonical_c(c0, h, x, y, quad), s) *
                                 std::pow(eval_canonical_c(c0, g, x, y, quad), 1.0 - s);
          worst = std::max(worst, relative(product, direct));
          ++samples;
        }
      }
    }
    c.add("mixture_law", worst, Relation::AtMost, kMixtureTol, samples);
  }
  {
    double worst = 0.0;
    int samples = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      Rng rng = c.rng("monotone_in_h", i);
      const WeightFunction h = random_step_weight(rng);
      const WeightFunction bump = random_step_weight(rng);
      // g = h + (1 - h) * bump >= h
      std::vector<double> points;
      std::set_union(h.breakpoints().begin(), h.breakpoints().end(), bump.breakpoints().begin(),
                     bump.breakpoints().end(), std::back_inserter(points));
      std::vector<double> values;
      for (std::size_t k = 0; k + 1 < points.size(); ++k) {
        const double mid = 0.5 * (points[k] + points[k + 1]);
        values.push_back(std::min(1.0, h(mid) + (1.0 - h(mid)) * bump(mid)));
      }
      const WeightFunction g(points, values);
      const double c0 = uniform(rng, 0.5, 3.0);
      for (const auto& [x, y] : coarse) {
        const double ch = eval_canonical_c(c0, h, x, y, quad);
        const double cg = eval_canonical_c(c0, g, x, y, quad);
        worst = std::max(worst, (ch - cg) / cg);
        ++samples;
      }
    }
    c.add("monotone_in_h", worst, Relation::AtMost, kRoundingRelTol, samples);
  }
  {
    double worst = 0.0;
    int samples = 0;
    for (int i = 0; i <= 10; ++i)
      for (int j = i; j <= 10; ++j)
        for (const auto& [x, y] : coarse) {
          const double lower = eval_bridge(0.1 * i, x, y);
          const double upper = eval_bridge(0.1 * j, x, y);
          worst = std::max(worst, (lower - upper) / upper);
          ++samples;
        }
    c.add("bridge_ordering", worst, Relation::AtMost, kRoundingRelTol, samples);
  }
  {
    double worst = 0.0;
    for (double g : gammas) {
      const MonotoneFunction f = MonotoneFunction::gamma(g);
      for (const auto& [x, y] : grid) worst = std::max(worst, relative(c_from_f(f, x, y), eval_bridge(g, x, y)));
    }
    c.add("from_f_round_trip", worst, Relation::AtMost, kRoundTripTol,
          static_cast<int>(gammas.size() * grid.size()));
  }
  {
    std::vector<MCFunction> normalized;
    for (double g : gammas) normalized.push_back(MCFunction::bridge(g));
    for (std::size_t i = 0; i < 3; ++i) {
      Rng rng = c.rng("extremal_envelope", i);
      normalized.push_back(MCFunction::normalized_canonical(random_step_weight(rng), quad));
    }
    double worst = 0.0;
    for (const auto& mc : normalized)
      for (const auto& [x, y] : coarse) {
        const double v = mc(x, y);
        const double lo = 2.0 / (x + y);
        const double hi = (x + y) / (2.0 * x * y);
        worst = std::max({worst, (lo - v) / lo, (v - hi) / hi});
      }
    c.add("extremal_envelope", worst, Relation::AtMost, kEnvelopeRelTol,
          static_cast<int>(normalized.size() * coarse.size()));
  }
}

// ---------------------------------------------------------------------------
// metric

std::vector<MetricSpec> sample_metrics(const Collector& c, const std::string& property) {
  std::vector<MetricSpec> out;
  for (double g : {0.0, 0.5, 1.0}) out.push_back({MCFunction::bridge(g), 1.0});
  Rng rng = c.rng(property, 1000);
  out.push_back({MCFunction::normalized_canonical(random_step_weight(rng), c.quad()), 1.0});
  return out;
}

std::size_t pick_dim(const std::vector<std::size_t>& dims, Rng& rng) {
  return dims[std::uniform_int_distribution<std::size_t>(0, dims.size() - 1)(rng)];
}

ComplexMatrix random_tangent(std::size_t n, Rng& rng) {
  return std::bernoulli_distribution(0.5)(rng) ? random_hermitian(n, rng) : ginibre(n, n, rng);
}

void metric_suite(Collector& c) {
  const auto& dims = c.options().dims;
  const int trials = c.options().trials;
  const std::vector<MetricSpec> metrics = sample_metrics(c, "metrics");

  {
    double worst = std::numeric_limits<double>::infinity();
    double zero = 0.0;
    for (int i = 0; i < trials; ++i) {
      Rng rng = c.rng("positivity", static_cast<std::uint64_t>(i));
      const std::size_t n = pick_dim(dims, rng);
      const DensityMatrix rho(random_density(n, rng));
      const ComplexMatrix a = random_tangent(n, rng);
      const double norm2 = std::pow(frobenius_norm(a), 2);
      for (const auto& spec : metrics) {
        worst = std::min(worst, metric_quadratic(spec, rho, a) / norm2);
        zero = std::max(zero, std::abs(metric_quadratic(spec, rho, ComplexMatrix::zero(n, n))));
      }
    }
    // Strictly positive on nonzero A; exactly zero at A = 0.
    c.add("positivity", zero == 0.0 ? worst : -zero, Relation::Above, 0.0,
          trials * static_cast<int>(metrics.size()));
  }
  {
    double worst = 0.0;
    for (int i = 0; i < trials; ++i) {
      Rng rng = c.rng("symmetry_axiom", static_cast<std::uint64_t>(i));
      const std::size_t n = pick_dim(dims, rng);
      const DensityMatrix rho(random_density(n, rng));
      const ComplexMatrix a = ginibre(n, n, rng);
      const ComplexMatrix b = ginibre(n, n, rng);
      for (const auto& spec : metrics) {
        const Complex lhs = metric_form(spec, rho, a, b);
        const Complex rhs = metric_form(spec, rho, b.adjoint(), a.adjoint());
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
      }
    }
    c.add("symmetry_axiom", worst, Relation::AtMost, kFormTol, trials * static_cast<int>(metrics.size()));
  }
  {
    double worst = 0.0;
    for (int i = 0; i < trials; ++i) {
      Rng rng = c.rng("sesquilinearity", static_cast<std::uint64_t>(i));
      const std::size_t n = pick_dim(dims, rng);
      const DensityMatrix rho(random_density(n, rng));
      const ComplexMatrix a = ginibre(n, n, rng);
      const ComplexMatrix b = ginibre(n, n, rng);
      const ComplexMatrix d = ginibre(n, n, rng);
      const Complex alpha(uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0));
      for (const auto& spec : metrics) {
        const Complex ab = metric_form(spec, rho, a, b);
        const Complex ba = metric_form(spec, rho, b, a);
        const Complex ad = metric_form(spec, rho, a, d);
        auto gap = [](Complex x, Complex y) { return std::abs(x - y) / std::max(1.0, std::abs(y)); };
        worst = std::max({worst, gap(ab, std::conj(ba)),
                          gap(metric_form(spec, rho, a, alpha * b + d), alpha * ab + ad),
                          gap(metric_form(spec, rho, alpha * a, b), std::conj(alpha) * ab)});
      }
    }
    c.add("hermitian_sesquilinearity", worst, Relation::AtMost, kFormTol,
          trials * static_cast<int>(metrics.size()));
  }
  {
    double worst = 0.0;
    for (int i = 0; i < trials; ++i) {
      Rng rng = c.rng("unitary_covariance", static_cast<std::uint64_t>(i));
      const std::size_t n = pick_dim(dims, rng);
      const ComplexMatrix rho = random_density(n, rng);
      const ComplexMatrix a = random_tangent(n, rng);
      const ComplexMatrix u = random_unitary(n, rng);
      const DensityMatrix rotated(u * rho * u.adjoint());
      for (const auto& spec : metrics) {
        const double base = metric_quadratic(spec, DensityMatrix(rho), a);
        worst = std::max(worst, scaled(metric_quadratic(spec, rotated, u * a * u.adjoint()), base));
      }
    }
    c.add("unitary_covariance", worst, Relation::AtMost, kCovarianceTol,
          trials * static_cast<int>(metrics.size()));
  }
  {
    // Direct diagonal formula as the reference.
    double worst = 0.0;
    for (int i = 0; i < trials; ++i) {
      Rng rng = c.rng("basis_independence", static_cast<std::uint64_t>(i));
      const std::size_t n = pick_dim(dims, rng);
      std::vector<double> lambda(n);
      double total = 0.0;
      for (double& l : lambda) total += (l = uniform(rng, 0.05, 1.0));
      for (double& l : lambda) l /= total;
      const ComplexMatrix a = random_tangent(n, rng);
      const ComplexMatrix u = random_unitary(n, rng);
      const DensityMatrix rho(u * ComplexMatrix::diagonal(lambda) * u.adjoint());
      for (const auto& spec : metrics) {
        double reference = 0.0;
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q)
            reference += std::norm(a(p, q)) *
                         (p == q ? spec.big_c / lambda[p] : spec.c(lambda[p], lambda[q]));
        worst = std::max(worst, scaled(metric_quadratic(spec, rho, u * a * u.adjoint()), reference));
      }
    }
    c.add("basis_independence", worst, Relation::AtMost, kCovarianceTol,
          trials * static_cast<int>(metrics.size()));
  }
  {
    // |K(rho_eps) - K(rho)| should shrink linearly in eps: compare the
    // change at eps = 1e-6 with the slope measured at eps = 1e-3.
    double worst = 0.0;
    const int count = std::min(trials, 50);
    for (int i = 0; i < count; ++i) {
      Rng rng = c.rng("continuity", static_cast<std::uint64_t>(i));
      const std::size_t n = pick_dim(dims, rng);
      const ComplexMatrix rho = random_density(n, rng);
      const ComplexMatrix sigma = random_density(n, rng);
      const ComplexMatrix a = random_tangent(n, rng);
      auto perturbed = [&](double eps) { return DensityMatrix((1.0 - eps) * rho + eps * sigma); };
      for (const auto& spec : metrics) {
        const double base = metric_quadratic(spec, DensityMatrix(rho), a);
        const double coarse = std::abs(metric_quadratic(spec, perturbed(1e-3), a) - base);
        const double fine = std::abs(metric_quadratic(spec, perturbed(1e-6), a) - base);
        worst = std::max(worst, fine / (1e-3 * coarse + 1e-12 * std::abs(base)));
      }
    }
    c.add("continuity_smoke", worst, Relation::AtMost, 10.0, count * static_cast<int>(metrics.size()));
  }
}

// ---------------------------------------------------------------------------
// channels

std::vector<std::size_t> channel_input_dims(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> out;
  for (std::size_t d : dims)
    if (d >= 2 && d <= 3) out.push_back(d);
  return out.empty() ? std::vector<std::size_t>{2, 3} : out;
}

void channels_suite(Collector& c) {
  const int trials = c.options().trials;
  const std::vector<std::size_t> inputs = channel_input_dims(c.options().dims);
  const std::vector<std::size_t> outputs = {2, 3, 4};

  {
    double worst = 0.0;
    for (int i = 0; i < trials; ++i) {
      Rng rng = c.rng("trace_preservation", static_cast<std::uint64_t>(i));
      const std::size_t n = pick_dim(inputs, rng);
      const std::size_t m = pick_dim(outputs, rng);
      const std::size_t k = (n + m - 1) / m + std::uniform_int_distribution<std::size_t>(0, 2)(rng);
      const KrausChannel channel = random_channel(n, m, k, rng());
      const ComplexMatrix x = random_hermitian(n, rng);
      const ComplexMatrix y = apply_channel(channel, x);
      worst = std::max({worst, channel.trace_preservation_defect(),
                        std::abs(y.trace() - x.trace()) / std::max(1.0, std::abs(x.trace())),
                        hermitian_defect(y)});
    }
    c.add("trace_preservation", worst, Relation::AtMost, kTracePreservationTol, trials);
  }

  std::vector<MetricSpec> metrics;
  for (double g : {0.0, 0.25, 0.5, 0.75, 1.0}) metrics.push_back({MCFunction::bridge(g), 1.0});
  for (std::size_t i = 0; i < 3; ++i) {
    Rng rng = c.rng("random_canonical", i);
    metrics.push_back({MCFunction::normalized_canonical(random_step_weight(rng), c.quad()), 1.0});
  }
  const MetricSpec oversized{MCFunction::custom("(x+y)/(xy)", oversized_mc_function), 1.0};

  {
    std::vector<MetricSpec> tested = metrics;
    if (c.injected("bad-c")) tested.push_back(oversized);
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < tested.size(); ++i) {
      ContractionConfig config{trials, derive_seed(c.options().seed, name_stream("contraction"), i),
                               inputs, outputs, false};
      worst = std::min(worst, run_contraction_trials(tested[i], config).worst_slack);
    }
    c.add("contraction", worst, Relation::AtLeast, -kContractionTol,
          trials * static_cast<int>(tested.size()));
  }
  {
    double worst = 0.0;
    for (std::size_t i = 0; i < metrics.size(); ++i) {
      ContractionConfig config{trials, derive_seed(c.options().seed, name_stream("unitary"), i),
                               inputs, outputs, true};
      worst = std::max(worst, run_contraction_trials(metrics[i], config).max_abs_slack);
    }
    c.add("unitary_equality", worst, Relation::AtMost, kContractionTol,
          trials * static_cast<int>(metrics.size()));
  }
  {
    // Pinching in the eigenbasis of a diagonal rho kills an off-diagonal A.
    double worst = 0.0;
    Rng rng = c.rng("pinching");
    const KrausChannel pinch = pinching_channel(2);
    for (int i = 0; i < std::min(trials, 20); ++i) {
      const double p = uniform(rng, 0.05, 0.95);
      const DensityMatrix rho(ComplexMatrix::diagonal({p, 1.0 - p}));
      const Complex z(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
      const Complex w(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
      const ComplexMatrix a{{0.0, z}, {w, 0.0}};
      for (const auto& spec : metrics) {
        const MonotonicityTrial t = monotonicity_trial(spec, pinch, rho, a);
        worst = std::max(worst, std::abs(t.lhs) + std::max(0.0, -t.slack));
      }
    }
    c.add("pinching_kills_coherence", worst, Relation::AtMost, 0.0,
          std::min(trials, 20) * static_cast<int>(metrics.size()));
  }
  {
    ContractionConfig config{std::max(trials, 100), derive_seed(c.options().seed, name_stream("falsify")),
                             inputs, outputs, false};
    c.add("falsification_power", run_contraction_trials(oversized, config).worst_slack,
          Relation::AtMost, kFalsificationThreshold, config.trials);
  }
}

struct SuiteEntry {
  const char* name;
  void (*run)(Collector&);
};

constexpr SuiteEntry kSuites[] = {
    {"monotone", monotone_suite},
    {"chentsov", chentsov_suite},
    {"metric", metric_suite},
    {"channels", channels_suite},
};

const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::AtMost: return "<=";
    case Relation::AtLeast: return ">=";
    case Relation::Above: return ">";
  }
  return "?";
}

}  // namespace

double oversized_mc_function(double x, double y) { return (x + y) / (x * y); }

bool VerificationReport::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.passed; });
}

const std::vector<std::string>& suite_properties(const std::string& suite) {
  static const std::map<std::string, std::vector<std::string>> names = {
      {"monotone",
       {"closed_form_agreement", "kernel_integral", "functional_equation", "sharp_involution",
        "tilde_fixed_point", "midpoint_identity", "gamma_ordering", "extremality", "angle_integral",
        "class_E_consistency", "class_E_functional_equation", "weight_duality",
        "general_representation", "operator_monotone", "square_counterexample",
        "positive_nondecreasing"}},
      {"chentsov",
       {"canonical_vs_bridge", "c0_beta_consistency", "axioms_bridge", "axioms_canonical",
        "invalid_detected", "log_affinity", "mixture_law", "monotone_in_h", "bridge_ordering",
        "from_f_round_trip", "extremal_envelope"}},
      {"metric",
       {"positivity", "symmetry_axiom", "hermitian_sesquilinearity", "unitary_covariance",
        "basis_independence", "continuity_smoke"}},
      {"channels",
       {"trace_preservation", "contraction", "unitary_equality", "pinching_kills_coherence",
        "falsification_power"}},
  };
  if (suite == "all") {
    static const std::vector<std::string> all = [] {
      std::vector<std::string> out;
      for (const char* name : {"monotone", "chentsov", "metric", "channels"})
        for (const auto& p : names.at(name)) out.push_back(p);
      return out;
    }();
    return all;
  }
  const auto it = names.find(suite);
  if (it == names.end()) throw Error(ErrorKind::InvalidArgument, "unknown suite \"" + suite + "\"");
  return it->second;
}

VerificationReport run_verification(const VerifyOptions& options) {
  if (options.trials < 1) throw Error(ErrorKind::InvalidArgument, "trials must be >= 1");
  if (options.dims.empty()) throw Error(ErrorKind::InvalidArgument, "no dimensions given");
  for (std::size_t d : options.dims)
    if (d < 2 || d > 8) throw Error(ErrorKind::InvalidArgument, "dimensions must lie in [2,8]");
  for (const auto& inj : options.injections)
    if (inj != "square" && inj != "bad-c")
      throw Error(ErrorKind::InvalidArgument, "unknown injection \"" + inj + "\"");
  if (options.suite != "all") (void)suite_properties(options.suite);
  options.quad.validate();

  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = options.suite;
  report.trials = options.trials;
  report.seed = options.seed;
  report.dims = options.dims;
  report.injections = options.injections;
  for (const auto& entry : kSuites) {
    if (options.suite != "all" && options.suite != entry.name) continue;
    Collector collector(entry.name, options, report.properties);
    entry.run(collector);
  }
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::json report_to_json(const VerificationReport& report, bool include_timing) {
  nlohmann::json properties = nlohmann::json::array();
  for (const auto& p : report.properties) {
    properties.push_back({{"suite", p.suite},
                          {"name", p.name},
                          {"worst", p.value},
                          {"relation", relation_symbol(p.relation)},
                          {"threshold", p.threshold},
                          {"samples", p.samples},
                          {"passed", p.passed}});
  }
  nlohmann::json out = {{"suite", report.suite},
                        {"seed", report.seed},
                        {"trials", report.trials},
                        {"dims", report.dims},
                        {"injections", report.injections},
                        {"properties", std::move(properties)},
                        {"passed", report.passed()}};
  if (include_timing) out["wall_time_seconds"] = report.wall_time_seconds;
  return out;
}

}  // namespace monometric
