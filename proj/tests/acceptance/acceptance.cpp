// Acceptance checks. Each criterion prints one PASS/FAIL line; the exit code
// is nonzero if any criterion fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "monometric/channels.hpp"
#include "monometric/chentsov.hpp"
#include "monometric/error.hpp"
#include "monometric/grid.hpp"
#include "monometric/linalg.hpp"
#include "monometric/metric.hpp"
#include "monometric/monotone.hpp"
#include "monometric/random.hpp"

using namespace monometric;

namespace {

constexpr std::uint64_t kSeed = 20240601;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
double scaled(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

struct Outcome {
  bool passed;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<WeightFunction> random_weights(std::uint64_t stream, int count) {
  std::vector<WeightFunction> out;
  for (int i = 0; i < count; ++i) {
    Rng rng = make_rng(kSeed, stream, static_cast<std::uint64_t>(i));
    out.push_back(random_step_weight(rng));
  }
  return out;
}

const std::vector<double> kTGrid = log_grid(1e-2, 1e2, 50);

Outcome closed_form_agreement() {
  double worst = 0.0;
  for (double g : linear_grid(0.0, 1.0, 11)) {
    const WeightFunction h = WeightFunction::constant(g);
    const double beta = (g - 0.5) * std::numbers::ln2;
    for (double t : kTGrid) worst = std::max(worst, rel(eval_canonical_f(beta, h, t), eval_gamma_family(g, t)));
  }
  return {worst <= 1e-8, fmt("worst relative error %.3e (bound 1e-8, 11 x 50 points)", worst)};
}

Outcome kernel_integral() {
  double worst = 0.0;
  const WeightFunction one = WeightFunction::constant(1.0);
  for (double t : log_grid(1e-2, 1e2, 20))
    worst = std::max(worst, std::abs(canonical_f_log_integral(one, t, {}) - closed_form_kernel_integral(t)));
  return {worst <= 1e-10, fmt("worst absolute error %.3e (bound 1e-10, 20 points)", worst)};
}

Outcome canonical_vs_bridge() {
  double worst = 0.0;
  const auto grid = default_mc_grid();
  for (double g : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const WeightFunction h = WeightFunction::constant(g);
    const double c0 = normalize_C0(h);
    for (const auto& [x, y] : grid) worst = std::max(worst, rel(eval_canonical_c(c0, h, x, y), eval_bridge(g, x, y)));
  }
  return {worst <= 1e-8, fmt("worst relative error %.3e (bound 1e-8, 5 x 625 points)", worst)};
}

Outcome c0_beta_consistency() {
  double worst = 0.0;
  for (const auto& h : random_weights(1, 10))
    worst = std::max(worst, std::abs(std::numbers::sqrt2 * std::exp(-normalize_beta(h)) - normalize_C0(h)));
  return {worst <= 1e-9, fmt("worst absolute error %.3e (bound 1e-9, 10 weights)", worst)};
}

Outcome functional_equation() {
  std::vector<MonotoneFunction> fs;
  for (double g : linear_grid(0.0, 1.0, 11)) fs.push_back(MonotoneFunction::gamma(g));
  fs.push_back(MonotoneFunction::sqrt());
  fs.push_back(MonotoneFunction::min());
  fs.push_back(MonotoneFunction::max());
  fs.push_back(MonotoneFunction::kubo_ando({{1.0, 1.0}}));
  fs.push_back(MonotoneFunction::kubo_ando({{0.0, 0.5}, {INFINITY, 0.5}}));
  fs.push_back(tilde(MonotoneFunction::identity()));
  for (const auto& h : random_weights(2, 10)) {
    fs.push_back(MonotoneFunction::normalized_canonical(h));
    fs.push_back(MonotoneFunction::canonical(0.3, h));
    fs.push_back(phi_transform({-0.2, h}));
  }
  double worst = 0.0;
  for (const auto& f : fs) worst = std::max(worst, check_functional_equation(f, kTGrid));
  return {worst <= 1e-9, fmt("worst |f(t) - t f(1/t)| %.3e (bound 1e-9, %zu functions)", worst, fs.size())};
}

Outcome operator_monotone() {
  const std::vector<std::size_t> dims{2, 3, 4, 5};
  std::vector<MonotoneFunction> fs;
  for (double g : {0.0, 0.25, 0.5, 0.75, 1.0}) fs.push_back(MonotoneFunction::gamma(g));
  for (const auto& h : random_weights(3, 5)) fs.push_back(MonotoneFunction::normalized_canonical(h));
  double worst = INFINITY;
  for (std::size_t i = 0; i < fs.size(); ++i)
    worst = std::min(worst, check_operator_monotone(fs[i], 1000, dims, kSeed + i, 1e-9).worst_min_eigenvalue);
  const auto square = MonotoneFunction::custom("t^2", [](double t) { return t * t; });
  const auto bad = check_operator_monotone(square, 1000, dims, kSeed, 1e-9);
  const bool ok = worst >= -1e-9 && !bad.passed;
  return {ok, fmt("worst min eigenvalue %.3e (bound -1e-9, 10 functions x 1000 pairs); t^2 worst %.3e",
                  worst, bad.worst_min_eigenvalue)};
}

Outcome channel_contraction() {
  std::vector<MCFunction> cs{MCFunction::bridge(0.0), MCFunction::bridge(0.5), MCFunction::bridge(1.0)};
  for (const auto& h : random_weights(4, 2)) cs.push_back(MCFunction::normalized_canonical(h));
  double worst = INFINITY;
  double unitary = 0.0;
  int trials = 0;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    ContractionConfig cfg;
    cfg.trials = 500;
    cfg.seed = kSeed + i;
    const auto r = run_contraction_trials({cs[i]}, cfg);
    worst = std::min(worst, r.worst_slack);
    trials += r.trials;
    cfg.unitary_only = true;
    unitary = std::max(unitary, run_contraction_trials({cs[i]}, cfg).max_abs_slack);
  }
  const bool ok = worst >= -1e-9 && unitary <= 1e-9;
  return {ok, fmt("worst slack %.3e (bound -1e-9, %d trials); unitary |slack| %.3e (bound 1e-9)", worst,
                  trials, unitary)};
}

Outcome metric_axioms() {
  std::vector<MetricSpec> specs{{MCFunction::bridge(0.0)}, {MCFunction::bridge(0.5)}, {MCFunction::bridge(1.0)}};
  for (const auto& h : random_weights(5, 1)) specs.push_back({MCFunction::normalized_canonical(h)});
  double min_positive = INFINITY;
  double zero_value = 0.0;
  double symmetry = 0.0;
  double covariance = 0.0;
  for (std::size_t s = 0; s < specs.size(); ++s) {
    for (std::uint64_t i = 0; i < 200; ++i) {
      Rng rng = make_rng(kSeed, 6 + s, i);
      const std::size_t n = 2 + i % 4;
      const ComplexMatrix r = random_density(n, rng);
      const DensityMatrix rho(r);
      const ComplexMatrix a = ginibre(n, n, rng);
      const ComplexMatrix b = ginibre(n, n, rng);
      const ComplexMatrix u = random_unitary(n, rng);
      const double q = metric_quadratic(specs[s], rho, a);
      min_positive = std::min(min_positive, q);
      zero_value = std::max(zero_value, std::abs(metric_quadratic(specs[s], rho, ComplexMatrix::zero(n, n))));
      const Complex k = metric_form(specs[s], rho, a, b);
      const Complex k_swapped = metric_form(specs[s], rho, b.adjoint(), a.adjoint());
      symmetry = std::max(symmetry, std::abs(k - k_swapped) / std::max(1.0, std::abs(k)));
      const double rotated =
          metric_quadratic(specs[s], DensityMatrix(u * r * u.adjoint()), u * a * u.adjoint());
      covariance = std::max(covariance, scaled(rotated, q));
    }
  }
  const bool ok = min_positive > 0.0 && zero_value == 0.0 && symmetry <= 1e-11 && covariance <= 1e-9;
  return {ok, fmt("min K(A,A) %.3e (> 0), K(0,0) %.1e (= 0), symmetry %.3e (bound 1e-11), covariance %.3e "
                  "(bound 1e-9)",
                  min_positive, zero_value, symmetry, covariance)};
}

Outcome ordering_and_log_affinity() {
  const auto grid = default_mc_grid();
  const std::vector<double> gammas = linear_grid(0.0, 1.0, 21);
  double ordering = 0.0;  // largest relative decrease between neighbouring gammas
  double affinity = 0.0;
  for (const auto& [x, y] : grid) {
    for (std::size_t i = 1; i < gammas.size(); ++i) {
      const double lo = eval_bridge(gammas[i - 1], x, y);
      const double hi = eval_bridge(gammas[i], x, y);
      ordering = std::max(ordering, (lo - hi) / lo);
    }
    for (double g : {0.0, 0.3, 1.0})
      for (double d : {0.1, 0.5, 0.8})
        for (double s : {0.0, 0.3, 0.5, 1.0}) {
          const double lhs = eval_bridge(s * g + (1 - s) * d, x, y);
          const double rhs = std::pow(eval_bridge(g, x, y), s) * std::pow(eval_bridge(d, x, y), 1 - s);
          affinity = std::max(affinity, rel(lhs, rhs));
        }
  }
  std::vector<MCFunction> cs;
  for (double g : gammas) cs.push_back(MCFunction::bridge(g));
  for (const auto& h : random_weights(7, 5)) {
    cs.push_back(MCFunction::normalized_canonical(h));
    cs.push_back(MCFunction::from_monotone(MonotoneFunction::normalized_canonical(h)));
  }
  double envelope = 0.0;  // largest relative excursion outside [2/(x+y), (x+y)/(2xy)]
  for (const auto& c : cs)
    for (const auto& [x, y] : grid) {
      const double v = c(x, y);
      const double lower = 2.0 / (x + y);
      const double upper = (x + y) / (2.0 * x * y);
      envelope = std::max({envelope, (lower - v) / lower, (v - upper) / upper});
    }
  const bool ok = ordering <= 1e-14 && affinity <= 1e-12 && envelope <= 1e-10;
  return {ok, fmt("ordering violation %.3e, log-affinity %.3e (bound 1e-12), envelope excursion %.3e "
                  "(%zu functions)",
                  ordering, affinity, envelope, cs.size())};
}

Outcome class_E() {
  double consistency = 0.0;
  double fe = 0.0;
  const auto xs = linear_grid(-5.0, 5.0, 101);
  const auto weights = random_weights(8, 10);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    Rng rng = make_rng(kSeed, 9, i);
    const WeightFunction& h = weights[i];
    const ExpClassFunction F{uniform(rng, -1.0, 1.0), h};
    for (double t : kTGrid)
      consistency = std::max(consistency, rel(std::exp(eval_class_E(F, std::log(t))), eval_canonical_f(F.beta, h, t)));
    for (double x : xs) fe = std::max(fe, std::abs(eval_class_E(F, x) - x - eval_class_E(F, -x)));
  }
  double angles = 0.0;
  for (double theta : {std::numbers::pi / 6, std::numbers::pi / 4, std::numbers::pi / 2, 3 * std::numbers::pi / 4})
    angles = std::max(angles, std::abs(angle_integral(theta) - theta));
  const bool ok = consistency <= 1e-9 && fe <= 1e-9 && angles <= 1e-10;
  return {ok, fmt("exp F(log t) vs f %.3e (bound 1e-9), F(x)-x-F(-x) %.3e (bound 1e-9), angles %.3e "
                  "(bound 1e-10)",
                  consistency, fe, angles)};
}

struct Captured {
  int code;
  std::string out;
};

Captured capture(const std::string& args) {
  const std::string cmd = std::string(MONOMETRIC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome cli_determinism() {
  const std::string args = "verify --suite all --trials 200 --seed 42";
  const Captured a = capture(args);
  const Captured b = capture(args);
  const bool identical = a.out == b.out && !a.out.empty();
  return {a.code == 0 && b.code == 0 && identical,
          fmt("exit codes %d/%d, %zu bytes, %s", a.code, b.code, a.out.size(),
              identical ? "byte-identical" : "outputs differ")};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
  double time_limit;  // seconds, 0 = none
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"closed-form agreement", closed_form_agreement, 5.0},
      {"kernel integral oracle", kernel_integral, 0.0},
      {"canonical c vs bridge", canonical_vs_bridge, 0.0},
      {"C0-beta consistency", c0_beta_consistency, 0.0},
      {"functional equation", functional_equation, 0.0},
      {"operator monotonicity sampling", operator_monotone, 60.0},
      {"channel contraction", channel_contraction, 120.0},
      {"metric axioms", metric_axioms, 0.0},
      {"ordering and log-affinity", ordering_and_log_affinity, 0.0},
      {"class E consistency", class_E, 0.0},
      {"CLI determinism", cli_determinism, 0.0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0.0 && seconds >= c.time_limit) {
      o.passed = false;
      o.detail += fmt("; over time limit %.0f s", c.time_limit);
    }
    failures += o.passed ? 0 : 1;
    std::printf("%s  %-32s %s [%.2f s]\n", o.passed ? "PASS" : "FAIL", c.name, o.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
