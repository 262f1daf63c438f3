#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "monometric/chentsov.hpp"
#include "monometric/error.hpp"
#include "monometric/grid.hpp"
#include "monometric/random.hpp"
#include "oracles.hpp"

using namespace monometric;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

const std::vector<std::pair<double, double>> kGrid = default_mc_grid();

}  // namespace

TEST_CASE("c from f examples") {
  CHECK(c_from_f(MonotoneFunction::max(), 2.0, 4.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(c_from_f(MonotoneFunction::min(), 2.0, 4.0) == doctest::Approx(0.375).epsilon(1e-15));
  for (double l : {1e-3, 0.5, 7.0}) {
    CHECK(c_from_f(MonotoneFunction::sqrt(), l, l) == doctest::Approx(1.0 / l).epsilon(1e-15));
    CHECK(c_from_f(MonotoneFunction::gamma(0.3), l, l) == doctest::Approx(1.0 / l).epsilon(1e-15));
  }
  CHECK_THROWS_AS(c_from_f(MonotoneFunction::max(), 0.0, 1.0), Error);
  CHECK_THROWS_AS(c_from_f(MonotoneFunction::max(), 1.0, -1.0), Error);
}

TEST_CASE("bridge examples") {
  CHECK(eval_bridge(0.5, 4.0, 9.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(eval_bridge(0.0, 2.0, 4.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(eval_bridge(1.0, 2.0, 4.0) == doctest::Approx(0.375).epsilon(1e-15));
  for (double g : {0.0, 0.4, 1.0})
    for (double l : {0.01, 1.0, 50.0}) CHECK(eval_bridge(g, l, l) == doctest::Approx(1.0 / l).epsilon(1e-14));
  CHECK_THROWS_AS(eval_bridge(-0.1, 1.0, 1.0), Error);
  CHECK_THROWS_AS(eval_bridge(0.5, 0.0, 1.0), Error);
  CHECK_THROWS_AS(MCFunction::bridge(1.1), Error);
}

TEST_CASE("canonical c examples") {
  const WeightFunction zero = WeightFunction::constant(0.0);
  const WeightFunction one = WeightFunction::constant(1.0);
  CHECK(eval_canonical_c(2.0, zero, 2.0, 4.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(normalize_C0(zero) == doctest::Approx(2.0).epsilon(1e-15));
  // c(1,1) = 1 forces c = (x+y)/(2xy) for h = 1, i.e. C0 = 1.
  const double c0 = normalize_C0(one);
  CHECK(std::abs(c0 - 1.0) <= 1e-10);
  CHECK(std::abs(eval_canonical_c(c0, one, 1.0, 1.0) - 1.0) <= 1e-12);
  CHECK(rel(eval_canonical_c(c0, one, 2.0, 4.0), 0.375) <= 1e-10);
  CHECK_THROWS_AS(eval_canonical_c(0.0, one, 1.0, 1.0), Error);
  CHECK_THROWS_AS(eval_canonical_c(1.0, one, -1.0, 1.0), Error);
  CHECK_THROWS_AS(MCFunction::canonical(-1.0, one), Error);
}

TEST_CASE("canonical c matches the bridge and a brute-force oracle") {
  for (double g : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const auto c = MCFunction::normalized_canonical(WeightFunction::constant(g));
    for (const auto& [x, y] : kGrid) CHECK(rel(c(x, y), eval_bridge(g, x, y)) <= 1e-8);
  }
  for (std::uint64_t trial = 0; trial < 4; ++trial) {
    Rng rng = make_rng(41, 0, trial);
    const WeightFunction h = random_step_weight(rng);
    const double c0 = uniform(rng, 0.5, 2.0);
    for (auto [x, y] : {std::pair{0.3, 2.0}, std::pair{5.0, 0.01}, std::pair{1.0, 1.0}})
      CHECK(rel(eval_canonical_c(c0, h, x, y), oracle::canonical_c(c0, h, x, y)) <= 1e-9);
  }
}

TEST_CASE("C0 and beta are linked") {
  for (std::uint64_t trial = 0; trial < 10; ++trial) {
    Rng rng = make_rng(42, 0, trial);
    const WeightFunction h = random_step_weight(rng);
    const double beta = normalize_beta(h);
    CHECK(std::abs(std::numbers::sqrt2 * std::exp(-beta) - normalize_C0(h)) <= 1e-9);
    // The same identity for an arbitrary beta, through c = 1/(y f(x/y)).
    const double b = uniform(rng, -1.0, 1.0);
    const auto f = MonotoneFunction::canonical(b, h);
    for (auto [x, y] : {std::pair{0.2, 3.0}, std::pair{8.0, 1.5}})
      CHECK(rel(eval_canonical_c(std::numbers::sqrt2 * std::exp(-b), h, x, y), c_from_f(f, x, y)) <= 1e-8);
  }
}

TEST_CASE("axiom checks") {
  for (double g : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const auto r = check_mc_axioms(MCFunction::bridge(g), kGrid);
    CHECK(r.passed(1e-10));
    CHECK(r.diagonal_constant == doctest::Approx(1.0));
  }
  const auto bad = MCFunction::custom("1/x", [](double x, double) { return 1.0 / x; });
  const std::vector<std::pair<double, double>> point{{1.0, 2.0}};
  CHECK(check_mc_axioms(bad, point).symmetry > 0.1);
  for (std::uint64_t trial = 0; trial < 3; ++trial) {
    Rng rng = make_rng(43, 0, trial);
    const auto c = MCFunction::canonical(uniform(rng, 0.5, 2.0), random_step_weight(rng));
    const auto r = check_mc_axioms(c, default_mc_grid(9));
    CHECK(r.passed(1e-8));
    CHECK(r.symmetry == 0.0);  // arguments are ordered before integrating
  }
}

TEST_CASE("log-affinity, mixture law and monotonicity in h") {
  for (const auto& [x, y] : kGrid) {
    for (double g : {0.0, 0.2, 0.9})
      for (double d : {0.1, 0.6, 1.0})
        for (double s : {0.0, 0.3, 0.5, 1.0}) {
          const double lhs = eval_bridge(s * g + (1 - s) * d, x, y);
          const double rhs = std::pow(eval_bridge(g, x, y), s) * std::pow(eval_bridge(d, x, y), 1 - s);
          CHECK(rel(lhs, rhs) <= 1e-12);
        }
  }
  Rng rng = make_rng(44, 0);
  const WeightFunction h = random_step_weight(rng);
  const WeightFunction g = random_step_weight(rng);
  const auto small = default_mc_grid(7);
  for (double s : {0.0, 0.3, 0.5, 1.0}) {
    const WeightFunction m = WeightFunction::mix(s, h, g);
    for (const auto& [x, y] : small) {
      const double lhs = eval_canonical_c(1.0, m, x, y);
      const double rhs = std::pow(eval_canonical_c(1.0, h, x, y), s) *
                         std::pow(eval_canonical_c(1.0, g, x, y), 1 - s);
      CHECK(rel(lhs, rhs) <= 1e-8);
    }
  }
  const WeightFunction lo({0.0, 0.5, 1.0}, {0.1, 0.4});
  const WeightFunction hi({0.0, 0.2, 1.0}, {0.3, 0.4});
  REQUIRE(pointwise_leq(lo, hi));
  for (const auto& [x, y] : small) CHECK(eval_canonical_c(1.0, lo, x, y) <= eval_canonical_c(1.0, hi, x, y));
}

TEST_CASE("ordering, round trip and envelope") {
  const std::vector<double> gammas = linear_grid(0.0, 1.0, 11);
  for (const auto& [x, y] : kGrid) {
    for (std::size_t i = 1; i < gammas.size(); ++i)
      CHECK(eval_bridge(gammas[i - 1], x, y) <= eval_bridge(gammas[i], x, y) * (1 + 1e-14));
    for (double g : gammas)
      CHECK(rel(c_from_f(MonotoneFunction::gamma(g), x, y), eval_bridge(g, x, y)) <= 1e-10);
  }
  for (std::uint64_t trial = 0; trial < 3; ++trial) {
    Rng rng = make_rng(45, 0, trial);
    const auto c = MCFunction::normalized_canonical(random_step_weight(rng));
    for (const auto& [x, y] : default_mc_grid(9)) {
      CHECK(c(x, y) >= 2.0 / (x + y) * (1 - 1e-10));
      CHECK(c(x, y) <= (x + y) / (2 * x * y) * (1 + 1e-10));
    }
  }
}
