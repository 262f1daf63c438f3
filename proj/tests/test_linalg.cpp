#include <cmath>

#include "doctest.h"
#include "monometric/error.hpp"
#include "monometric/linalg.hpp"
#include "monometric/random.hpp"

using namespace monometric;

namespace {

// Truncated Taylor series for exp, used as an independent oracle.
ComplexMatrix exp_series(const ComplexMatrix& m, int terms) {
  ComplexMatrix sum = ComplexMatrix::identity(m.rows());
  ComplexMatrix power = ComplexMatrix::identity(m.rows());
  for (int k = 1; k <= terms; ++k) {
    power = power * m;
    power *= Complex(1.0 / k, 0.0);
    sum += power;
  }
  return sum;
}

double distance(const ComplexMatrix& a, const ComplexMatrix& b) { return frobenius_norm(a - b); }

}  // namespace

TEST_CASE("identity has unit eigenvalues and reconstructs") {
  const auto eig = hermitian_eig(ComplexMatrix::identity(3));
  for (double l : eig.eigenvalues) CHECK(l == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(distance(eig.reconstruct(), ComplexMatrix::identity(3)) <= 1e-11);
}

TEST_CASE("diagonal input returns its diagonal sorted") {
  const auto eig = hermitian_eig(ComplexMatrix::diagonal({0.75, 0.25}));
  REQUIRE(eig.eigenvalues.size() == 2);
  CHECK(eig.eigenvalues[0] == 0.25);
  CHECK(eig.eigenvalues[1] == 0.75);
}

TEST_CASE("random Hermitian decompositions reconstruct and are unitary") {
  for (std::size_t n : {2u, 3u, 5u, 8u, 16u}) {
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
      Rng rng = make_rng(11, n, trial);
      const ComplexMatrix h = random_hermitian(n, rng);
      const auto eig = hermitian_eig(h);
      CHECK(distance(eig.reconstruct(), h) <= 1e-11);
      const ComplexMatrix& u = eig.eigenvectors;
      CHECK(distance(u.adjoint() * u, ComplexMatrix::identity(n)) <= 1e-11);
      for (std::size_t i = 1; i < n; ++i) CHECK(eig.eigenvalues[i - 1] <= eig.eigenvalues[i]);
    }
  }
}

TEST_CASE("complex 2x2 eigenvalues match the closed form") {
  // [[a, b], [conj b, d]]: (a+d)/2 +- sqrt(((a-d)/2)^2 + |b|^2)
  const ComplexMatrix m{{{2.0, 0.0}, {1.0, -2.0}}, {{1.0, 2.0}, {-1.0, 0.0}}};
  const auto eig = hermitian_eig(m);
  const double r = std::sqrt(2.25 + 5.0);
  CHECK(eig.eigenvalues[0] == doctest::Approx(0.5 - r).epsilon(1e-14));
  CHECK(eig.eigenvalues[1] == doctest::Approx(0.5 + r).epsilon(1e-14));
}

TEST_CASE("eigensolver rejects bad input") {
  const ComplexMatrix skew{{{0.0, 0.0}, {1.0, 0.0}}, {{-1.0, 0.0}, {0.0, 0.0}}};
  CHECK_THROWS_AS(hermitian_eig(skew), Error);
  try {
    hermitian_eig(skew);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHermitian);
  }
  try {
    hermitian_eig(ComplexMatrix(2, 3));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
  try {
    hermitian_eig(ComplexMatrix::identity(kMaxEigenDimension + 1));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
}

TEST_CASE("matrix_function examples") {
  Rng rng = make_rng(3, 0);
  const ComplexMatrix h = random_hermitian(4, rng);
  CHECK(distance(matrix_function(h, [](double x) { return x; }), h) <= 1e-11);

  const ComplexMatrix root =
      matrix_function(ComplexMatrix::diagonal({4.0, 9.0}), [](double x) { return std::sqrt(x); },
                      SpectralDomain::positive());
  CHECK(distance(root, ComplexMatrix::diagonal({2.0, 3.0})) <= 1e-14);

  for (std::uint64_t trial = 0; trial < 10; ++trial) {
    Rng r = make_rng(4, 0, trial);
    const ComplexMatrix m = random_hermitian(3, r);
    const ComplexMatrix e = matrix_function(m, [](double x) { return std::exp(x); });
    const ComplexMatrix oracle = exp_series(m, 30);
    CHECK(distance(e, oracle) <= 1e-9 * std::max(1.0, frobenius_norm(oracle)));
    CHECK(hermitian_defect(e) <= 1e-11);
  }
}

TEST_CASE("matrix_function domain errors") {
  const ComplexMatrix m = ComplexMatrix::diagonal({-1.0, 2.0});
  try {
    matrix_function(m, [](double x) { return std::log(x); }, SpectralDomain::positive());
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DomainError);
  }
  CHECK_THROWS_AS(matrix_function(ComplexMatrix::diagonal({0.0, 1.0}),
                                  [](double x) { return 1.0 / x; }),
                  Error);
}

TEST_CASE("matrix_function commutes with unitary conjugation") {
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    Rng rng = make_rng(5, 0, trial);
    const ComplexMatrix m = random_hermitian(4, rng);
    const ComplexMatrix u = random_unitary(4, rng);
    auto phi = [](double x) { return std::tanh(x) + x * x; };
    const ComplexMatrix lhs = matrix_function(u * m * u.adjoint(), phi);
    const ComplexMatrix rhs = u * matrix_function(m, phi) * u.adjoint();
    CHECK(distance(lhs, rhs) <= 1e-10);
  }
}

TEST_CASE("matrix_function respects composition") {
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    Rng rng = make_rng(6, 0, trial);
    const ComplexMatrix g = ginibre(3, 3, rng);
    const ComplexMatrix m = g.adjoint() * g + 0.1 * ComplexMatrix::identity(3);
    auto psi = [](double x) { return std::sqrt(x); };
    auto phi = [](double x) { return std::log(x); };
    const ComplexMatrix once = matrix_function(m, [&](double x) { return phi(psi(x)); },
                                               SpectralDomain::positive());
    const ComplexMatrix twice = matrix_function(
        matrix_function(m, psi, SpectralDomain::positive()), phi, SpectralDomain::positive());
    CHECK(distance(once, twice) <= 1e-10);
  }
}

TEST_CASE("min_eigenvalue") {
  CHECK(min_eigenvalue(ComplexMatrix::diagonal({0.3, 0.7})) == doctest::Approx(0.3).epsilon(1e-15));
  const ComplexMatrix id = ComplexMatrix::identity(3);
  CHECK(min_eigenvalue(id - id) == 0.0);
  for (std::uint64_t trial = 0; trial < 50; ++trial) {
    Rng rng = make_rng(7, 0, trial);
    const ComplexMatrix b = ginibre(2, 4, rng);  // rank 2 Gram matrix of size 4
    CHECK(min_eigenvalue(b.adjoint() * b) >= -1e-12);
  }
  CHECK_THROWS_AS(min_eigenvalue(ComplexMatrix{{{0.0, 0.0}, {1.0, 0.0}}, {{0.0, 0.0}, {0.0, 0.0}}}),
                  Error);
}

TEST_CASE("orthonormalize_columns") {
  Rng rng = make_rng(8, 0);
  ComplexMatrix v = ginibre(6, 3, rng);
  REQUIRE(orthonormalize_columns(v));
  CHECK(distance(v.adjoint() * v, ComplexMatrix::identity(3)) <= 1e-13);

  ComplexMatrix dependent(3, 2);
  for (std::size_t i = 0; i < 3; ++i) {
    dependent(i, 0) = Complex(1.0 + i, 0.5);
    dependent(i, 1) = 2.0 * dependent(i, 0);
  }
  CHECK_FALSE(orthonormalize_columns(dependent));
}

TEST_CASE("matrix arithmetic and shape checks") {
  const ComplexMatrix a{{1.0, 2.0}, {3.0, 4.0}};
  const ComplexMatrix b{{0.0, 1.0}, {1.0, 0.0}};
  const ComplexMatrix ab = a * b;
  CHECK(ab == ComplexMatrix{{2.0, 1.0}, {4.0, 3.0}});
  CHECK(a.trace() == Complex(5.0, 0.0));
  CHECK((a + b - b) == a);
  CHECK_THROWS_AS(a * ComplexMatrix(3, 3), Error);
  CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<Complex>(3)), Error);
  CHECK(is_hermitian(b));
  CHECK_FALSE(is_hermitian(a));
}
