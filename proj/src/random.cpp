#include "monometric/random.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "monometric/error.hpp"

namespace monometric {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ index);
}

double uniform(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(rng);
}

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  return g;
}

ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  ComplexMatrix g = ginibre(n, n, rng);
  ComplexMatrix h = g + g.adjoint();
  h *= 0.5;
  return h;
}

ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
  for (int attempt = 0; attempt < 10; ++attempt) {
    ComplexMatrix g = ginibre(n, n, rng);
    if (orthonormalize_columns(g)) return g;
  }
  throw Error(ErrorKind::DegenerateSample, "could not orthonormalize a Ginibre sample");
}

ComplexMatrix random_density(std::size_t n, Rng& rng, double floor) {
  ComplexMatrix g = ginibre(n, n, rng);
  ComplexMatrix rho = g * g.adjoint() + floor * ComplexMatrix::identity(n);
  rho *= 1.0 / rho.trace().real();
  for (std::size_t i = 0; i < n; ++i) rho(i, i) = rho(i, i).real();
  return rho;
}

WeightFunction random_step_weight(Rng& rng, std::size_t max_intervals) {
  const std::size_t pieces = std::uniform_int_distribution<std::size_t>(1, max_intervals)(rng);
  std::vector<double> cuts;
  while (cuts.size() + 1 < pieces) {
    const double c = uniform(rng, 0.02, 0.98);
    if (std::none_of(cuts.begin(), cuts.end(), [c](double d) { return std::abs(c - d) < 1e-3; }))
      cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> breakpoints{0.0};
  breakpoints.insert(breakpoints.end(), cuts.begin(), cuts.end());
  breakpoints.push_back(1.0);
  std::vector<double> values(pieces);
  for (double& v : values) v = uniform(rng);
  return WeightFunction(std::move(breakpoints), std::move(values));
}

}  // namespace monometric
