#pragma once

#include <cstdint>
#include <random>

#include "monometric/linalg.hpp"
#include "monometric/weight.hpp"

namespace monometric {

using Rng = std::mt19937_64;

/// Counter-based seed splitting: every (seed, stream, index) triple maps to
/// an independent 64-bit seed through splitmix64 finalization. All sampling
/// in the library derives its generators this way so that results do not
/// depend on evaluation order or thread count.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index = 0);

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index = 0) {
  return Rng(derive_seed(seed, stream, index));
}

/// Entries with independent standard normal real and imaginary parts.
ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng);

/// (G + G*) / 2 for Ginibre G.
ComplexMatrix random_hermitian(std::size_t n, Rng& rng);

/// Haar-ish unitary from Gram-Schmidt on a Ginibre matrix.
ComplexMatrix random_unitary(std::size_t n, Rng& rng);

/// (G G* + floor I) normalized to unit trace.
ComplexMatrix random_density(std::size_t n, Rng& rng, double floor = 0.05);

double uniform(Rng& rng, double lo = 0.0, double hi = 1.0);

/// Step function with 1..max_intervals pieces, uniform breakpoints and
/// uniform values in [0,1].
WeightFunction random_step_weight(Rng& rng, std::size_t max_intervals = 5);

}  // namespace monometric
