#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "monometric/linalg.hpp"
#include "monometric/metric.hpp"

namespace monometric {

inline constexpr double kTracePreservationTol = 1e-10;
inline constexpr double kChannelOutputFloor = 1e-8;

/// Completely positive map X -> sum_i K_i X K_i*, each K_i of shape m x n.
/// Construction checks sum_i K_i* K_i = I_n (NotTracePreserving otherwise).
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<ComplexMatrix> operators, double tol = kTracePreservationTol);

  std::size_t input_dimension() const noexcept { return operators_.front().cols(); }
  std::size_t output_dimension() const noexcept { return operators_.front().rows(); }
  std::span<const ComplexMatrix> operators() const noexcept { return operators_; }

  /// ||sum_i K_i* K_i - I||_F.
  double trace_preservation_defect() const;

 private:
  std::vector<ComplexMatrix> operators_;
};

ComplexMatrix apply_channel(const KrausChannel& channel, const ComplexMatrix& x);

/// Stinespring construction: orthonormalize the columns of an (m k) x n
/// Ginibre matrix and slice the isometry into k blocks of m rows. Resamples
/// up to 10 times on rank deficiency, then throws DegenerateSample.
KrausChannel random_channel(std::size_t n, std::size_t m, std::size_t k, std::uint64_t seed);

KrausChannel unitary_channel(const ComplexMatrix& u);

/// Projections onto the computational basis vectors of C^n.
KrausChannel pinching_channel(std::size_t n);

struct MonotonicityTrial {
  double lhs;    // K_{T(rho)}(T(A), T(A))
  double rhs;    // K_rho(A, A)
  double slack;  // rhs - lhs
};

/// Throws NotAState if T(rho) has an eigenvalue <= 1e-8.
MonotonicityTrial monotonicity_trial(const MetricSpec& spec, const KrausChannel& channel,
                                     const DensityMatrix& rho, const TangentMatrix& a);

struct ContractionConfig {
  int trials = 500;
  std::uint64_t seed = 0;
  std::vector<std::size_t> input_dims = {2, 3};
  std::vector<std::size_t> output_dims = {2, 3, 4};
  bool unitary_only = false;  // T(X) = U X U*, m = n
};

struct ContractionReport {
  int trials = 0;
  int rejected = 0;
  double worst_slack = 0.0;      // most negative rhs - lhs
  double max_abs_slack = 0.0;
  std::size_t worst_trial = 0;
};

/// Seeded trial loop for K_{T(rho)}(T(A),T(A)) <= K_rho(A,A). Each trial
/// draws rho, a channel and A (Hermitian or general, 50/50) from
/// derive_seed(seed, ., trial); trials with a near-singular T(rho) are
/// redrawn and counted in `rejected`.
ContractionReport run_contraction_trials(const MetricSpec& spec, const ContractionConfig& config);

}  // namespace monometric
