#pragma once

#include "monometric/chentsov.hpp"
#include "monometric/linalg.hpp"

namespace monometric {

using TangentMatrix = ComplexMatrix;

inline constexpr double kStateTol = 1e-10;
inline constexpr double kStatePositivityFloor = 1e-10;

/// A point of the open state space: Hermitian, unit trace, strictly
/// positive definite. Construction throws NotAState otherwise.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix matrix, double positivity_floor = kStatePositivityFloor);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dimension() const noexcept { return matrix_.rows(); }

 private:
  ComplexMatrix matrix_;
};

struct MetricSpec {
  MCFunction c;
  double big_c = 1.0;  // weight of the diagonal terms, C / lambda_i
};

/// K_rho(A, B) in the eigenbasis of rho = U diag(l) U*:
///   C sum_i conj(A~_ii) B~_ii / l_i + sum_{i != j} c(l_i, l_j) conj(A~_ij) B~_ij
/// with A~ = U* A U. Conjugate-linear in A, linear in B.
Complex metric_form(const MetricSpec& spec, const DensityMatrix& rho, const TangentMatrix& a,
                    const TangentMatrix& b);

/// Real part of metric_form(spec, rho, A, A).
double metric_quadratic(const MetricSpec& spec, const DensityMatrix& rho, const TangentMatrix& a);

}  // namespace monometric
