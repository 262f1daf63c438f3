#include "monometric/metric.hpp"

#include <cmath>
#include <string>

#include "monometric/error.hpp"

namespace monometric {

DensityMatrix::DensityMatrix(ComplexMatrix matrix, double positivity_floor)
    : matrix_(std::move(matrix)) {
  if (!matrix_.is_square() || matrix_.empty())
    throw Error(ErrorKind::NotAState, "density matrix must be square and non-empty");
  if (!is_hermitian(matrix_, kStateTol))
    throw Error(ErrorKind::NotAState, "density matrix is not Hermitian");
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex(1.0)) > kStateTol)
    throw Error(ErrorKind::NotAState, "density matrix trace is " + std::to_string(tr.real()));
  const double smallest = min_eigenvalue(matrix_, kStateTol);
  if (!(smallest > positivity_floor))
    throw Error(ErrorKind::NotAState,
                "density matrix not positive definite (min eigenvalue " +
                    std::to_string(smallest) + ")");
}

Complex metric_form(const MetricSpec& spec, const DensityMatrix& rho, const TangentMatrix& a,
                    const TangentMatrix& b) {
  const std::size_t n = rho.dimension();
  if (a.rows() != n || a.cols() != n || b.rows() != n || b.cols() != n)
    throw Error(ErrorKind::DimensionMismatch, "tangent matrices must match the state dimension");

  const HermitianEigen eig = hermitian_eig(rho.matrix(), kStateTol);
  const ComplexMatrix u_adj = eig.eigenvectors.adjoint();
  const ComplexMatrix a_rot = u_adj * a * eig.eigenvectors;
  const ComplexMatrix b_rot = u_adj * b * eig.eigenvectors;
  const auto& l = eig.eigenvalues;

  Complex diagonal = 0.0;
  Complex off_diagonal = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    diagonal += std::conj(a_rot(i, i)) * b_rot(i, i) / l[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Complex term = std::conj(a_rot(i, j)) * b_rot(i, j);
      if (term == Complex(0.0)) continue;
      off_diagonal += spec.c(l[i], l[j]) * term;
    }
  }
  return spec.big_c * diagonal + off_diagonal;
}

double metric_quadratic(const MetricSpec& spec, const DensityMatrix& rho, const TangentMatrix& a) {
  return metric_form(spec, rho, a, a).real();
}

}  // namespace monometric
