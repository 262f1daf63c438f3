#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <limits>
#include <span>
#include <vector>

namespace monometric {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major. Sized for desk-scale work (n <= 32 for
/// the eigensolver); no expression templates, no aliasing tricks.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix zero(std::size_t rows, std::size_t cols);
  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::initializer_list<double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<const Complex> entries() const noexcept { return entries_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex scalar);

double frobenius_norm(const ComplexMatrix& m);

/// ||M - M*||_F, zero for exactly Hermitian input.
double hermitian_defect(const ComplexMatrix& m);

/// Hermitian within tol, measured relative to ||M||_F + 1.
bool is_hermitian(const ComplexMatrix& m, double tol = 1e-10);

/// Eigendecomposition M = U diag(eigenvalues) U*, eigenvalues ascending.
struct HermitianEigen {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;  // columns

  ComplexMatrix reconstruct() const;
};

inline constexpr double kDefaultHermitianTol = 1e-10;
inline constexpr std::size_t kMaxEigenDimension = 32;
inline constexpr int kMaxJacobiSweeps = 100;

/// Cyclic complex Jacobi. Throws NotHermitian, NoConvergence, or
/// DimensionMismatch (non-square or n > 32).
HermitianEigen hermitian_eig(const ComplexMatrix& m, double tol = kDefaultHermitianTol);

/// Interval on which a scalar function may be applied spectrally.
struct SpectralDomain {
  double lower = -std::numeric_limits<double>::infinity();
  bool lower_open = false;

  static SpectralDomain real_line() { return {}; }
  static SpectralDomain positive() { return {0.0, true}; }

  bool contains(double x) const noexcept {
    return lower_open ? x > lower : x >= lower;
  }
};

/// U diag(phi(lambda_i)) U*. DomainError if an eigenvalue falls outside
/// `domain` or phi returns a non-finite value.
ComplexMatrix matrix_function(const ComplexMatrix& m,
                              const std::function<double(double)>& phi,
                              SpectralDomain domain = SpectralDomain::real_line());

double min_eigenvalue(const ComplexMatrix& m, double tol = kDefaultHermitianTol);

/// Modified Gram-Schmidt (two passes) on the columns of m. Returns false if
/// a column collapses below `rank_tol` relative to its original norm.
bool orthonormalize_columns(ComplexMatrix& m, double rank_tol = 1e-10);

}  // namespace monometric
