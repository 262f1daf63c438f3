#include "monometric/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "monometric/error.hpp"

namespace monometric {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorKind::DimensionMismatch,
                "entry count " + std::to_string(entries_.size()) + " != " +
                    std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::zero(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) throw Error(ErrorKind::DimensionMismatch, "trace of non-square matrix");
  Complex sum = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) sum += (*this)(i, i);
  return sum;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(ErrorKind::DimensionMismatch, "matrix difference shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& z : entries_) z *= scalar;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator*(Complex scalar, ComplexMatrix m) { return m *= scalar; }
ComplexMatrix operator*(ComplexMatrix m, Complex scalar) { return m *= scalar; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols() != rhs.rows())
    throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  ComplexMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex(0.0)) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

double frobenius_norm(const ComplexMatrix& m) {
  double sum = 0.0;
  for (const auto& z : m.entries()) sum += std::norm(z);
  return std::sqrt(sum);
}

double hermitian_defect(const ComplexMatrix& m) {
  if (!m.is_square()) return std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) sum += std::norm(m(i, j) - std::conj(m(j, i)));
  return std::sqrt(sum);
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return m.is_square() && hermitian_defect(m) <= tol * (frobenius_norm(m) + 1.0);
}

ComplexMatrix HermitianEigen::reconstruct() const {
  const std::size_t n = eigenvalues.size();
  ComplexMatrix scaled = eigenvectors;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scaled(i, j) *= eigenvalues[j];
  return scaled * eigenvectors.adjoint();
}

namespace {

double off_diagonal_norm2(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) sum += std::norm(a(i, j));
  return sum;
}

// Zeroes a(p,q) with J = [[c, s e], [-s conj(e), c]] acting on the (p,q)
// plane, where e is the phase of a(p,q). A <- J* A J, V <- V J.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double magnitude = std::abs(apq);
  const Complex phase = apq / magnitude;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double tau = (aqq - app) / (2.0 * magnitude);
  double t;
  if (std::abs(tau) > 1e150) {
    t = 0.5 / tau;
  } else {
    t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Complex s_e = s * phase;
  const Complex s_conj_e = s * std::conj(phase);

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s_conj_e * akq;
    a(k, q) = s_e * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s_e * aqk;
    a(q, k) = s_conj_e * apk + c * aqk;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - s_conj_e * vkq;
    v(k, q) = s_e * vkp + c * vkq;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * magnitude;
  a(q, q) = aqq + t * magnitude;
}

}  // namespace

HermitianEigen hermitian_eig(const ComplexMatrix& m, double tol) {
  if (!m.is_square() || m.rows() == 0)
    throw Error(ErrorKind::DimensionMismatch, "eigendecomposition needs a non-empty square matrix");
  if (m.rows() > kMaxEigenDimension)
    throw Error(ErrorKind::DimensionMismatch,
                "dimension " + std::to_string(m.rows()) + " exceeds desk-scale cap 32");
  if (!is_hermitian(m, tol))
    throw Error(ErrorKind::NotHermitian,
                "||M - M*||_F = " + std::to_string(hermitian_defect(m)));

  const std::size_t n = m.rows();
  // Work on the exact Hermitian part.
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a(j, i) = std::conj(a(i, j));
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale2 = std::max(frobenius_norm(a) * frobenius_norm(a),
                                 std::numeric_limits<double>::min());
  constexpr double kOffTol2 = 1e-32;
  bool converged = false;
  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    if (off_diagonal_norm2(a) <= kOffTol2 * scale2) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (std::abs(a(p, q)) > 0.0) jacobi_rotate(a, v, p, q);
  }
  if (!converged && off_diagonal_norm2(a) > kOffTol2 * scale2)
    throw Error(ErrorKind::NoConvergence, "Jacobi sweep cap reached");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  HermitianEigen out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    out.eigenvalues[col] = a(order[col], order[col]).real();
    for (std::size_t row = 0; row < n; ++row) out.eigenvectors(row, col) = v(row, order[col]);
  }
  return out;
}

ComplexMatrix matrix_function(const ComplexMatrix& m, const std::function<double(double)>& phi,
                              SpectralDomain domain) {
  HermitianEigen eig = hermitian_eig(m);
  for (double& lambda : eig.eigenvalues) {
    if (!domain.contains(lambda))
      throw Error(ErrorKind::DomainError,
                  "eigenvalue " + std::to_string(lambda) + " outside function domain");
    const double value = phi(lambda);
    if (!std::isfinite(value))
      throw Error(ErrorKind::DomainError,
                  "function not finite at eigenvalue " + std::to_string(lambda));
    lambda = value;
  }
  ComplexMatrix out = eig.reconstruct();
  const std::size_t n = out.rows();
  for (std::size_t i = 0; i < n; ++i) {
    out(i, i) = out(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (out(i, j) + std::conj(out(j, i)));
      out(i, j) = avg;
      out(j, i) = std::conj(avg);
    }
  }
  return out;
}

double min_eigenvalue(const ComplexMatrix& m, double tol) {
  return hermitian_eig(m, tol).eigenvalues.front();
}

bool orthonormalize_columns(ComplexMatrix& m, double rank_tol) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (cols > rows) return false;
  for (std::size_t j = 0; j < cols; ++j) {
    double original = 0.0;
    for (std::size_t i = 0; i < rows; ++i) original += std::norm(m(i, j));
    original = std::sqrt(original);
    if (original == 0.0) return false;

    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        Complex overlap = 0.0;
        for (std::size_t i = 0; i < rows; ++i) overlap += std::conj(m(i, k)) * m(i, j);
        for (std::size_t i = 0; i < rows; ++i) m(i, j) -= overlap * m(i, k);
      }
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < rows; ++i) norm += std::norm(m(i, j));
    norm = std::sqrt(norm);
    if (norm <= rank_tol * original) return false;
    for (std::size_t i = 0; i < rows; ++i) m(i, j) /= norm;
  }
  return true;
}

}  // namespace monometric
