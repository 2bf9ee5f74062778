// Dense complex linear algebra for small Hermitian operators.
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qillum {

using Complex = std::complex<double>;

/// Default Hermiticity / validation tolerance (max entry magnitude).
inline constexpr double kDefaultTolerance = 1e-9;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotHermitianError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Square dense complex matrix, row-major.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  /// |psi><psi| for an (unnormalized) vector psi.
  static ComplexMatrix projector(std::span<const Complex> psi);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  std::span<const Complex> entries() const noexcept { return entries_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;

  /// Max entry magnitude of (this - this^dagger).
  double hermitian_defect() const;
  bool is_hermitian(double tol = kDefaultTolerance) const { return hermitian_defect() <= tol; }

  /// Max entry magnitude of (this - other); dims must match.
  double max_abs_diff(const ComplexMatrix& other) const;
  bool approx_equal(const ComplexMatrix& other, double tol) const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) { return lhs *= scale; }
  friend ComplexMatrix operator*(Complex scale, ComplexMatrix rhs) { return rhs *= scale; }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

/// Tr[a^dagger b].
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product; block (i, j) of the result is a(i, j) * b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

enum class TraceSide { Left, Right };

/// Traces out one factor of a (d_left x d_right)-factorized operator.
/// Left removes the left factor (result is d_right x d_right), Right the right one.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t d_left, std::size_t d_right,
                            TraceSide side);

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // columns, orthonormal
};

/// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
///
/// Throws NotHermitianError if the Hermitian defect exceeds `tol`, and
/// ConvergenceError if the sweep cap is exhausted. The input is symmetrized
/// before iterating, so defects below `tol` are absorbed.
EigenDecomposition eigh(const ComplexMatrix& m, double tol = kDefaultTolerance);

/// V diag(values) V^dagger.
ComplexMatrix reconstruct(const EigenDecomposition& decomposition);

/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const ComplexMatrix& m, double tol = kDefaultTolerance);

}  // namespace qillum
