#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace cavlqu {

using Complex = std::complex<double>;

/// Dense row-major complex matrix.
///
/// Most of the library works with square matrices (states, observables,
/// unitaries); rectangular shapes appear only for isometries. Sizes stay
/// small (at most 16x16 in practice), so storage is a flat vector and all
/// products are naive triple loops.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  explicit ComplexMatrix(std::size_t dim) : ComplexMatrix(dim, dim) {}

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  /// |v><v| for a column vector v.
  static ComplexMatrix outer(std::span<const Complex> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  /// Side length of a square matrix. Throws BadDimension otherwise.
  std::size_t dim() const;

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> data() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;
  bool all_finite() const;

  /// max |m - m^dagger| over entries.
  double hermiticity_error() const;
  /// (m + m^dagger) / 2
  ComplexMatrix hermitian_part() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix m);

/// Matrix-vector product.
std::vector<Complex> matvec(const ComplexMatrix& m, std::span<const Complex> v);

/// Kronecker product: result[i*rb + k, j*cb + l] = a[i, j] * b[k, l].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Tr(a * b) without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest absolute entrywise difference. Shapes must match.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace cavlqu
