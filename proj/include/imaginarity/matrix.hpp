#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace imag {

using cplx = std::complex<double>;

/// Numerical tolerances used when validating states and operators.
struct Tolerances {
  double herm_tol = 1e-10;
  double trace_tol = 1e-10;
  double psd_tol = 1e-9;
  double real_tol = 1e-12;

  /// Throws ParamOutOfRange unless every field is finite and nonnegative.
  void validate() const;
};

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  /// Zero matrix of the given dimension (dim >= 1).
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<cplx> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t dim() const { return dim_; }

  cplx& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const cplx& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  std::span<const cplx> entries() const { return data_; }
  std::span<cplx> entries() { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx scale);

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t dim_;
  std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(ComplexMatrix m, cplx scale);
ComplexMatrix operator*(cplx scale, ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

cplx trace(const ComplexMatrix& m);

/// tr(A B) without forming the product.
cplx trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix conjugate(const ComplexMatrix& m);
ComplexMatrix transpose(const ComplexMatrix& m);
ComplexMatrix dagger(const ComplexMatrix& m);

/// Entrywise real part, as a complex matrix with zero imaginary parts.
ComplexMatrix real_part(const ComplexMatrix& m);

/// Kronecker product; the first factor is the major index.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Block-diagonal [[a, 0], [0, b]].
ComplexMatrix block_diagonal(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Keep { first, second };

/// Reduces a (dA*dB)-dimensional operator onto one factor. Throws DimMismatch.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b, Keep keep);

/// max_ij |a_ij - b_ij|. Throws DimMismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_ij |m_ij - conj(m_ji)|.
double hermiticity_defect(const ComplexMatrix& m);

/// max_ij |Im m_ij|.
double max_imag(const ComplexMatrix& m);

double frobenius_norm(const ComplexMatrix& m);

}  // namespace imag
