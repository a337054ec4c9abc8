#pragma once

#include "imaginarity/matrix.hpp"
#include "imaginarity/spectral.hpp"

namespace imag {

/// A validated quantum state: Hermitian, unit trace, positive semidefinite.
/// Immutable once constructed.
class DensityMatrix {
 public:
  /// Validates against `tol`; throws NotHermitian, NotDensityMatrix (trace)
  /// or NotPSD. The stored matrix is the Hermitian part of `m`.
  explicit DensityMatrix(const ComplexMatrix& m, const Tolerances& tol = {});

  const ComplexMatrix& mat() const { return mat_; }
  std::size_t dim() const { return mat_.dim(); }

  /// Eigendecomposition computed at construction.
  const EigenSystem& spectrum() const { return spectrum_; }

 private:
  ComplexMatrix mat_;
  EigenSystem spectrum_;
};

/// Entrywise complex conjugate (the state rho*).
DensityMatrix conjugate(const DensityMatrix& rho);

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// p A (+) (1-p) B. Throws ParamOutOfRange unless p is in [0, 1].
DensityMatrix direct_sum(double p, const DensityMatrix& a, const DensityMatrix& b);

DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b, Keep keep);

/// Re tr(rho^alpha sigma^(1-alpha)) for alpha in (0, 1). Throws
/// NumericalError if the imaginary residue exceeds 1e-10.
double trace_product_power(const DensityMatrix& rho, const DensityMatrix& sigma, double alpha);

/// Same kernel with rho^alpha supplied precomputed.
double trace_product_power(const ComplexMatrix& rho_pow_alpha, const DensityMatrix& sigma, double alpha);

/// -sum lambda log2 lambda, with 0 log 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);

double purity(const DensityMatrix& rho);

}  // namespace imag
