#pragma once

#include <functional>
#include <vector>

#include "imaginarity/matrix.hpp"

namespace imag {

/// Eigenpairs of a Hermitian matrix. Eigenvalues ascend; column k of
/// `vectors` is the unit eigenvector for `values[k]`.
struct EigenSystem {
  std::vector<double> values;
  ComplexMatrix vectors;
};

/// Cyclic complex Jacobi. Converges when the off-diagonal Frobenius norm
/// drops below 1e-13 (relative to max(1, ||H||_F)); at most 100 sweeps.
/// Throws NotHermitian or NoConvergence.
EigenSystem eigh(const ComplexMatrix& h, const Tolerances& tol = {});

/// V diag(f(lambda)) V^dagger.
ComplexMatrix spectral_apply(const EigenSystem& es, const std::function<double(double)>& f);

/// H^p for PSD H and p in (0, 1], with 0^p = 0. Eigenvalues in
/// [-psd_tol, 0) are clipped to zero; anything lower throws NotPSD.
/// Eigenvalues up to kRoundoffZero * max(1, max |lambda|) are also treated
/// as zero, since x^p amplifies round-off near 0 for small p.
inline constexpr double kRoundoffZero = 1e-14;

ComplexMatrix mat_pow(const ComplexMatrix& h, double p, const Tolerances& tol = {});
ComplexMatrix mat_pow(const EigenSystem& es, double p, const Tolerances& tol = {});

/// Orthogonal projector onto the eigenvectors with eigenvalue > cutoff.
ComplexMatrix support_projector(const EigenSystem& es, double cutoff);

}  // namespace imag
