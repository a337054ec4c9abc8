#pragma once

#include "imaginarity/density.hpp"

namespace imag {

/// Parameters of the unified (alpha, beta)-relative entropy: alpha in [0, 1], beta real.
struct EntropyParams {
  double alpha;
  double beta;
};

/// Which closed form of the unified entropy applies, in dispatch priority order.
enum class EntropyBranch {
  umegaki,        // alpha = 1
  renyi,          // beta = 0
  tsallis,        // beta = 1
  inverse_alpha,  // beta = 1/alpha
  generic,
};

/// Equality tests use a 1e-12 tolerance. Throws ParamOutOfRange when alpha
/// lies outside [0, 1] or a parameter is not finite.
EntropyBranch select_branch(const EntropyParams& p);

/// How a support violation (supp rho not inside supp sigma) is reported by the
/// relative-entropy branch.
enum class SupportPolicy { throw_error, infinity };

/// D_alpha^beta(rho || sigma), dispatched by select_branch.
double unified_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                                const EntropyParams& p,
                                SupportPolicy policy = SupportPolicy::throw_error);

/// tr(rho^alpha sigma^(1-alpha)) extended to alpha = 0, where rho^0 is the
/// support projector of rho.
double unified_trace_kernel(const DensityMatrix& rho, const DensityMatrix& sigma, double alpha);

/// (T^beta - 1) / ((alpha - 1) beta). Requires alpha in (0, 1), beta != 0, T >= 0.
double h_alpha_beta(double t, double alpha, double beta);

/// log2(T) / (alpha - 1).
double renyi_branch(double t, double alpha);

/// (T - 1) / (alpha - 1).
double tsallis_branch(double t, double alpha);

/// The beta = 1/alpha branch taken literally: the defining formula with alpha
/// replaced by 1/alpha, i.e. (T^(1/alpha) - 1) / (1/alpha - 1). Nonpositive for T <= 1.
double inverse_alpha_branch(double t, double alpha);

/// tr(rho log2 rho) - tr(rho log2 sigma).
double umegaki(const DensityMatrix& rho, const DensityMatrix& sigma,
               SupportPolicy policy = SupportPolicy::throw_error);

/// Parameters of the alpha-z fidelity: 0 < max(alpha, 1 - alpha) <= z < 1.
struct AlphaZParams {
  double alpha;
  double z;

  void validate() const;
};

/// tr[(sigma^((1-alpha)/2z) rho^(alpha/z) sigma^((1-alpha)/2z))^z].
double alpha_z_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma, const AlphaZParams& p);

}  // namespace imag
