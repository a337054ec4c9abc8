#include "imaginarity/entropy.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "imaginarity/errors.hpp"

namespace imag {

namespace {

constexpr double kBranchTol = 1e-12;
constexpr double kSupportCutoff = 1e-12;
constexpr double kTraceSlack = 1e-12;

bool near(double a, double b) { return std::abs(a - b) <= kBranchTol; }

double checked_kernel(double t) {
  if (!(t >= -kTraceSlack) || !std::isfinite(t)) {
    throw ParamOutOfRange("trace kernel value " + std::to_string(t) + " is negative or not finite");
  }
  return t < 0.0 ? 0.0 : t;
}

void require_open_unit(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ParamOutOfRange("alpha = " + std::to_string(alpha) + " outside (0, 1)");
  }
}

}  // namespace

EntropyBranch select_branch(const EntropyParams& p) {
  if (!std::isfinite(p.alpha) || !std::isfinite(p.beta)) {
    throw ParamOutOfRange("entropy parameters must be finite");
  }
  if (p.alpha < -kBranchTol || p.alpha > 1.0 + kBranchTol) {
    throw ParamOutOfRange("alpha = " + std::to_string(p.alpha) + " outside [0, 1]");
  }
  if (near(p.alpha, 1.0)) return EntropyBranch::umegaki;
  if (near(p.beta, 0.0)) return EntropyBranch::renyi;
  if (near(p.beta, 1.0)) return EntropyBranch::tsallis;
  if (p.alpha > kBranchTol && near(p.beta, 1.0 / p.alpha)) return EntropyBranch::inverse_alpha;
  return EntropyBranch::generic;
}

double unified_trace_kernel(const DensityMatrix& rho, const DensityMatrix& sigma, double alpha) {
  if (rho.dim() != sigma.dim()) throw DimMismatch("relative entropy: dimension mismatch");
  if (alpha <= kBranchTol) {
    return trace_of_product(support_projector(rho.spectrum(), kSupportCutoff), sigma.mat()).real();
  }
  return trace_product_power(rho, sigma, alpha);
}

double h_alpha_beta(double t, double alpha, double beta) {
  require_open_unit(alpha);
  if (!std::isfinite(beta) || beta == 0.0) throw ParamOutOfRange("h_alpha_beta: beta must be nonzero");
  t = checked_kernel(t);
  return (std::pow(t, beta) - 1.0) / ((alpha - 1.0) * beta);
}

double renyi_branch(double t, double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw ParamOutOfRange("renyi_branch: alpha outside [0, 1)");
  t = checked_kernel(t);
  if (t == 0.0) return std::numeric_limits<double>::infinity();
  return std::log2(t) / (alpha - 1.0);
}

double tsallis_branch(double t, double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw ParamOutOfRange("tsallis_branch: alpha outside [0, 1)");
  return (checked_kernel(t) - 1.0) / (alpha - 1.0);
}

double inverse_alpha_branch(double t, double alpha) {
  require_open_unit(alpha);
  const double inv = 1.0 / alpha;
  return (std::pow(checked_kernel(t), inv) - 1.0) / (inv - 1.0);
}

double umegaki(const DensityMatrix& rho, const DensityMatrix& sigma, SupportPolicy policy) {
  if (rho.dim() != sigma.dim()) throw DimMismatch("umegaki: dimension mismatch");
  const EigenSystem& ss = sigma.spectrum();
  // Weight of rho on the kernel of sigma.
  const ComplexMatrix kernel =
      spectral_apply(ss, [](double lam) { return lam > kSupportCutoff ? 0.0 : 1.0; });
  const double leak = trace_of_product(rho.mat(), kernel).real();
  if (leak > kSupportCutoff) {
    if (policy == SupportPolicy::infinity) return std::numeric_limits<double>::infinity();
    throw SupportError("umegaki: supp(rho) is not contained in supp(sigma)");
  }
  const ComplexMatrix log_sigma =
      spectral_apply(ss, [](double lam) { return lam > kSupportCutoff ? std::log2(lam) : 0.0; });
  double rho_log_rho = 0.0;
  for (double lam : rho.spectrum().values)
    if (lam > 0.0) rho_log_rho += lam * std::log2(lam);
  return rho_log_rho - trace_of_product(rho.mat(), log_sigma).real();
}

double unified_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                                const EntropyParams& p, SupportPolicy policy) {
  const EntropyBranch branch = select_branch(p);
  if (branch == EntropyBranch::umegaki) return umegaki(rho, sigma, policy);
  const double alpha = std::max(p.alpha, 0.0);
  const double t = unified_trace_kernel(rho, sigma, alpha);
  switch (branch) {
    case EntropyBranch::renyi:
      return renyi_branch(t, alpha);
    case EntropyBranch::tsallis:
      return tsallis_branch(t, alpha);
    case EntropyBranch::inverse_alpha:
      return inverse_alpha_branch(t, alpha);
    case EntropyBranch::generic:
      if (alpha == 0.0) {
        const double tt = checked_kernel(t);
        return (std::pow(tt, p.beta) - 1.0) / (-p.beta);
      }
      return h_alpha_beta(t, alpha, p.beta);
    case EntropyBranch::umegaki:
      break;
  }
  return 0.0;
}

void AlphaZParams::validate() const {
  if (!(std::isfinite(alpha) && std::isfinite(z))) throw ParamOutOfRange("alpha-z parameters must be finite");
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParamOutOfRange("alpha-z: alpha outside (0, 1)");
  if (!(std::max(alpha, 1.0 - alpha) <= z + kBranchTol && z < 1.0)) {
    throw ParamOutOfRange("alpha-z: need max(alpha, 1 - alpha) <= z < 1, got z = " + std::to_string(z));
  }
}

double alpha_z_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma, const AlphaZParams& p) {
  p.validate();
  if (rho.dim() != sigma.dim()) throw DimMismatch("alpha_z_fidelity: dimension mismatch");
  const ComplexMatrix side = mat_pow(sigma.spectrum(), (1.0 - p.alpha) / (2.0 * p.z));
  const ComplexMatrix middle = mat_pow(rho.spectrum(), std::min(1.0, p.alpha / p.z));
  const ComplexMatrix inner = side * middle * side;
  const cplx t = trace(mat_pow(inner, p.z));
  return t.real();
}

}  // namespace imag
