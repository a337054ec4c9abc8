#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "imaginarity/entropy.hpp"
#include "imaginarity/states.hpp"

namespace imag {

/// alpha in (0, 1), beta in (0, 1]; both ranges enforced by validate().
struct MonotoneParams {
  double alpha;
  double beta;

  void validate() const;
};

// --- Conjugate-based monotone -------------------------------------------

/// h(tr(rho^alpha (rho*)^(1-alpha))) with the trace clamped to [0, 1].
/// Zero exactly on real states.
double mh(const DensityMatrix& rho, const MonotoneParams& p);

/// Pure-state form (|<psi|psi*>|^(2 beta) - 1) / ((alpha - 1) beta).
/// Throws NotNormalized.
double mh_pure(const std::vector<cplx>& psi, const MonotoneParams& p);

/// Explicit Bloch-vector expression of tr(rho^alpha (rho*)^(1-alpha)).
/// Empty when a denominator r -/+ r3 is below 1e-9 (or r = 0).
std::optional<double> qubit_conjugate_trace(const BlochVector& v, double alpha);

/// mh through the explicit Bloch-vector kernel; falls back to mh() where the
/// kernel is singular. Real states (r2 = 0) give 0.
double mh_qubit_closed_form(const BlochVector& v, const MonotoneParams& p);

// --- Two-variable maximization behind the qubit minimizer ---------------

/// f(x, theta) = A[x^(1-a) + (1-x)^(1-a)] + (B sin theta + C cos theta)[(1-x)^(1-a) - x^(1-a)]
/// on x in [0, 1/2], theta in [0, 2 pi].
struct Lemma3Problem {
  double a;
  double b;
  double c;
  double alpha;

  /// Throws PreconditionViolated unless A > sqrt(B^2 + C^2) > 0 and alpha in (0, 1).
  void validate() const;
  double objective(double x, double theta) const;
};

struct Lemma3Solution {
  double x0;
  double theta0;
  double f_max;
};

/// Closed-form maximizer. theta0 is the angle with sin = B/R and cos = C/R
/// (R = sqrt(B^2 + C^2)), reported in [0, 2 pi).
Lemma3Solution lemma3_maximize(const Lemma3Problem& prob);

// --- Minimization-based monotone ----------------------------------------

enum class MeMethod { qubit_analytic, spectral, numeric };

std::string to_string(MeMethod m);

struct OptimizerConfig {
  /// Random candidates screened per random restart.
  int grid_resolution = 16;
  int restarts = 8;
  int max_iters = 20000;
  double value_tol = 1e-10;
  double simplex_tol = 1e-10;
  std::uint64_t rng_seed = 0;

  void validate() const;
};

struct MEResult {
  double value;
  /// Real state attaining the minimum.
  DensityMatrix minimizer;
  MeMethod method;
  int iterations;
  /// max over real sigma of tr(rho^alpha sigma^(1-alpha)).
  double achieved_trace;
  bool converged = true;
  /// Free-form notes (sign resolution of the qubit minimizer, restart statistics).
  std::vector<std::string> diagnostics;
};

/// Closed-form qubit solution. The minimizer's (s1, s3) direction is taken
/// aligned with (B, C) and compared against the variant with s3 negated; the
/// one with the larger trace is kept and the choice is noted in diagnostics.
MEResult me_qubit_closed_form(const BlochVector& v, const MonotoneParams& p);

/// Exact maximizer in any dimension. For real sigma the kernel only sees
/// Y = Re(rho^alpha), and Hoelder's inequality (exponents 1/alpha, 1/(1-alpha))
/// gives max tr(Y sigma^(1-alpha)) = (tr Y^(1/alpha))^alpha, attained at
/// sigma = Y^(1/alpha) / tr Y^(1/alpha).
MEResult me_spectral(const DensityMatrix& rho, const MonotoneParams& p);

/// Multi-start Nelder-Mead over sigma = R R^T / tr(R R^T), R a real d x d
/// matrix. Starts include Re(rho) and I/d; restarts are reduced by value then
/// by index, and the best point is polished by further simplex runs.
MEResult me_numeric(const DensityMatrix& rho, const MonotoneParams& p, const OptimizerConfig& cfg = {});

/// Dispatch: d = 1 is trivially free, d = 2 uses the qubit closed form,
/// larger d the exact spectral maximizer.
MEResult me(const DensityMatrix& rho, const MonotoneParams& p, const OptimizerConfig& cfg = {});

// --- Comparison measures -------------------------------------------------

/// S((rho + rho^T)/2) - S(rho).
double m_relative_entropy(const DensityMatrix& rho);

/// 1 - tr(rho^u (rho*)^(1-u)), u in (0, 1).
double m_tsallis(const DensityMatrix& rho, double u);

/// 1 - f_{alpha,z}(rho, rho*).
double m_alpha_z(const DensityMatrix& rho, const AlphaZParams& p);

// --- Werner family -------------------------------------------------------

/// Reference closed form for the Werner family
///   h( [ (3k+1)^a (1-k)^(1-a) + (3k+1)^(1-a) (1-k)^a - 2k + 6 ] / 8 ),
/// evaluated literally. It does not agree with mh(werner(k)) for k > 0; see
/// werner_mh_spectral_form for the expression that does.
double werner_mh_closed_form(double k, const MonotoneParams& p);

/// mh(werner(k)) from the spectrum {w1 (x3), w2}: the conjugate swaps the two
/// eigenvectors of the coherent block, so T = 2 w1 + w1^(1-a) w2^a + w1^a w2^(1-a).
double werner_mh_spectral_form(double k, const MonotoneParams& p);

/// 1 - tr(rho_w^2) = 3(1 - k^2)/4.
double werner_linear_entropy(double k);

}  // namespace imag
