#include "imaginarity/monotones.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>

#include "imaginarity/errors.hpp"
#include "imaginarity/nelder_mead.hpp"

namespace imag {

namespace {

constexpr double kRealTol = 1e-12;
constexpr double kSingularTol = 1e-9;

double clamp_unit(double t) { return std::clamp(t, 0.0, 1.0); }

double pow0(double x, double e) { return x <= 0.0 ? 0.0 : std::pow(x, e); }

// Eigenvalue powers snap round-off sized values to zero, as mat_pow does.
double eig_pow(double lam, double e) { return lam <= kRoundoffZero ? 0.0 : std::pow(lam, e); }

DensityMatrix qubit_from_s(double s1, double s3) { return bloch_to_density({s1, 0.0, s3}); }

MEResult free_state_result(const DensityMatrix& rho, MeMethod method) {
  return {0.0, rho, method, 0, 1.0, true, {"input is a real state"}};
}

// sigma = R R^T / tr(R R^T) for a row-major real d x d parameter block.
std::optional<DensityMatrix> state_from_params(std::span<const double> x, std::size_t d) {
  ComplexMatrix s(d);
  double tr = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < d; ++k) acc += x[i * d + k] * x[j * d + k];
      s(i, j) = acc;
      if (i == j) tr += acc;
    }
  if (!(tr > 1e-300) || !std::isfinite(tr)) return std::nullopt;
  s *= 1.0 / tr;
  return DensityMatrix(s);
}

}  // namespace

void MonotoneParams::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ParamOutOfRange("alpha = " + std::to_string(alpha) + " outside (0, 1)");
  }
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw ParamOutOfRange("beta = " + std::to_string(beta) + " outside (0, 1]");
  }
}

double mh(const DensityMatrix& rho, const MonotoneParams& p) {
  p.validate();
  if (is_real_state(rho, kRealTol)) return 0.0;
  const double t = clamp_unit(trace_product_power(rho, conjugate(rho), p.alpha));
  return h_alpha_beta(t, p.alpha, p.beta);
}

double mh_pure(const std::vector<cplx>& psi, const MonotoneParams& p) {
  p.validate();
  double nrm2 = 0.0;
  cplx overlap{};
  for (const auto& v : psi) {
    nrm2 += std::norm(v);
    overlap += std::conj(v) * std::conj(v);
  }
  if (psi.empty() || std::abs(std::sqrt(nrm2) - 1.0) > 1e-10) {
    throw NotNormalized("mh_pure: state vector is not normalized");
  }
  const double t = clamp_unit(std::norm(overlap));
  return (std::pow(t, p.beta) - 1.0) / ((p.alpha - 1.0) * p.beta);
}

std::optional<double> qubit_conjugate_trace(const BlochVector& v, double alpha) {
  const double r = v.norm();
  const double rm = r - v.r3, rp = r + v.r3;
  if (r < kSingularTol || std::abs(rm) < kSingularTol || std::abs(rp) < kSingularTol) return std::nullopt;
  const double r1s = v.r1 * v.r1, r2s = v.r2 * v.r2;
  const double minus_term = std::pow(r - r2s / rm, 2) + r1s * r2s / (rm * rm);
  const double plus_term = std::pow(r - r2s / rp, 2) + r1s * r2s / (rp * rp);
  const double cross = eig_pow(1.0 - r, alpha) * eig_pow(1.0 + r, 1.0 - alpha) +
                       eig_pow(1.0 - r, 1.0 - alpha) * eig_pow(1.0 + r, alpha);
  return ((1.0 - r) * minus_term + (1.0 + r) * plus_term + r2s * cross) / (2.0 * r * r);
}

double mh_qubit_closed_form(const BlochVector& v, const MonotoneParams& p) {
  p.validate();
  if (!(v.norm() <= 1.0 + 1e-12)) throw BlochOutOfBall("mh_qubit_closed_form: |r| > 1");
  if (v.r2 == 0.0) return 0.0;
  const auto t = qubit_conjugate_trace(v, p.alpha);
  if (!t) return mh(bloch_to_density(v), p);
  return (std::pow(clamp_unit(*t), p.beta) - 1.0) / ((p.alpha - 1.0) * p.beta);
}

void Lemma3Problem::validate() const {
  const double r2 = b * b + c * c;
  if (!(alpha > 0.0 && alpha < 1.0)) throw PreconditionViolated("lemma3: alpha outside (0, 1)");
  if (!(r2 > 0.0)) throw PreconditionViolated("lemma3: requires B^2 + C^2 > 0");
  if (!(a > std::sqrt(r2))) throw PreconditionViolated("lemma3: requires A > sqrt(B^2 + C^2)");
}

double Lemma3Problem::objective(double x, double theta) const {
  const double lo = pow0(x, 1.0 - alpha), hi = pow0(1.0 - x, 1.0 - alpha);
  return a * (lo + hi) + (b * std::sin(theta) + c * std::cos(theta)) * (hi - lo);
}

Lemma3Solution lemma3_maximize(const Lemma3Problem& prob) {
  prob.validate();
  const double rad = std::hypot(prob.b, prob.c);
  const double ratio = (prob.a + rad) / (prob.a - rad);
  const double x0 = 1.0 / (std::pow(ratio, 1.0 / prob.alpha) + 1.0);
  double theta0 = std::atan2(prob.b, prob.c);
  if (theta0 < 0.0) theta0 += 2.0 * std::numbers::pi;
  const double f_max = (prob.a + rad) * std::pow(1.0 - x0, 1.0 - prob.alpha) +
                       (prob.a - rad) * pow0(x0, 1.0 - prob.alpha);
  return {x0, theta0, f_max};
}

std::string to_string(MeMethod m) {
  switch (m) {
    case MeMethod::qubit_analytic:
      return "qubit_analytic";
    case MeMethod::spectral:
      return "spectral";
    case MeMethod::numeric:
      return "numeric";
  }
  return "unknown";
}

void OptimizerConfig::validate() const {
  if (grid_resolution < 1 || restarts < 1 || max_iters < 1 || !(value_tol > 0.0) || !(simplex_tol > 0.0)) {
    throw ParamOutOfRange("optimizer configuration values must be positive");
  }
}

MEResult me_qubit_closed_form(const BlochVector& v, const MonotoneParams& p) {
  p.validate();
  const DensityMatrix rho = bloch_to_density(v);
  const double r = v.norm();
  if (r == 0.0 || std::abs(v.r2) <= kRealTol) return free_state_result(rho, MeMethod::qubit_analytic);

  const double alpha = p.alpha;
  const double lam1 = (1.0 - r) / 2.0, lam2 = (1.0 + r) / 2.0;
  const double a = 0.5 * (eig_pow(lam1, alpha) + eig_pow(lam2, alpha));
  const double spread = eig_pow(lam2, alpha) - eig_pow(lam1, alpha);
  const double b = v.r1 / (2.0 * r) * spread;
  const double c = v.r3 / (2.0 * r) * spread;

  if (b * b + c * c == 0.0) {
    const double t = std::pow(2.0, alpha) * a;
    return {h_alpha_beta(t, alpha, p.beta),
            bloch_to_density({0.0, 0.0, 0.0}),
            MeMethod::qubit_analytic,
            0,
            t,
            true,
            {"B = C = 0: maximally mixed minimizer"}};
  }

  const Lemma3Solution sol = lemma3_maximize({a, b, c, alpha});
  const double c0 = 1.0 - 2.0 * sol.x0;
  const double rad = std::hypot(b, c);
  const DensityMatrix aligned = qubit_from_s(c0 * b / rad, c0 * c / rad);
  const DensityMatrix negated = qubit_from_s(c0 * b / rad, -c0 * c / rad);
  const double t_aligned = trace_product_power(rho, aligned, alpha);
  const double t_negated = trace_product_power(rho, negated, alpha);
  const bool keep_aligned = t_aligned >= t_negated;
  std::vector<std::string> notes{
      keep_aligned ? "minimizer sign: s3 aligned with C (larger trace)"
                   : "minimizer sign: s3 opposite to C (larger trace)",
      "trace aligned=" + std::to_string(t_aligned) + " negated=" + std::to_string(t_negated)};
  const double t = clamp_unit(sol.f_max);
  return {h_alpha_beta(t, alpha, p.beta), keep_aligned ? aligned : negated, MeMethod::qubit_analytic, 0, t,
          true, std::move(notes)};
}

MEResult me_spectral(const DensityMatrix& rho, const MonotoneParams& p) {
  p.validate();
  if (is_real_state(rho, kRealTol)) return free_state_result(rho, MeMethod::spectral);
  const ComplexMatrix y = real_part(mat_pow(rho.spectrum(), p.alpha));
  const EigenSystem ys = eigh(y);
  const double inv = 1.0 / p.alpha;
  ComplexMatrix sigma = spectral_apply(ys, [inv](double lam) { return pow0(lam, inv); });
  double norm = 0.0;
  for (double lam : ys.values) norm += pow0(lam, inv);
  sigma *= 1.0 / norm;
  sigma = real_part(sigma);
  const double t = clamp_unit(std::pow(norm, p.alpha));
  return {h_alpha_beta(t, p.alpha, p.beta), DensityMatrix(sigma), MeMethod::spectral, 0, t, true, {}};
}

MEResult me_numeric(const DensityMatrix& rho, const MonotoneParams& p, const OptimizerConfig& cfg) {
  p.validate();
  cfg.validate();
  const std::size_t d = rho.dim();
  if (d < 2) throw DimMismatch("me_numeric: dimension must be at least 2");
  if (is_real_state(rho, kRealTol)) return free_state_result(rho, MeMethod::numeric);

  const ComplexMatrix rho_alpha = mat_pow(rho.spectrum(), p.alpha);
  auto objective = [&](std::span<const double> x) {
    const auto sigma = state_from_params(x, d);
    if (!sigma) return 1.0;
    return -trace_product_power(rho_alpha, *sigma, p.alpha);
  };

  std::vector<std::vector<double>> starts;
  {
    const ComplexMatrix root = real_part(mat_pow(real_part(rho.mat()), 0.5));
    std::vector<double> x(d * d), eye(d * d, 0.0);
    for (std::size_t i = 0; i < d * d; ++i) x[i] = root.entries()[i].real();
    for (std::size_t i = 0; i < d; ++i) eye[i * d + i] = 1.0;
    starts.push_back(std::move(x));
    starts.push_back(std::move(eye));
  }
  Rng rng(cfg.rng_seed);
  while (starts.size() < static_cast<std::size_t>(std::max(cfg.restarts, 2))) {
    std::vector<double> best;
    double best_val = std::numeric_limits<double>::infinity();
    for (int g = 0; g < cfg.grid_resolution; ++g) {
      std::vector<double> cand(d * d);
      for (auto& v : cand) v = rng.normal();
      const double val = objective(cand);
      if (val < best_val) {
        best_val = val;
        best = std::move(cand);
      }
    }
    starts.push_back(std::move(best));
  }

  NelderMeadOptions opts;
  opts.max_iters = cfg.max_iters;
  opts.value_tol = cfg.value_tol;
  int total_iters = 0;
  bool all_converged = true;
  std::optional<NelderMeadResult> best;
  std::size_t best_index = 0;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    NelderMeadResult res = nelder_mead_minimize(objective, starts[i], opts);
    total_iters += res.iterations;
    all_converged = all_converged && res.converged;
    // Ties resolve to the lower restart index.
    if (!best || res.value < best->value) {
      best = std::move(res);
      best_index = i;
    }
  }

  // Polish: restart the simplex around the incumbent with shrinking steps.
  double step = 0.05;
  for (int round = 0; round < 6; ++round, step *= 0.2) {
    opts.initial_step = step;
    NelderMeadResult res = nelder_mead_minimize(objective, best->x, opts);
    total_iters += res.iterations;
    if (res.value < best->value) best = std::move(res);
  }

  const double t = clamp_unit(-best->value);
  MEResult out{h_alpha_beta(t, p.alpha, p.beta),
               *state_from_params(best->x, d),
               MeMethod::numeric,
               total_iters,
               t,
               all_converged,
               {"best restart index " + std::to_string(best_index) + " of " + std::to_string(starts.size())}};
  if (!all_converged) out.diagnostics.push_back("some restarts hit max_iters; best-so-far reported");
  return out;
}

MEResult me(const DensityMatrix& rho, const MonotoneParams& p, const OptimizerConfig& cfg) {
  p.validate();
  cfg.validate();
  if (rho.dim() == 1) return free_state_result(rho, MeMethod::spectral);
  if (rho.dim() == 2) return me_qubit_closed_form(density_to_bloch(rho), p);
  return me_spectral(rho, p);
}

double m_relative_entropy(const DensityMatrix& rho) {
  const DensityMatrix sym(0.5 * (rho.mat() + transpose(rho.mat())));
  return von_neumann_entropy(sym) - von_neumann_entropy(rho);
}

double m_tsallis(const DensityMatrix& rho, double u) {
  if (!(u > 0.0 && u < 1.0)) throw ParamOutOfRange("m_tsallis: u outside (0, 1)");
  if (is_real_state(rho, kRealTol)) return 0.0;
  return 1.0 - clamp_unit(trace_product_power(rho, conjugate(rho), u));
}

double m_alpha_z(const DensityMatrix& rho, const AlphaZParams& p) {
  p.validate();
  if (is_real_state(rho, kRealTol)) return 0.0;
  return 1.0 - clamp_unit(alpha_z_fidelity(rho, conjugate(rho), p));
}

double werner_mh_closed_form(double k, const MonotoneParams& p) {
  p.validate();
  if (!(k >= 0.0 && k <= 1.0)) throw ParamOutOfRange("Werner parameter k outside [0, 1]");
  const double a = p.alpha;
  const double t = (pow0(3.0 * k + 1.0, a) * pow0(1.0 - k, 1.0 - a) +
                    pow0(3.0 * k + 1.0, 1.0 - a) * pow0(1.0 - k, a) - 2.0 * k + 6.0) /
                   8.0;
  return h_alpha_beta(t, a, p.beta);
}

double werner_mh_spectral_form(double k, const MonotoneParams& p) {
  p.validate();
  if (!(k >= 0.0 && k <= 1.0)) throw ParamOutOfRange("Werner parameter k outside [0, 1]");
  const double a = p.alpha;
  const double w1 = (1.0 - k) / 4.0, w2 = (1.0 + 3.0 * k) / 4.0;
  const double t = 2.0 * w1 + pow0(w1, 1.0 - a) * pow0(w2, a) + pow0(w1, a) * pow0(w2, 1.0 - a);
  return h_alpha_beta(clamp_unit(t), a, p.beta);
}

double werner_linear_entropy(double k) {
  if (!(k >= 0.0 && k <= 1.0)) throw ParamOutOfRange("Werner parameter k outside [0, 1]");
  return 0.75 * (1.0 - k * k);
}

}  // namespace imag
