#include "imaginarity/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "imaginarity/errors.hpp"

namespace imag {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagTol = 1e-13;

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Annihilates a(p,q) with the unitary J = [[c, s e], [-s conj(e), c]] acting
// on the (p,q) plane, where e is the phase of a(p,q).
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const cplx apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const cplx e = apq / mag;
  const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const cplx jpq = s * e;
  const cplx jqp = -s * std::conj(e);
  const std::size_t n = a.dim();

  for (std::size_t k = 0; k < n; ++k) {
    const cplx akp = a(k, p), akq = a(k, q);
    a(k, p) = akp * c + akq * jqp;
    a(k, q) = akp * jpq + akq * c;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const cplx apk = a(p, k), aqk = a(q, k);
    a(p, k) = c * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const cplx vkp = v(k, p), vkq = v(k, q);
    v(k, p) = vkp * c + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * c;
  }
}

}  // namespace

EigenSystem eigh(const ComplexMatrix& h, const Tolerances& tol) {
  const double defect = hermiticity_defect(h);
  if (!(defect <= tol.herm_tol)) {
    throw NotHermitian("eigh: hermiticity defect " + std::to_string(defect) +
                       " exceeds tolerance");
  }
  const std::size_t n = h.dim();
  ComplexMatrix a = h;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const cplx avg = 0.5 * (h(i, j) + std::conj(h(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double threshold = kOffDiagTol * std::max(1.0, frobenius_norm(a));

  int sweep = 0;
  while (off_diagonal_norm(a) >= threshold) {
    if (++sweep > kMaxSweeps) {
      throw NoConvergence("eigh: no convergence after " + std::to_string(kMaxSweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });
  EigenSystem es{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    es.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) es.vectors(i, k) = v(i, order[k]);
  }
  return es;
}

ComplexMatrix spectral_apply(const EigenSystem& es, const std::function<double(double)>& f) {
  const std::size_t n = es.vectors.dim();
  std::vector<double> fv(n);
  for (std::size_t k = 0; k < n; ++k) fv[k] = f(es.values[k]);
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (fv[k] == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const cplx vik = es.vectors(i, k) * fv[k];
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(es.vectors(j, k));
    }
  }
  return out;
}

ComplexMatrix mat_pow(const EigenSystem& es, double p, const Tolerances& tol) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw InvalidExponent("mat_pow: exponent " + std::to_string(p) + " outside (0, 1]");
  }
  double scale = 1.0;
  for (double lam : es.values) {
    if (lam < -tol.psd_tol) {
      throw NotPSD("mat_pow: eigenvalue " + std::to_string(lam) + " below -psd_tol");
    }
    scale = std::max(scale, std::abs(lam));
  }
  const double zero = kRoundoffZero * scale;
  return spectral_apply(es, [p, zero](double lam) { return lam <= zero ? 0.0 : std::pow(lam, p); });
}

ComplexMatrix mat_pow(const ComplexMatrix& h, double p, const Tolerances& tol) {
  return mat_pow(eigh(h, tol), p, tol);
}

ComplexMatrix support_projector(const EigenSystem& es, double cutoff) {
  return spectral_apply(es, [cutoff](double lam) { return lam > cutoff ? 1.0 : 0.0; });
}

}  // namespace imag
