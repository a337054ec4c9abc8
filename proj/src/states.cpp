#include "imaginarity/states.hpp"

#include <cmath>
#include <string>

#include "imaginarity/errors.hpp"

namespace imag {

namespace {

constexpr double kBlochSlack = 1e-12;
constexpr double kProbabilityFloor = 1e-14;
constexpr double kCompletenessTol = 1e-10;

const cplx kI{0.0, 1.0};

void require_unit_interval(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw ParamOutOfRange(std::string(name) + " = " + std::to_string(x) + " outside [0, 1]");
  }
}

DensityMatrix normalized_gram(const ComplexMatrix& g) {
  ComplexMatrix rho = g * dagger(g);
  rho *= 1.0 / trace(rho).real();
  return DensityMatrix(rho);
}

// Orthonormalizes the d columns of a (rows x d) block stored column-major,
// two passes of modified Gram-Schmidt.
void orthonormalize_columns(std::vector<std::vector<cplx>>& cols) {
  for (std::size_t k = 0; k < cols.size(); ++k) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < k; ++j) {
        cplx dot{};
        for (std::size_t i = 0; i < cols[k].size(); ++i) dot += std::conj(cols[j][i]) * cols[k][i];
        for (std::size_t i = 0; i < cols[k].size(); ++i) cols[k][i] -= dot * cols[j][i];
      }
    }
    double nrm = 0.0;
    for (const auto& v : cols[k]) nrm += std::norm(v);
    nrm = std::sqrt(nrm);
    for (auto& v : cols[k]) v /= nrm;
  }
}

KrausSet stacked_isometry(std::size_t d, std::size_t n_kraus, Rng& rng, bool complex_entries) {
  if (d == 0 || n_kraus == 0) throw ParamOutOfRange("random kraus: d and n_kraus must be >= 1");
  std::vector<std::vector<cplx>> cols(d, std::vector<cplx>(n_kraus * d));
  for (auto& col : cols)
    for (auto& v : col) {
      const double re = rng.normal();
      v = complex_entries ? cplx(re, rng.normal()) : cplx(re, 0.0);
    }
  orthonormalize_columns(cols);
  KrausSet ks;
  for (std::size_t j = 0; j < n_kraus; ++j) {
    ComplexMatrix k(d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) k(r, c) = cols[c][j * d + r];
    ks.ops.push_back(std::move(k));
  }
  return ks;
}

void require_channel_dim(const DensityMatrix& rho, const KrausSet& ch) {
  ch.validate();
  if (ch.dim() != rho.dim()) {
    throw DimMismatch("channel acts on dimension " + std::to_string(ch.dim()) + ", state has " +
                      std::to_string(rho.dim()));
  }
}

}  // namespace

double BlochVector::norm() const { return std::sqrt(r1 * r1 + r2 * r2 + r3 * r3); }

DensityMatrix bloch_to_density(const BlochVector& v) {
  if (!(v.norm() <= 1.0 + kBlochSlack)) {
    throw BlochOutOfBall("Bloch vector length " + std::to_string(v.norm()) + " exceeds 1");
  }
  return DensityMatrix(ComplexMatrix{{0.5 * (1.0 + v.r3), 0.5 * cplx(v.r1, -v.r2)},
                                     {0.5 * cplx(v.r1, v.r2), 0.5 * (1.0 - v.r3)}});
}

BlochVector density_to_bloch(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw DimMismatch("density_to_bloch requires a qubit state");
  const auto& m = rho.mat();
  return {2.0 * m(1, 0).real(), 2.0 * m(1, 0).imag(), (m(0, 0) - m(1, 1)).real()};
}

DensityMatrix werner(double k) {
  require_unit_interval(k, "Werner parameter k");
  ComplexMatrix m(4);
  m(0, 0) = m(3, 3) = (1.0 - k) / 4.0;
  m(1, 1) = m(2, 2) = (1.0 + k) / 4.0;
  m(1, 2) = kI * (k / 2.0);
  m(2, 1) = -kI * (k / 2.0);
  return DensityMatrix(m);
}

DensityMatrix isotropic(double f) {
  require_unit_interval(f, "isotropic parameter F");
  ComplexMatrix m(4);
  m(0, 0) = m(3, 3) = (2.0 * f + 1.0) / 6.0;
  m(1, 1) = m(2, 2) = (1.0 - f) / 3.0;
  m(0, 3) = kI * ((4.0 * f - 1.0) / 6.0);
  m(3, 0) = -kI * ((4.0 * f - 1.0) / 6.0);
  return DensityMatrix(m);
}

DensityMatrix remark1_state() {
  ComplexMatrix m(4);
  m(0, 0) = 0.5;
  m(0, 3) = -0.5 * kI;
  m(3, 0) = 0.5 * kI;
  m(3, 3) = 0.5;
  return DensityMatrix(m);
}

DensityMatrix pure_state(const std::vector<cplx>& psi) {
  if (psi.empty()) throw DimMismatch("pure_state: empty vector");
  double nrm2 = 0.0;
  for (const auto& v : psi) nrm2 += std::norm(v);
  if (std::abs(std::sqrt(nrm2) - 1.0) > 1e-10) {
    throw NotNormalized("pure_state: vector norm " + std::to_string(std::sqrt(nrm2)));
  }
  ComplexMatrix m(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i)
    for (std::size_t j = 0; j < psi.size(); ++j) m(i, j) = psi[i] * std::conj(psi[j]);
  return DensityMatrix(m);
}

Rng::Rng(std::uint64_t seed) : engine_(derive(seed, 0)) {}

double Rng::normal() { return normal_(engine_); }

double Rng::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

std::size_t Rng::index(std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
}

std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

DensityMatrix random_density(std::size_t d, Rng& rng) {
  if (d == 0) throw ParamOutOfRange("random_density: d must be >= 1");
  ComplexMatrix g(d);
  for (auto& v : g.entries()) {
    const double re = rng.normal();
    v = cplx(re, rng.normal());
  }
  return normalized_gram(g);
}

DensityMatrix random_density(std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(d, rng);
}

DensityMatrix random_pure(std::size_t d, Rng& rng) {
  if (d == 0) throw ParamOutOfRange("random_pure: d must be >= 1");
  std::vector<cplx> psi(d);
  double nrm2 = 0.0;
  for (auto& v : psi) {
    const double re = rng.normal();
    v = cplx(re, rng.normal());
    nrm2 += std::norm(v);
  }
  for (auto& v : psi) v /= std::sqrt(nrm2);
  return pure_state(psi);
}

DensityMatrix random_pure(std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  return random_pure(d, rng);
}

DensityMatrix random_real_density(std::size_t d, Rng& rng) {
  if (d == 0) throw ParamOutOfRange("random_real_density: d must be >= 1");
  ComplexMatrix g(d);
  for (auto& v : g.entries()) v = rng.normal();
  return normalized_gram(g);
}

DensityMatrix random_real_density(std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  return random_real_density(d, rng);
}

BlochVector random_bloch(Rng& rng) {
  double x, y, z;
  do {
    x = rng.uniform(-1.0, 1.0);
    y = rng.uniform(-1.0, 1.0);
    z = rng.uniform(-1.0, 1.0);
  } while (x * x + y * y + z * z > 1.0);
  return {x, y, z};
}

double KrausSet::completeness_defect() const {
  ComplexMatrix sum(dim());
  for (const auto& k : ops) sum += dagger(k) * k;
  return max_abs_diff(sum, ComplexMatrix::identity(dim()));
}

bool KrausSet::is_real(double tol) const {
  for (const auto& k : ops)
    if (max_imag(k) > tol) return false;
  return true;
}

void KrausSet::validate() const {
  if (ops.empty()) throw DimMismatch("Kraus set is empty");
  for (const auto& k : ops)
    if (k.dim() != ops.front().dim()) throw DimMismatch("Kraus operators differ in dimension");
  const double defect = completeness_defect();
  if (defect > kCompletenessTol) {
    throw NotDensityMatrix("Kraus completeness defect " + std::to_string(defect));
  }
}

KrausSet random_real_kraus(std::size_t d, std::size_t n_kraus, Rng& rng) {
  return stacked_isometry(d, n_kraus, rng, false);
}

KrausSet random_real_kraus(std::size_t d, std::size_t n_kraus, std::uint64_t seed) {
  Rng rng(seed);
  return random_real_kraus(d, n_kraus, rng);
}

KrausSet random_kraus(std::size_t d, std::size_t n_kraus, Rng& rng) {
  return stacked_isometry(d, n_kraus, rng, true);
}

KrausSet dephasing_channel(std::size_t d) {
  KrausSet ks;
  for (std::size_t j = 0; j < d; ++j) {
    ComplexMatrix k(d);
    k(j, j) = 1.0;
    ks.ops.push_back(std::move(k));
  }
  return ks;
}

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausSet& ch) {
  require_channel_dim(rho, ch);
  ComplexMatrix out(rho.dim());
  for (const auto& k : ch.ops) out += k * rho.mat() * dagger(k);
  return DensityMatrix(out);
}

bool is_real_state(const DensityMatrix& rho, double tol) { return max_imag(rho.mat()) <= tol; }

std::vector<SelectiveOutcome> kraus_selective_outcomes(const DensityMatrix& rho, const KrausSet& ch) {
  require_channel_dim(rho, ch);
  std::vector<SelectiveOutcome> outcomes;
  for (const auto& k : ch.ops) {
    ComplexMatrix branch = k * rho.mat() * dagger(k);
    const double p = trace(branch).real();
    if (p < kProbabilityFloor) continue;
    branch *= 1.0 / p;
    outcomes.push_back({p, DensityMatrix(branch)});
  }
  return outcomes;
}

}  // namespace imag
