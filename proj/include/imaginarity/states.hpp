#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "imaginarity/density.hpp"

namespace imag {

/// Qubit Bloch vector; valid when its length is at most 1 + 1e-12.
struct BlochVector {
  double r1 = 0.0;
  double r2 = 0.0;
  double r3 = 0.0;

  double norm() const;
};

/// rho = (I + r.sigma) / 2. Throws BlochOutOfBall.
DensityMatrix bloch_to_density(const BlochVector& v);

/// Inverse of bloch_to_density. Throws DimMismatch unless dim == 2.
BlochVector density_to_bloch(const DensityMatrix& rho);

/// Modified Werner state with the imaginary coherence on |01>,|10>.
/// Throws ParamOutOfRange unless k is in [0, 1].
DensityMatrix werner(double k);

/// Modified isotropic state with the imaginary coherence on |00>,|11>.
/// Throws ParamOutOfRange unless f is in [0, 1].
DensityMatrix isotropic(double f);

/// (|00><00| - i|00><11| + i|11><00| + |11><11|) / 2.
DensityMatrix remark1_state();

/// |psi><psi|. Throws NotNormalized if ||psi|| differs from 1 by more than 1e-10.
DensityMatrix pure_state(const std::vector<cplx>& psi);

/// Seeded random source. Streams are deterministic per seed within one build;
/// callers own one instance per thread.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  double normal();
  double uniform(double lo, double hi);
  std::size_t index(std::size_t n);
  std::uint64_t next_u64() { return engine_(); }

  /// Deterministic child seed for stream `stream` of `seed` (SplitMix64 mixing).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// G G^dagger / tr, with G complex Ginibre.
DensityMatrix random_density(std::size_t d, Rng& rng);
DensityMatrix random_density(std::size_t d, std::uint64_t seed);

/// Haar-like random pure state from a normalized complex Gaussian vector.
DensityMatrix random_pure(std::size_t d, Rng& rng);
DensityMatrix random_pure(std::size_t d, std::uint64_t seed);

/// G G^T / tr, with G real Gaussian; always a real (free) state.
DensityMatrix random_real_density(std::size_t d, Rng& rng);
DensityMatrix random_real_density(std::size_t d, std::uint64_t seed);

/// Uniform-in-volume point of the Bloch ball.
BlochVector random_bloch(Rng& rng);

/// Kraus operators of a channel on a d-dimensional system.
struct KrausSet {
  std::vector<ComplexMatrix> ops;

  std::size_t dim() const { return ops.front().dim(); }

  /// max |sum K^dagger K - I|.
  double completeness_defect() const;

  /// True when every operator has all imaginary parts within tol.
  bool is_real(double tol) const;

  /// Throws DimMismatch for ragged or empty sets and NotDensityMatrix when
  /// the completeness defect exceeds 1e-10.
  void validate() const;
};

/// Real Kraus set: a real Gaussian (n d) x d block with orthonormalized
/// columns, sliced into n stacked d x d operators. n = 1 gives an orthogonal matrix.
KrausSet random_real_kraus(std::size_t d, std::size_t n_kraus, Rng& rng);
KrausSet random_real_kraus(std::size_t d, std::size_t n_kraus, std::uint64_t seed);

/// Same construction from a complex Gaussian block (not a free operation in general).
KrausSet random_kraus(std::size_t d, std::size_t n_kraus, Rng& rng);

/// Kraus operators |j><j| of the full dephasing channel.
KrausSet dephasing_channel(std::size_t d);

/// sum K rho K^dagger. Throws DimMismatch.
DensityMatrix apply_channel(const DensityMatrix& rho, const KrausSet& ch);

/// max |Im rho_jk| <= tol.
bool is_real_state(const DensityMatrix& rho, double tol = 1e-12);

struct SelectiveOutcome {
  double probability;
  DensityMatrix state;
};

/// Outcomes (tr K rho K^dagger, normalized post-measurement state); outcomes
/// with probability below 1e-14 are dropped.
std::vector<SelectiveOutcome> kraus_selective_outcomes(const DensityMatrix& rho, const KrausSet& ch);

}  // namespace imag
