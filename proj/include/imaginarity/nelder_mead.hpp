#pragma once

#include <functional>
#include <span>
#include <vector>

namespace imag {

struct NelderMeadOptions {
  int max_iters = 20000;
  /// Stop once max f - min f over the simplex drops below this.
  double value_tol = 1e-10;
  /// Initial simplex edge length along each coordinate.
  double initial_step = 0.1;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value;
  int iterations;
  bool converged;
};

/// Derivative-free minimization with the standard coefficients
/// (reflection 1, expansion 2, contraction 1/2, shrink 1/2).
NelderMeadResult nelder_mead_minimize(const std::function<double(std::span<const double>)>& f,
                                      std::vector<double> x0, const NelderMeadOptions& opts = {});

}  // namespace imag
