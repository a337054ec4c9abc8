#include "imaginarity/density.hpp"

#include <cmath>
#include <string>

#include "imaginarity/errors.hpp"

namespace imag {

namespace {

constexpr double kImagResidueTol = 1e-10;

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  ComplexMatrix out = m;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i; j < m.dim(); ++j) {
      const cplx avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      out(i, j) = avg;
      out(j, i) = std::conj(avg);
    }
  return out;
}

}  // namespace

DensityMatrix::DensityMatrix(const ComplexMatrix& m, const Tolerances& tol)
    : mat_(hermitian_part(m)), spectrum_(eigh(m, tol)) {
  const double tr_err = std::abs(trace(m) - cplx(1.0));
  if (!(tr_err <= tol.trace_tol)) {
    throw NotDensityMatrix("trace deviates from 1 by " + std::to_string(tr_err));
  }
  if (spectrum_.values.front() < -tol.psd_tol) {
    throw NotPSD("smallest eigenvalue " + std::to_string(spectrum_.values.front()) +
                 " below -psd_tol");
  }
}

DensityMatrix conjugate(const DensityMatrix& rho) { return DensityMatrix(conjugate(rho.mat())); }

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(tensor(a.mat(), b.mat()));
}

DensityMatrix direct_sum(double p, const DensityMatrix& a, const DensityMatrix& b) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParamOutOfRange("direct_sum weight " + std::to_string(p) + " outside [0, 1]");
  }
  return DensityMatrix(block_diagonal(p * a.mat(), (1.0 - p) * b.mat()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b, Keep keep) {
  return DensityMatrix(partial_trace(rho.mat(), dim_a, dim_b, keep));
}

double trace_product_power(const ComplexMatrix& rho_pow_alpha, const DensityMatrix& sigma, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ParamOutOfRange("trace_product_power: alpha " + std::to_string(alpha) + " outside (0, 1)");
  }
  const cplx t = trace_of_product(rho_pow_alpha, mat_pow(sigma.spectrum(), 1.0 - alpha));
  if (std::abs(t.imag()) > kImagResidueTol) {
    throw NumericalError("trace_product_power: imaginary residue " + std::to_string(t.imag()));
  }
  return t.real();
}

double trace_product_power(const DensityMatrix& rho, const DensityMatrix& sigma, double alpha) {
  if (rho.dim() != sigma.dim()) throw DimMismatch("trace_product_power: dimension mismatch");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ParamOutOfRange("trace_product_power: alpha " + std::to_string(alpha) + " outside (0, 1)");
  }
  return trace_product_power(mat_pow(rho.spectrum(), alpha), sigma, alpha);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double s = 0.0;
  for (double lam : rho.spectrum().values)
    if (lam > 0.0) s -= lam * std::log2(lam);
  return s;
}

double purity(const DensityMatrix& rho) { return trace_of_product(rho.mat(), rho.mat()).real(); }

}  // namespace imag
