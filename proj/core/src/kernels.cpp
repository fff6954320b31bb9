#include "aho/kernels.hpp"

#include <cassert>
#include <cmath>

namespace aho {

Complex lambda_n(int n, const ModelParams& p) {
  return {2.0 * p.kappa, p.g * n};
}

Complex delta_n(int n, const ModelParams& p) {
  const Complex lam = lambda_n(n, p);
  return std::sqrt(lam * lam - 4.0 * p.kappa * p.kappa);
}

namespace detail {

namespace {

// cosh and sinh/x around x = 0, three series terms each in z = x^2.
// Relative truncation error is O(z^3/5040), far below double rounding
// at the switch threshold.
Complex cosh_series(Complex z) { return 1.0 + z / 2.0 + z * z / 24.0; }
Complex sinhc_series(Complex z) { return 1.0 + z / 6.0 + z * z / 120.0; }

}  // namespace

// The hyperbolic ratios are evaluated with the growing exponential
// factored out (q = e^{-2 delta t}, |q| <= 1 on the principal branch),
// so large Re(delta t) cannot overflow cosh/sinh into inf/inf.
QuantumKernels quantum_direct(Complex lambda, Complex delta, double t,
                              double kappa) {
  const Complex z = delta * t;
  const Complex q = std::exp(-2.0 * z);
  const Complex br = delta * (1.0 + q) + lambda * (1.0 - q);
  return {2.0 * kappa * (1.0 - q) / br, 2.0 * delta * std::exp(-z) / br};
}

QuantumKernels quantum_series(Complex lambda, Complex delta, double t,
                              double kappa) {
  const Complex z = (delta * delta) * (t * t);
  const Complex den = cosh_series(z) + lambda * t * sinhc_series(z);
  return {2.0 * kappa * t * sinhc_series(z) / den, 1.0 / den};
}

ClassicalKernels classical_direct(Complex s, Complex a_plus, Complex a_minus,
                                  double t) {
  const Complex z = 2.0 * t * s;
  const Complex q = std::exp(-2.0 * z);
  const Complex br = 4.0 * s * (1.0 + q) + a_plus * (1.0 - q);
  return {8.0 * s * std::exp(-z) / br, a_minus * (1.0 - q) / br};
}

ClassicalKernels classical_series(Complex s, Complex a_plus, Complex a_minus,
                                  double t) {
  const Complex z = (2.0 * t * s) * (2.0 * t * s);
  const Complex den = 2.0 * cosh_series(z) + a_plus * t * sinhc_series(z);
  return {2.0 / den, a_minus * t * sinhc_series(z) / den};
}

}  // namespace detail

namespace {

detail::QuantumKernels quantum_pair(int n, double t, const ModelParams& p) {
  assert(t >= 0.0);
  const Complex lam = lambda_n(n, p);
  const Complex del = delta_n(n, p);
  if (std::abs(del) * t < detail::kDegenerateThreshold)
    return detail::quantum_series(lam, del, t, p.kappa);
  return detail::quantum_direct(lam, del, t, p.kappa);
}

}  // namespace

Complex gamma_n(int n, double t, const ModelParams& p) {
  return quantum_pair(n, t, p).gamma;
}

Complex zeta_n(int n, double t, const ModelParams& p) {
  return quantum_pair(n, t, p).zeta;
}

ClassicalKernels classical_kernels(int n, double t, const ModelParams& p) {
  assert(t >= 0.0);
  const Complex s = std::sqrt(Complex(0.0, p.g * p.kappa * n));
  const Complex a_plus(4.0 * p.kappa, p.g * n);
  const Complex a_minus(4.0 * p.kappa, -p.g * n);
  if (std::abs(s) * 2.0 * t < detail::kDegenerateThreshold)
    return detail::classical_series(s, a_plus, a_minus, t);
  return detail::classical_direct(s, a_plus, a_minus, t);
}

KernelTable::KernelTable(const ModelParams& p, double t, int nmax)
    : params_(p), t_(t), nmax_(nmax) {
  assert(nmax >= 0);
  const std::size_t size = 2 * static_cast<std::size_t>(nmax) + 1;
  gamma_.resize(size);
  zeta_.resize(size);
  u_.resize(size);
  v_.resize(size);
  // Lambda_{-n} = conj(Lambda_n) makes every kernel conjugate-symmetric
  // in n; mirroring keeps the table exactly so.
  for (int n = 0; n <= nmax; ++n) {
    const auto q = quantum_pair(n, t, p);
    const auto c = classical_kernels(n, t, p);
    gamma_[idx(n)] = q.gamma;
    zeta_[idx(n)] = q.zeta;
    u_[idx(n)] = c.u;
    v_[idx(n)] = c.v;
    gamma_[idx(-n)] = std::conj(q.gamma);
    zeta_[idx(-n)] = std::conj(q.zeta);
    u_[idx(-n)] = std::conj(c.u);
    v_[idx(-n)] = std::conj(c.v);
  }
}

}  // namespace aho
