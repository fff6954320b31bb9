#pragma once

#include <vector>

#include "aho/model.hpp"

namespace aho {

// Closed-form c-number kernels of the disentangled evolution
// superoperator, for the quantum (gamma, zeta) and classical (u, v)
// problems.  All four are even in the internal square root, so the
// principal branch is used throughout; see the branch-invariance tests.

/// Lambda_n = i g n + 2 kappa.
Complex lambda_n(int n, const ModelParams& p);

/// Principal square root of Lambda_n^2 - 4 kappa^2.  Every downstream
/// kernel is even in this quantity, so the branch choice is immaterial.
Complex delta_n(int n, const ModelParams& p);

/// gamma_n(t) = 2 kappa sinh(D t) / (D cosh(D t) + Lambda sinh(D t)),
/// D = delta_n.  Degenerate limit 2 kappa t / (1 + Lambda t) as D -> 0.
Complex gamma_n(int n, double t, const ModelParams& p);

/// zeta_n(t) = D / (D cosh(D t) + Lambda sinh(D t)), limit 1/(1 + Lambda t).
Complex zeta_n(int n, double t, const ModelParams& p);

struct ClassicalKernels {
  Complex u;
  Complex v;
};

/// With s = sqrt(i g kappa n):
///   u_n(t) = 4s / (4s cosh(2ts) + (4k + ign) sinh(2ts))
///   v_n(t) = (4k - ign) sinh(2ts) / (4s cosh(2ts) + (4k + ign) sinh(2ts))
/// Degenerate limit (s -> 0): u -> 1/(1 + (4k+ign)t/2), v -> (4k-ign)t/2 * u.
ClassicalKernels classical_kernels(int n, double t, const ModelParams& p);

namespace detail {

// Direct and small-argument evaluations parameterized on the square
// root, so tests can probe both branches and the switch boundary.
struct QuantumKernels {
  Complex gamma;
  Complex zeta;
};

QuantumKernels quantum_direct(Complex lambda, Complex delta, double t,
                              double kappa);
QuantumKernels quantum_series(Complex lambda, Complex delta, double t,
                              double kappa);

ClassicalKernels classical_direct(Complex s, Complex a_plus, Complex a_minus,
                                  double t);
ClassicalKernels classical_series(Complex s, Complex a_plus, Complex a_minus,
                                  double t);

// Below this |argument| the hyperbolic ratios are evaluated by series;
// the printed formulas are 0/0 at n = 0.
inline constexpr double kDegenerateThreshold = 1e-6;

}  // namespace detail

/// Immutable table of all four kernels for differences |n| <= nmax at a
/// fixed (params, t).  The propagator touches each difference O(nmax^2)
/// times, so values are materialized once here.  Safe for concurrent
/// reads after construction.
class KernelTable {
 public:
  KernelTable(const ModelParams& p, double t, int nmax);

  Complex gamma(int n) const { return gamma_[idx(n)]; }
  Complex zeta(int n) const { return zeta_[idx(n)]; }
  Complex u(int n) const { return u_[idx(n)]; }
  Complex v(int n) const { return v_[idx(n)]; }

  const ModelParams& params() const { return params_; }
  double time() const { return t_; }
  int nmax() const { return nmax_; }

 private:
  std::size_t idx(int n) const { return static_cast<std::size_t>(n + nmax_); }

  ModelParams params_;
  double t_;
  int nmax_;
  std::vector<Complex> gamma_, zeta_, u_, v_;
};

}  // namespace aho
