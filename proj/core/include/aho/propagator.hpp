#pragma once

#include "aho/fock.hpp"
#include "aho/kernels.hpp"

namespace aho {

/// Which kernel pair drives the coefficient propagation.
///
/// Quantum:   (A, B, phase) = (gamma_d, zeta_d, e^{i g t d})
/// Classical: (A, B, phase) = (v_d,     u_d,    1)
///
/// with d the index difference of the propagated element.  The two
/// closed-form solutions are otherwise identical, so both run through
/// the same engine; the shared-engine acceptance test relies on that.
enum class KernelFamily { Quantum, Classical };

/// Propagates a Hermitian coefficient matrix through the closed-form
/// kernel sums, truncating every internal index at the matrix size.
/// Output element (m+l, n+l) accumulates
///   in(m+j, n+j) * sqrt((m+j)!(n+j)!(m+l)!(n+l)!) / (m! n! l! j!)
///   * A_d^{l+j} * B_d^{m+n+1} * phase(d)
/// over l, j >= 0.  Upper triangle computed, lower mirrored by
/// conjugation.  Factorial-root magnitudes are carried in the log
/// domain with the complex phase tracked separately, since they pass
/// through 10^(+-150) before cancelling at nmax around 200.
Eigen::MatrixXcd propagate(const Eigen::MatrixXcd& in, double t,
                           const ModelParams& params, KernelFamily family);

namespace detail {

/// One raw output element without the Hermitian mirroring; used to
/// spot-check the mirrored assembly.
Complex propagate_element(const Eigen::MatrixXcd& in, const KernelTable& kt,
                          KernelFamily family, int row, int col);

}  // namespace detail

/// Element-wise right-hand side of the diffusive master equation:
/// (drho/dt)_{mn} = -i g (m^2 - n^2) rho_{mn}
///   + 2 kappa [ sqrt((m+1)(n+1)) rho_{m+1,n+1} + sqrt(m n) rho_{m-1,n-1}
///               - (m+n+1) rho_{mn} ],
/// out-of-range indices treated as zero.
Eigen::MatrixXcd master_rhs(const FockDensity& state, const ModelParams& params);

/// Analytic evolution of a truncated state under the diffusive master
/// equation.  Throws truncation_error when the propagated trace drifts
/// from the input trace by more than trace_tol.
FockDensity evolve(const FockDensity& state0, double t,
                   const ModelParams& params, double trace_tol = 1e-6);

}  // namespace aho
