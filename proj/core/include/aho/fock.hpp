#pragma once

#include <Eigen/Dense>

#include "aho/model.hpp"

namespace aho {

/// Truncated Fock-space density matrix, rho(m, n) = <m|rho|n>.
///
/// Invariants maintained by every constructor/evolver in this project:
/// Hermitian to 1e-12, real trace within the truncation tail of 1,
/// diagonal real and >= -1e-10.
struct FockDensity {
  int nmax = 0;
  Eigen::MatrixXcd rho;  // (nmax+1) x (nmax+1)
};

/// Truncation that keeps the coherent-state Poisson tail negligible:
/// ceil(|a|^2 + 8 sqrt(|a|^2 + 1)) + 4.  Tail mass above it is below
/// 1e-9 for |alpha0| <= 5.
int default_nmax(Complex alpha0);

/// Poisson(mean) mass strictly above nmax, summed term by term in the
/// log domain.
double poisson_tail(double mean, int nmax);

/// Fock amplitudes <m|beta> for m = 0..nmax, via log-gamma so that
/// nmax of a few hundred cannot overflow the factorial roots.
Eigen::VectorXcd coherent_amplitudes(Complex beta, int nmax);

/// Projector |alpha0><alpha0| truncated at nmax.  Throws
/// truncation_error when the discarded tail exceeds tail_tol.
FockDensity coherent_density(Complex alpha0, int nmax, double tail_tol = 1e-6);

/// trace(rho^2); assumes Hermitian rho (all producers here guarantee it).
double purity(const FockDensity& state);

/// <beta|rho|beta>.  Throws truncation_error when beta reaches beyond
/// the truncation *and* the state has boundary population, i.e. when the
/// overlap cannot be trusted.
double fidelity_coherent(const FockDensity& state, Complex beta,
                         double tail_tol = 1e-6);

}  // namespace aho
