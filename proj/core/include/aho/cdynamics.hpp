#pragma once

#include "aho/phasespace.hpp"
#include "aho/propagator.hpp"

namespace aho {

/// Expansion coefficients of a classical phase-space distribution in the
/// Pi basis: w = sum c_mn Pi_mn.  Hermitian (w real), diagonal sum equal
/// to the distribution mass under the 1/2 convention.
struct CoefficientTable {
  int nmax = 0;
  Eigen::MatrixXcd c;
};

/// Adopts the Fock coefficients of state0 as the classical initial
/// condition (the t = 0 distributions coincide).  The distribution must
/// be a valid probability density: it is scanned on a window covering
/// the occupied levels and rejected with an invariant_error if it dips
/// below -neg_tol anywhere.
CoefficientTable expand_initial(const FockDensity& state0,
                                double neg_tol = 1e-9);

/// Propagates the coefficients with the classical kernel family; the
/// engine is the one behind evolve().  Throws truncation_error when the
/// diagonal mass drifts by more than mass_tol.
CoefficientTable evolve_classical(const CoefficientTable& coeffs0, double t,
                                  const ModelParams& params,
                                  double mass_tol = 1e-6);

/// Renders w(alpha) on the grid geometry; same folding and reality
/// machinery as wigner_from_density.
PhaseGrid classical_grid(const CoefficientTable& coeffs, const PhaseGrid& grid,
                         double imag_tol = 1e-9);

/// Most negative sample relative to the peak, as a truncation-noise
/// indicator: exact diffusive evolution preserves positivity, so
/// anything beyond ~1e-6 of the maximum signals an inadequate nmax.
double negativity_ratio(const PhaseGrid& grid);

}  // namespace aho
