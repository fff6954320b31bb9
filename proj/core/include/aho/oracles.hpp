#pragma once

#include <cstdint>
#include <vector>

#include "aho/phasespace.hpp"
#include "aho/propagator.hpp"

namespace aho {

/// Configuration of the stochastic classical oracle.  Runs are
/// reproducible bit-for-bit given (seed, ntraj, dt): trajectory k draws
/// from splitmix64 substream k of the seed.
struct SdeConfig {
  std::int64_t ntraj = 100000;
  double dt = 1e-3;
  std::uint64_t seed = 0x5eed;
};

/// Brute-force check of the analytic propagator: classic fixed-step RK4
/// on master_rhs from 0 to t, final step shortened to land exactly on t.
/// Throws truncation_error when dt violates the RK4 stability region for
/// the truncated generator's spectrum.
FockDensity integrate_master(const FockDensity& state0, double t,
                             const ModelParams& params, double dt);

/// Largest generator eigenvalue magnitude the RK4 step must resolve.
double master_spectral_bound(int nmax, const ModelParams& params);

/// Euler-Maruyama ensemble of the drift-diffusion process
///   d alpha = -2 i g |alpha|^2 alpha dt + sqrt(kappa) (dW1 + i dW2),
/// started from the coherent-state Gaussian around alpha0 (std 1/2 per
/// coordinate).  The noise is additive, so the scheme is exact in the
/// stochastic term.  Returns the final point of every trajectory.
std::vector<Complex> sde_ensemble(Complex alpha0, double t,
                                  const ModelParams& params,
                                  const SdeConfig& cfg);

/// Nearest-node binning of an ensemble onto the grid geometry,
/// normalized so the binned mass integrates to 1/2 (the project's mass
/// convention).  Out-of-window points are dropped.
PhaseGrid ensemble_histogram(const std::vector<Complex>& points,
                             const PhaseGrid& grid);

}  // namespace aho
