#pragma once

#include <complex>

#include "aho/errors.hpp"

namespace aho {

using Complex = std::complex<double>;

/// Physical constants of the diffusive anharmonic oscillator, hbar = 1.
///
/// g is the Kerr nonlinearity strength (rad/time) and kappa the
/// phase-space diffusion constant (1/time).  In the interaction picture
/// the pair (g, kappa) fully determines the dynamics; the oscillator
/// frequency, mass and the bath occupation never enter.
struct ModelParams {
  double g = 0.0;
  double kappa = 0.0;
};

inline void check_params(const ModelParams& p) {
  if (!(p.g >= 0.0) || !(p.kappa >= 0.0))
    throw config_error("g and kappa must be non-negative finite reals");
}

}  // namespace aho
