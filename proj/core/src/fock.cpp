#include "aho/fock.hpp"

#include <cmath>

#include "aho/errors.hpp"

namespace aho {

int default_nmax(Complex alpha0) {
  const double a2 = std::norm(alpha0);
  return static_cast<int>(std::ceil(a2 + 8.0 * std::sqrt(a2 + 1.0))) + 4;
}

double poisson_tail(double mean, int nmax) {
  if (mean <= 0.0) return 0.0;
  double below = 0.0;
  for (int m = 0; m <= nmax; ++m)
    below += std::exp(-mean + m * std::log(mean) - std::lgamma(m + 1.0));
  return std::max(0.0, 1.0 - below);
}

Eigen::VectorXcd coherent_amplitudes(Complex beta, int nmax) {
  Eigen::VectorXcd c(nmax + 1);
  const double a2 = std::norm(beta);
  if (a2 == 0.0) {
    c.setZero();
    c(0) = 1.0;
    return c;
  }
  const double lnr = 0.5 * std::log(a2);
  const double phase = std::arg(beta);
  for (int m = 0; m <= nmax; ++m) {
    const double mag = std::exp(-0.5 * a2 + m * lnr - 0.5 * std::lgamma(m + 1.0));
    c(m) = std::polar(mag, m * phase);
  }
  return c;
}

FockDensity coherent_density(Complex alpha0, int nmax, double tail_tol) {
  if (nmax < 0) throw config_error("nmax must be non-negative");
  const double tail = poisson_tail(std::norm(alpha0), nmax);
  if (tail > tail_tol)
    throw truncation_error("coherent state tail mass " + std::to_string(tail) +
                           " above nmax=" + std::to_string(nmax) +
                           " exceeds tolerance");
  const Eigen::VectorXcd c = coherent_amplitudes(alpha0, nmax);
  FockDensity state;
  state.nmax = nmax;
  state.rho = c * c.adjoint();
  return state;
}

double purity(const FockDensity& state) {
  // tr(rho^2) = ||rho||_F^2 for Hermitian rho.
  return state.rho.squaredNorm();
}

double fidelity_coherent(const FockDensity& state, Complex beta,
                         double tail_tol) {
  const double tail = poisson_tail(std::norm(beta), state.nmax);
  const double boundary = std::abs(state.rho(state.nmax, state.nmax));
  if (tail > tail_tol && boundary > tail_tol)
    throw truncation_error(
        "state is truncated too low to evaluate the overlap with beta");
  const Eigen::VectorXcd c = coherent_amplitudes(beta, state.nmax);
  return (c.adjoint() * state.rho * c).value().real();
}

}  // namespace aho
