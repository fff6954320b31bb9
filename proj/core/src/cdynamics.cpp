#include "aho/cdynamics.hpp"

#include <algorithm>
#include <cmath>

#include "aho/errors.hpp"

namespace aho {

namespace {

// Window radius covering every Fock level with non-negligible
// population, plus four unit widths of Gaussian skirt.
double scan_radius(const FockDensity& state) {
  int top = 0;
  for (int m = 0; m <= state.nmax; ++m)
    if (std::abs(state.rho(m, m)) > 1e-12) top = m;
  return std::sqrt(static_cast<double>(top)) + 4.0;
}

}  // namespace

CoefficientTable expand_initial(const FockDensity& state0, double neg_tol) {
  const PhaseGrid scan = wigner_from_density(
      state0, PhaseGrid::window(scan_radius(state0), 201));
  const auto [lo, hi] =
      std::minmax_element(scan.values.begin(), scan.values.end());
  // Truncating a state at nmax leaves genuine Wigner dips of order
  // sqrt(tail mass), so the rejection floor scales with the peak; a
  // distribution that is negative in substance fails by orders of
  // magnitude (the single-photon dip equals the peak).
  const double floor = std::max(neg_tol, 1e-6 * std::max(*hi, 0.0));
  if (*lo < -floor)
    throw invariant_error(
        "initial distribution is negative (min " + std::to_string(*lo) +
        "); it is not a valid classical probability density");
  CoefficientTable table;
  table.nmax = state0.nmax;
  table.c = state0.rho;
  return table;
}

CoefficientTable evolve_classical(const CoefficientTable& coeffs0, double t,
                                  const ModelParams& params, double mass_tol) {
  if (t < 0.0) throw config_error("evolution time must be non-negative");
  CoefficientTable out;
  out.nmax = coeffs0.nmax;
  out.c = propagate(coeffs0.c, t, params, KernelFamily::Classical);
  const Complex drift = out.c.trace() - coeffs0.c.trace();
  if (std::abs(drift) > mass_tol)
    throw truncation_error("classical coefficient mass drifted by " +
                           std::to_string(std::abs(drift)) +
                           "; truncation nmax=" + std::to_string(out.nmax) +
                           " is inadequate for t=" + std::to_string(t));
  return out;
}

PhaseGrid classical_grid(const CoefficientTable& coeffs, const PhaseGrid& grid,
                         double imag_tol) {
  return detail::render_expansion(coeffs.c, grid, imag_tol);
}

double negativity_ratio(const PhaseGrid& grid) {
  const auto [lo, hi] =
      std::minmax_element(grid.values.begin(), grid.values.end());
  if (*hi <= 0.0) return 0.0;
  return std::max(0.0, -*lo / *hi);
}

}  // namespace aho
