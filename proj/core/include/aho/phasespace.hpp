#pragma once

#include <vector>

#include "aho/fock.hpp"
#include "aho/model.hpp"

namespace aho {

/// Rectangular sampling window of the complex alpha-plane with one real
/// distribution sample per node.  Row-major storage, Re alpha varying
/// fastest.  Node spacing uses the (n-1) convention, so the corners lie
/// exactly on the window bounds.
struct PhaseGrid {
  double re_min = 0.0, re_max = 0.0, im_min = 0.0, im_max = 0.0;
  int nx = 0, ny = 0;
  std::vector<double> values;

  /// Symmetric square window [-radius, radius]^2, n nodes per axis,
  /// values zero-initialized.
  static PhaseGrid window(double radius, int n);
  static PhaseGrid make(double re_min, double re_max, double im_min,
                        double im_max, int nx, int ny);

  double dx() const { return (re_max - re_min) / (nx - 1); }
  double dy() const { return (im_max - im_min) / (ny - 1); }
  double cell_area() const { return dx() * dy(); }
  double re_at(int ix) const { return re_min + ix * dx(); }
  double im_at(int iy) const { return im_min + iy * dy(); }

  double& at(int ix, int iy) { return values[std::size_t(iy) * nx + ix]; }
  double at(int ix, int iy) const { return values[std::size_t(iy) * nx + ix]; }

  bool same_geometry(const PhaseGrid& other) const;
};

/// Associated Laguerre polynomial L_m^a(x) by the stable three-term
/// upward recurrence in the degree.  Raw polynomial values; for the
/// bounded evaluation used on grids see detail::weighted_laguerre.
double laguerre_assoc(int m, int a, double x);

/// Phase-space basis function: the Weyl transform of |m><n| (hbar = 1),
///   n >= m:  (-1)^m/pi sqrt(m!/n!) e^{-2|a|^2} (2a)^{n-m} L_m^{n-m}(4|a|^2)
/// and the conjugate-mirrored formula for m > n.
Complex pi_mn(int m, int n, Complex alpha);

/// W(alpha) = sum_{m,n} rho_{mn} Pi_mn(alpha) sampled on the geometry of
/// `grid` (values ignored).  Conjugate pairs are folded; the discarded
/// per-point imaginary residue must stay below imag_tol or an
/// invariant_error is thrown.
PhaseGrid wigner_from_density(const FockDensity& state, const PhaseGrid& grid,
                              double imag_tol = 1e-9);

/// Direct evaluation of the evolved coherent-state Wigner function,
/// collapsing the inner kernel sum into the exponential
/// exp(|alpha0|^2 gamma_d) instead of propagating the density matrix.
/// Must agree with wigner_from_density(evolve(...)) pointwise.
PhaseGrid wigner_coherent_evolved(Complex alpha0, double t,
                                  const ModelParams& params,
                                  const PhaseGrid& grid, int nmax = -1,
                                  double imag_tol = 1e-9);

/// Midpoint-rule integral: sum(values) * cell_area.  The basis
/// normalization makes every unit-trace state integrate to 1/2.
double grid_integral(const PhaseGrid& grid);

/// Integral of the negative part: sum(max(0, -value)) * cell_area.
double negativity_volume(const PhaseGrid& grid);

/// L1 distance sum(|a - b|) * cell_area; geometries must match exactly.
double l1_distance(const PhaseGrid& a, const PhaseGrid& b);

namespace detail {

/// Bounded rescaling of the Laguerre polynomial,
///   phi_m^a(x) = sqrt(m!/(m+a)!) x^(a/2) e^(-x/2) L_m^a(x),
/// equal to a displacement-operator matrix element in magnitude and
/// hence always in [-1, 1]; no intermediate in the recurrence can
/// overflow, even at far grid corners.
double weighted_laguerre(int m, int a, double x);

/// sum_{m,n} coeff(m,n) Pi_mn(alpha) on the grid geometry for Hermitian
/// coeff, folding conjugate pairs per point.
PhaseGrid render_expansion(const Eigen::MatrixXcd& coeff,
                           const PhaseGrid& grid, double imag_tol);

}  // namespace detail

}  // namespace aho
