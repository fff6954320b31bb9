#include "aho/phasespace.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numbers>

#include "aho/errors.hpp"
#include "aho/kernels.hpp"

namespace aho {

PhaseGrid PhaseGrid::window(double radius, int n) {
  return make(-radius, radius, -radius, radius, n, n);
}

PhaseGrid PhaseGrid::make(double re_min, double re_max, double im_min,
                          double im_max, int nx, int ny) {
  if (nx < 2 || ny < 2 || !(re_max > re_min) || !(im_max > im_min))
    throw config_error("phase grid needs at least 2x2 nodes and a nonempty window");
  PhaseGrid g;
  g.re_min = re_min;
  g.re_max = re_max;
  g.im_min = im_min;
  g.im_max = im_max;
  g.nx = nx;
  g.ny = ny;
  g.values.assign(std::size_t(nx) * ny, 0.0);
  return g;
}

bool PhaseGrid::same_geometry(const PhaseGrid& o) const {
  return re_min == o.re_min && re_max == o.re_max && im_min == o.im_min &&
         im_max == o.im_max && nx == o.nx && ny == o.ny;
}

double laguerre_assoc(int m, int a, double x) {
  assert(m >= 0 && a >= 0);
  double p0 = 1.0;
  if (m == 0) return p0;
  double p1 = 1.0 + a - x;
  for (int k = 1; k < m; ++k) {
    const double p2 = ((2.0 * k + a + 1.0 - x) * p1 - (k + a) * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

namespace detail {

namespace {

// Seed of the weighted recurrence: phi_0^a(x) = sqrt(x^a e^{-x} / a!),
// the square root of a Poisson weight.
double phi_seed(int a, double x) {
  if (x == 0.0) return a == 0 ? 1.0 : 0.0;
  return std::exp(0.5 * (a * std::log(x) - x - std::lgamma(a + 1.0)));
}

// phi_{m+1} = [(2m+a+1-x) phi_m - sqrt(m(m+a)) phi_{m-1}]
//             / sqrt((m+1)(m+1+a))
double phi_next(int m, int a, double x, double phi_m, double phi_m1) {
  return ((2.0 * m + a + 1.0 - x) * phi_m - std::sqrt(double(m) * (m + a)) * phi_m1) /
         std::sqrt(double(m + 1) * (m + 1 + a));
}

}  // namespace

double weighted_laguerre(int m, int a, double x) {
  double p0 = phi_seed(a, x);
  if (m == 0) return p0;
  double p1 = phi_next(0, a, x, p0, 0.0);
  for (int k = 1; k < m; ++k) {
    const double p2 = phi_next(k, a, x, p1, p0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

PhaseGrid render_expansion(const Eigen::MatrixXcd& coeff, const PhaseGrid& grid,
                           double imag_tol) {
  assert(coeff.rows() == coeff.cols());
  const int dim = static_cast<int>(coeff.rows());
  PhaseGrid out = grid;
  std::fill(out.values.begin(), out.values.end(), 0.0);

  constexpr double inv_pi = std::numbers::inv_pi;
  double worst_residue = 0.0;
  int bad_ix = -1, bad_iy = -1;

#pragma omp parallel for schedule(static)
  for (int iy = 0; iy < out.ny; ++iy) {
    for (int ix = 0; ix < out.nx; ++ix) {
      const double re = out.re_at(ix);
      const double im = out.im_at(iy);
      const double x = 4.0 * (re * re + im * im);
      const double theta = std::atan2(im, re);

      // a = 0 diagonal carries the (tiny) imaginary residue.
      Complex diag(0.0, 0.0);
      {
        double p0 = phi_seed(0, x), p1 = 0.0;
        double sign = 1.0;
        for (int m = 0; m < dim; ++m) {
          if (m > 0) {
            const double p2 = phi_next(m - 1, 0, x, p0, p1);
            p1 = p0;
            p0 = p2;
          }
          diag += coeff(m, m) * (sign * p0);
          sign = -sign;
        }
      }

      double val = diag.real();
      const Complex rot = std::polar(1.0, theta);
      Complex rot_a = rot;
      for (int a = 1; a < dim; ++a, rot_a *= rot) {
        Complex inner(0.0, 0.0);
        double p0 = phi_seed(a, x), p1 = 0.0;
        double sign = 1.0;
        for (int m = 0; m + a < dim; ++m) {
          if (m > 0) {
            const double p2 = phi_next(m - 1, a, x, p0, p1);
            p1 = p0;
            p0 = p2;
          }
          inner += coeff(m, m + a) * (sign * p0);
          sign = -sign;
        }
        val += 2.0 * (inner * rot_a).real();
      }

      out.at(ix, iy) = val * inv_pi;
      const double residue = std::abs(diag.imag()) * inv_pi;
      if (residue > imag_tol) {
#pragma omp critical
        {
          if (residue > worst_residue) {
            worst_residue = residue;
            bad_ix = ix;
            bad_iy = iy;
          }
        }
      }
    }
  }
  if (bad_ix >= 0)
    throw invariant_error("imaginary residue " + std::to_string(worst_residue) +
                          " of the phase-space sum at grid node (" +
                          std::to_string(bad_ix) + "," + std::to_string(bad_iy) +
                          ") exceeds tolerance");
  return out;
}

}  // namespace detail

Complex pi_mn(int m, int n, Complex alpha) {
  assert(m >= 0 && n >= 0);
  const int a = std::abs(n - m);
  const int k = std::min(m, n);
  const double x = 4.0 * std::norm(alpha);
  const double phi = detail::weighted_laguerre(k, a, x);
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  const double theta = (n - m) * std::arg(alpha);
  return std::polar(sign * phi * std::numbers::inv_pi, theta);
}

PhaseGrid wigner_from_density(const FockDensity& state, const PhaseGrid& grid,
                              double imag_tol) {
  return detail::render_expansion(state.rho, grid, imag_tol);
}

PhaseGrid wigner_coherent_evolved(Complex alpha0, double t,
                                  const ModelParams& params,
                                  const PhaseGrid& grid, int nmax,
                                  double imag_tol) {
  if (t < 0.0) throw config_error("evolution time must be non-negative");
  if (nmax < 0) nmax = default_nmax(alpha0);
  const int dim = nmax + 1;
  const KernelTable kt(params, t, nmax);

  const double a2 = std::norm(alpha0);
  const double lnr = a2 > 0.0 ? 0.5 * std::log(a2) : 0.0;
  const double phase0 = std::arg(alpha0);
  std::vector<double> lg(static_cast<std::size_t>(dim));
  for (int k = 0; k < dim; ++k) lg[k] = std::lgamma(k + 1.0);

  // Coefficient of Pi_MN: the inner sum over the original j index is
  // collapsed into exp(|alpha0|^2 gamma_d), which is what makes this
  // route independent of the matrix propagator.
  Eigen::MatrixXcd coeff(dim, dim);
  for (int M = 0; M < dim; ++M) {
    for (int N = M; N < dim; ++N) {
      const int d = M - N;
      const Complex gam = kt.gamma(d);
      const Complex zet = kt.zeta(d);
      Complex acc(0.0, 0.0);
      if (zet != Complex(0.0)) {
        const double lgam =
            gam == Complex(0.0) ? -std::numeric_limits<double>::infinity()
                                : std::log(std::abs(gam));
        const double agam = std::arg(gam);
        const double lzet = std::log(std::abs(zet));
        const double azet = std::arg(zet);
        for (int l = 0; l <= M; ++l) {
          const int m = M - l;
          const int n = N - l;
          if (a2 == 0.0 && (m > 0 || n > 0)) continue;
          if (l > 0 && gam == Complex(0.0)) continue;
          double logmag = -a2 + (m + n) * lnr - lg[m] - lg[n] - lg[l] +
                          0.5 * (lg[M] + lg[N]) + (m + n + 1) * lzet +
                          a2 * gam.real();
          double theta = (m - n) * phase0 + (m + n + 1) * azet +
                         a2 * gam.imag() + params.g * t * d;
          if (l > 0) {
            logmag += l * lgam;
            theta += l * agam;
          }
          acc += std::polar(std::exp(logmag), theta);
        }
      }
      coeff(M, N) = acc;
      if (M != N) coeff(N, M) = std::conj(acc);
    }
  }
  return detail::render_expansion(coeff, grid, imag_tol);
}

double grid_integral(const PhaseGrid& grid) {
  double sum = 0.0;
  for (double v : grid.values) sum += v;
  return sum * grid.cell_area();
}

double negativity_volume(const PhaseGrid& grid) {
  double sum = 0.0;
  for (double v : grid.values)
    if (v < 0.0) sum -= v;
  return sum * grid.cell_area();
}

double l1_distance(const PhaseGrid& a, const PhaseGrid& b) {
  if (!a.same_geometry(b))
    throw invariant_error("grid geometries differ; L1 distance undefined");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    sum += std::abs(a.values[i] - b.values[i]);
  return sum * a.cell_area();
}

}  // namespace aho
