#include "aho/oracles.hpp"

#include <algorithm>
#include <cmath>

#include "aho/errors.hpp"
#include "aho/rng.hpp"

namespace aho {

double master_spectral_bound(int nmax, const ModelParams& params) {
  const double kerr = params.g * double(nmax) * nmax;
  const double diff = 2.0 * params.kappa * (2.0 * nmax + 1.0);
  return std::max({kerr, diff, 1e-300});
}

FockDensity integrate_master(const FockDensity& state0, double t,
                             const ModelParams& params, double dt) {
  if (t < 0.0 || dt <= 0.0)
    throw config_error("integrate_master needs t >= 0 and dt > 0");
  // RK4 stability region reaches ~2.79 on the negative real axis and
  // ~2.83i on the imaginary axis; 2.5 leaves margin for the mixed
  // spectrum of the truncated generator.
  if (dt * master_spectral_bound(state0.nmax, params) > 2.5)
    throw truncation_error("dt=" + std::to_string(dt) +
                           " violates the RK4 stability bound for nmax=" +
                           std::to_string(state0.nmax));

  FockDensity state = state0;
  const auto rhs = [&](const Eigen::MatrixXcd& rho) {
    FockDensity tmp{state0.nmax, rho};
    return master_rhs(tmp, params);
  };

  double remaining = t;
  while (remaining > 0.0) {
    const double h = std::min(dt, remaining);
    const Eigen::MatrixXcd k1 = rhs(state.rho);
    const Eigen::MatrixXcd k2 = rhs(state.rho + 0.5 * h * k1);
    const Eigen::MatrixXcd k3 = rhs(state.rho + 0.5 * h * k2);
    const Eigen::MatrixXcd k4 = rhs(state.rho + h * k3);
    state.rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    remaining -= h;
  }
  return state;
}

std::vector<Complex> sde_ensemble(Complex alpha0, double t,
                                  const ModelParams& params,
                                  const SdeConfig& cfg) {
  if (cfg.ntraj < 1 || cfg.dt <= 0.0)
    throw config_error("sde ensemble needs ntraj >= 1 and dt > 0");
  if (t < 0.0) throw config_error("evolution time must be non-negative");

  const std::int64_t nsteps =
      t > 0.0 ? static_cast<std::int64_t>(std::ceil(t / cfg.dt - 1e-12)) : 0;
  std::vector<Complex> points(static_cast<std::size_t>(cfg.ntraj));

#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < cfg.ntraj; ++k) {
    SplitMix64 rng = SplitMix64::substream(cfg.seed, static_cast<std::uint64_t>(k));
    auto [z1, z2] = normal_pair(rng);
    Complex a = alpha0 + 0.5 * Complex(z1, z2);
    for (std::int64_t step = 0; step < nsteps; ++step) {
      const double h = std::min(cfg.dt, t - step * cfg.dt);
      const Complex drift = Complex(0.0, -2.0 * params.g * std::norm(a)) * a;
      auto [w1, w2] = normal_pair(rng);
      a += drift * h + std::sqrt(params.kappa * h) * Complex(w1, w2);
    }
    points[static_cast<std::size_t>(k)] = a;
  }
  return points;
}

PhaseGrid ensemble_histogram(const std::vector<Complex>& points,
                             const PhaseGrid& grid) {
  PhaseGrid out = grid;
  std::fill(out.values.begin(), out.values.end(), 0.0);
  std::size_t inside = 0;
  for (const Complex& p : points) {
    const long ix = std::lround((p.real() - out.re_min) / out.dx());
    const long iy = std::lround((p.imag() - out.im_min) / out.dy());
    if (ix < 0 || ix >= out.nx || iy < 0 || iy >= out.ny) continue;
    out.at(static_cast<int>(ix), static_cast<int>(iy)) += 1.0;
    ++inside;
  }
  if (inside == 0) return out;
  const double scale = 0.5 / (static_cast<double>(inside) * out.cell_area());
  for (double& v : out.values) v *= scale;
  return out;
}

}  // namespace aho
