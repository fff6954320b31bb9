#include "aho/propagator.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <vector>

#include "aho/errors.hpp"

namespace aho {

namespace detail {

namespace {

struct LogPolar {
  double logmag;  // -inf encodes zero
  double arg;
};

LogPolar log_polar(Complex z) {
  if (z == Complex(0.0)) return {-std::numeric_limits<double>::infinity(), 0.0};
  return {std::log(std::abs(z)), std::arg(z)};
}

std::vector<double> log_factorials(int nmax) {
  std::vector<double> lg(static_cast<std::size_t>(nmax) + 1);
  for (int k = 0; k <= nmax; ++k) lg[k] = std::lgamma(k + 1.0);
  return lg;
}

// Weights are assembled as grouped log-factorial differences so the
// l = j = 0 term has exactly zero log-weight and t = 0 is the bit-exact
// identity.
Complex element(const Eigen::MatrixXcd& in, const KernelTable& kt,
                KernelFamily family, int row, int col,
                const std::vector<double>& lg) {
  const int nmax = kt.nmax();
  const int d = row - col;
  const bool quantum = family == KernelFamily::Quantum;
  const Complex a = quantum ? kt.gamma(d) : kt.v(d);
  const Complex b = quantum ? kt.zeta(d) : kt.u(d);
  const LogPolar la = log_polar(a);
  const LogPolar lb = log_polar(b);
  const bool a_zero = a == Complex(0.0);
  if (b == Complex(0.0)) return 0.0;

  Complex acc(0.0, 0.0);
  const int lmax = std::min(row, col);
  for (int l = 0; l <= lmax; ++l) {
    const int m = row - l;
    const int n = col - l;
    const int hi = std::max(m, n);
    const int pb = m + n + 1;
    for (int j = 0; j + hi <= nmax; ++j) {
      const int pa = l + j;
      if (a_zero && pa > 0) break;
      const Complex cin = in(m + j, n + j);
      if (cin == Complex(0.0)) continue;
      const double logw =
          0.5 * ((lg[m + j] - lg[m]) + (lg[n + j] - lg[n]) +
                 (lg[row] - lg[m]) + (lg[col] - lg[n])) -
          lg[l] - lg[j];
      double logmag = logw + pb * lb.logmag;
      double theta = pb * lb.arg;
      if (pa > 0) {
        logmag += pa * la.logmag;
        theta += pa * la.arg;
      }
      acc += cin * std::polar(std::exp(logmag), theta);
    }
  }
  const Complex phase =
      quantum ? std::polar(1.0, kt.params().g * kt.time() * d) : Complex(1.0);
  return acc * phase;
}

}  // namespace

Complex propagate_element(const Eigen::MatrixXcd& in, const KernelTable& kt,
                          KernelFamily family, int row, int col) {
  return element(in, kt, family, row, col, log_factorials(kt.nmax()));
}

}  // namespace detail

Eigen::MatrixXcd propagate(const Eigen::MatrixXcd& in, double t,
                           const ModelParams& params, KernelFamily family) {
  assert(in.rows() == in.cols());
  const int dim = static_cast<int>(in.rows());
  const int nmax = dim - 1;
  const KernelTable kt(params, t, nmax);
  const std::vector<double> lg = detail::log_factorials(nmax);

  // Upper-triangle work list; elements are independent.
  std::vector<std::pair<int, int>> elems;
  elems.reserve(static_cast<std::size_t>(dim) * (dim + 1) / 2);
  for (int r = 0; r < dim; ++r)
    for (int c = r; c < dim; ++c) elems.emplace_back(r, c);

  Eigen::MatrixXcd out(dim, dim);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(elems.size()); ++i) {
    const auto [r, c] = elems[static_cast<std::size_t>(i)];
    const Complex val = detail::element(in, kt, family, r, c, lg);
    out(r, c) = val;
    if (r != c) out(c, r) = std::conj(val);
  }
  return out;
}

Eigen::MatrixXcd master_rhs(const FockDensity& state, const ModelParams& params) {
  const int dim = state.nmax + 1;
  const auto& rho = state.rho;
  Eigen::MatrixXcd out(dim, dim);
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n < dim; ++n) {
      const double mn2 = static_cast<double>(m - n) * (m + n);
      Complex val = Complex(0.0, -params.g * mn2) * rho(m, n);
      Complex hop(0.0, 0.0);
      if (m + 1 < dim && n + 1 < dim)
        hop += std::sqrt(double(m + 1) * (n + 1)) * rho(m + 1, n + 1);
      if (m > 0 && n > 0) hop += std::sqrt(double(m) * n) * rho(m - 1, n - 1);
      hop -= double(m + n + 1) * rho(m, n);
      out(m, n) = val + 2.0 * params.kappa * hop;
    }
  }
  return out;
}

FockDensity evolve(const FockDensity& state0, double t,
                   const ModelParams& params, double trace_tol) {
  if (t < 0.0) throw config_error("evolution time must be non-negative");
  FockDensity out;
  out.nmax = state0.nmax;
  out.rho = propagate(state0.rho, t, params, KernelFamily::Quantum);
  const Complex drift = out.rho.trace() - state0.rho.trace();
  if (std::abs(drift) > trace_tol)
    throw truncation_error("propagated trace drifted by " +
                           std::to_string(std::abs(drift)) +
                           "; truncation nmax=" + std::to_string(out.nmax) +
                           " is inadequate for t=" + std::to_string(t));
  return out;
}

}  // namespace aho
