#include <doctest.h>

#include <cmath>
#include <complex>

#include "aho/kernels.hpp"

using aho::Complex;
using aho::ModelParams;

namespace {

double cdist(Complex a, Complex b) { return std::abs(a - b); }

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("lambda_n closed form") {
  CHECK(cdist(aho::lambda_n(0, {0.1, 0.01}), {0.02, 0.0}) == 0.0);
  CHECK(cdist(aho::lambda_n(2, {0.0, 0.5}), {1.0, 0.0}) == 0.0);
  for (int n = 1; n <= 8; ++n) {
    const ModelParams p{0.37, 0.011};
    CHECK(aho::lambda_n(-n, p) == std::conj(aho::lambda_n(n, p)));
  }
}

TEST_CASE("delta_n") {
  CHECK(std::abs(aho::delta_n(0, {0.3, 0.7})) == 0.0);
  CHECK(cdist(aho::delta_n(1, {0.1, 0.0}), {0.0, 0.1}) < 1e-16);
  // 50-digit reference (scripts/reference_values.py)
  CHECK(cdist(aho::delta_n(1, {0.1, 0.01}),
              {0.01962561609566701, 0.10190762879752675}) < 1e-15);
}

TEST_CASE("gamma_n limits and reference") {
  const ModelParams p{0.1, 0.01};
  SUBCASE("n = 0 degenerate limit") {
    for (double t : {0.0, 0.3, 2.0, 50.0}) {
      const double expect = 2 * p.kappa * t / (1 + 2 * p.kappa * t);
      CHECK(cdist(aho::gamma_n(0, t, p), {expect, 0.0}) < 1e-15);
    }
  }
  SUBCASE("kappa = 0 kills gamma exactly") {
    const ModelParams free{0.1, 0.0};
    for (int n : {-3, 0, 1, 5})
      for (double t : {0.0, 1.0, 31.4}) CHECK(aho::gamma_n(n, t, free) == Complex(0.0));
  }
  SUBCASE("50-digit reference") {
    CHECK(cdist(aho::gamma_n(1, 5.0, p),
                {0.077112926558300133, -0.040587158710444264}) < 1e-15);
  }
}

TEST_CASE("zeta_n limits and reference") {
  const ModelParams p{0.1, 0.01};
  SUBCASE("kappa = 0 reduces to the Kerr phase") {
    const ModelParams free{0.1, 0.0};
    for (int n : {-4, -1, 1, 3})
      for (double t : {0.2, 7.0}) {
        const Complex expect = std::polar(1.0, -free.g * n * t);
        CHECK(cdist(aho::zeta_n(n, t, free), expect) < 5e-15);
      }
  }
  SUBCASE("n = 0 degenerate limit") {
    for (double t : {0.0, 1.0, 10.0})
      CHECK(cdist(aho::zeta_n(0, t, p), {1.0 / (1 + 2 * p.kappa * t), 0.0}) < 1e-15);
  }
  SUBCASE("50-digit reference") {
    CHECK(cdist(aho::zeta_n(2, 3.0, p),
                {0.77813168952656008, -0.53307169583389769}) < 1e-15);
  }
}

TEST_CASE("classical kernels") {
  const ModelParams p{0.1, 0.01};
  SUBCASE("n = 0") {
    for (double t : {0.4, 9.0}) {
      const auto [u, v] = aho::classical_kernels(0, t, p);
      CHECK(cdist(u, {1.0 / (1 + 2 * p.kappa * t), 0.0}) < 1e-15);
      CHECK(cdist(v, {2 * p.kappa * t / (1 + 2 * p.kappa * t), 0.0}) < 1e-15);
    }
  }
  SUBCASE("t = 0 identity") {
    for (int n : {-2, 0, 7}) {
      const auto [u, v] = aho::classical_kernels(n, 0.0, p);
      CHECK(u == Complex(1.0));
      CHECK(v == Complex(0.0));
    }
  }
  SUBCASE("50-digit reference") {
    const auto [u, v] = aho::classical_kernels(1, 5.0, p);
    CHECK(cdist(u, {0.84855592371119723, -0.2336682526932756}) < 1e-15);
    CHECK(cdist(v, {0.030361376036988699, -0.23504554387061277}) < 1e-15);
  }
}

TEST_CASE("branch invariance: kernels are even in the square root") {
  const ModelParams p{0.23, 0.041};
  for (int n : {1, 2, 5})
    for (double t : {0.1, 3.0, 40.0}) {
      const Complex lam = aho::lambda_n(n, p);
      const Complex del = aho::delta_n(n, p);
      const auto plus = aho::detail::quantum_direct(lam, del, t, p.kappa);
      const auto minus = aho::detail::quantum_direct(lam, -del, t, p.kappa);
      CHECK(cdist(plus.gamma, minus.gamma) < 1e-14 * std::abs(plus.gamma) + 1e-16);
      CHECK(cdist(plus.zeta, minus.zeta) < 1e-14 * std::abs(plus.zeta) + 1e-16);

      const Complex s = std::sqrt(Complex(0.0, p.g * p.kappa * n));
      const Complex ap(4 * p.kappa, p.g * n), am(4 * p.kappa, -p.g * n);
      const auto cp = aho::detail::classical_direct(s, ap, am, t);
      const auto cm = aho::detail::classical_direct(-s, ap, am, t);
      CHECK(cdist(cp.u, cm.u) < 1e-14 * std::abs(cp.u) + 1e-16);
      CHECK(cdist(cp.v, cm.v) < 1e-14 * std::abs(cp.v) + 1e-16);
    }
}

TEST_CASE("conjugation symmetry in n") {
  const ModelParams p{0.17, 0.03};
  for (int n = 1; n <= 10; ++n)
    for (double t : {0.05, 1.0, 12.0}) {
      CHECK(cdist(aho::gamma_n(-n, t, p), std::conj(aho::gamma_n(n, t, p))) < 1e-15);
      CHECK(cdist(aho::zeta_n(-n, t, p), std::conj(aho::zeta_n(n, t, p))) < 1e-15);
      const auto kp = aho::classical_kernels(n, t, p);
      const auto km = aho::classical_kernels(-n, t, p);
      CHECK(cdist(km.u, std::conj(kp.u)) < 1e-15);
      CHECK(cdist(km.v, std::conj(kp.v)) < 1e-15);
    }
}

TEST_CASE("quantum and classical diagonals agree") {
  const ModelParams p{0.1, 0.01};
  for (double t : {0.0, 0.1, 1.0, 10.0, 100.0, 1e4}) {
    const auto [u, v] = aho::classical_kernels(0, t, p);
    CHECK(cdist(aho::gamma_n(0, t, p), v) <= 1e-12);
    CHECK(cdist(aho::zeta_n(0, t, p), u) <= 1e-12);
  }
}

TEST_CASE("series and direct branches agree at the switch") {
  using namespace aho::detail;
  // Land |delta t| and |2 t s| exactly on the threshold.
  const double t = 1.0;
  for (double mag : {0.5e-6, 1e-6, 2e-6}) {
    const Complex del = std::polar(mag, 0.7);
    const Complex lam(0.02, 0.1);
    const auto a = quantum_direct(lam, del, t, 0.01);
    const auto b = quantum_series(lam, del, t, 0.01);
    CHECK(cdist(a.gamma, b.gamma) <= 1e-10 * std::abs(a.gamma));
    CHECK(cdist(a.zeta, b.zeta) <= 1e-10 * std::abs(a.zeta));

    const Complex s = std::polar(mag / 2, 0.3);
    const Complex ap(0.04, 0.1), am(0.04, -0.1);
    const auto cu = classical_direct(s, ap, am, t);
    const auto cv = classical_series(s, ap, am, t);
    CHECK(cdist(cu.u, cv.u) <= 1e-10 * std::abs(cu.u));
    CHECK(cdist(cu.v, cv.v) <= 1e-10 * std::abs(cu.v) + 1e-16);
  }
}

TEST_CASE("no poles on the physical domain") {
  // Numerical scan backing the no-pole assumption for g, kappa, t >= 0:
  // a vanishing denominator would surface as inf/nan or an exact zero in
  // the decaying kernel pair.
  bool all_finite = true, none_zero = true;
  for (double g : {0.0, 0.01, 0.1, 1.0, 10.0})
    for (double kappa : {0.0, 0.001, 0.01, 0.1, 1.0})
      for (double t : {0.0, 0.1, 1.0, 10.0, 100.0})
        for (int n = 0; n <= 20; ++n) {
          const ModelParams p{g, kappa};
          const Complex gam = aho::gamma_n(n, t, p);
          const Complex zet = aho::zeta_n(n, t, p);
          const auto [u, v] = aho::classical_kernels(n, t, p);
          for (Complex z : {gam, zet, u, v})
            all_finite &= std::isfinite(z.real()) && std::isfinite(z.imag());
          // Away from the deep-decay regime (where the true values dip
          // below the smallest double and underflow to an honest zero)
          // the decaying pair must stay strictly positive.
          if (kappa * t < 300.0 && 2.0 * t * std::sqrt(g * kappa * n) < 600.0)
            none_zero &= std::abs(zet) > 0.0 && std::abs(u) > 0.0;
        }
  CHECK(all_finite);
  CHECK(none_zero);
}

TEST_CASE("kernel table mirrors the free functions") {
  const ModelParams p{0.1, 0.02};
  const aho::KernelTable kt(p, 2.5, 12);
  for (int n = -12; n <= 12; ++n) {
    CHECK(cdist(kt.gamma(n), aho::gamma_n(n, 2.5, p)) < 1e-15);
    CHECK(cdist(kt.zeta(n), aho::zeta_n(n, 2.5, p)) < 1e-15);
    const auto c = aho::classical_kernels(n, 2.5, p);
    CHECK(cdist(kt.u(n), c.u) < 1e-15);
    CHECK(cdist(kt.v(n), c.v) < 1e-15);
  }
  // mirrored symmetry is exact by construction
  for (int n = 0; n <= 12; ++n) {
    CHECK(kt.gamma(-n) == std::conj(kt.gamma(n)));
    CHECK(kt.zeta(-n) == std::conj(kt.zeta(n)));
  }
}

}  // TEST_SUITE
