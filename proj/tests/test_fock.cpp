#include <doctest.h>

#include <cmath>

#include "aho/errors.hpp"
#include "aho/fock.hpp"

using aho::Complex;

namespace {

// Independent Poisson partial sum: running-product accumulation, no
// log-gamma anywhere.
double poisson_mass_below(double mean, int nmax) {
  double term = std::exp(-mean);
  double sum = term;
  for (int m = 1; m <= nmax; ++m) {
    term *= mean / m;
    sum += term;
  }
  return sum;
}

}  // namespace

TEST_SUITE("fock") {

TEST_CASE("vacuum projector") {
  const auto state = aho::coherent_density(0.0, 5);
  CHECK(state.rho(0, 0) == Complex(1.0));
  CHECK(state.rho.cwiseAbs().sum() == 1.0);
}

TEST_CASE("coherent matrix elements") {
  const auto state = aho::coherent_density(1.0, 30);
  CHECK(std::abs(state.rho(0, 1) - Complex(std::exp(-1.0))) < 1e-15);
  // Hermitian, real non-negative diagonal
  CHECK((state.rho - state.rho.adjoint()).cwiseAbs().maxCoeff() == 0.0);
  for (int m = 0; m <= 30; ++m) {
    CHECK(state.rho(m, m).imag() == 0.0);
    CHECK(state.rho(m, m).real() >= 0.0);
  }
}

TEST_CASE("coherent trace equals the partial Poisson sum") {
  const int nmax = aho::default_nmax(3.0);
  const auto state = aho::coherent_density(3.0, nmax);
  CHECK(std::abs(state.rho.trace().real() - poisson_mass_below(9.0, nmax)) <
        1e-10);
  CHECK(std::abs(state.rho.trace().imag()) == 0.0);
}

TEST_CASE("default_nmax policy") {
  CHECK(aho::default_nmax(0.0) == 12);
  CHECK(aho::default_nmax(3.0) == 39);
  // Tail above the default truncation is negligible.
  CHECK(1.0 - poisson_mass_below(4.0, aho::default_nmax(2.0)) < 1e-9);
  CHECK(1.0 - poisson_mass_below(9.0, aho::default_nmax(3.0)) < 1e-9);
}

TEST_CASE("inadequate truncation is rejected") {
  CHECK_THROWS_AS(aho::coherent_density(3.0, 10), aho::truncation_error);
  CHECK_NOTHROW(aho::coherent_density(3.0, aho::default_nmax(3.0)));
}

TEST_CASE("fidelity with coherent states") {
  const auto state = aho::coherent_density(Complex(1.2, -0.4), 30);
  CHECK(aho::fidelity_coherent(state, Complex(1.2, -0.4)) ==
        doctest::Approx(1.0).epsilon(1e-10));

  const auto vacuum = aho::coherent_density(0.0, 5);
  CHECK(aho::fidelity_coherent(vacuum, 3.0) ==
        doctest::Approx(std::exp(-9.0)).epsilon(1e-12));

  // |<-a|a>|^2 = e^{-4|a|^2}
  const auto two = aho::coherent_density(2.0, 30);
  CHECK(aho::fidelity_coherent(two, -2.0) ==
        doctest::Approx(std::exp(-16.0)).epsilon(1e-9));
}

TEST_CASE("fidelity is invariant under a global phase of the state") {
  const Complex alpha = std::polar(1.7, 0.31);
  const auto amps = aho::coherent_amplitudes(alpha, 30);
  const Eigen::VectorXcd rotated = amps * std::polar(1.0, 0.77);
  aho::FockDensity plain{30, amps * amps.adjoint()};
  aho::FockDensity phased{30, rotated * rotated.adjoint()};
  for (Complex beta : {Complex(0.3, 0.1), Complex(-1.0, 0.0), alpha})
    CHECK(std::abs(aho::fidelity_coherent(plain, beta) -
                   aho::fidelity_coherent(phased, beta)) < 1e-12);
}

TEST_CASE("fidelity truncation guard") {
  // Vacuum answered exactly even though beta reaches past nmax.
  const auto vacuum = aho::coherent_density(0.0, 5);
  CHECK_NOTHROW(aho::fidelity_coherent(vacuum, 3.0));
  // A state with boundary population cannot see a beta far outside.
  aho::FockDensity edge;
  edge.nmax = 5;
  edge.rho = Eigen::MatrixXcd::Zero(6, 6);
  edge.rho(5, 5) = 1.0;
  CHECK_THROWS_AS(aho::fidelity_coherent(edge, 4.0), aho::truncation_error);
}

TEST_CASE("purity") {
  CHECK(aho::purity(aho::coherent_density(1.3, 25)) ==
        doctest::Approx(1.0).epsilon(1e-10));
  aho::FockDensity mixed;
  mixed.nmax = 1;
  mixed.rho = 0.5 * Eigen::MatrixXcd::Identity(2, 2);
  CHECK(aho::purity(mixed) == doctest::Approx(0.5));
}

}  // TEST_SUITE
