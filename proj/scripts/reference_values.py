#!/usr/bin/env python3
"""High-precision reference values for the C++ test suites.

Evaluates the closed-form kernel functions, Laguerre polynomials and
phase-space basis functions with 50-digit arithmetic (mpmath) and prints
them with 17 significant digits.  The printed constants are frozen into
tests/ as independent cross-checks of the double-precision code paths.

Run:  python3 scripts/reference_values.py
"""

from fractions import Fraction
from math import comb, factorial

import mpmath as mp

mp.mp.dps = 50


def lam(n, g, kappa):
    return mp.mpc(0, 1) * g * n + 2 * kappa


def delta(n, g, kappa):
    return mp.sqrt(lam(n, g, kappa) ** 2 - 4 * kappa**2)


def gamma_n(n, t, g, kappa):
    L, D = lam(n, g, kappa), delta(n, g, kappa)
    return 2 * kappa * mp.sinh(D * t) / (D * mp.cosh(D * t) + L * mp.sinh(D * t))


def zeta_n(n, t, g, kappa):
    L, D = lam(n, g, kappa), delta(n, g, kappa)
    return D / (D * mp.cosh(D * t) + L * mp.sinh(D * t))


def classical_uv(n, t, g, kappa):
    s = mp.sqrt(mp.mpc(0, 1) * g * kappa * n)
    a_plus = 4 * kappa + mp.mpc(0, 1) * g * n
    a_minus = 4 * kappa - mp.mpc(0, 1) * g * n
    den = 4 * s * mp.cosh(2 * t * s) + a_plus * mp.sinh(2 * t * s)
    return 4 * s / den, a_minus * mp.sinh(2 * t * s) / den


def laguerre_rational(m, a, x):
    """L_m^a(x) summed term by term in exact rational arithmetic."""
    acc = Fraction(0)
    xf = Fraction(x)
    for k in range(m + 1):
        acc += Fraction((-1) ** k * comb(m + a, m - k), factorial(k)) * xf**k
    return acc


def pi_mn(m, n, alpha):
    """Coefficient-sum evaluation of the displaced-parity basis function."""
    assert n >= m
    x = 4 * (alpha.real**2 + alpha.imag**2)
    lag = mp.mpf(0)
    for k in range(m + 1):
        lag += (-1) ** k * comb(n, m - k) * mp.mpf(x) ** k / mp.factorial(k)
    pref = (-1) ** m / mp.pi * mp.sqrt(mp.factorial(m) / mp.factorial(n))
    return pref * mp.e ** (-x / 2) * (2 * mp.mpc(alpha)) ** (n - m) * lag


def poisson_tail(mean, nmax):
    """Mass of Poisson(mean) strictly above nmax."""
    return 1 - mp.gammainc(nmax + 1, mean, mp.inf) / mp.gamma(nmax + 1)


def show(label, z):
    if isinstance(z, mp.mpc):
        print(f"{label}: {mp.nstr(z.real, 17)}  {mp.nstr(z.imag, 17)}")
    else:
        print(f"{label}: {mp.nstr(mp.mpf(z), 17)}")


if __name__ == "__main__":
    show("delta(n=1, g=0.1, k=0.01)", delta(1, mp.mpf("0.1"), mp.mpf("0.01")))
    show("gamma(n=1, t=5, g=0.1, k=0.01)", gamma_n(1, 5, mp.mpf("0.1"), mp.mpf("0.01")))
    show("zeta(n=2, t=3, g=0.1, k=0.01)", zeta_n(2, 3, mp.mpf("0.1"), mp.mpf("0.01")))
    u, v = classical_uv(1, 5, mp.mpf("0.1"), mp.mpf("0.01"))
    show("u(n=1, t=5, g=0.1, k=0.01)", u)
    show("v(n=1, t=5, g=0.1, k=0.01)", v)

    lag = laguerre_rational(10, 4, Fraction(7, 2))
    print(f"L_10^4(3.5) exact: {lag}")
    show("L_10^4(3.5)", mp.mpf(lag.numerator) / lag.denominator)

    show("Pi_35(0.7+0.2i)", pi_mn(3, 5, mp.mpc("0.7", "0.2")))

    show("poisson_tail(mean=9, nmax=39)", poisson_tail(9, 39))
    show("poisson_tail(mean=4, nmax=26)", poisson_tail(4, 26))
    show("poisson_mass_below(mean=9, nmax=39)", 1 - poisson_tail(9, 39))
    show("exp(-1)", mp.e ** -1)
