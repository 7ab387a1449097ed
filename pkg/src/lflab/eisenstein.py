"""Real-analytic Eisenstein series E(z, s): lattice sum, Fourier expansion,
scattering coefficient, functional equation, Laplace eigenvalue, and the
re-derivation of the completed-zeta functional equation from the first
Fourier coefficient.

The Fourier route is the continuation mechanism here:

    E(z, s) = y^s + phi(s) y^{1-s}
              + sum_{n != 0} [2 sqrt(y) K_{s-1/2}(2 pi |n| y)
                              |n|^{s-1/2} sigma_{1-2s}(|n|) / xi(2s)] e^{2 pi i n x},

with phi(s) = xi(2s-1)/xi(2s).  Every term continues in s, because the
normalizing denominator pi^{-s} Gamma(s) zeta(2s) is evaluated as xi(2s)
(finite through the trivial-zero/pole cancellations).  The |n|^{s-1/2}
power is the one the lattice sum confirms numerically; see the divisor-sum
identity sum_{ab=|n|} (a/b)^{s-1/2} = |n|^{s-1/2} sigma_{1-2s}(|n|).
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from . import zeta_core
from .special_fn import AccuracyBudget, DEFAULT_BUDGET, bessel_k, require_finite

_EXCLUSION_RADIUS = 1e-3  # around the exceptional points s = 0, 1/2, 1


def _require_upper_half(z: complex) -> complex:
    z = require_finite(z, "z")
    if z.imag <= 0:
        raise ValueError(f"z must satisfy Im z > 0, got {z}")
    return z


def _check_exceptional(s: complex):
    for bad in (0.0, 0.5, 1.0):
        if abs(s - bad) < _EXCLUSION_RADIUS:
            raise ValueError(f"s = {s} inside the exclusion zone around {bad}")


@lru_cache(maxsize=4096)
def _divisors(n: int) -> tuple:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d * d != n:
                out.append(n // d)
        d += 1
    return tuple(sorted(out))


def divisor_sigma(exponent: complex, n: int) -> complex:
    """sigma_exponent(n) = sum_{d | n} d^exponent (trial division, cached)."""
    if n < 1 or n > 1000:
        raise ValueError("divisor sums supported for 1 <= n <= 1000")
    return sum(cmath.exp(exponent * math.log(d)) for d in _divisors(n))


class LatticeValue(NamedTuple):
    value: complex
    tail_bound: float


def _form_min_eigenvalue(z: complex) -> float:
    # smallest eigenvalue of the quadratic form |m z + n|^2 in (m, n)
    a = abs(z) ** 2
    return 0.5 * ((a + 1.0) - math.sqrt((a - 1.0) ** 2 + 4.0 * z.real**2))


def eisenstein_lattice(z: complex, s: complex, R: int | None = None,
                       tol: float = 1e-9) -> LatticeValue:
    """E(z, s) = (1/2) (1/zeta(2s)) sum'_{|m|,|n| <= R} y^s / |m z + n|^{2s}.

    Absolutely convergent for Re s > 1; the reported tail bound comes from
    the integral comparison sum_{max(|m|,|n|)>R} (mu (m^2+n^2))^{-sigma}
    <= pi mu^{-sigma} R^{2-2 sigma} / (sigma - 1).  R is chosen from that
    bound when not given.
    """
    z = _require_upper_half(z)
    s = require_finite(s)
    sigma = s.real
    if sigma <= 1.25:
        raise ValueError(f"lattice sum needs Re s > 1.25 at desk scale, got {s}")
    y = z.imag
    mu = _form_min_eigenvalue(z)
    zeta2s = zeta_core.zeta(2 * s)

    def bound(radius: int) -> float:
        return (
            0.5 * y**sigma * mu**-sigma * math.pi * radius ** (2 - 2 * sigma)
            / (sigma - 1.0) / abs(zeta2s)
        )

    if R is None:
        R = 400
        while bound(R) > tol and R < 4000:
            R = int(R * 1.5)
    m = np.arange(-R, R + 1)
    M, N = np.meshgrid(m, m, indexing="ij")
    mask = (M != 0) | (N != 0)
    Mv = M[mask].astype(float)
    Nv = N[mask].astype(float)
    q = np.abs(Mv * z + Nv) ** 2
    total = (y**s) * np.exp(-s * np.log(q))
    return LatticeValue(0.5 * complex(total.sum()) / zeta2s, bound(R))


def scattering_phi(s: complex, budget: AccuracyBudget | None = None) -> complex:
    """phi(s) = xi(2s-1)/xi(2s), the constant-term coefficient of y^{1-s}."""
    s = require_finite(s)
    _check_exceptional(s)
    return zeta_core.xi(2 * s - 1, budget).value / zeta_core.xi(2 * s, budget).value


def fourier_a0(y: float, s: complex) -> complex:
    """a_0(y, s) = y^s + phi(s) y^{1-s}."""
    return cmath.exp(s * math.log(y)) + scattering_phi(s) * cmath.exp((1 - s) * math.log(y))


def fourier_an(n: int, y: float, s: complex, budget: AccuracyBudget | None = None) -> complex:
    """The e^{2 pi i n x} coefficient (n != 0) of E(z, s) at height y."""
    if n == 0:
        raise ValueError("use fourier_a0 for the constant term")
    m = abs(n)
    xi2s = zeta_core.xi(2 * s).value
    kb = bessel_k(s - 0.5, 2.0 * math.pi * m * y, budget)
    return (
        2.0 * math.sqrt(y) * kb
        * cmath.exp((s - 0.5) * math.log(m)) * divisor_sigma(1.0 - 2.0 * s, m) / xi2s
    )


def eisenstein_fourier(z: complex, s: complex, M: int = 20,
                       budget: AccuracyBudget | None = None) -> complex:
    """E(z, s) through the Fourier expansion; valid for all s outside the
    exclusion zones since each term continues analytically."""
    z = _require_upper_half(z)
    s = require_finite(s)
    _check_exceptional(s)
    if z.imag < 0.3:
        raise ValueError("Fourier route restricted to Im z >= 0.3")
    budget = budget or DEFAULT_BUDGET
    y, x = z.imag, z.real
    total = fourier_a0(y, s)
    for n in range(1, M + 1):
        # the +n and -n coefficients coincide (they depend on |n| only)
        total += fourier_an(n, y, s, budget) * 2.0 * math.cos(2.0 * math.pi * n * x)
    return total


def verify_eis_fe(z: complex, s: complex, M: int = 20) -> float:
    """|E(z, s) - phi(s) E(z, 1-s)| with both sides from the Fourier route."""
    left = eisenstein_fourier(z, s, M)
    right = eisenstein_fourier(z, 1 - s, M)
    return abs(left - scattering_phi(s) * right)


def zeta_fe_from_a1(s_prime: complex, y: float = 0.5) -> float:
    """Completed-zeta functional-equation residual |xi(s') - xi(1-s')|
    assembled through the first Fourier coefficient alone.

    With s = (1+s')/2 the coefficient identity a_1(y,s) = phi(s) a_1(y,1-s),
    unpacked through a_1 = 2 sqrt(y) K_{s-1/2}(2 pi y)/xi(2s) and
    phi = xi(2s-1)/xi(2s), reads

        xi(1-s') = xi(s') * K_{(1-s')/2 - 1/2 + 1/2}... (Bessel symmetry)

    i.e. xi(s') K_{s'/2}(2 pi y) = xi(1-s') K_{-s'/2}(2 pi y), where the
    Bessel ratio (numerically 1, never assumed) carries the K_s = K_{-s}
    symmetry that drives the derivation.
    """
    s_prime = require_finite(s_prime, "s'")
    if abs(s_prime - 0.5) < 1e-12:
        return 0.0  # fixed point of s' <-> 1-s'
    for bad in (0.0, 1.0):
        if abs(s_prime - bad) < _EXCLUSION_RADIUS:
            raise ValueError(f"s' = {s_prime} too close to a xi pole")
    k_plus = bessel_k(s_prime / 2.0, 2.0 * math.pi * y)
    k_minus = bessel_k(-s_prime / 2.0, 2.0 * math.pi * y)
    lhs = zeta_core.xi(s_prime).value * k_plus
    rhs = zeta_core.xi(1 - s_prime).value * k_minus
    scale = abs(k_plus)
    if scale == 0.0:
        raise ValueError("reference height y too large: Bessel factor underflows")
    return abs(lhs - rhs) / scale


def laplacian_check(z: complex, s: complex, h: float, M: int = 20) -> float:
    """| -y^2 (d_xx + d_yy) E - s(1-s) E | by five-point central differences."""
    z = _require_upper_half(z)
    if not (1e-4 <= h <= 1e-2):
        raise ValueError("step h restricted to [1e-4, 1e-2]")
    if z.imag - h <= 0:
        raise ValueError("stencil leaves the upper half plane")
    e = eisenstein_fourier(z, s, M)
    exx = (
        eisenstein_fourier(z + h, s, M) + eisenstein_fourier(z - h, s, M) - 2 * e
    ) / h**2
    eyy = (
        eisenstein_fourier(z + 1j * h, s, M) + eisenstein_fourier(z - 1j * h, s, M) - 2 * e
    ) / h**2
    lap = -(z.imag**2) * (exx + eyy)
    return abs(lap - s * (1 - s) * e)
