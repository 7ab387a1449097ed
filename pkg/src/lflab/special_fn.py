"""Complex gamma, incomplete gamma, K-Bessel and Jacobi theta evaluators.

Everything downstream (completed zeta, Hecke L-functions, Eisenstein
series) is built on the four evaluators in this module.  All arithmetic is
binary64; accuracy claims are absolute tolerances controlled by an
AccuracyBudget.  All functions are pure.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from ._lanczos import LANCZOS_C, LANCZOS_G

_LOG_SQRT_TWO_PI = 0.9189385332046727  # log(sqrt(2*pi))
_TINY = 1e-300


class PoleError(ValueError):
    """Argument sits on (or numerically indistinguishable from) a pole."""


class BudgetExhausted(RuntimeError):
    """Requested tolerance not reached within the accuracy budget."""

    def __init__(self, message: str, attained: float):
        super().__init__(f"{message} (attained error estimate {attained:.3e})")
        self.attained = attained


@dataclass(frozen=True)
class AccuracyBudget:
    """Absolute tolerance plus iteration caps for series and quadrature."""

    abs_tol: float = 1e-12
    series_terms_max: int = 4000
    quadrature_panels_max: int = 400

    def __post_init__(self):
        if not (self.abs_tol >= 1e-13):
            raise ValueError("abs_tol below the binary64 floor 1e-13")
        if self.series_terms_max <= 0 or self.quadrature_panels_max <= 0:
            raise ValueError("budget caps must be positive")


DEFAULT_BUDGET = AccuracyBudget()


def require_finite(s: complex, name: str = "s") -> complex:
    """Admit only finite complex points (no NaN/inf in either component)."""
    s = complex(s)
    if not (math.isfinite(s.real) and math.isfinite(s.imag)):
        raise ValueError(f"{name} must have finite real and imaginary parts, got {s}")
    return s


# ---------------------------------------------------------------------------
# log Gamma / Gamma
# ---------------------------------------------------------------------------

def _lanczos_log_gamma_right(z: complex) -> complex:
    # Re z > 0.5 assumed.
    acc = LANCZOS_C[0]
    for k in range(1, len(LANCZOS_C)):
        acc += LANCZOS_C[k] / (z - 1 + k)
    t = z + LANCZOS_G - 0.5
    return _LOG_SQRT_TWO_PI + (z - 0.5) * cmath.log(t) - t + cmath.log(acc)


def _log_sin_pi(z: complex) -> complex:
    # Branch-consistent log(sin(pi z)) for the reflection formula, written so
    # that exp overflow cannot occur for large |Im z|.
    if z.imag >= 0:
        # sin(pi z) = -(1/(2i)) e^{-i pi z} (1 - e^{2 i pi z})
        return (
            complex(0, -math.pi) * z
            + cmath.log(1 - cmath.exp(2j * math.pi * z))
            - cmath.log(complex(0, -2))
        )
    return _log_sin_pi(z.conjugate()).conjugate()


def log_gamma(s: complex, budget: AccuracyBudget | None = None) -> complex:
    """Principal branch of log Gamma(s), real on the positive real axis.

    Lanczos rational approximation on Re s > 1/2, reflection formula on the
    left half plane.  Raises PoleError at non-positive integers.
    """
    s = require_finite(s)
    if s.real > 0.5:
        return _lanczos_log_gamma_right(s)
    if s.imag == 0.0 and s.real == int(s.real):
        raise PoleError(f"Gamma pole at s = {s.real:.0f}")
    # Gamma(s) Gamma(1-s) = pi / sin(pi s)
    return math.log(math.pi) - _log_sin_pi(s) - _lanczos_log_gamma_right(1 - s)


def gamma(s: complex, budget: AccuracyBudget | None = None) -> complex:
    """Gamma(s) = exp(log_gamma(s)).  Overflow is raised, not returned."""
    lg = log_gamma(s, budget)
    if lg.real > 709.0:
        raise OverflowError(
            f"|Gamma({s})| overflows binary64; use log_gamma for the scaled form"
        )
    return cmath.exp(lg)


# ---------------------------------------------------------------------------
# Upper incomplete gamma
# ---------------------------------------------------------------------------

def _gamma_upper_cf(s: complex, x: float, tol: float, max_iter: int) -> complex:
    # Legendre continued fraction, modified Lentz.  Converges for all complex
    # s when x > 0, fastest for x >~ |s| + 1.
    b = x + 1.0 - s
    c = 1.0 / _TINY
    d = 1.0 / (b if b != 0 else _TINY)
    h = d
    for i in range(1, max_iter + 1):
        an = -i * (i - s)
        b += 2.0
        d = an * d + b
        if abs(d) < _TINY:
            d = complex(_TINY)
        c = b + an / c
        if abs(c) < _TINY:
            c = complex(_TINY)
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < tol:
            return cmath.exp(-x + s * cmath.log(x)) * h
    raise BudgetExhausted("incomplete-gamma continued fraction", abs(h) * tol)


def _gamma_lower_series(s: complex, x: float, tol: float, max_iter: int) -> complex:
    # gamma(s, x) = x^s e^{-x} sum_{n>=0} x^n / (s (s+1) ... (s+n)).
    # Term ratio x/|s+n| is eventually < 1 for every complex s; no
    # catastrophic intermediate growth because the series is factored
    # against e^{-x}.
    term = 1.0 / s
    total = term
    for n in range(1, max_iter + 1):
        term *= x / (s + n)
        total += term
        if abs(term) < tol * max(1.0, abs(total)):
            return cmath.exp(s * cmath.log(x) - x) * total
    raise BudgetExhausted("incomplete-gamma series", abs(term))


def _near_nonpositive_integer(s: complex) -> bool:
    return (
        s.real < 0.5
        and abs(s.imag) < 0.1
        and round(s.real) <= 0
        and abs(s - round(s.real)) < 0.25
    )


def upper_incomplete_gamma(
    s: complex, x: float, budget: AccuracyBudget | None = None
) -> complex:
    """Gamma(s, x) = integral_x^infty e^{-t} t^{s-1} dt for x > 0.

    Continued fraction for x >= |s| + 1, series complement
    Gamma(s) - gamma(s, x) otherwise.  Entire in s for fixed x > 0; near
    non-positive integer s the complement route would cancel Gamma poles,
    so the continued fraction (convergent for every complex s when x > 0,
    merely slower for x < |s|) is used there as well.
    """
    budget = budget or DEFAULT_BUDGET
    s = require_finite(s)
    if not (x > 0):
        raise ValueError(f"x must be positive, got {x}")
    tol = min(budget.abs_tol, 1e-15)
    if x >= abs(s) + 1.0 or _near_nonpositive_integer(s):
        return _gamma_upper_cf(s, x, 1e-16, budget.series_terms_max)
    return gamma(s) - _gamma_lower_series(s, x, tol, budget.series_terms_max)


def gamma_upper_array(s, x: float, budget: AccuracyBudget | None = None) -> np.ndarray:
    """Vectorized Gamma(s, x) over an array of complex s, fixed x > 0.

    Same branch selection as the scalar routine; used by the contour and
    grid sweeps where thousands of evaluations share one x.
    """
    budget = budget or DEFAULT_BUDGET
    s = np.asarray(s, dtype=complex)
    if not (x > 0):
        raise ValueError(f"x must be positive, got {x}")
    out = np.empty(s.shape, dtype=complex)
    flat = s.ravel()
    res = out.ravel()
    near_pole = np.array([_near_nonpositive_integer(v) for v in flat])
    use_cf = (np.abs(flat) + 1.0 <= x) | near_pole

    if use_cf.any():
        z = flat[use_cf]
        b = x + 1.0 - z
        c = np.full_like(z, 1.0 / _TINY)
        d = 1.0 / np.where(b == 0, _TINY, b)
        h = d.copy()
        converged = np.zeros(z.shape, dtype=bool)
        for i in range(1, budget.series_terms_max + 1):
            an = -i * (i - z)
            b = b + 2.0
            d = an * d + b
            d = np.where(np.abs(d) < _TINY, _TINY, d)
            c = b + an / c
            c = np.where(np.abs(c) < _TINY, _TINY, c)
            d = 1.0 / d
            delta = d * c
            h = np.where(converged, h, h * delta)
            converged |= np.abs(delta - 1.0) < 1e-16
            if converged.all():
                break
        else:
            raise BudgetExhausted("vectorized incomplete-gamma CF", float(np.abs(delta - 1.0).max()))
        res[use_cf] = np.exp(-x + z * np.log(x)) * h

    if (~use_cf).any():
        # assumes callers keep series-branch s away from non-positive
        # integers (true on every grid this package sweeps)
        z = flat[~use_cf]
        term = 1.0 / z
        total = term.copy()
        converged = np.zeros(z.shape, dtype=bool)
        for n in range(1, budget.series_terms_max + 1):
            term = term * (x / (z + n))
            total = np.where(converged, total, total + term)
            converged |= np.abs(term) < 1e-16 * np.maximum(1.0, np.abs(total))
            if converged.all():
                break
        else:
            raise BudgetExhausted("vectorized incomplete-gamma series", float(np.abs(term).max()))
        lg = np.array([log_gamma(v) for v in z])
        res[~use_cf] = np.exp(lg) - np.exp(z * np.log(x) - x) * total
    return out


# ---------------------------------------------------------------------------
# K-Bessel
# ---------------------------------------------------------------------------

def _bessel_i_series(order: complex, y: float, max_iter: int) -> complex:
    # I_s(y) = sum_m (y/2)^{s+2m} / (m! Gamma(s+m+1)), small-argument series.
    half = y / 2.0
    log_half = cmath.log(half)
    total = 0.0 + 0.0j
    for m in range(max_iter):
        lg = log_gamma(order + m + 1)
        term = cmath.exp((order + 2 * m) * log_half - lg - math.lgamma(m + 1))
        total += term
        if abs(term) < 1e-17 * max(1.0, abs(total)) and m > 2:
            return total
    raise BudgetExhausted("I-Bessel series", abs(term))


def _bessel_k_series_raw(order: complex, y: float, budget: AccuracyBudget) -> complex:
    im = _bessel_i_series(-order, y, budget.series_terms_max)
    ip = _bessel_i_series(order, y, budget.series_terms_max)
    return (math.pi / 2.0) * (im - ip) / cmath.sin(math.pi * order)


def _bessel_k_series(order: complex, y: float, budget: AccuracyBudget) -> complex:
    # K_s = (pi/2) (I_{-s} - I_s) / sin(pi s); near integer order the
    # quotient is a removable singularity, handled by Richardson-corrected
    # averaging of orders nu +- eps.  eps = 1e-4 balances the eps^4
    # averaging bias (~1e-16 K'''') against the sin(pi nu) cancellation
    # (~1e-16/(pi eps)); attained error <~3e-11 absolute in this regime.
    n = round(order.real)
    if abs(order - n) < 5e-5:
        def avg(eps: float) -> complex:
            p = _bessel_k_series_raw(order + eps, y, budget)
            m = _bessel_k_series_raw(order - eps, y, budget)
            return 0.5 * (p + m)

        eps = 1e-4
        a1 = avg(eps)
        a2 = avg(2 * eps)
        return (4.0 * a1 - a2) / 3.0
    return _bessel_k_series_raw(order, y, budget)


def _bessel_k_quadrature(order: complex, y: float, budget: AccuracyBudget) -> complex:
    # K_nu(y) = int_0^infty e^{-y cosh t} cosh(nu t) dt, valid for every
    # complex nu and y > 0.  Composite Gauss-Legendre; the cutoff T solves
    # y cosh T - |Re nu| T = 745 so the discarded tail underflows.
    a = abs(order.real)
    hi = 5.0
    while y * math.cosh(hi) - a * hi < 745.0 and hi < 710.0:
        hi *= 1.5
    lo = 0.0
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if y * math.cosh(mid) - a * mid < 745.0:
            lo = mid
        else:
            hi = mid
    t_max = hi
    # >= 8 nodes per oscillation of cosh(i Im(nu) t) plus a floor for the
    # exponential peak structure
    oscillations = abs(order.imag) * t_max / (2.0 * math.pi)
    panels = int(min(budget.quadrature_panels_max, max(8, math.ceil(t_max * 2), math.ceil(oscillations * 2))))
    nodes, weights = np.polynomial.legendre.leggauss(16)
    total = 0.0 + 0.0j
    edges = np.linspace(0.0, t_max, panels + 1)
    for left, right in zip(edges[:-1], edges[1:]):
        mid = 0.5 * (left + right)
        halfw = 0.5 * (right - left)
        t = mid + halfw * nodes
        expo = -y * np.cosh(t)
        vals = np.exp(expo) * np.cosh(complex(order) * t)
        total += halfw * np.dot(weights, vals)
    return total


def bessel_k(order: complex, y: float, budget: AccuracyBudget | None = None) -> complex:
    """Macdonald function K_order(y) for real y > 0 and complex order.

    Small y: difference-of-I series; y >= 2: direct quadrature of the
    cosh-kernel integral (order-uniform, no singularity at integer order).
    Symmetric under order -> -order by construction of both routes.
    """
    budget = budget or DEFAULT_BUDGET
    order = require_finite(order, "order")
    if not (y > 0):
        raise ValueError(f"y must be positive, got {y}")
    if y > 705.0:
        return 0.0 + 0.0j  # below binary64 underflow; absolute tolerance met
    if y < 2.0:
        return _bessel_k_series(order, y, budget)
    return _bessel_k_quadrature(order, y, budget)


# ---------------------------------------------------------------------------
# Jacobi theta
# ---------------------------------------------------------------------------

def theta(t: float, budget: AccuracyBudget | None = None) -> float:
    """theta(it) = 1/2 + sum_{n>=1} exp(-pi n^2 t) for t > 0.

    For t < 1 the modular transformation theta(it) = t^{-1/2} theta(i/t)
    is applied first, so the series is always evaluated at t >= 1 where the
    geometric tail bound e^{-pi n^2 t} / (1 - e^{-pi t}) certifies
    truncation.
    """
    budget = budget or DEFAULT_BUDGET
    if not (t > 0) or not math.isfinite(t):
        raise ValueError(f"t must be positive and finite, got {t}")
    if t < 1.0:
        return theta(1.0 / t, budget) / math.sqrt(t)
    tol = budget.abs_tol * (1.0 - math.exp(-math.pi * t))
    total = 0.5
    n = 1
    while True:
        term = math.exp(-math.pi * n * n * t)
        total += term
        if term < tol:
            return total
        n += 1
        if n > budget.series_terms_max:
            raise BudgetExhausted("theta series", term)
