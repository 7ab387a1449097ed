"""Satake parameters, symmetric/exterior-power and Rankin-Selberg local
factors, Ramanujan/Kim-Sarnak window checks, Sato-Tate statistics, and the
integrality obstruction average.

Hecke eigenvalue data comes from the exact Delta coefficients; everything
prime-indexed runs off the shared sieve.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

import numpy as np
from scipy.integrate import quad

from . import primes as _primes
from .modular_forms import tau_coefficients
from .report import VerificationReport

KIM_SARNAK_EXPONENT = 7.0 / 64.0


@dataclass(frozen=True)
class SatakeData:
    """Local parameters alpha_{p,1..n} of a degree-n Euler factor at p."""

    p: int
    alphas: tuple

    @property
    def degree(self) -> int:
        return len(self.alphas)


def satake_from_ap(a_p: float, p: int) -> SatakeData:
    """Roots of x^2 - a_p x + 1; returns (alpha, 1/alpha) with the
    convention |alpha| >= 1, ties broken by nonnegative imaginary part."""
    if not math.isfinite(a_p):
        raise ValueError("a_p must be finite")
    disc = complex(a_p * a_p - 4.0)
    root = cmath.sqrt(disc)
    r1 = (a_p + root) / 2.0
    r2 = (a_p - root) / 2.0
    alpha = r1
    if (abs(r2), r2.imag) > (abs(r1), r1.imag):
        alpha = r2
    if abs(alpha) < 1.0 - 1e-12:
        alpha = 1.0 / alpha
    if abs(abs(alpha) - 1.0) < 1e-12 and alpha.imag < 0:
        alpha = alpha.conjugate()
    beta = 1.0 / alpha
    return SatakeData(p=p, alphas=(alpha, beta))


def _p_power(d: SatakeData, s: complex) -> complex:
    return cmath.exp(-s * math.log(d.p))


def sym_power_local(d: SatakeData, k: int, s: complex) -> complex:
    """Degree-(k+1) symmetric-power factor
    prod_{j=0}^{k} (1 - alpha^j beta^{k-j} p^{-s})^{-1} for GL(2) data."""
    if d.degree != 2:
        raise ValueError("GL(2) Satake data required")
    if k < 1:
        raise ValueError("k >= 1")
    alpha, beta = d.alphas
    ps = _p_power(d, s)
    acc = 1.0 + 0.0j
    for j in range(k + 1):
        acc *= 1.0 - alpha**j * beta ** (k - j) * ps
    return 1.0 / acc


def sym_power_local_gln(d: SatakeData, k: int, s: complex) -> complex:
    """prod_{i_1 <= ... <= i_k} (1 - alpha_{i_1} ... alpha_{i_k} p^{-s})^{-1}."""
    if k < 1:
        raise ValueError("k >= 1")
    ps = _p_power(d, s)
    acc = 1.0 + 0.0j
    for combo in combinations_with_replacement(d.alphas, k):
        acc *= 1.0 - np.prod(combo) * ps
    return 1.0 / acc


def ext_power_local(d: SatakeData, k: int, s: complex) -> complex:
    """prod_{i_1 < ... < i_k} (1 - alpha_{i_1} ... alpha_{i_k} p^{-s})^{-1}."""
    if k < 1:
        raise ValueError("k >= 1")
    if k > d.degree:
        raise ValueError(f"exterior power k = {k} exceeds degree {d.degree}")
    ps = _p_power(d, s)
    acc = 1.0 + 0.0j
    for combo in combinations(d.alphas, k):
        acc *= 1.0 - np.prod(combo) * ps
    return 1.0 / acc


def rankin_selberg_local(d1: SatakeData, d2: SatakeData, s: complex) -> complex:
    """prod_{j,k} (1 - alpha_j beta_k p^{-s})^{-1}, the degree-nm tensor factor."""
    if d1.p != d2.p:
        raise ValueError("local data at different primes")
    ps = _p_power(d1, s)
    acc = 1.0 + 0.0j
    for a in d1.alphas:
        for b in d2.alphas:
            acc *= 1.0 - a * b * ps
    return 1.0 / acc


# ---------------------------------------------------------------------------
# Delta eigenvalue data
# ---------------------------------------------------------------------------

def delta_ap(X: int) -> tuple[np.ndarray, np.ndarray]:
    """(primes p <= X, normalized a_p = tau(p)/p^{11/2}) for Delta."""
    tau = tau_coefficients(X)
    ps = _primes.primes(X)
    ap = np.array([float(tau[int(p)]) / float(p) ** 5.5 for p in ps])
    return ps, ap


def delta_ap_integer(X: int) -> tuple[np.ndarray, list[int]]:
    """(primes p <= X, exact integer tau(p))."""
    tau = tau_coefficients(X)
    ps = _primes.primes(X)
    return ps, [tau[int(p)] for p in ps]


# ---------------------------------------------------------------------------
# Sato-Tate statistics
# ---------------------------------------------------------------------------

def semicircle_moment(m: int) -> float:
    """(1/2 pi) int_{-2}^{2} x^m sqrt(4 - x^2) dx by quadrature."""
    if not (0 <= m <= 20):
        raise ValueError("moment order limited to 0..20")
    val, err = quad(lambda x: x**m * math.sqrt(max(4.0 - x * x, 0.0)) / (2.0 * math.pi),
                    -2.0, 2.0, limit=200, epsabs=1e-13, epsrel=1e-13)
    if err > 1e-10:
        raise RuntimeError(f"semicircle moment quadrature error {err:.2e}")
    return val


def semicircle_density(x: float) -> float:
    """d mu_semicircle / dx = sqrt(4 - x^2) / (2 pi) on [-2, 2]."""
    return math.sqrt(max(4.0 - x * x, 0.0)) / (2.0 * math.pi)


def angle_density(theta: float) -> float:
    """The phase-side density (2/pi) sin^2(theta) on [0, pi]."""
    return 2.0 / math.pi * math.sin(theta) ** 2


def sato_tate_report(ap_values: np.ndarray, X: int, m_max: int = 4,
                     bins: int = 40) -> tuple[list, np.ndarray, VerificationReport]:
    """Moments S_m(X)/pi(X) against semicircle moments, plus the theta_p
    histogram against (2/pi) sin^2.

    Returns (moment rows, histogram rows, report).  Moment rows are
    (m, empirical, target); histogram rows are (bin center, empirical
    density, target density).  The report's error is the worst moment
    deviation weighted per order (0.1 for m <= 2, 0.3 above: odd moments
    vanish only like pi(X)^{-1/2} at desk scale).
    """
    ap = np.asarray(ap_values, dtype=float)
    n_p = len(ap)
    if n_p == 0:
        raise ValueError("no prime coefficients supplied")
    violations = int((np.abs(ap) > 2.0).sum())
    thetas = np.arccos(np.clip(ap / 2.0, -1.0, 1.0))
    moments = []
    for m in range(m_max + 1):
        emp = float((ap**m).sum()) / n_p
        moments.append((m, emp, semicircle_moment(m)))
    edges = np.linspace(0.0, math.pi, bins + 1)
    counts, _ = np.histogram(thetas, bins=edges)
    width = edges[1] - edges[0]
    centers = 0.5 * (edges[:-1] + edges[1:])
    emp_density = counts / (n_p * width)
    hist = np.column_stack([centers, emp_density, [angle_density(c) for c in centers]])
    pairs = []
    worst = 0.0
    for m, emp, target in moments:
        if m == 0:
            continue
        tol_m = 0.1 if m <= 2 else 0.3
        gap = abs(emp - target)
        pairs.append((f"m={m} (tol {tol_m})", gap))
        worst = max(worst, gap / tol_m)
    rep = VerificationReport(
        check_name="sato-tate-moments",
        grid_description=f"Delta-normalized a_p, p <= {X}, {n_p} primes, {bins} bins",
        max_abs_error=worst,  # scaled so that 1.0 means every moment at its cap
        tolerance=1.0,
        passed=worst <= 1.0 and violations == 0,
        details=pairs + [(f"|a_p|>2 violations", float(violations))],
    )
    return moments, hist, rep


def histogram_discrepancy(ap_values: np.ndarray, bins: int = 40) -> float:
    """Integrated squared gap between the theta_p histogram and the
    (2/pi) sin^2 density; used for the X-growth direction check."""
    ap = np.asarray(ap_values, dtype=float)
    thetas = np.arccos(np.clip(ap / 2.0, -1.0, 1.0))
    edges = np.linspace(0.0, math.pi, bins + 1)
    counts, _ = np.histogram(thetas, bins=edges)
    width = edges[1] - edges[0]
    centers = 0.5 * (edges[:-1] + edges[1:])
    emp = counts / (len(ap) * width)
    target = np.array([angle_density(c) for c in centers])
    return float(((emp - target) ** 2).sum() * width)


def ramanujan_kim_sarnak_check(ps: np.ndarray, ap_values: np.ndarray,
                               X: int) -> VerificationReport:
    """|a_p| <= 2 for every p <= X, and the Satake moduli against the
    p^{+-7/64} window.  Violations are reported, never raised."""
    ap = np.asarray(ap_values, dtype=float)
    violations = []
    worst_margin = math.inf
    max_ap = 0.0
    for p, a in zip(ps, ap):
        p = int(p)
        max_ap = max(max_ap, abs(a))
        if abs(a) > 2.0:
            violations.append((f"p={p}: |a_p|={abs(a):.6f} > 2", abs(a) - 2.0))
            continue
        alpha = satake_from_ap(float(a), p).alphas[0]
        window = KIM_SARNAK_EXPONENT * math.log(p)
        margin = window - abs(math.log(abs(alpha)))
        worst_margin = min(worst_margin, margin)
    details = violations[:9] + [(f"max |a_p| (p <= {X})", max_ap)]
    return VerificationReport(
        check_name="ramanujan-kim-sarnak",
        grid_description=f"p <= {X}, {len(ap)} primes, window p^(7/64)",
        max_abs_error=float(len(violations)),
        tolerance=0.0,
        passed=not violations,
        details=details + [("min log-margin to Kim-Sarnak window", worst_margin)],
    )


def integrality_polynomial(x: float) -> float:
    """P(x) = x^2 (4 - x^2) (x^2 - 1): zero at the five integers in [-2, 2],
    negative at every other integer, yet of semicircle average one."""
    return x * x * (4.0 - x * x) * (x * x - 1.0)


def sarnak_integrality_test(integer_ap: list, X: int) -> VerificationReport:
    """Average of P over integer coefficient data vs the semicircle value 1.

    The quadrature side reproduces 1 (= -M6 + 5 M4 - 4 M2); any all-integer
    coefficient family averages P <= 0, so the report carries the
    contradiction margin between the two.
    """
    target = -semicircle_moment(6) + 5.0 * semicircle_moment(4) - 4.0 * semicircle_moment(2)
    empirical = float(np.mean([integrality_polynomial(float(a)) for a in integer_ap]))
    margin = target - empirical
    return VerificationReport(
        check_name="sarnak-integrality",
        grid_description=f"integer a_p, p <= {X}, {len(integer_ap)} primes",
        max_abs_error=abs(target - 1.0),
        tolerance=1e-10,
        passed=abs(target - 1.0) <= 1e-10,
        details=[
            ("semicircle average of P (target 1)", target),
            ("empirical average of P over integer data", empirical),
            ("contradiction margin (target - empirical)", margin),
        ],
    )
