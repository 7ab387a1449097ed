"""q-expansion arithmetic: Ramanujan Delta, holomorphic Eisenstein series,
upper-half-plane evaluation, Hecke operators, and modularity residuals.

Delta coefficients are computed in exact integer arithmetic.  The cube of
Euler's product is the sparse series sum_k (-1)^k (2k+1) q^{k(k+1)/2};
raising it to the 8th power is done by packing coefficients into one big
integer (Kronecker substitution, 192 bits per coefficient) and squaring
three times, which GMP handles in well under a second up to 10^5 terms.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

try:
    from gmpy2 import mpz
except ImportError:  # pure-int fallback, ~20x slower but exact
    mpz = int

from . import zeta_core
from .special_fn import require_finite

_COEFF_BITS = 192  # |tau(n)| < d(n) n^{11/2} < 2^{140} for n <= 10^6


@dataclass(frozen=True)
class UnimodularMatrix:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError("determinant must be exactly 1")

    def apply(self, tau: complex) -> complex:
        return (self.a * tau + self.b) / (self.c * tau + self.d)


S_MATRIX = UnimodularMatrix(0, -1, 1, 0)


@dataclass(frozen=True)
class QExpansion:
    """Truncated q-series f(tau) = sum_{n=0}^{M} a_n e^{2 pi i n tau / period}.

    coeffs[n] = a_n; exact ints for forms computed in integer arithmetic,
    complex floats otherwise.  growth = (K, d) records |a_n| <= K n^d for
    the evaluation tail bound.
    """

    weight: float
    period: float
    multiplier: int
    coeffs: tuple
    growth: tuple = (1.0, 0.0)

    def __post_init__(self):
        if len(self.coeffs) < 2:
            raise ValueError("need truncation order M >= 1")
        if self.multiplier not in (1, -1):
            raise ValueError("multiplier must be +1 or -1")

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_cusp_form(self) -> bool:
        return self.coeffs[0] == 0


# ---------------------------------------------------------------------------
# Ramanujan Delta
# ---------------------------------------------------------------------------

def _euler_cube(M: int) -> list[int]:
    """Coefficients of prod (1-q^n)^3 = sum_k (-1)^k (2k+1) q^{k(k+1)/2}."""
    out = [0] * (M + 1)
    k = 0
    while k * (k + 1) // 2 <= M:
        out[k * (k + 1) // 2] = (2 * k + 1) * (1 if k % 2 == 0 else -1)
        k += 1
    return out


def _pack(coeffs: list[int], bits: int):
    acc = mpz(0)
    for n, c in enumerate(coeffs):
        if c:
            acc += mpz(c) << (bits * n)
    return acc


def _unpack(value, count: int, bits: int) -> list[int]:
    # balanced-digit extraction: digits are in [0, 2^bits); values above
    # half the range are negative coefficients borrowing from the next one
    half = 1 << (bits - 1)
    full = 1 << bits
    mask = full - 1
    value = int(value) + (1 << (bits * (count + 1)))  # sentinel keeps it positive
    raw = value.to_bytes(bits // 8 * (count + 2), "little")
    step = bits // 8
    out = []
    carry = 0
    for n in range(count):
        d = int.from_bytes(raw[n * step : (n + 1) * step], "little") + carry
        carry = 0
        if d >= half:
            d -= full
            carry = 1
        out.append(d)
    return out


_tau_cache: dict = {"M": 0, "coeffs": [0, 1]}


def tau_coefficients(M: int) -> list[int]:
    """[tau(0)=0, tau(1), ..., tau(M)] as exact integers."""
    if M > 1_000_000:
        raise ValueError("truncation capped at 10^6")
    if _tau_cache["M"] < M:
        # Delta/q = (prod (1-q^n))^24 = (euler_cube)^8, track M coefficients
        e3 = _pack(_euler_cube(M), _COEFF_BITS)
        cutoff = mpz(1) << (_COEFF_BITS * (M + 1))
        e6 = (e3 * e3) % cutoff
        e12 = (e6 * e6) % cutoff
        e24 = (e12 * e12) % cutoff
        co = _unpack(e24, M + 1, _COEFF_BITS)
        _tau_cache["M"] = M
        _tau_cache["coeffs"] = [0] + co[: M]  # shift by one: Delta = q * e24
    return _tau_cache["coeffs"][: M + 1]


def delta_q_expansion(M: int) -> QExpansion:
    """Ramanujan Delta = q prod (1-q^n)^24, exact integer coefficients."""
    co = tau_coefficients(M)
    return QExpansion(
        weight=12.0, period=1.0, multiplier=1, coeffs=tuple(co),
        growth=(20.0, 6.0),  # generous integer-coefficient cap d(n) n^{11/2}
    )


# ---------------------------------------------------------------------------
# Holomorphic Eisenstein series G_k
# ---------------------------------------------------------------------------

def sigma_table(power: int, M: int) -> list[int]:
    """sigma_power(n) for n = 0..M by divisor sieve (sigma(0) := 0)."""
    out = [0] * (M + 1)
    for d in range(1, M + 1):
        dp = d**power
        for n in range(d, M + 1, d):
            out[n] += dp
    return out


def eisenstein_gk_q_expansion(k: int, M: int) -> QExpansion:
    """G_k(z) = 2 zeta(k) + (2 (2 pi i)^k / (k-1)!) sum sigma_{k-1}(n) q^n."""
    if k % 2 != 0 or k < 4:
        raise ValueError("weight must be even and >= 4")
    front = 2.0 * (2j * math.pi) ** k / math.factorial(k - 1)
    sig = sigma_table(k - 1, M)
    coeffs = [complex(2.0 * zeta_core.zeta(float(k)))] + [front * s for s in sig[1:]]
    growth = (2.0 * abs(front) * 2.0, float(k))  # sigma_{k-1}(n) <= zeta(k-1) n^{k-1}
    return QExpansion(weight=float(k), period=1.0, multiplier=1 if k % 4 == 0 else -1,
                      coeffs=tuple(coeffs), growth=growth)


def eisenstein_gk_lattice(k: int, z: complex, R: int = 200) -> complex:
    """Direct double sum of (mz+n)^{-k} over |m|, |n| <= R.

    The n-direction is completed with Euler-Maclaurin end corrections so
    the truncation error is far below the q-expansion comparison level.
    """
    z = require_finite(z, "z")
    if z.imag <= 0:
        raise ValueError("z must be in the upper half plane")
    total = 0j
    ns = np.arange(-R, R + 1, dtype=float)
    for m in range(-R, R + 1):
        w = m * z
        if m == 0:
            row = np.concatenate([ns[:R], ns[R + 1:]]) ** -float(k)
            row_sum = row.sum()
            tail = 0j
            for sign in (+1.0, -1.0):
                e = sign * (R + 1)
                f = complex(e) ** -k
                fp = -k * complex(e) ** -(k + 1) * sign
                tail += complex(e) ** (1 - k) / (k - 1) * (sign) + f / 2.0 - fp / 12.0
            total += row_sum + tail
        else:
            vals = (w + ns) ** -float(k)
            total += vals.sum()
            for sign in (+1.0, -1.0):
                e = w + sign * (R + 1)
                f = e**-k
                fp = -k * e ** -(k + 1) * sign
                total += e ** (1 - k) / (k - 1) * sign + f / 2.0 - fp / 12.0
    return total


# ---------------------------------------------------------------------------
# Evaluation and operators
# ---------------------------------------------------------------------------

def evaluation_tail_bound(f: QExpansion, tau: complex) -> float:
    """Certified bound on the dropped tail sum_{n>M} |a_n| |q|^{n/period}."""
    K, d = f.growth
    M = f.truncation
    x = math.exp(-2.0 * math.pi * tau.imag / f.period)
    if x >= 1.0:
        return math.inf
    ratio = x * ((M + 2) / (M + 1)) ** d
    if ratio >= 1.0:
        return math.inf
    return K * (M + 1) ** d * x ** (M + 1) / (1.0 - ratio)


def evaluate(f: QExpansion, tau: complex, abs_tol: float = 1e-9) -> complex:
    """f(tau) by truncated q-series; raises if the tail bound misses abs_tol."""
    tau = require_finite(tau, "tau")
    if tau.imag <= 0:
        raise ValueError("tau must be in the upper half plane")
    bound = evaluation_tail_bound(f, tau)
    if bound > abs_tol:
        raise ValueError(
            f"tail bound {bound:.2e} exceeds {abs_tol:.2e}: Im tau too small "
            f"for truncation order {f.truncation}"
        )
    q1 = cmath.exp(2j * math.pi * tau / f.period)
    acc = 0j
    # Horner from the top keeps the large-n terms from underflowing early
    for a in reversed(f.coeffs):
        acc = acc * q1 + complex(a)
    return acc


def hecke_tn(f: QExpansion, n: int, maass_normalization: bool = False) -> QExpansion:
    """Hecke operator action on coefficients at level one:

        (T_n f)_m = sum_{d | gcd(n, m)} d^{k-1} a_{n m / d^2},

    derived from the point-wise averaging operator (verified against it in
    the test suite for n = 2, 3).  Input must be truncated to order >= n*M
    for an order-M result.  The holomorphic normalization carries the 1/n
    prefactor already folded in; the Maass convention rescales by n^{1/2}.
    """
    if n < 1:
        raise ValueError("n must be positive")
    k = int(f.weight)
    if k != f.weight:
        raise ValueError("integer weight required")
    M_out = f.truncation // n
    if M_out < 1:
        raise ValueError(f"input truncated to {f.truncation} < n = {n}")
    exact = all(isinstance(a, int) for a in f.coeffs)
    out = []
    for m in range(M_out + 1):
        acc = 0 if exact else 0j
        if m == 0:
            # T_n a_0 = sigma_{k-1}(n) a_0
            acc = sum(d ** (k - 1) for d in range(1, n + 1) if n % d == 0) * f.coeffs[0]
        else:
            g = math.gcd(n, m)
            for d in range(1, g + 1):
                if g % d == 0:
                    acc += d ** (k - 1) * f.coeffs[n * m // (d * d)]
        out.append(acc)
    if maass_normalization:
        out = [a * math.sqrt(n) for a in out]
    return QExpansion(weight=f.weight, period=f.period, multiplier=f.multiplier,
                      coeffs=tuple(out), growth=(f.growth[0] * 2 * n ** k, f.growth[1]))


def hecke_tn_pointwise(f: QExpansion, n: int, tau: complex, abs_tol: float = 1e-8) -> complex:
    """The averaging form (1/n) sum_{ad=n} a^k sum_{0<=b<d} f((a tau + b)/d).

    Direct evaluation of the defining operator; exists so the coefficient
    action above can be cross-checked at sample points.
    """
    k = int(f.weight)
    total = 0j
    for a in range(1, n + 1):
        if n % a:
            continue
        d = n // a
        for b in range(d):
            total += a**k * evaluate(f, (a * tau + b) / d, abs_tol)
    return total / n


def modularity_check(f: QExpansion, gamma: UnimodularMatrix, tau: complex,
                     abs_tol: float = 1e-9) -> float:
    """|f(gamma tau) - C (c tau + d)^k f(tau)| with the principal branch.

    Integer weight: the (c tau + d)^k cocycle (multiplier enters only for
    the inversion).  Half-integral weight is defined here for the two
    generators tau -> tau + period and S only, with the (tau/i)^k
    convention for S.
    """
    tau = require_finite(tau, "tau")
    k = f.weight
    half_integral = k != int(k)
    image = gamma.apply(tau)
    lhs = evaluate(f, image, abs_tol)
    if half_integral:
        if (gamma.a, gamma.b, gamma.c, gamma.d) == (0, -1, 1, 0):
            factor = f.multiplier * (tau / 1j) ** k
        elif gamma.c == 0 and gamma.a == 1 and gamma.d == 1:
            factor = 1.0  # translation; b must be a multiple of the period
            if gamma.b % f.period != 0:
                raise ValueError("translation not a period multiple")
        else:
            raise ValueError("half-integral weight: only S and translations supported")
    else:
        factor = (gamma.c * tau + gamma.d) ** k
        if (gamma.a, gamma.b, gamma.c, gamma.d) == (0, -1, 1, 0):
            # S-convention f(-1/tau) = C (tau/i)^k f(tau); for even integer
            # weight (tau/i)^k = i^{-k} tau^k, and C is defined to absorb i^k
            factor = f.multiplier * (tau / 1j) ** k
    return abs(lhs - factor * evaluate(f, tau, abs_tol))


def theta_q_expansion(M: int = 144) -> QExpansion:
    """theta as a weight-1/2 form: period 2, a_0 = 1/2, a_{m^2} = 1."""
    co = [0.0] * (M + 1)
    co[0] = 0.5
    m = 1
    while m * m <= M:
        co[m * m] = 1.0
        m += 1
    return QExpansion(weight=0.5, period=2.0, multiplier=1, coeffs=tuple(co),
                      growth=(1.0, 0.0))


def coefficient_rows(f: QExpansion, normalize_power: float | None = None):
    """(n, a_n, a_n / n^normalize_power) rows for CSV export."""
    rows = []
    power = normalize_power if normalize_power is not None else (f.weight - 1) / 2.0
    for n in range(1, f.truncation + 1):
        a = f.coeffs[n]
        rows.append((n, a, complex(a) / n**power))
    return rows
