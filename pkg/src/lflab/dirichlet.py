"""Dirichlet characters mod N, primitivity/conductor, Gauss sums, and
Dirichlet L-values.

Characters are stored as explicit value tables indexed by residue
(0 for residues sharing a factor with N); construction goes through the
unit-group structure: prime-power decomposition, a generator per cyclic
factor (two factors for 2^k, k >= 3), and all exponent tuples.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from .special_fn import require_finite
from . import zeta_core

MAX_MODULUS = 10_000


def _prime_power_split(N: int) -> list[tuple[int, int]]:
    out = []
    n = N
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def _primitive_root(q: int, p: int) -> int:
    """A generator of the cyclic group (Z/qZ)* for q = p^e, p odd."""
    phi_p = p - 1
    fac = [f for f, _ in _prime_power_split(phi_p)]
    g = None
    for cand in range(2, p):
        if all(pow(cand, phi_p // f, p) != 1 for f in fac):
            g = cand
            break
    if q == p:
        return g
    # lift: g works mod p^e unless g^{p-1} = 1 mod p^2, then g + p does
    if pow(g, p - 1, p * p) == 1:
        g += p
    return g


def _unit_group(N: int) -> tuple[list[int], list[int]]:
    """Generators and their orders for (Z/NZ)* via CRT on prime powers."""
    if N == 1:
        return [], []
    gens: list[int] = []
    orders: list[int] = []
    parts = _prime_power_split(N)
    for p, e in parts:
        q = p**e
        rest = N // q
        # CRT lift of a local generator g: x = g mod q, x = 1 mod N/q
        def lift(g: int) -> int:
            if rest == 1:
                return g % N
            inv = pow(q, -1, rest)
            return (g + q * ((1 - g) * inv % rest)) % N

        if p == 2:
            if e == 1:
                continue
            gens.append(lift(q - 1))  # -1 mod 2^e
            orders.append(2)
            if e >= 3:
                gens.append(lift(5))
                orders.append(q // 4)
        else:
            gens.append(lift(_primitive_root(q, p)))
            orders.append(q // p * (p - 1))
    return gens, orders


@dataclass(frozen=True)
class DirichletCharacter:
    """A character mod N as a value table on residues 0..N-1."""

    modulus: int
    values: tuple  # complex, length = modulus; 0 off the units

    def __call__(self, n: int) -> complex:
        return self.values[n % self.modulus]

    @property
    def is_even(self) -> bool:
        return self(-1) == 1

    @property
    def is_odd(self) -> bool:
        return not self.is_even

    @property
    def is_principal(self) -> bool:
        return all(v in (0, 1) for v in self.values) and self.conductor == 1

    @property
    def conductor(self) -> int:
        """Smallest modulus f | N from which this character is induced."""
        N = self.modulus
        if N == 1:
            return 1
        for f in _divisors(N):
            if all(
                self.values[a] == 1
                for a in range(1, N)
                if a % f == 1 % f and math.gcd(a, N) == 1
            ):
                return f
        return N

    @property
    def is_primitive(self) -> bool:
        return self.conductor == self.modulus

    def conjugate(self) -> "DirichletCharacter":
        return DirichletCharacter(self.modulus, tuple(v.conjugate() for v in self.values))


def _divisors(N: int) -> list[int]:
    out = [d for d in range(1, int(math.isqrt(N)) + 1) if N % d == 0]
    out += [N // d for d in out if d * d != N]
    return sorted(out)


def is_primitive(chi: DirichletCharacter) -> tuple[bool, int]:
    """(primitivity flag, conductor)."""
    f = chi.conductor
    return f == chi.modulus, f


@lru_cache(maxsize=64)
def characters_mod(N: int) -> tuple[DirichletCharacter, ...]:
    """All phi(N) characters mod N, deterministic order, closed under
    complex conjugation."""
    if N < 1:
        raise ValueError("modulus must be >= 1")
    if N > MAX_MODULUS:
        raise ValueError(f"modulus capped at {MAX_MODULUS}")
    if N == 1:
        return (DirichletCharacter(1, (1 + 0j,)),)
    gens, orders = _unit_group(N)
    # enumerate residues as products of generator powers, remembering logs
    logs: dict[int, tuple[int, ...]] = {}

    def walk(i: int, residue: int, expo: tuple[int, ...]):
        if i == len(gens):
            logs[residue] = expo
            return
        r = residue
        for k in range(orders[i]):
            walk(i + 1, r, expo + (k,))
            r = (r * gens[i]) % N

    walk(0, 1 % N, ())

    # all values are den-th roots of unity, den = group exponent * ...;
    # a conjugation-symmetric table makes closure under conjugation exact
    den = math.lcm(*orders) if orders else 1
    quarter = {0: 1 + 0j, 1: 1j, 2: -1 + 0j, 3: -1j}
    roots = [0j] * den
    for j in range(den // 2 + 1):
        if (4 * j) % den == 0:
            roots[j] = quarter[4 * j // den]
        else:
            roots[j] = cmath.exp(2j * math.pi * j / den)
    for j in range(den // 2 + 1, den):
        roots[j] = roots[den - j].conjugate()

    chars = []

    def build(exponents: tuple[int, ...]):
        vals = [0j] * N
        for residue, ks in logs.items():
            num = sum(e * k * (den // d) for e, k, d in zip(exponents, ks, orders)) % den
            vals[residue] = roots[num]
        chars.append(DirichletCharacter(N, tuple(vals)))

    def enumerate_exponents(i: int, expo: tuple[int, ...]):
        if i == len(gens):
            build(expo)
            return
        for e in range(orders[i]):
            enumerate_exponents(i + 1, expo + (e,))

    enumerate_exponents(0, ())
    return tuple(chars)


def induce_character(chi: DirichletCharacter, modulus: int) -> DirichletCharacter:
    """The (generally imprimitive) character mod `modulus` induced by chi."""
    if modulus % chi.modulus != 0:
        raise ValueError("new modulus must be a multiple of the old")
    vals = tuple(
        chi(n) if math.gcd(n, modulus) == 1 else 0j for n in range(modulus)
    )
    return DirichletCharacter(modulus, vals)


def gauss_sum(chi: DirichletCharacter) -> complex:
    """g(chi) = sum_{n mod r} chi(n) e^{2 pi i n / r}."""
    r = chi.modulus
    return sum(chi(n) * cmath.exp(2j * math.pi * n / r) for n in range(r))


def _pow_ratio_diff(base: float, w: complex) -> complex:
    # base^w - 1 computed stably for small |w log base|
    z = w * math.log(base)
    if abs(z) > 1e-4:
        return cmath.exp(z) - 1.0
    return z * (1.0 + z / 2.0 * (1.0 + z / 3.0))


def dirichlet_l(s: complex, chi: DirichletCharacter, N_terms: int, abs_tol: float = 1e-10) -> complex:
    """L(s, chi) = sum chi(n) n^{-s} by full-period blocks plus an
    Euler-Maclaurin class-tail, valid for Re s > 0 (nontrivial chi).

    The direct sum covers K = N_terms // modulus full periods; the tail
    adds, per residue class r, the continuation of
    sum_{k>=K} (kN + r)^{-s}.  For the principal character the Euler
    product over p | N times zeta is used instead.
    """
    s = require_finite(s)
    N = chi.modulus
    if N == 1:
        return zeta_core.zeta(s)
    if chi.is_principal:
        val = zeta_core.zeta(s)
        for p, _ in _prime_power_split(N):
            val *= 1.0 - cmath.exp(-s * math.log(p))
        return val
    if s.real <= 0:
        raise ValueError(f"requires Re s > 0, got {s}")
    K = max(16, N_terms // N)
    import numpy as np

    n = np.arange(1, K * N, dtype=float)
    chivals = np.array([chi(int(v)) for v in range(N)], dtype=complex)
    coeff = np.tile(chivals, K)[1 : K * N]
    direct = (coeff * np.exp(-s * np.log(n))).sum()

    # class tails: N^{-s} * zeta_EM(s, K + r/N) summed with weights chi(r)
    tail = 0j
    units = [r for r in range(1, N + 1) if math.gcd(r, N) == 1]
    lead = 0j
    for r in units:
        a = K + r / N
        apow = cmath.exp(-s * math.log(a))
        w = chi(r)
        tail += w * (apow / 2.0 + s * apow / a / 12.0 - s * (s + 1) * (s + 2) * apow / a**3 / 720.0)
        # a^{1-s}/(s-1) would individually blow up at s = 1; sum against
        # the vanishing chi-period instead: sum_r chi(r) a_r^{1-s}/(s-1)
        #   = K^{1-s}/(s-1) * sum_r chi(r) (expm1((1-s) log(a_r/K)))
        lead += w * _pow_ratio_diff(a / K, 1.0 - s)
    if abs(s - 1.0) < 1e-12:
        # limit of K^{1-s}/(s-1) * sum_r chi(r) expm1((1-s) log(a_r/K))
        lead_term = sum(chi(r) * -math.log((K + r / N) / K) for r in units)
    else:
        lead_term = cmath.exp((1.0 - s) * math.log(K)) * lead / (s - 1.0)
    est = abs(s * (s + 1) * (s + 2) * (s + 3) * (s + 4)) * K ** (-s.real - 5) * len(units) / 30240.0
    if est > abs_tol:
        raise ValueError(
            f"N_terms = {N_terms} insufficient: tail estimate {est:.2e} > {abs_tol:.2e}"
        )
    npow = cmath.exp(-s * math.log(N))
    return direct + npow * (lead_term + tail)
