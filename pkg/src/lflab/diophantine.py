"""Sums of three squares: exhaustive solutions, the 4^a(8b+7) criterion,
and a demonstration-grade equidistribution discrepancy on the sphere.

The discrepancy op is demo-grade: it exhibits spherical-cap
equidistribution of the normalized solution sets for large admissible n,
with no quantitative rate asserted.
"""

from __future__ import annotations

import math

import numpy as np


def three_squares_solutions(n: int) -> list[tuple[int, int, int]]:
    """All integer triples (x, y, z), signs and permutations included, with
    x^2 + y^2 + z^2 = n; lexicographic order."""
    if not (1 <= n <= 10**6):
        raise ValueError("n limited to 1..10^6")
    root = math.isqrt(n)
    squares = {v * v: v for v in range(root + 1)}
    out = []
    for x in range(-root, root + 1):
        rx = n - x * x
        if rx < 0:
            continue
        ylim = math.isqrt(rx)
        for y in range(-ylim, ylim + 1):
            rz = rx - y * y
            z = squares.get(rz)
            if z is None:
                continue
            if z == 0:
                out.append((x, y, 0))
            else:
                out.append((x, y, -z))
                out.append((x, y, z))
    out.sort()
    return out


def gauss_condition(n: int) -> bool:
    """True iff n is a sum of three squares: n not of the form 4^a (8b+7)."""
    if n < 1:
        raise ValueError("n must be positive")
    while n % 4 == 0:
        n //= 4
    return n % 8 != 7


def representable_table(limit: int) -> np.ndarray:
    """Boolean table t[n] = (n is a sum of three squares), n = 0..limit,
    by exhaustive enumeration (independent of the 4^a(8b+7) criterion)."""
    root = math.isqrt(limit)
    sq = np.arange(root + 1, dtype=np.int64) ** 2
    two = np.zeros(limit + 1, dtype=bool)
    sums = (sq[:, None] + sq[None, :]).ravel()
    two[sums[sums <= limit]] = True
    three = np.zeros(limit + 1, dtype=bool)
    for z2 in sq:
        rest = limit - z2
        if rest < 0:
            break
        three[z2 : limit + 1] |= two[: rest + 1]
    return three


def sphere_points(n: int) -> np.ndarray:
    """The normalized solution set (x, y, z)/sqrt(n), unit vectors."""
    sols = three_squares_solutions(n)
    if not sols:
        raise ValueError(f"n = {n} has no three-square representations")
    return np.array(sols, dtype=float) / math.sqrt(n)


def dn_discrepancy(n: int, caps: int, seed: int = 0) -> float:
    """Max over random spherical caps of |empirical fraction - cap area|.

    Caps are {u . axis > h} with uniform axis and h ~ U(-1, 1), drawn from
    a fixed-seed generator; area fraction (1-h)/2.  Deterministic for a
    given seed.  Demo-grade: no rate is asserted.
    """
    if not gauss_condition(n):
        raise ValueError(f"n = {n} admits no solutions (4^a(8b+7) form)")
    points = sphere_points(n)
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(caps):
        axis = rng.normal(size=3)
        axis /= math.sqrt((axis**2).sum())
        h = rng.uniform(-1.0, 1.0)
        frac = float((points @ axis > h).mean())
        worst = max(worst, abs(frac - (1.0 - h) / 2.0))
    return worst
