"""Prime sieve shared by every Euler-product and prime-statistics routine.

The sieve is built once per process (first use) and cached; afterwards all
reads are immutable, so concurrent use is safe.
"""

from __future__ import annotations

import numpy as np

SIEVE_LIMIT = 1_000_000

_cache: dict[int, np.ndarray] = {}


def primes(limit: int = SIEVE_LIMIT) -> np.ndarray:
    """All primes <= limit, ascending, as an int64 array."""
    if limit > SIEVE_LIMIT:
        raise ValueError(f"sieve capped at {SIEVE_LIMIT}, asked for {limit}")
    if "all" not in _cache:
        flags = np.ones(SIEVE_LIMIT + 1, dtype=bool)
        flags[:2] = False
        for p in range(2, int(SIEVE_LIMIT**0.5) + 1):
            if flags[p]:
                flags[p * p :: p] = False
        _cache["all"] = np.nonzero(flags)[0].astype(np.int64)
    allp = _cache["all"]
    return allp[: np.searchsorted(allp, limit, side="right")]


def prime_count(x: int) -> int:
    """pi(x), the number of primes <= x."""
    return len(primes(int(x)))


def is_prime(n: int) -> bool:
    if n < 2 or n > SIEVE_LIMIT:
        raise ValueError(f"primality check supported for 2 <= n <= {SIEVE_LIMIT}")
    allp = primes(SIEVE_LIMIT)
    i = np.searchsorted(allp, n)
    return i < len(allp) and allp[i] == n
