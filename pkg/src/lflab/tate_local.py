"""Local factors over the rationals: p-adic geometric series, the
archimedean Gaussian integral, and the assembled partial Euler product.

The idelic picture is represented by exactly these local computations; the
global folding is covered by the cross-check
euler_product_partial(s, X) * archimedean_factor(s) ~ xi(s) on Re s > 1.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
from scipy.integrate import quad

from . import primes as _primes
from .special_fn import log_gamma, require_finite

_LOG_PI = math.log(math.pi)


def local_factor_p(p: int, s: complex, K: int) -> tuple[complex, complex]:
    """(sum_{k=0}^K p^{-ks}, (1 - p^{-s})^{-1}) at a prime p, Re s > 0.

    The truncated shell sum and the closed geometric form; the caller
    asserts their closeness.
    """
    s = require_finite(s)
    if s.real <= 0:
        raise ValueError(f"requires Re s > 0, got {s}")
    if not _primes.is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    ratio = cmath.exp(-s * math.log(p))
    acc = 1.0 + 0.0j
    power = 1.0 + 0.0j
    for _ in range(K):
        power *= ratio
        acc += power
    return acc, 1.0 / (1.0 - ratio)


def archimedean_factor(s: complex) -> tuple[complex, complex]:
    """(quadrature of int_R e^{-pi x^2} |x|^s dx/|x|, pi^{-s/2} Gamma(s/2)).

    The integral is 2 int_0^inf e^{-pi x^2} x^{s-1} dx; substituting
    x = e^v removes the endpoint singularity at x = 0 (the integrand
    becomes e^{-pi e^{2v}} e^{s v}, smooth and doubly-exponentially cut on
    the right, e^{sigma v}-decaying on the left).
    """
    s = require_finite(s)
    if not (0.2 <= s.real <= 6.0):
        raise ValueError(f"quadrature comfort zone is 0.2 <= Re s <= 6, got {s}")
    sigma = s.real
    v_lo = -(745.0 / sigma)  # e^{sigma v} underflows below this
    v_hi = 0.5 * math.log(745.0 / math.pi) + 0.5

    def integrand_re(v: float) -> float:
        return 2.0 * math.exp(-math.pi * math.exp(2.0 * v)) * (cmath.exp(s * v)).real

    def integrand_im(v: float) -> float:
        return 2.0 * math.exp(-math.pi * math.exp(2.0 * v)) * (cmath.exp(s * v)).imag

    re, re_err = quad(integrand_re, v_lo, v_hi, limit=400, epsabs=1e-13, epsrel=1e-12)
    im, im_err = quad(integrand_im, v_lo, v_hi, limit=400, epsabs=1e-13, epsrel=1e-12)
    if re_err + im_err > 1e-9:
        raise RuntimeError(f"archimedean quadrature error estimate {re_err + im_err:.2e}")
    closed = cmath.exp(-(s / 2.0) * _LOG_PI + log_gamma(s / 2.0))
    return complex(re, im), closed


def euler_product_partial(s: complex, X: int) -> complex:
    """prod_{p <= X} (1 - p^{-s})^{-1}; converges to zeta(s) for Re s > 1."""
    s = require_finite(s)
    if s.real <= 1:
        raise ValueError(f"Euler product requires Re s > 1, got {s}")
    if X < 2:
        raise ValueError("X >= 2 required")
    ps = _primes.primes(int(X)).astype(float)
    log_prod = -np.log1p(-np.exp(-s * np.log(ps))).sum()
    return cmath.exp(log_prod)
