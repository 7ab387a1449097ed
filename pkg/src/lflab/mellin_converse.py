"""Numerical Mellin inversion: reconstruct a modular form's values on the
imaginary axis from its completed L-function,

    f(ix) = a_0 + (1/2 pi i) int_{(c)} x^{-s} Phi(s) ds,

realizing the converse direction of the Dirichlet-series/modular-form
correspondence at desk scale.  The vertical integral is truncated at
|Im s| = T and evaluated by composite Gauss-Legendre panels with at least
8 nodes per oscillation of the integrand; the discarded tail is reported
through an empirical decay fit, not assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from .hecke_l import LSeriesDescriptor

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(16)


@dataclass(frozen=True)
class ContourSpec:
    """Vertical contour Re s = c, truncated at |Im s| = t_cut, with a
    minimum panel count for the quadrature."""

    c: float
    t_cut: float
    panels: int = 8

    def __post_init__(self):
        if self.t_cut <= 0 or self.panels <= 0:
            raise ValueError("t_cut and panels must be positive")


class Reconstruction(NamedTuple):
    value: complex
    tail_bound: float


PhiEvaluator = Callable[[np.ndarray], np.ndarray]


def _panel_count(x: float, spec: ContourSpec, period: float) -> int:
    # phase of x^{-c-it} Phi(c+it): t (log(2 pi / period) - log x) plus the
    # Stirling arg-Gamma term growing like log|t|; bound the rate and keep
    # >= 8 nodes per oscillation with 16-node panels
    rate = abs(math.log(x)) + abs(math.log(2.0 * math.pi / period)) + math.log(2.0 + spec.t_cut) + 1.0
    oscillations = spec.t_cut * rate / (2.0 * math.pi)
    return max(spec.panels, math.ceil(oscillations * 8.0 / 16.0) + 2)


def _contour_quadrature(phi: PhiEvaluator, c: float, T: float, x: float, panels: int) -> complex:
    edges = np.linspace(-T, T, panels + 1)
    mids = 0.5 * (edges[:-1] + edges[1:])
    halfw = 0.5 * (edges[1] - edges[0])
    t_nodes = (mids[:, None] + halfw * _GL_NODES[None, :]).ravel()
    s_nodes = c + 1j * t_nodes
    vals = phi(s_nodes) * np.exp(-s_nodes * math.log(x))
    w = np.tile(_GL_WEIGHTS, panels) * halfw
    return complex(np.dot(w, vals)) / (2.0 * math.pi)


def _tail_fit(phi: PhiEvaluator, c: float, T: float, x: float) -> float:
    # fit |Phi(c+it)| <= A e^{-pi t/4} on [T/2, T], then integrate the
    # model beyond T (both half-lines)
    ts = np.linspace(T / 2.0, T, 9)
    mags = np.abs(phi(c + 1j * ts))
    A = float((mags * np.exp(math.pi * ts / 4.0)).max())
    return A * math.exp(-math.pi * T / 4.0) * (4.0 / math.pi) * x ** (-c) / math.pi


def reconstruct(desc: LSeriesDescriptor, phi: PhiEvaluator, x: float,
                spec: ContourSpec) -> Reconstruction:
    """f(ix) = a_0 + (1/2 pi) int_{-T}^{T} x^{-(c+it)} Phi(c+it) dt."""
    if x <= 0:
        raise ValueError("x must be positive")
    if spec.c <= desc.sigma_abs:
        raise ValueError(
            f"contour c = {spec.c} must exceed the abscissa of absolute "
            f"convergence {desc.sigma_abs}"
        )
    panels = _panel_count(x, spec, desc.period)
    integral = _contour_quadrature(phi, spec.c, spec.t_cut, x, panels)
    return Reconstruction(desc.a0 + integral, _tail_fit(phi, spec.c, spec.t_cut, x))


def reconstruct_shifted(desc: LSeriesDescriptor, phi: PhiEvaluator, x: float,
                        spec: ContourSpec) -> Reconstruction:
    """Same value through the reflected contour Re s = k - c, picking up the
    residues at s = k and s = 0:

        f(ix) = C a_0 x^{-k} + (1/2 pi i) int_{(k-c)} x^{-s} Phi(s) ds.
    """
    if x <= 0:
        raise ValueError("x must be positive")
    k = desc.weight
    C = desc.multiplier
    c_shift = k - spec.c
    panels = _panel_count(x, spec, desc.period)
    integral = _contour_quadrature(phi, c_shift, spec.t_cut, x, panels)
    value = C * desc.a0 * x ** (-k) + integral
    return Reconstruction(value, _tail_fit(phi, c_shift, spec.t_cut, x))


def modularity_from_fe(desc: LSeriesDescriptor, phi: PhiEvaluator, x: float,
                       spec: ContourSpec) -> float:
    """|f(ix) - C x^{-k} f(i/x)| with both values reconstructed from Phi
    alone: the numerical shadow of the converse theorem."""
    left = reconstruct(desc, phi, x, spec).value
    right = reconstruct(desc, phi, 1.0 / x, spec).value
    return abs(left - desc.multiplier * x ** (-desc.weight) * right)
