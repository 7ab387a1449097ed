"""Desk-scale numerical verification of classical L-function identities.

Subpackages by subject: special_fn (gamma/Bessel/theta evaluators),
zeta_core (completed zeta), tate_local (local factors), dirichlet
(characters and L-values), modular_forms (q-expansions and Hecke
operators), hecke_l (completed Hecke L-functions and twists),
mellin_converse (contour reconstruction), eisenstein (real-analytic
series), langlands (Satake data and Sato-Tate statistics), diophantine
(three squares), cli (verification suites).
"""

from .special_fn import (
    AccuracyBudget,
    BudgetExhausted,
    DEFAULT_BUDGET,
    PoleError,
    bessel_k,
    gamma,
    log_gamma,
    theta,
    upper_incomplete_gamma,
)
from .zeta_core import XiValue, g_factor, scattering_ratio, xi, zeta, zeta_halfplane
from .report import VerificationReport

__all__ = [
    "AccuracyBudget",
    "BudgetExhausted",
    "DEFAULT_BUDGET",
    "PoleError",
    "VerificationReport",
    "XiValue",
    "bessel_k",
    "g_factor",
    "gamma",
    "log_gamma",
    "scattering_ratio",
    "theta",
    "upper_incomplete_gamma",
    "xi",
    "zeta",
    "zeta_halfplane",
]

__version__ = "0.1.0"
