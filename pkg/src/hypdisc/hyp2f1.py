"""Gauss hypergeometric 2F1(alpha, alpha; 1; x) on [0, 1).

Evaluated by the direct power series sum_k ((alpha)_k / k!)^2 x^k with a
term recurrence; past x = 0.9 the Euler transformation

    2F1(a, a; 1; x) = (1 - x)^(1 - 2a) 2F1(1 - a, 1 - a; 1; x)

keeps the term count bounded (and terminates outright for integer alpha).
The circular integral below ties the series to an independent quadrature
and is used as its correctness oracle.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError, NumericError
from .geometry import TWO_PI

# Crossover keeping the direct series under ~10^3 terms.
EULER_CROSSOVER = 0.9
MAX_TERMS = 10**6
_REL_TOL = 1e-16

_QUAD_REL_TOL = 1e-12
_QUAD_MAX_NODES = 2**23


def _series_sym(p: float, x: float) -> float:
    # sum_k ((p)_k / k!)^2 x^k; term ratio ((p + k)/(k + 1))^2 x, always >= 0
    total = 1.0
    term = 1.0
    for k in range(MAX_TERMS):
        term *= ((p + k) / (k + 1.0)) ** 2 * x
        total += term
        if term <= _REL_TOL * total:
            return total
    raise NumericError(f"hypergeometric series did not converge in {MAX_TERMS} terms (x={x})")


def hyp2f1_aa1(alpha: float, x: float) -> float:
    """2F1(alpha, alpha; 1; x) for alpha > 1 and 0 <= x < 1."""
    alpha = float(alpha)
    x = float(x)
    if not (math.isfinite(alpha) and alpha > 1.0):
        raise DomainError(f"alpha must be finite and > 1, got {alpha}")
    if not (math.isfinite(x) and 0.0 <= x < 1.0):
        raise DomainError(f"x must lie in [0, 1), got {x}")
    if x == 0.0:
        return 1.0
    if x <= EULER_CROSSOVER:
        return _series_sym(alpha, x)
    return (1.0 - x) ** (1.0 - 2.0 * alpha) * _series_sym(1.0 - alpha, x)


def poisson_circle_integral(x_mod: float, alpha: float) -> float:
    """Mean of |x - e^{it}|^{-2 alpha} over the unit circle, x real = x_mod.

    The value depends only on |x|, so a real argument loses nothing.
    Computed by a doubling periodic-trapezoid rule to relative tolerance
    1e-12; on smooth periodic integrands the trapezoid rule converges
    geometrically, with rate set by the distance ln(1/x_mod) of the nearest
    complex singularity.
    """
    x_mod = float(x_mod)
    alpha = float(alpha)
    if not (math.isfinite(x_mod) and 0.0 <= x_mod < 1.0):
        raise DomainError(f"x_mod must lie in [0, 1), got {x_mod}")
    if x_mod == 0.0:
        return 1.0
    n = 32
    prev = None
    while n <= _QUAD_MAX_NODES:
        t = np.linspace(0.0, TWO_PI, n, endpoint=False)
        cur = float(np.mean((1.0 - 2.0 * x_mod * np.cos(t) + x_mod * x_mod) ** (-alpha)))
        if prev is not None and abs(cur - prev) <= _QUAD_REL_TOL * abs(cur):
            return cur
        prev = cur
        n *= 2
    raise NumericError(f"circle quadrature did not converge (x_mod={x_mod}, alpha={alpha})")
