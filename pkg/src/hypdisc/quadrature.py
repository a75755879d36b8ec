"""Polar-grid quadrature over the unit disc."""

from __future__ import annotations

import numpy as np
from scipy.special import roots_jacobi

from .errors import DomainError
from .geometry import TWO_PI


def disc_integral(f, boundary_exponent: float = 0.0, n_radial: int = 160, n_angular: int = 512) -> float:
    """Integral over the unit disc of f(z) * (1 - |z|^2)^boundary_exponent dA(z).

    ``f`` must accept a complex ndarray and be smooth on the closed disc;
    any power of (1 - |z|^2) in the integrand belongs in
    ``boundary_exponent``, which the radial Gauss-Jacobi rule (in s = r^2)
    absorbs exactly. The angular rule is the periodic trapezoid. The
    exponent must exceed -1 for integrability.
    """
    kappa = float(boundary_exponent)
    if kappa <= -1.0:
        raise DomainError(f"boundary exponent must exceed -1, got {kappa}")
    nodes, weights = roots_jacobi(n_radial, kappa, 0.0)
    s = 0.5 * (nodes + 1.0)  # radial variable s = r^2 in (0, 1)
    theta = np.linspace(0.0, TWO_PI, n_angular, endpoint=False)
    z = np.sqrt(s)[:, None] * np.exp(1j * theta)[None, :]
    inner = np.asarray(f(z), dtype=float).mean(axis=1) * TWO_PI
    # dA = (1/2) ds dtheta; the [-1,1] -> [0,1] map scales the weight by 2^(-kappa-1)
    return float(0.5 * 2.0 ** (-kappa - 1.0) * (weights @ inner))
