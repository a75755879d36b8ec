"""Circle distributions closed under the disc automorphism group.

Parametrized by a point a = r e^{i Phi} of the open disc: a = 0 is the
uniform law on the circle, and r -> 1 concentrates toward a point mass at
angle Phi. Applying a disc automorphism to samples lands back in the family
at the transformed parameter, which is also how the exact sampler works.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .geometry import (
    TWO_PI,
    CirclePoint,
    DiscPoint,
    MoebiusTransform,
    _wrap_angle,
    mobius_apply,
    mobius_boundary_angles,
)
from .rng import RngStream


@dataclass(frozen=True)
class WrappedCauchy:
    """Density (1/2pi)(1 - r^2) / (1 - 2 r cos(phi - Phi) + r^2) on the circle."""

    a: DiscPoint

    @property
    def r(self) -> float:
        return self.a.radius

    @property
    def location_angle(self) -> float:
        return _wrap_angle(math.atan2(self.a.im, self.a.re))


def wc_pdf_angles(d: WrappedCauchy, phis) -> np.ndarray:
    """Vectorized density over an array of angles."""
    r = d.r
    return (1.0 - r * r) / (
        TWO_PI * (1.0 - 2.0 * r * np.cos(np.asarray(phis, dtype=float) - d.location_angle) + r * r)
    )


def wc_pdf(d: WrappedCauchy, p: CirclePoint) -> float:
    return float(wc_pdf_angles(d, p.phi))


def wc_sample_angles(d: WrappedCauchy, rng: RngStream, n: int) -> np.ndarray:
    """n draws as a float array of angles in [0, 2*pi).

    Uniform angles pushed through the boundary action of the involution
    g_a: exact, rejection-free, and stable arbitrarily close to r = 1. For
    a = 0 the raw uniform draws are returned as-is.
    """
    if n < 0:
        raise DomainError(f"sample count must be >= 0, got {n}")
    phis = TWO_PI * rng.uniform(n)
    if d.r == 0.0:
        return phis
    return mobius_boundary_angles(MoebiusTransform.involution(d.a), phis)


def wc_sample(d: WrappedCauchy, rng: RngStream, n: int) -> list[CirclePoint]:
    return [CirclePoint(phi) for phi in wc_sample_angles(d, rng, n)]


def wc_pushforward(d: WrappedCauchy, t: MoebiusTransform) -> WrappedCauchy:
    """Distribution of t(Z): the parameter moves by the disc action of t."""
    return WrappedCauchy(mobius_apply(t, d.a))


def wc_mean(d: WrappedCauchy) -> DiscPoint:
    """Circular mean E[e^{i phi}], which equals the parameter a."""
    return d.a
