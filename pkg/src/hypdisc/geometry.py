"""Geometry of the open unit disc.

Points, the automorphisms z -> e^{i theta} (a - z)/(1 - conj(a) z), the
hyperbolic metric, and the exp/log maps used by the Riemannian solvers.
Every type is an immutable value and every function is pure, so everything
here is safe for unrestricted concurrent use.

Distance convention: d(z, w) = artanh |(z - w)/(1 - conj(z) w)|, i.e. the
line element |dz|/(1 - |z|^2). The induced area density is exactly
tau(z) = 1/(1 - |z|^2)^2 with no curvature factors.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

TWO_PI = 2.0 * math.pi

# Points with |z| >= 1 - BOUNDARY_MARGIN are rejected at construction.
BOUNDARY_MARGIN = 1e-15

# artanh(1) is infinite; moduli fed to arctanh are capped just below 1.
_ATANH_CAP = 1.0 - 2.0**-52


def _wrap_angle(phi: float) -> float:
    phi = math.fmod(phi, TWO_PI)
    if phi < 0.0:
        phi += TWO_PI
    # adding TWO_PI to a tiny negative can round back onto TWO_PI itself
    return 0.0 if phi >= TWO_PI else phi


@dataclass(frozen=True)
class DiscPoint:
    """A point of the open unit disc, |z| < 1 strictly."""

    re: float
    im: float

    def __post_init__(self):
        re, im = float(self.re), float(self.im)
        if not (math.isfinite(re) and math.isfinite(im)):
            raise DomainError(f"disc point must have finite coordinates, got ({re!r}, {im!r})")
        if math.hypot(re, im) >= 1.0 - BOUNDARY_MARGIN:
            raise DomainError(f"point ({re}, {im}) is not inside the open unit disc")
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    @classmethod
    def from_complex(cls, z) -> "DiscPoint":
        return cls(z.real, z.imag)

    def as_complex(self) -> complex:
        return complex(self.re, self.im)

    @property
    def radius(self) -> float:
        return math.hypot(self.re, self.im)


ORIGIN = DiscPoint(0.0, 0.0)


@dataclass(frozen=True)
class CirclePoint:
    """An angle on the unit circle, normalized into [0, 2*pi)."""

    phi: float

    def __post_init__(self):
        phi = float(self.phi)
        if not math.isfinite(phi):
            raise DomainError(f"circle angle must be finite, got {phi!r}")
        object.__setattr__(self, "phi", _wrap_angle(phi))

    def as_complex(self) -> complex:
        return cmath.exp(1j * self.phi)


@dataclass(frozen=True)
class MoebiusTransform:
    """Disc automorphism z -> e^{i theta} (a - z) / (1 - conj(a) z).

    Mind the convention: (a=0, theta=0) is the antipodal map z -> -z, NOT
    the identity. The identity element is (a=0, theta=pi).
    """

    a: DiscPoint
    theta: float

    def __post_init__(self):
        theta = float(self.theta)
        if not math.isfinite(theta):
            raise DomainError(f"rotation angle must be finite, got {theta!r}")
        object.__setattr__(self, "theta", _wrap_angle(theta))

    @classmethod
    def identity(cls) -> "MoebiusTransform":
        return cls(ORIGIN, math.pi)

    @classmethod
    def involution(cls, a: DiscPoint) -> "MoebiusTransform":
        """The self-inverse automorphism g_a swapping 0 and a (theta = 0)."""
        return cls(a, 0.0)


def clamp_into_disc(z):
    """Rescale complex value(s) to modulus < 1 - BOUNDARY_MARGIN.

    Guard for operations whose exact result lies in the open disc but can
    round onto the unit circle in floating point (automorphism images and
    exp-map outputs of near-boundary inputs). Interior values pass through
    unchanged.
    """
    target = 1.0 - 2.0 * BOUNDARY_MARGIN
    if isinstance(z, np.ndarray):
        m = np.abs(z)
        return np.where(m > target, z * (target / np.maximum(m, target)), z)
    m = abs(z)
    return z if m <= target else z * (target / m)


def mobius_apply_complex(t: MoebiusTransform, z):
    """Raw automorphism formula on complex scalars or arrays.

    No domain checks: valid on the closed disc, including the circle.
    """
    a = t.a.as_complex()
    return cmath.exp(1j * t.theta) * (a - z) / (1.0 - a.conjugate() * z)


def mobius_apply(t: MoebiusTransform, z: DiscPoint) -> DiscPoint:
    """Image of an interior point; stays inside the open disc."""
    return DiscPoint.from_complex(clamp_into_disc(mobius_apply_complex(t, z.as_complex())))


def mobius_apply_boundary(t: MoebiusTransform, p: CirclePoint) -> CirclePoint:
    """Image of a boundary point; automorphisms map the circle onto itself."""
    return CirclePoint(cmath.phase(mobius_apply_complex(t, p.as_complex())))


def mobius_boundary_angles(t: MoebiusTransform, phis: np.ndarray) -> np.ndarray:
    """Vectorized boundary action on an array of angles."""
    w = mobius_apply_complex(t, np.exp(1j * np.asarray(phis, dtype=float)))
    return np.mod(np.angle(w), TWO_PI)


def mobius_compose(t1: MoebiusTransform, t2: MoebiusTransform) -> MoebiusTransform:
    """Closed-form composite applying t2 first, then t1.

    The composite is evaluated as a fractional-linear map (A z + B)/(C z + D)
    and renormalized back to (a, theta) form: a = -B/A, e^{i theta} = -A/D.
    |A| = |D| >= 1 - |a1||a2| > 0, so the recovery never degenerates.
    """
    e1 = cmath.exp(1j * t1.theta)
    e2 = cmath.exp(1j * t2.theta)
    a1 = t1.a.as_complex()
    a2 = t2.a.as_complex()
    A = e1 * (e2 - a1 * a2.conjugate())
    B = e1 * (a1 - e2 * a2)
    D = 1.0 - a1.conjugate() * e2 * a2
    a = clamp_into_disc(-B / A)
    theta = cmath.phase(-A * D.conjugate())
    return MoebiusTransform(DiscPoint.from_complex(a), theta)


def mobius_inverse(t: MoebiusTransform) -> MoebiusTransform:
    """Closed-form inverse: parameter a e^{i theta}, rotation -theta."""
    a = clamp_into_disc(t.a.as_complex() * cmath.exp(1j * t.theta))
    return MoebiusTransform(DiscPoint.from_complex(a), -t.theta)


def hyp_distance_complex(z, w):
    """Vectorized hyperbolic distance between complex values."""
    u = np.abs((z - w) / (1.0 - np.conj(z) * w))
    return np.arctanh(np.minimum(u, _ATANH_CAP))


def hyp_distance(z: DiscPoint, w: DiscPoint) -> float:
    """artanh of the pseudo-hyperbolic modulus |(z - w)/(1 - conj(z) w)|.

    Symmetric, zero iff the points coincide, invariant under every
    automorphism of the disc.
    """
    return float(hyp_distance_complex(z.as_complex(), w.as_complex()))


def tau_density(z: DiscPoint) -> float:
    """Hyperbolic area density 1/(1 - |z|^2)^2 against Lebesgue measure."""
    s = z.re * z.re + z.im * z.im
    return 1.0 / ((1.0 - s) * (1.0 - s))


def translate_to_origin_complex(base: complex, z):
    """The isometry (z - base)/(1 - conj(base) z); sends base to 0."""
    return (z - base) / (1.0 - base.conjugate() * z)


def translate_from_origin_complex(base: complex, u):
    """Inverse of :func:`translate_to_origin_complex`."""
    return (u + base) / (1.0 + base.conjugate() * u)


def log_map_complex(base: complex, z):
    """Tangent vector at ``base`` pointing to z, as complex value(s).

    Computed in the chart that translates ``base`` to the origin, where the
    metric is Euclidean at the chart centre; the modulus of the result is
    the hyperbolic distance. Vectorized over z.
    """
    u = translate_to_origin_complex(base, z)
    m = np.abs(u)
    safe = np.where(m > 0.0, m, 1.0)
    return u * np.where(m > 0.0, np.arctanh(np.minimum(m, _ATANH_CAP)) / safe, 0.0)


def exp_map_complex(base: complex, v):
    """Inverse of :func:`log_map_complex`; vectorized over v."""
    n = np.abs(v)
    safe = np.where(n > 0.0, n, 1.0)
    u = v * np.where(n > 0.0, np.tanh(n) / safe, 0.0)
    return clamp_into_disc(translate_from_origin_complex(base, clamp_into_disc(u)))


def hyp_log(base: DiscPoint, z: DiscPoint) -> np.ndarray:
    """Tangent vector at ``base`` pointing to z, as an [x, y] pair.

    Its Euclidean norm equals hyp_distance(base, z); log of the base point
    itself is the zero vector.
    """
    v = complex(log_map_complex(base.as_complex(), z.as_complex()))
    return np.array([v.real, v.imag])


def hyp_exp(base: DiscPoint, v) -> DiscPoint:
    """Point reached from ``base`` along tangent vector v = [x, y]."""
    vc = complex(float(v[0]), float(v[1]))
    return DiscPoint.from_complex(complex(exp_map_complex(base.as_complex(), vc)))


def hyp_midpoint(p: DiscPoint, q: DiscPoint) -> DiscPoint:
    """Geodesic midpoint of p and q."""
    v = log_map_complex(p.as_complex(), q.as_complex())
    return DiscPoint.from_complex(complex(exp_map_complex(p.as_complex(), 0.5 * v)))


def point_reflection(p: DiscPoint) -> MoebiusTransform:
    """Rotation by pi about p; an involution fixing p.

    Equals the theta=0 involution whose parameter is 2p/(1 + |p|^2), the
    point whose hyperbolic midpoint with the origin is p.
    """
    z = p.as_complex()
    c = clamp_into_disc(2.0 * z / (1.0 + abs(z) ** 2))
    return MoebiusTransform.involution(DiscPoint.from_complex(c))


def geodesic_translation(p: DiscPoint, q: DiscPoint) -> MoebiusTransform:
    """Transvection along the geodesic through p and q, mapping p to q.

    Built as reflection through the midpoint after reflection through p.
    Unlike the involution composition g_q o g_p, this transport conjugates
    naturally: translation(g(p), g(q)) = g o translation(p, q) o g^{-1} for
    every automorphism g, which the equivariant optimizer relies on.
    """
    if p == q:
        return MoebiusTransform.identity()
    return mobius_compose(point_reflection(hyp_midpoint(p, q)), point_reflection(p))
