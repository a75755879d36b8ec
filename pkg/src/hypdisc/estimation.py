"""Estimation and stochastic search on the disc.

Karcher (Riemannian centre of mass) descent, maximum likelihood for the
disc family, and a cross-entropy optimizer that uses the family as its
search distribution with a geometrically growing concentration schedule.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional, Sequence

import numpy as np

from .conf_natural import ConfNatural, cn_sample_complex
from .errors import DomainError, NonConvergenceError, ObjectiveError
from .geometry import (
    ORIGIN,
    DiscPoint,
    MoebiusTransform,
    clamp_into_disc,
    exp_map_complex,
    geodesic_translation,
    hyp_distance_complex,
    log_map_complex,
    mobius_apply,
    mobius_apply_complex,
    mobius_compose,
)
from .rng import RngStream

# Concentration growth cap; keeps the radius inversion well conditioned.
ALPHA_CAP = 1e6

# Lower clamp keeping closed-form concentration estimates inside the family.
_ALPHA_FLOOR = 1.0 + 1e-9


@dataclass(frozen=True)
class KarcherConfig:
    tol: float = 1e-9
    max_iter: int = 1000
    step: float = 1.0

    def __post_init__(self):
        if not (self.tol > 0.0):
            raise DomainError(f"tol must be positive, got {self.tol}")
        if self.max_iter < 1:
            raise DomainError(f"max_iter must be >= 1, got {self.max_iter}")
        if not (0.0 < self.step <= 1.0):
            raise DomainError(f"step must lie in (0, 1], got {self.step}")


@dataclass(frozen=True)
class CemConfig:
    population: int = 200
    elite_frac: float = 0.2
    iterations: int = 40
    alpha0: float = 2.0
    alpha_growth: float = 1.15

    def __post_init__(self):
        if self.population < 2:
            raise DomainError(f"population must be >= 2, got {self.population}")
        if not (0.0 < self.elite_frac <= 1.0):
            raise DomainError(f"elite_frac must lie in (0, 1], got {self.elite_frac}")
        if self.iterations < 1:
            raise DomainError(f"iterations must be >= 1, got {self.iterations}")
        if not (self.alpha0 > 1.0):
            raise DomainError(f"alpha0 must exceed 1, got {self.alpha0}")
        if not (self.alpha_growth >= 1.0):
            raise DomainError(f"alpha_growth must be >= 1, got {self.alpha_growth}")

    @property
    def elite_count(self) -> int:
        return math.ceil(self.elite_frac * self.population)


@dataclass(frozen=True)
class FitResult:
    alpha_hat: float
    a_hat: DiscPoint
    log_likelihood: float
    iterations: int
    converged: bool


class CemIterate(NamedTuple):
    iteration: int
    location: DiscPoint
    alpha: float
    best_value: float


def _as_complex_array(points) -> np.ndarray:
    if isinstance(points, np.ndarray) and np.iscomplexobj(points):
        z = np.ascontiguousarray(points, dtype=complex)
        if z.size and not bool(np.all(np.isfinite(z))):
            raise DomainError("points must be finite")
        if z.size and float(np.max(np.abs(z))) >= 1.0 - 1e-15:
            raise DomainError("points must lie inside the open unit disc")
        return z
    return np.array([p.as_complex() for p in points], dtype=complex)


def karcher_mean(
    points: Sequence[DiscPoint],
    weights=None,
    cfg: Optional[KarcherConfig] = None,
    history: Optional[list] = None,
) -> DiscPoint:
    """Weighted Riemannian centre of mass of disc points.

    Gradient descent on J(m) = sum_i w_i d(m, p_i)^2 from the Euclidean mean
    (clamped into the disc): m <- exp_m(step * sum_i w_i log_m(p_i)), halving
    the step whenever the move would increase J, and stopping once the
    tangent mean's norm drops below ``cfg.tol``. J never increases between
    accepted iterates beyond the float resolution of the objective itself
    (once |grad|^2 falls under eps * J the decrease is unresolvable, and the
    plain fixed-point step keeps contracting). ``points`` may also be a
    complex ndarray.

    If ``history`` is a list, (location, J) is appended for the start point
    and after every accepted iterate.

    Raises NonConvergenceError, carrying the best iterate on ``.best``, if
    ``cfg.max_iter`` is exhausted or the line search stalls.
    """
    z = _as_complex_array(points)
    if z.size == 0:
        raise DomainError("need at least one point")
    if weights is None:
        w = np.full(z.size, 1.0 / z.size)
    else:
        w = np.asarray(weights, dtype=float)
        if w.shape != z.shape:
            raise DomainError(f"{w.size} weights for {z.size} points")
        if np.any(w < 0.0) or abs(float(w.sum()) - 1.0) > 1e-9:
            raise DomainError("weights must be nonnegative and sum to 1")
    cfg = cfg or KarcherConfig()

    def objective(m: complex) -> float:
        return float(w @ hyp_distance_complex(m, z) ** 2)

    m = complex(np.sum(w * z))
    if abs(m) > 0.999:
        m *= 0.999 / abs(m)
    value = objective(m)
    if history is not None:
        history.append((DiscPoint.from_complex(m), value))
    for _ in range(cfg.max_iter):
        grad = complex(np.sum(w * log_map_complex(m, z)))
        if abs(grad) < cfg.tol:
            return DiscPoint.from_complex(m)
        step = cfg.step
        candidate, cand_value = m, value
        accepted = False
        resolution = 1e-15 * (1.0 + value)
        for _ in range(60):
            candidate = complex(exp_map_complex(m, step * grad))
            cand_value = objective(candidate)
            if cand_value <= value + resolution:
                accepted = True
                break
            step *= 0.5
        if not accepted:
            raise NonConvergenceError(
                "karcher step search stalled before reaching tolerance",
                best=DiscPoint.from_complex(m),
            )
        m, value = candidate, cand_value
        if history is not None:
            history.append((DiscPoint.from_complex(m), value))
    raise NonConvergenceError(
        f"no convergence within {cfg.max_iter} iterations",
        best=DiscPoint.from_complex(m),
    )


def _mean_log_kernel(a: complex, z: np.ndarray) -> float:
    # mean_i log(1 - |g_a(z_i)|^2), always <= 0, stable near the boundary
    return float(
        np.mean(
            math.log1p(-abs(a) ** 2)
            + np.log1p(-np.abs(z) ** 2)
            - 2.0 * np.log(np.abs(1.0 - np.conj(a) * z))
        )
    )


def total_log_likelihood(samples, alpha: float, a: DiscPoint) -> float:
    """Sum of log densities of the samples under (alpha, a)."""
    z = _as_complex_array(samples)
    return z.size * (
        math.log(alpha - 1.0) - math.log(math.pi) + alpha * _mean_log_kernel(a.as_complex(), z)
    )


def loglik_location_gradient(samples, alpha: float, a: DiscPoint) -> np.ndarray:
    """Riemannian gradient of the total log-likelihood in the location.

    Expressed in normal coordinates at ``a`` (the chart used by hyp_exp /
    hyp_log), so it is directly comparable to finite differences of
    total_log_likelihood(samples, alpha, hyp_exp(a, v)) at v = 0.
    """
    z = _as_complex_array(samples)
    ac = a.as_complex()
    pulled = complex(np.mean(z / (1.0 - np.conj(ac) * z)))
    g = 2.0 * alpha * z.size * ((1.0 - abs(ac) ** 2) * pulled - ac)
    return np.array([g.real, g.imag])


def concentration_mle(samples, a: DiscPoint) -> float:
    """Closed-form maximum-likelihood concentration for a fixed location:

        alpha = 1 + n / sum_i log(1 / (1 - |g_a(z_i)|^2)),

    the stationary point of the log-likelihood in alpha. Clamped from below
    to keep the family valid.
    """
    z = _as_complex_array(samples)
    if z.size == 0:
        raise DomainError("need at least one sample")
    kernel = _mean_log_kernel(a.as_complex(), z)
    if kernel >= 0.0:
        raise DomainError("degenerate input: samples concentrate on the location")
    return max(1.0 - 1.0 / kernel, _ALPHA_FLOOR)


def fit_mle(samples, fixed_alpha: Optional[float] = None) -> FitResult:
    """Maximum-likelihood concentration and location.

    Alternates (i) the closed-form stationary concentration given the
    location, alpha = 1 + n / sum_i log(1/(1 - |g_a(z_i)|^2)), with (ii)
    backtracking Riemannian gradient ascent in the location given the
    concentration. With ``fixed_alpha`` supplied only (ii) runs. Stops once
    an outer sweep improves the total log-likelihood by less than 1e-9, or
    after 200 sweeps (``converged`` is False in the latter case). The
    location objective is geodesically concave, so the ascent cannot get
    trapped away from the optimum.
    """
    z = _as_complex_array(samples)
    n = z.size
    if n < 2:
        raise DomainError(f"need at least two samples, got {n}")
    if bool(np.all(z == z[0])):
        raise DomainError("degenerate input: all samples identical")
    if fixed_alpha is not None and not (math.isfinite(fixed_alpha) and fixed_alpha > 1.0):
        raise DomainError(f"fixed_alpha must be finite and > 1, got {fixed_alpha}")

    def alpha_hat(a: complex) -> float:
        return concentration_mle(z, DiscPoint.from_complex(a))

    def loglik(alpha: float, a: complex) -> float:
        return n * (math.log(alpha - 1.0) - math.log(math.pi) + alpha * _mean_log_kernel(a, z))

    def chart_grad(alpha: float, a: complex) -> complex:
        pulled = complex(np.mean(z / (1.0 - np.conj(a) * z)))
        return 2.0 * alpha * ((1.0 - abs(a) ** 2) * pulled - a)

    a = complex(np.mean(z))
    if abs(a) > 0.999:
        a *= 0.999 / abs(a)
    alpha = float(fixed_alpha) if fixed_alpha is not None else alpha_hat(a)
    value = loglik(alpha, a)
    converged = False
    sweeps = 0
    for sweeps in range(1, 201):
        previous = value
        if fixed_alpha is None:
            alpha = alpha_hat(a)
        for _ in range(50):
            grad = chart_grad(alpha, a)
            if abs(grad) < 1e-13:
                break
            kernel = _mean_log_kernel(a, z)
            eta = 0.5 / alpha
            improved = False
            for _ in range(40):
                candidate = complex(exp_map_complex(a, eta * grad))
                if _mean_log_kernel(candidate, z) > kernel:
                    a = candidate
                    improved = True
                    break
                eta *= 0.5
            if not improved:
                break
        value = loglik(alpha, a)
        if value - previous < 1e-9:
            converged = True
            break
    return FitResult(alpha, DiscPoint.from_complex(a), value, sweeps, converged)


def cem_optimize(
    objective: Callable[[DiscPoint], float],
    cfg: Optional[CemConfig] = None,
    rng: Optional[RngStream] = None,
    *,
    init_transform: Optional[MoebiusTransform] = None,
) -> tuple[DiscPoint, list[CemIterate]]:
    """Cross-entropy minimization of ``objective`` over the open disc.

    Per iteration: draw ``population`` points from the current search
    distribution, rank them (lower objective is better, stable order on
    ties), refit the location to the Karcher mean of the best
    ceil(elite_frac * population) points, and grow the concentration by
    ``alpha_growth`` (capped at ALPHA_CAP). Fully deterministic given the
    stream's seed.

    The search state is carried as a group element acting on the centred
    family rather than as a bare location: populations are centred draws
    pushed through the accumulated transform, and each refit composes in
    the geodesic translation from the old location to the new one. This
    makes the whole trajectory equivariant: minimizing objective o g^{-1}
    with g composed into ``init_transform`` (default: the identity, i.e.
    search starts at the origin) conjugates every iterate by g.

    Returns (best_point, trace); trace rows are (iteration, location, alpha,
    best value so far), recorded after each iteration's update.
    """
    cfg = cfg or CemConfig()
    if rng is None:
        raise DomainError("cem_optimize needs an RngStream")
    transform = init_transform if init_transform is not None else MoebiusTransform.identity()
    location = mobius_apply(transform, ORIGIN)
    alpha = cfg.alpha0
    refit_cfg = KarcherConfig(tol=1e-12, max_iter=500)
    best_point: Optional[DiscPoint] = None
    best_value = math.inf
    trace: list[CemIterate] = []
    for iteration in range(1, cfg.iterations + 1):
        base = cn_sample_complex(ConfNatural(alpha, ORIGIN), rng, cfg.population)
        population = clamp_into_disc(mobius_apply_complex(transform, base))
        points = [DiscPoint.from_complex(p) for p in population]
        values = np.empty(cfg.population)
        for i, point in enumerate(points):
            v = float(objective(point))
            if math.isnan(v):
                raise ObjectiveError(
                    f"objective returned NaN at ({point.re!r}, {point.im!r})", point=point
                )
            values[i] = v
        order = np.argsort(values, kind="stable")
        if values[order[0]] < best_value:
            best_value = float(values[order[0]])
            best_point = points[order[0]]
        new_location = karcher_mean(population[order[: cfg.elite_count]], cfg=refit_cfg)
        transform = mobius_compose(geodesic_translation(location, new_location), transform)
        location = new_location
        alpha = min(alpha * cfg.alpha_growth, ALPHA_CAP)
        trace.append(CemIterate(iteration, location, alpha, best_value))
    assert best_point is not None
    return best_point, trace
