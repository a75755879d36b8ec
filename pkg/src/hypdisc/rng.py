"""Seedable deterministic uniform streams.

All sampling in this package draws from an :class:`RngStream`, so any result
is a pure function of (parameters, seed). The generator is PCG64 behind
numpy's ``Generator``; a 64-bit state is more than the reproducibility
contract needs, and PCG64 gives identical streams for scalar and batched
draws, which the vectorized samplers rely on.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError

_SEED_BOUND = 2**64


class RngStream:
    """A single-owner stream of uniforms on [0, 1).

    The same seed always reproduces the same sequence. A stream must not be
    shared across concurrent tasks; use :meth:`split` to derive independent
    child streams instead.
    """

    def __init__(self, seed: int, _spawn_key: tuple[int, ...] = ()):
        seed = int(seed)
        if not 0 <= seed < _SEED_BOUND:
            raise DomainError(f"seed must be an unsigned 64-bit integer, got {seed}")
        self.seed = seed
        self._spawn_key = tuple(int(k) for k in _spawn_key)
        self._gen = np.random.Generator(
            np.random.PCG64(np.random.SeedSequence(seed, spawn_key=self._spawn_key))
        )
        self._spawned = 0

    def __repr__(self) -> str:
        return f"RngStream(seed={self.seed}, spawn_key={self._spawn_key})"

    def next_uniform(self) -> float:
        """One draw from [0, 1); advances the state by exactly one step."""
        return float(self._gen.random())

    def uniform(self, shape) -> np.ndarray:
        """Batched draws from [0, 1).

        Consumes the stream exactly as the same number of
        :meth:`next_uniform` calls would (row-major order for
        multidimensional shapes), so scalar and vectorized sampling paths
        replay identically.
        """
        return self._gen.random(shape)

    def split(self, k: int) -> list["RngStream"]:
        """Derive ``k`` child streams.

        Children are deterministic functions of (seed, child index); indices
        keep counting across repeated calls on the same parent. Child
        sequences are statistically independent of each other and of the
        parent (distinct PCG64 key material via SeedSequence spawn keys);
        splitting does not advance the parent's own draw state.
        """
        if k < 1:
            raise DomainError(f"split needs k >= 1, got {k}")
        children = [
            RngStream(self.seed, self._spawn_key + (self._spawned + i,))
            for i in range(k)
        ]
        self._spawned += k
        return children
