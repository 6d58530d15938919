"""Seeded random streams and the samplers used by the optimizer.

Streams wrap a PCG64 generator (numpy) and serve scalar draws out of
pre-filled blocks, which keeps the per-call cost low inside the
member-by-member learning loop.  Two streams built from the same seed and
label produce identical sequences as long as they are consumed by the same
sequence of calls.
"""
from __future__ import annotations

import zlib

import numpy as np

__all__ = [
    "RandomStream",
    "uniform01",
    "uniform_index",
    "normal_truncated01",
    "cauchy_positive_clamped",
    "CAUCHY_MAX_RETRIES",
]

CAUCHY_MAX_RETRIES = 100

_BLOCK = 4096


def _label_key(label) -> int:
    if isinstance(label, (int, np.integer)):
        if label < 0:
            raise ValueError(f"stream labels must be non-negative, got {label}")
        return int(label)
    return zlib.crc32(str(label).encode("utf-8"))


class RandomStream:
    """Deterministic, forkable source of random numbers.

    Parameters
    ----------
    seed : int
        Unsigned integer seed.
    path : tuple of int, optional
        Fork path; children created with :meth:`fork` extend it.  Users
        normally leave this alone.
    """

    def __init__(self, seed: int, path: tuple[int, ...] = ()):
        if seed < 0:
            raise ValueError(f"seed must be an unsigned integer, got {seed}")
        self.seed = int(seed)
        self.path = tuple(path)
        self._rng = np.random.Generator(
            np.random.PCG64(np.random.SeedSequence(self.seed, spawn_key=self.path))
        )
        self._u = np.empty(0)
        self._ui = 0
        self._n = np.empty(0)
        self._ni = 0
        self._c = np.empty(0)
        self._ci = 0

    def __repr__(self) -> str:
        return f"RandomStream(seed={self.seed}, path={self.path})"

    def fork(self, label) -> "RandomStream":
        """Independent child stream identified by ``(seed, path + label)``.

        Forking does not consume from the parent.
        """
        return RandomStream(self.seed, self.path + (_label_key(label),))

    # scalar draws ---------------------------------------------------------
    def random(self) -> float:
        """Uniform draw on [0, 1)."""
        if self._ui >= len(self._u):
            self._u = self._rng.random(_BLOCK)
            self._ui = 0
        u = self._u[self._ui]
        self._ui += 1
        return float(u)

    def normal(self, mean: float = 0.0, sd: float = 1.0) -> float:
        if self._ni >= len(self._n):
            self._n = self._rng.standard_normal(_BLOCK)
            self._ni = 0
        z = self._n[self._ni]
        self._ni += 1
        return mean + sd * float(z)

    def cauchy(self, location: float = 0.0, scale: float = 1.0) -> float:
        if self._ci >= len(self._c):
            self._c = self._rng.standard_cauchy(_BLOCK)
            self._ci = 0
        z = self._c[self._ci]
        self._ci += 1
        return location + scale * float(z)

    def index(self, n: int) -> int:
        """Uniform integer in ``[0, n)``."""
        if n < 1:
            raise ValueError(f"index range must be positive, got n={n}")
        k = int(self.random() * n)
        # guards the (measure-zero) rounding case u*n == n
        return k if k < n else n - 1

    # vector draws ---------------------------------------------------------
    def random_vector(self, size: int) -> np.ndarray:
        """``size`` uniform draws on [0, 1) as an array."""
        if size > _BLOCK:
            return self._rng.random(size)
        if self._ui + size > len(self._u):
            rest = self._u[self._ui:]
            self._u = np.concatenate([rest, self._rng.random(_BLOCK)])
            self._ui = 0
        out = self._u[self._ui:self._ui + size]
        self._ui += size
        return out


def uniform01(s: RandomStream) -> float:
    return s.random()


def uniform_index(s: RandomStream, n: int) -> int:
    return s.index(n)


def normal_truncated01(s: RandomStream, mean: float, sd: float) -> float:
    """Normal draw clamped to [0, 1]."""
    if sd <= 0:
        raise ValueError(f"sd must be positive, got {sd}")
    v = s.normal(mean, sd)
    if v < 0.0:
        return 0.0
    if v > 1.0:
        return 1.0
    return v


def cauchy_positive_clamped(s: RandomStream, location: float, scale: float) -> float:
    """Cauchy draw mapped into (0, 1].

    Values above 1 become 1; non-positive values are redrawn.  After
    ``CAUCHY_MAX_RETRIES`` failed redraws the scale itself is returned.
    """
    if scale <= 0:
        raise ValueError(f"scale must be positive, got {scale}")
    for _ in range(CAUCHY_MAX_RETRIES + 1):
        v = s.cauchy(location, scale)
        if v > 1.0:
            return 1.0
        if v > 0.0:
            return v
    return min(scale, 1.0)
