"""Domain types shared by the engine, benchmarks and harness."""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Optional, Sequence

import numpy as np

__all__ = [
    "ConfigError",
    "BoundsBox",
    "ObjectiveProblem",
    "Member",
    "Population",
    "AlgorithmConfig",
    "RunResult",
    "make_penalized",
    "insert_sorted",
]

KNOWN_MIN_ATOL = 1e-9


class ConfigError(ValueError):
    """An invalid problem or algorithm configuration."""


@dataclass(frozen=True)
class BoundsBox:
    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lo = np.asarray(self.lower, dtype=float).reshape(-1)
        hi = np.asarray(self.upper, dtype=float).reshape(-1)
        if lo.shape != hi.shape or lo.size < 1:
            raise ConfigError(
                f"bounds need equal, non-zero lengths (got {lo.size} and {hi.size})"
            )
        if not np.all(lo < hi):
            raise ConfigError("every lower bound must be strictly below its upper bound")
        lo.setflags(write=False)
        hi.setflags(write=False)
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)

    @classmethod
    def uniform(cls, low: float, high: float, dim: int) -> "BoundsBox":
        return cls(np.full(dim, float(low)), np.full(dim, float(high)))

    @property
    def dim(self) -> int:
        return self.lower.size

    def contains(self, x) -> bool:
        x = np.asarray(x, dtype=float)
        return bool(np.all(x >= self.lower) and np.all(x <= self.upper))

    def clamp(self, x: np.ndarray) -> np.ndarray:
        return np.minimum(np.maximum(x, self.lower), self.upper)


@dataclass(frozen=True)
class ObjectiveProblem:
    """A box-bounded minimization problem.

    ``objective`` maps a 1-D float array of length ``dim`` to a float and must
    not fail anywhere inside ``bounds``.
    """

    name: str
    dim: int
    bounds: BoundsBox
    objective: Callable[[np.ndarray], float]
    known_min: Optional[float] = None
    known_argmin: Optional[np.ndarray] = None

    def __post_init__(self):
        if self.dim < 1:
            raise ConfigError(f"dimension must be positive, got {self.dim}")
        if self.bounds.dim != self.dim:
            raise ConfigError(
                f"{self.name}: bounds have dimension {self.bounds.dim}, expected {self.dim}"
            )
        if self.known_argmin is not None:
            arg = np.asarray(self.known_argmin, dtype=float)
            object.__setattr__(self, "known_argmin", arg)
            if self.known_min is not None:
                val = float(self.objective(arg))
                if abs(val - self.known_min) > KNOWN_MIN_ATOL:
                    raise ConfigError(
                        f"{self.name}: objective at known argmin is {val!r}, "
                        f"known minimum is {self.known_min!r}"
                    )

    def __call__(self, x) -> float:
        return float(self.objective(np.asarray(x, dtype=float)))


@dataclass(eq=False)
class Member:
    """One candidate solution with its cached fitness and learning rates."""

    position: np.ndarray
    fitness: float
    f_rate: float = 0.5
    cr_rate: float = 0.5


@dataclass(eq=False)
class Population:
    """Members sorted best-first plus run bookkeeping.

    Every objective evaluation of a run goes through :meth:`evaluate`, which
    keeps ``eval_count`` and the best-so-far record current.
    """

    problem: ObjectiveProblem
    members: list[Member] = field(default_factory=list)
    t: int = 0
    best_position: Optional[np.ndarray] = None
    best_fitness: float = math.inf
    n_r: int = 0
    eval_count: int = 0

    def __len__(self) -> int:
        return len(self.members)

    @property
    def best_so_far(self) -> tuple[Optional[np.ndarray], float]:
        return self.best_position, self.best_fitness

    def evaluate(self, x: np.ndarray) -> float:
        fit = float(self.problem.objective(x))
        self.eval_count += 1
        if fit < self.best_fitness:
            self.best_fitness = fit
            self.best_position = x.copy()
        return fit

    def sort(self) -> None:
        self.members.sort(key=_fitness_key)

    def fitnesses(self) -> np.ndarray:
        return np.array([m.fitness for m in self.members])


def _fitness_key(m: Member) -> float:
    return m.fitness


def insert_sorted(pop: Population, updated_member_index: int) -> Population:
    """Restore best-first order after one member's fitness changed.

    The sort is stable: members with equal fitness keep their previous
    relative order.
    """
    if not 0 <= updated_member_index < len(pop.members):
        raise IndexError(
            f"member index {updated_member_index} out of range for population of {len(pop.members)}"
        )
    m = pop.members[updated_member_index]
    if m.fitness < pop.best_fitness:
        pop.best_fitness = m.fitness
        pop.best_position = m.position.copy()
    pop.sort()
    return pop


ADAPTIVE = "adaptive"
FIXED = "fixed"
INCREMENTAL = "incremental"
BATCH = "batch"
PERIODIC = "periodic"
RESET = "reset"
GREEDY = "greedy"
REPLACE = "replace"


@dataclass(frozen=True)
class AlgorithmConfig:
    """Run parameters.  Defaults are the adaptive variant's published settings.

    ``mode`` is ``"adaptive"`` (AVLA) or ``"fixed"`` (VLA).  ``resort``
    chooses between re-sorting after every accepted move (``"incremental"``)
    and sorting once after all members learned (``"batch"``).
    """

    pop_size: int = 50
    max_iters: int = 2000
    memory_size: int = 50
    stagnation_limit: int = 6
    gamma: float = 6.0
    elite_floor: int = 3
    elite_cap_fraction: float = 0.2
    mode: str = ADAPTIVE
    fixed_cr: float = 0.25
    seed: int = 0
    resort: str = INCREMENTAL
    stagnation_rule: str = PERIODIC
    tail_restart: str = GREEDY

    @classmethod
    def avla(cls, **overrides) -> "AlgorithmConfig":
        return cls(**overrides)

    @classmethod
    def vla(cls, **overrides) -> "AlgorithmConfig":
        params = dict(mode=FIXED, stagnation_limit=10, fixed_cr=0.25)
        params.update(overrides)
        return cls(**params)

    def with_(self, **changes) -> "AlgorithmConfig":
        return replace(self, **changes)

    def validate(self) -> "AlgorithmConfig":
        """Raise :class:`ConfigError` naming the first violated constraint."""
        if self.mode not in (ADAPTIVE, FIXED):
            raise ConfigError(f"mode must be 'adaptive' or 'fixed', got {self.mode!r}")
        if self.resort not in (INCREMENTAL, BATCH):
            raise ConfigError(f"resort must be 'incremental' or 'batch', got {self.resort!r}")
        if self.stagnation_rule not in (PERIODIC, RESET):
            raise ConfigError(
                f"stagnation_rule must be 'periodic' or 'reset', got {self.stagnation_rule!r}"
            )
        if self.tail_restart not in (GREEDY, REPLACE):
            raise ConfigError(f"tail_restart must be 'greedy' or 'replace', got {self.tail_restart!r}")
        if self.max_iters < 1:
            raise ConfigError(f"max_iters must be >= 1, got {self.max_iters}")
        if self.memory_size < 1:
            raise ConfigError(f"memory_size (H) must be >= 1, got {self.memory_size}")
        if self.stagnation_limit < 1:
            raise ConfigError(f"stagnation_limit (n_R) must be >= 1, got {self.stagnation_limit}")
        if self.gamma <= 0:
            raise ConfigError(f"gamma must be positive, got {self.gamma}")
        if self.seed < 0:
            raise ConfigError(f"seed must be unsigned, got {self.seed}")
        if self.mode == FIXED and not 0.0 < self.fixed_cr < 1.0:
            raise ConfigError(f"fixed_cr must lie strictly inside (0, 1), got {self.fixed_cr}")
        if self.pop_size < self.elite_floor + 2:
            raise ConfigError(
                f"pop_size must be >= elite_floor + 2 ({self.elite_floor + 2}), got {self.pop_size}"
            )
        # elite learning needs two peer elites, common learning two peer commons
        from .engine import elite_count

        counts = [elite_count(t, self) for t in (0, self.max_iters)]
        if min(counts) < 3:
            raise ConfigError(
                f"elite count drops to {min(counts)}; elite learning needs at least 3 elites "
                f"(check elite_floor and elite_cap_fraction * pop_size)"
            )
        if self.pop_size - max(counts) < 3:
            raise ConfigError(
                f"only {self.pop_size - max(counts)} common members at the largest elite size "
                f"{max(counts)}; common learning needs at least 3 (raise pop_size)"
            )
        return self


@dataclass
class RunResult:
    best_position: np.ndarray
    best_fitness: float
    trace: np.ndarray
    eval_count: int
    seed: int


def make_penalized(
    problem: ObjectiveProblem,
    constraints: Sequence[Callable[[np.ndarray], float]],
    rho: float,
) -> ObjectiveProblem:
    """Static quadratic penalty for inequality constraints ``g(x) <= 0``.

    The returned objective is ``f(x) + rho * sum(max(0, g(x))**2)``.  An
    empty constraint list returns ``problem`` itself.
    """
    if rho <= 0:
        raise ConfigError(f"rho must be positive, got {rho}")
    constraints = list(constraints)
    if not constraints:
        return problem
    base = problem.objective

    def penalized(x):
        viol = 0.0
        for g in constraints:
            gx = float(g(x))
            if gx > 0.0:
                viol += gx * gx
        return float(base(x)) + rho * viol

    return ObjectiveProblem(
        name=f"{problem.name}+penalty",
        dim=problem.dim,
        bounds=problem.bounds,
        objective=penalized,
    )
