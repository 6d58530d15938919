"""AVLA / VLA optimizer.

Members are kept sorted best-first.  The best ``n_E(t)`` members are elites
and learn from two other elites; the rest (commons) learn from two commons
or, with a probability that grows over the run, from an elite and a common.
Each learning move is a difference-vector step, a binomial crossover with
the current position and a greedy acceptance.  After learning, the worst
members try their opposite positions (or restart at random).  Once the
stagnation counter reaches ``n_R`` the whole group reflects instead; by
default the counter simply cycles, so this happens every ``n_R + 1``
iterations, while ``stagnation_rule="reset"`` restarts it whenever the
best-so-far value improves.

In adaptive mode (AVLA) each member's step factor F and crossover rate CR
are sampled around a success-history memory; in fixed mode (VLA) F is
uniform on [0, 1) and CR is a constant.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .core import (
    ADAPTIVE,
    GREEDY,
    INCREMENTAL,
    PERIODIC,
    AlgorithmConfig,
    BoundsBox,
    Member,
    ObjectiveProblem,
    Population,
    RunResult,
    insert_sorted,
)
from .stochastics import RandomStream, cauchy_positive_clamped, normal_truncated01

__all__ = [
    "ParameterMemory",
    "SuccessRecords",
    "init_population",
    "random_position",
    "sign_toward",
    "elite_probability",
    "elite_count",
    "sample_member_parameters",
    "ideal_learn_elite",
    "ideal_learn_common",
    "practical_crossover",
    "actual_accept",
    "opposite",
    "reflect_tail",
    "reflect_group",
    "weighted_lehmer_mean",
    "update_memory",
    "run",
]

PARAM_SD = 0.1  # spread of the CR normal and the F Cauchy around memory entries


@dataclass
class ParameterMemory:
    """Circular success-history memory of CR and F values."""

    m_cr: np.ndarray
    m_f: np.ndarray
    k: int = 0

    @classmethod
    def fresh(cls, size: int) -> "ParameterMemory":
        return cls(np.full(size, 0.5), np.full(size, 0.5), 0)

    @property
    def size(self) -> int:
        return len(self.m_cr)


@dataclass
class SuccessRecords:
    """CR/F values of the members that improved during one iteration."""

    s_cr: list = field(default_factory=list)
    s_f: list = field(default_factory=list)
    delta_fit: list = field(default_factory=list)

    def add(self, cr: float, f: float, delta: float) -> None:
        self.s_cr.append(cr)
        self.s_f.append(f)
        self.delta_fit.append(delta)

    def __len__(self) -> int:
        return len(self.s_cr)


def random_position(bounds: BoundsBox, s: RandomStream) -> np.ndarray:
    u = s.random_vector(bounds.dim)
    return bounds.lower + u * (bounds.upper - bounds.lower)


def init_population(problem: ObjectiveProblem, cfg: AlgorithmConfig, s: RandomStream) -> Population:
    pop = Population(problem=problem)
    for _ in range(cfg.pop_size):
        x = random_position(problem.bounds, s)
        pop.members.append(Member(x, pop.evaluate(x)))
    pop.sort()
    return pop


def sign_toward(fit_self: float, fit_other: float) -> int:
    """+1 (move toward) if the other member is strictly better, else -1."""
    return 1 if fit_self > fit_other else -1


def elite_probability(t: float, max_iters: int, gamma: float) -> float:
    """Probability that a common member learns from an elite at iteration t."""
    return 1.0 / (1.0 + math.exp((2.0 * gamma / max_iters) * (max_iters / 2.0 - t)))


def _round_half_away(x: float) -> int:
    return int(math.copysign(math.floor(abs(x) + 0.5), x))


def elite_count(t: int, cfg: AlgorithmConfig) -> int:
    """Number of elites at iteration t, growing linearly from the floor to the cap."""
    final = cfg.elite_cap_fraction * cfg.pop_size
    return _round_half_away(cfg.elite_floor + t * (final - cfg.elite_floor) / cfg.max_iters)


def sample_member_parameters(mem: ParameterMemory, s: RandomStream) -> tuple[float, float]:
    r = s.index(mem.size)
    cr = normal_truncated01(s, mem.m_cr[r], PARAM_SD)
    f = cauchy_positive_clamped(s, mem.m_f[r], PARAM_SD)
    return cr, f


def _pick(s: RandomStream, n: int, excluded: tuple[int, ...]) -> int:
    # uniform over range(n) minus ``excluded`` (sorted ascending, all < n)
    k = s.index(n - len(excluded))
    for ex in excluded:
        if k >= ex:
            k += 1
    return k


def _pick_pair(s: RandomStream, n: int, exclude: int) -> tuple[int, int]:
    a = _pick(s, n, (exclude,))
    b = _pick(s, n, tuple(sorted((exclude, a))))
    return a, b


def ideal_learn_elite(pop: Population, e: int, f: float, s: RandomStream, n_elite: int) -> np.ndarray:
    """Trial vector of elite ``e`` learning from two other elites."""
    if n_elite < 3:
        raise ValueError(f"elite learning needs at least 3 elites, got {n_elite}")
    if not 0 <= e < n_elite:
        raise IndexError(f"member {e} is not among the {n_elite} elites")
    members = pop.members
    e1, e2 = _pick_pair(s, n_elite, e)
    me, m1, m2 = members[e], members[e1], members[e2]
    x = me.position
    s1 = sign_toward(me.fitness, m1.fitness) * f
    s2 = sign_toward(me.fitness, m2.fitness) * f
    v = x + s1 * (m1.position - x) + s2 * (m2.position - x)
    return pop.problem.bounds.clamp(v)


def ideal_learn_common(
    pop: Population,
    i: int,
    f: float,
    t: int,
    cfg: AlgorithmConfig,
    s: RandomStream,
    n_elite: int,
) -> np.ndarray:
    """Trial vector of common member ``i``.

    With probability ``1 - LE(t)`` it learns from two other commons using
    signed steps; otherwise from a random elite (always attracted) and one
    other common (signed step).
    """
    members = pop.members
    n = len(members)
    n_common = n - n_elite
    if i < n_elite or i >= n:
        raise IndexError(f"member {i} is not a common member (elites: {n_elite}, size: {n})")
    if n_common < 3:
        raise ValueError(f"common learning needs at least 3 commons, got {n_common}")
    me = members[i]
    x = me.position
    if s.random() > elite_probability(t, cfg.max_iters, cfg.gamma):
        c1, c2 = _pick_pair(s, n_common, i - n_elite)
        m1, m2 = members[c1 + n_elite], members[c2 + n_elite]
        s1 = sign_toward(me.fitness, m1.fitness) * f
        s2 = sign_toward(me.fitness, m2.fitness) * f
        v = x + s1 * (m1.position - x) + s2 * (m2.position - x)
    else:
        me_elite = members[s.index(n_elite)]
        m2 = members[_pick(s, n_common, (i - n_elite,)) + n_elite]
        s2 = sign_toward(me.fitness, m2.fitness) * f
        v = x + f * (me_elite.position - x) + s2 * (m2.position - x)
    return pop.problem.bounds.clamp(v)


def practical_crossover(x: np.ndarray, v: np.ndarray, cr: float, s: RandomStream) -> np.ndarray:
    """Take each coordinate from ``v`` with probability ``cr``; one forced coordinate."""
    d = x.shape[0]
    j_rand = s.index(d)
    take = s.random_vector(d) <= cr
    take[j_rand] = True
    return np.where(take, v, x)


def actual_accept(
    pop: Population,
    idx: int,
    trial: np.ndarray,
    records: SuccessRecords,
    resort: bool = True,
) -> bool:
    """Greedy replacement of member ``idx`` by ``trial`` on strict improvement."""
    fit = pop.evaluate(trial)
    m = pop.members[idx]
    if fit < m.fitness:
        records.add(m.cr_rate, m.f_rate, abs(fit - m.fitness))
        m.position = trial
        m.fitness = fit
        if resort:
            insert_sorted(pop, idx)
        return True
    return False


def opposite(x: np.ndarray, bounds: BoundsBox) -> np.ndarray:
    """Reflection of ``x`` through the center of the bounds box."""
    return bounds.clamp(bounds.lower + bounds.upper - x)


def reflect_tail(
    pop: Population,
    problem: ObjectiveProblem,
    cfg: AlgorithmConfig,
    t: int,
    s: RandomStream,
    n_elite: Optional[int] = None,
) -> Population:
    """The worst ``n_E(t)`` members try their opposite position.

    A strictly better opposite is taken.  Otherwise the member tries a
    uniformly random position: with ``tail_restart="replace"`` it always
    moves there, with ``"greedy"`` only if that is strictly better.
    """
    if n_elite is None:
        n_elite = elite_count(t, cfg)
    greedy = cfg.tail_restart == GREEDY
    bounds = problem.bounds
    n = len(pop.members)
    for i in range(max(n - n_elite, 0), n):
        m = pop.members[i]
        xr = opposite(m.position, bounds)
        fr = pop.evaluate(xr)
        if fr < m.fitness:
            m.position, m.fitness = xr, fr
            continue
        xs = random_position(bounds, s)
        fs = pop.evaluate(xs)
        if not greedy or fs < m.fitness:
            m.position, m.fitness = xs, fs
    pop.sort()
    return pop


def reflect_group(
    pop: Population,
    problem: ObjectiveProblem,
    cfg: AlgorithmConfig,
    t: int,
    n_elite: Optional[int] = None,
) -> Population:
    """Every member evaluates its opposite: the tail moves there unconditionally,
    the rest only on strict improvement."""
    if n_elite is None:
        n_elite = elite_count(t, cfg)
    bounds = problem.bounds
    n = len(pop.members)
    for i, m in enumerate(pop.members):
        xr = opposite(m.position, bounds)
        fr = pop.evaluate(xr)
        if i >= n - n_elite or fr < m.fitness:
            m.position, m.fitness = xr, fr
    pop.sort()
    return pop


def weighted_lehmer_mean(values, weights) -> float:
    """``sum(w * v**2) / sum(w * v)``; 0 when the denominator vanishes."""
    v = np.asarray(values, dtype=float)
    w = np.asarray(weights, dtype=float)
    den = float(np.dot(w, v))
    if den == 0.0:
        return 0.0
    return float(np.dot(w, v * v)) / den


def update_memory(mem: ParameterMemory, records: SuccessRecords) -> ParameterMemory:
    """Write the weighted Lehmer means of this iteration's successes into slot k."""
    if len(records) == 0:
        return mem
    delta = np.asarray(records.delta_fit, dtype=float)
    total = delta.sum()
    if total > 0.0:
        w = delta / total
    else:
        w = np.full(delta.size, 1.0 / delta.size)
    mem.m_cr[mem.k] = weighted_lehmer_mean(records.s_cr, w)
    mem.m_f[mem.k] = weighted_lehmer_mean(records.s_f, w)
    mem.k = (mem.k + 1) % mem.size
    return mem


def _index_of(members: list[Member], m: Member) -> int:
    for i, other in enumerate(members):
        if other is m:
            return i
    raise LookupError("member is no longer part of the population")


def run(
    problem: ObjectiveProblem,
    cfg: AlgorithmConfig,
    seed: Optional[int] = None,
    callback: Optional[Callable[[int, Population], None]] = None,
) -> RunResult:
    """One complete optimization run; deterministic in ``(problem, cfg, seed)``.

    ``seed`` defaults to ``cfg.seed``.  ``callback(t, pop)`` is called after
    initialization (t = 0) and at the end of every iteration; it must not
    modify the population.
    """
    cfg.validate()
    seed = cfg.seed if seed is None else int(seed)
    s = RandomStream(seed)
    adaptive = cfg.mode == ADAPTIVE
    incremental = cfg.resort == INCREMENTAL
    periodic = cfg.stagnation_rule == PERIODIC
    memory = ParameterMemory.fresh(cfg.memory_size) if adaptive else None

    pop = init_population(problem, cfg, s)
    trace = np.empty(cfg.max_iters + 1)
    trace[0] = pop.best_fitness
    last_best = pop.best_fitness
    if callback is not None:
        callback(0, pop)

    for t in range(1, cfg.max_iters + 1):
        pop.t = t
        n_elite = elite_count(t, cfg)

        for m in pop.members:
            if adaptive:
                m.cr_rate, m.f_rate = sample_member_parameters(memory, s)
            else:
                m.f_rate = s.random()
                m.cr_rate = cfg.fixed_cr

        records = SuccessRecords()
        snapshot = list(pop.members)
        for pos, m in enumerate(snapshot):
            idx = _index_of(pop.members, m) if incremental else pos
            if pos < n_elite:
                v = ideal_learn_elite(pop, idx, m.f_rate, s, n_elite)
            else:
                v = ideal_learn_common(pop, idx, m.f_rate, t, cfg, s, n_elite)
            v = practical_crossover(m.position, v, m.cr_rate, s)
            actual_accept(pop, idx, v, records, resort=incremental)
        if not incremental:
            pop.sort()

        if adaptive:
            update_memory(memory, records)

        if periodic:
            group = pop.n_r == cfg.stagnation_limit
            pop.n_r = 0 if group else pop.n_r + 1
        else:
            pop.n_r = 0 if pop.best_fitness < last_best else pop.n_r + 1
            last_best = pop.best_fitness
            group = pop.n_r >= cfg.stagnation_limit
            if group:
                pop.n_r = 0
        if group:
            reflect_group(pop, problem, cfg, t, n_elite)
        else:
            reflect_tail(pop, problem, cfg, t, s, n_elite)

        trace[t] = pop.best_fitness
        if callback is not None:
            callback(t, pop)

    return RunResult(
        best_position=pop.best_position.copy(),
        best_fitness=pop.best_fitness,
        trace=trace,
        eval_count=pop.eval_count,
        seed=seed,
    )
