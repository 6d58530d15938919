"""Adaptive and various learning-based optimization (AVLA and VLA).

Typical use::

    from avla import AlgorithmConfig, benchmarks, run

    problem = benchmarks.get("F9", dim=30).problem
    result = run(problem, AlgorithmConfig.avla(max_iters=500), seed=1)
    print(result.best_fitness)
"""
from . import benchmarks
from .core import (
    AlgorithmConfig,
    BoundsBox,
    ConfigError,
    Member,
    ObjectiveProblem,
    Population,
    RunResult,
    insert_sorted,
    make_penalized,
)
from .engine import elite_count, elite_probability, opposite, run, update_memory, weighted_lehmer_mean
from .harness import (
    ExperimentPlan,
    ExperimentStats,
    RankTable,
    count_tops,
    persist,
    run_experiment,
    sweep,
)
from .stochastics import RandomStream

__version__ = "0.1.0"

__all__ = [
    "benchmarks",
    "AlgorithmConfig",
    "BoundsBox",
    "ConfigError",
    "Member",
    "ObjectiveProblem",
    "Population",
    "RunResult",
    "insert_sorted",
    "make_penalized",
    "elite_count",
    "elite_probability",
    "opposite",
    "run",
    "update_memory",
    "weighted_lehmer_mean",
    "ExperimentPlan",
    "ExperimentStats",
    "RankTable",
    "count_tops",
    "persist",
    "run_experiment",
    "sweep",
    "RandomStream",
]
