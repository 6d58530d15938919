"""Multi-run experiments, summary statistics, top-count ranking and sweeps."""
from __future__ import annotations

import csv
import io
import math
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Mapping, Optional, Sequence, Union

import numpy as np

from . import benchmarks
from .core import AlgorithmConfig, ConfigError
from .engine import run
from .stochastics import RandomStream

__all__ = [
    "ExperimentError",
    "ProblemRef",
    "ExperimentPlan",
    "CellStats",
    "ExperimentStats",
    "RankTable",
    "SweepTable",
    "SWEEP_PARAMS",
    "derive_seed",
    "summarize",
    "run_experiment",
    "dense_rank",
    "count_tops",
    "sweep",
    "persist",
    "read_stats_csv",
    "read_sweep_csv",
    "format_sci",
    "stats_report",
    "sweep_report",
]

TIE_RTOL = 1e-9
CSV_COLUMNS = ("problem", "algorithm", "dim", "runs", "ave", "std", "best", "seed")


class ExperimentError(RuntimeError):
    """A run failed; the message carries its (problem, algorithm, run) coordinates."""


@dataclass(frozen=True)
class ProblemRef:
    id: str
    dim: Optional[int] = None

    @classmethod
    def parse(cls, item) -> "ProblemRef":
        if isinstance(item, ProblemRef):
            return item
        if isinstance(item, str):
            # "F8" or "F8:10"
            name, _, dim = item.partition(":")
            return cls(benchmarks.normalize_id(name), int(dim) if dim else None)
        if isinstance(item, Mapping):
            return cls(benchmarks.normalize_id(item["id"]), item.get("dim"))
        fid, dim = item
        return cls(benchmarks.normalize_id(fid), dim)

    def resolved_dim(self) -> int:
        return benchmarks.get(self.id, self.dim).problem.dim

    @property
    def key(self) -> str:
        return f"{self.id}:{self.resolved_dim()}"


@dataclass
class ExperimentPlan:
    problems: list
    algorithms: list  # (label, AlgorithmConfig) pairs
    runs: int = 30
    base_seed: int = 0

    def __post_init__(self):
        self.problems = [ProblemRef.parse(p) for p in self.problems]
        self.algorithms = [(str(label), cfg) for label, cfg in self.algorithms]
        if self.runs < 1:
            raise ConfigError(f"runs must be >= 1, got {self.runs}")
        if self.base_seed < 0:
            raise ConfigError(f"base_seed must be unsigned, got {self.base_seed}")
        labels = [label for label, _ in self.algorithms]
        if len(set(labels)) != len(labels):
            raise ConfigError(f"algorithm labels must be unique, got {labels}")
        for p in self.problems:
            benchmarks.get(p.id, p.dim)
        for label, cfg in self.algorithms:
            try:
                cfg.validate()
            except ConfigError as exc:
                raise ConfigError(f"algorithm {label!r}: {exc}") from exc


def _key(text: str) -> int:
    return zlib.crc32(text.encode("utf-8"))


def derive_seed(base_seed: int, problem: str, algorithm: str, run_index: int) -> int:
    """64-bit run seed from ``(base_seed, problem, algorithm, run)``."""
    ss = np.random.SeedSequence(base_seed, spawn_key=(_key(problem), _key(algorithm), run_index))
    hi, lo = ss.generate_state(2, dtype=np.uint32)
    return (int(hi) << 32) | int(lo)


@dataclass
class CellStats:
    problem: str
    algorithm: str
    dim: int
    runs: int
    ave: float
    std: float
    best: float
    seed: int
    finals: tuple = ()
    traces: Optional[list] = None


def summarize(values: Sequence[float]) -> tuple[float, float, float]:
    """(mean, sample standard deviation, minimum); std is 0 for a single value."""
    v = np.asarray(values, dtype=float)
    if v.size == 0:
        raise ValueError("no values to summarize")
    ave = float(v.mean())
    std = float(v.std(ddof=1)) if v.size > 1 else 0.0
    return ave, std, float(v.min())


@dataclass
class ExperimentStats:
    cells: dict = field(default_factory=dict)  # (problem, algorithm) -> CellStats

    def add(self, cell: CellStats) -> None:
        self.cells[(cell.problem, cell.algorithm)] = cell

    def cell(self, problem: str, algorithm: str) -> CellStats:
        return self.cells[(problem, algorithm)]

    @property
    def problems(self) -> list[str]:
        return list(dict.fromkeys(p for p, _ in self.cells))

    @property
    def algorithms(self) -> list[str]:
        return list(dict.fromkeys(a for _, a in self.cells))

    def __iter__(self):
        return iter(self.cells.values())

    def __len__(self) -> int:
        return len(self.cells)


def _run_task(task):
    fid, dim, label, cfg, seed, run_index, keep_trace = task
    try:
        entry = benchmarks.get(fid, dim, noise_stream=RandomStream(seed).fork("noise"))
        result = run(entry.problem, cfg, seed=seed)
    except Exception as exc:  # noqa: BLE001 - re-raised with coordinates
        raise ExperimentError(
            f"run failed at problem={fid} (dim {dim}), algorithm={label}, run={run_index}: {exc}"
        ) from exc
    return result.best_fitness, (result.trace if keep_trace else None)


def run_experiment(
    plan: ExperimentPlan,
    jobs: int = 1,
    keep_traces: bool = False,
    progress: Optional[Callable[[int, int], None]] = None,
) -> ExperimentStats:
    """Run every (problem, algorithm, run) of ``plan`` and aggregate.

    Runs are independent and may use ``jobs`` worker processes; results are
    collected in plan order, so the output does not depend on ``jobs``.
    """
    tasks, coords = [], []
    for p in plan.problems:
        dim = p.resolved_dim()
        for label, cfg in plan.algorithms:
            for r in range(plan.runs):
                seed = derive_seed(plan.base_seed, p.key, label, r)
                tasks.append((p.id, dim, label, cfg, seed, r, keep_traces))
            coords.append((p, dim, label))

    results = []
    total = len(tasks)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for i, res in enumerate(pool.map(_run_task, tasks, chunksize=1), start=1):
                results.append(res)
                if progress:
                    progress(i, total)
    else:
        for i, task in enumerate(tasks, start=1):
            results.append(_run_task(task))
            if progress:
                progress(i, total)

    stats = ExperimentStats()
    for c, (p, dim, label) in enumerate(coords):
        chunk = results[c * plan.runs:(c + 1) * plan.runs]
        finals = tuple(v for v, _ in chunk)
        ave, std, best = summarize(finals)
        stats.add(
            CellStats(
                problem=p.id,
                algorithm=label,
                dim=dim,
                runs=plan.runs,
                ave=ave,
                std=std,
                best=best,
                seed=plan.base_seed,
                finals=finals,
                traces=[t for _, t in chunk] if keep_traces else None,
            )
        )
    return stats


@dataclass
class RankTable:
    algorithms: list
    tops: list
    rank: list

    def as_dict(self) -> dict:
        return {a: (t, r) for a, t, r in zip(self.algorithms, self.tops, self.rank)}


def dense_rank(tops: Sequence[int]) -> list[int]:
    """Dense rank by descending count: equal counts share a rank."""
    order = sorted(set(tops), reverse=True)
    pos = {v: i + 1 for i, v in enumerate(order)}
    return [pos[t] for t in tops]


def count_tops(stats: ExperimentStats) -> RankTable:
    """Credit every algorithm whose mean ties the lowest mean on a problem."""
    algos = stats.algorithms
    tops = dict.fromkeys(algos, 0)
    for p in stats.problems:
        aves = {a: stats.cell(p, a).ave for a in algos}
        lo = min(aves.values())
        for a, v in aves.items():
            if v == lo or math.isclose(v, lo, rel_tol=TIE_RTOL, abs_tol=0.0):
                tops[a] += 1
    counts = [tops[a] for a in algos]
    return RankTable(algos, counts, dense_rank(counts))


# --- sweeps ------------------------------------------------------------------

SWEEP_PARAMS = {
    "H": "memory_size",
    "n_R": "stagnation_limit",
    "N": "pop_size",
    "maxNumIter": "max_iters",
}
_SWEEP_ALIASES = {
    "h": "H",
    "memory_size": "H",
    "n_r": "n_R",
    "nr": "n_R",
    "stagnation": "n_R",
    "stagnation_limit": "n_R",
    "n": "N",
    "pop": "N",
    "pop_size": "N",
    "maxnumiter": "maxNumIter",
    "iters": "maxNumIter",
    "max_iters": "maxNumIter",
}


def _sweep_param(name: str) -> str:
    if name in SWEEP_PARAMS:
        return name
    try:
        return _SWEEP_ALIASES[name.lower()]
    except KeyError:
        raise ConfigError(
            f"cannot sweep {name!r}; choose one of {', '.join(SWEEP_PARAMS)}"
        ) from None


@dataclass
class SweepTable:
    problem: str
    param: str
    values: list
    ave: list
    std: list
    best: list
    runs: int


def sweep(
    problem,
    base_cfg: AlgorithmConfig,
    param: str,
    values: Iterable,
    runs: int = 30,
    base_seed: int = 0,
    jobs: int = 1,
    label: str = "AVLA",
) -> SweepTable:
    """One experiment per parameter value, everything else held at ``base_cfg``."""
    param = _sweep_param(param)
    values = list(values)
    if not values:
        raise ConfigError("sweep needs at least one value")
    ref = ProblemRef.parse(problem)
    field_name = SWEEP_PARAMS[param]
    aves, stds, bests = [], [], []
    for v in values:
        cfg = base_cfg.with_(**{field_name: int(v)})
        plan = ExperimentPlan([ref], [(label, cfg)], runs=runs, base_seed=base_seed)
        cell = run_experiment(plan, jobs=jobs).cell(ref.id, label)
        aves.append(cell.ave)
        stds.append(cell.std)
        bests.append(cell.best)
    return SweepTable(ref.id, param, [int(v) for v in values], aves, stds, bests, runs)


# --- output --------------------------------------------------------------------

def _num(v: float) -> str:
    return format(v, ".17g")


def format_sci(v: float) -> str:
    """Three significant digits in the style ``5.71E-84``, ``-4.19E03``, ``0``."""
    if v == 0:
        return "0"
    if not math.isfinite(v):
        return str(v)
    mant, exp = f"{v:.2E}".split("E")
    mant = mant.rstrip("0").rstrip(".")
    sign = "-" if exp.startswith("-") else ""
    digits = exp.lstrip("+-").zfill(2)
    return f"{mant}E{sign}{digits}"


def _header_lines(provenance: Optional[Mapping]) -> list[str]:
    if not provenance:
        return []
    return [f"# {k}: {v}" for k, v in provenance.items()]


def stats_csv(stats: ExperimentStats, provenance: Optional[Mapping] = None) -> str:
    buf = io.StringIO()
    for line in _header_lines(provenance):
        buf.write(line + "\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for c in stats:
        w.writerow([c.problem, c.algorithm, c.dim, c.runs, _num(c.ave), _num(c.std), _num(c.best), c.seed])
    return buf.getvalue()


def sweep_csv(table: SweepTable, provenance: Optional[Mapping] = None) -> str:
    buf = io.StringIO()
    for line in _header_lines(provenance):
        buf.write(line + "\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([table.param, "ave", "std", "best", "runs"])
    for v, a, s, b in zip(table.values, table.ave, table.std, table.best):
        w.writerow([v, _num(a), _num(s), _num(b), table.runs])
    return buf.getvalue()


def _grid(rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in rows if i < len(r)) for i in range(max(map(len, rows)))]
    return "\n".join(
        "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(r)).rstrip() for r in rows
    ) + "\n"


def stats_report(stats: ExperimentStats, provenance: Optional[Mapping] = None) -> str:
    """Ave/Std/Best rows per problem, one column per algorithm, plus top counts."""
    algos = stats.algorithms
    rows = [["Fun.", "Index"] + algos]
    for p in stats.problems:
        for i, idx in enumerate(("Ave", "Std", "Best")):
            vals = [format_sci(getattr(stats.cell(p, a), idx.lower())) for a in algos]
            rows.append([p if i == 0 else "", idx] + vals)
    ranks = count_tops(stats)
    rows.append(["Num Of Tops", ""] + [str(t) for t in ranks.tops])
    rows.append(["Rank", ""] + [str(r) for r in ranks.rank])
    return "".join(line + "\n" for line in _header_lines(provenance)) + _grid(rows)


def sweep_report(table: SweepTable, provenance: Optional[Mapping] = None) -> str:
    """Parameter values across the top, Ave and Std rows below."""
    rows = [
        [table.param] + [str(v) for v in table.values],
        ["Ave"] + [format_sci(v) for v in table.ave],
        ["Std"] + [format_sci(v) for v in table.std],
    ]
    return "".join(line + "\n" for line in _header_lines(provenance)) + _grid(rows)


def persist(
    obj: Union[ExperimentStats, SweepTable],
    path,
    format: str = "csv",
    provenance: Optional[Mapping] = None,
) -> Path:
    """Write stats or a sweep table as CSV or as a human-readable report."""
    if format not in ("csv", "report"):
        raise ValueError(f"format must be 'csv' or 'report', got {format!r}")
    if isinstance(obj, SweepTable):
        text = sweep_csv(obj, provenance) if format == "csv" else sweep_report(obj, provenance)
    elif isinstance(obj, ExperimentStats):
        text = stats_csv(obj, provenance) if format == "csv" else stats_report(obj, provenance)
    else:
        raise TypeError(f"cannot persist {type(obj).__name__}")
    path = Path(path)
    try:
        if path.parent and not path.parent.exists():
            path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc
    return path


def _data_lines(path) -> list[str]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot read {path}: {exc.strerror or exc}") from exc
    return [line for line in text.splitlines() if line and not line.startswith("#")]


def read_stats_csv(path) -> ExperimentStats:
    stats = ExperimentStats()
    for row in csv.DictReader(_data_lines(path)):
        stats.add(
            CellStats(
                problem=row["problem"],
                algorithm=row["algorithm"],
                dim=int(row["dim"]),
                runs=int(row["runs"]),
                ave=float(row["ave"]),
                std=float(row["std"]),
                best=float(row["best"]),
                seed=int(row["seed"]),
            )
        )
    return stats


def read_sweep_csv(path, problem: str = "") -> SweepTable:
    lines = _data_lines(path)
    reader = csv.reader(lines)
    header = next(reader)
    rows = list(reader)
    return SweepTable(
        problem=problem,
        param=header[0],
        values=[int(r[0]) for r in rows],
        ave=[float(r[1]) for r in rows],
        std=[float(r[2]) for r in rows],
        best=[float(r[3]) for r in rows],
        runs=int(rows[0][4]) if rows else 0,
    )
