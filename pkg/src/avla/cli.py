"""Command-line interface: list benchmarks, run one optimization, run experiments and sweeps.

Exit status is 0 on success, 1 for usage errors (unknown flag, problem or
value), 2 for invalid configurations and 3 for file I/O failures.
"""
from __future__ import annotations

import argparse
import csv
import dataclasses
import sys
from pathlib import Path
from typing import Optional, Sequence

import yaml

from . import __version__, benchmarks
from .core import AlgorithmConfig, ConfigError
from .engine import run
from .harness import (
    SWEEP_PARAMS,
    ExperimentError,
    ExperimentPlan,
    ProblemRef,
    persist,
    run_experiment,
    stats_csv,
    stats_report,
    sweep,
    sweep_csv,
    sweep_report,
)
from .stochastics import RandomStream

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_IO = 3

CLASSICAL_SUITE = tuple(f"F{i}" for i in range(1, 24))

# flag name -> AlgorithmConfig field
_ALGO_FLAGS = {
    "pop": "pop_size",
    "iters": "max_iters",
    "H": "memory_size",
    "stagnation": "stagnation_limit",
    "cr": "fixed_cr",
    "stagnation_rule": "stagnation_rule",
    "tail_restart": "tail_restart",
    "resort": "resort",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# --- argument parsing ---------------------------------------------------------

def _algo_options(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("algorithm settings (defaults: N=50, 2000 iterations, H=50, n_R=6; VLA: CR=0.25, n_R=10)")
    g.add_argument("--pop", type=int, help="population size N")
    g.add_argument("--iters", type=int, help="number of iterations (maxNumIter)")
    g.add_argument("--H", type=int, help="success-history memory size (AVLA)")
    g.add_argument("--stagnation", type=int, help="group-reflection period n_R")
    g.add_argument("--cr", type=float, help="fixed crossover rate (VLA only)")
    g.add_argument("--stagnation-rule", choices=["periodic", "reset"], help="how the n_R counter advances (default periodic)")
    g.add_argument("--tail-restart", choices=["greedy", "replace"], help="acceptance of random tail restarts (default greedy)")
    g.add_argument("--resort", choices=["incremental", "batch"], help="when the population is re-sorted (default incremental)")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="avla", description="Adaptive and various learning-based optimization on a classical benchmark suite.")
    p.add_argument("--version", action="version", version=f"avla {__version__}")
    sub = p.add_subparsers(dest="command", metavar="{list,run,experiment,sweep}", parser_class=_Parser)
    sub.required = True

    ls = sub.add_parser("list", help="print the benchmark catalog")
    ls.add_argument("--format", choices=["csv", "report"], default="report")

    r = sub.add_parser("run", help="one seeded optimization run")
    r.add_argument("--problem", required=True, help="benchmark id, e.g. F9")
    r.add_argument("--algo", choices=["avla", "vla"], default="avla")
    r.add_argument("--dim", type=int, help="dimension override for F1-F13")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--trace", metavar="PATH", help="write the per-iteration best-so-far to a CSV file")
    _algo_options(r)

    e = sub.add_parser("experiment", help="multi-run experiment over problems and algorithms")
    e.add_argument("--config", metavar="YAML", help="experiment manifest; flags override its values")
    e.add_argument("--problem", action="append", help="benchmark id, optionally ID:DIM; repeat or comma-separate (default F1-F23)")
    e.add_argument("--algo", action="append", help="avla and/or vla; repeat or comma-separate (default avla)")
    e.add_argument("--dim", type=int, help="dimension override applied to every scalable problem")
    e.add_argument("--runs", type=int, help="independent runs per cell (default 30)")
    e.add_argument("--seed", type=int, help="base seed (default 0)")
    e.add_argument("--jobs", type=int, help="worker processes (default 1)")
    e.add_argument("--out", metavar="PATH", help="output file (default stdout)")
    e.add_argument("--format", choices=["csv", "report"], help="csv or report (default csv with --out, report on stdout)")
    _algo_options(e)

    s = sub.add_parser("sweep", help="vary one parameter, one experiment per value")
    s.add_argument("--problem", required=True, help="benchmark id, optionally ID:DIM")
    s.add_argument("--algo", choices=["avla", "vla"], default="avla")
    s.add_argument("--dim", type=int, help="dimension override for F1-F13")
    s.add_argument("--param", required=True, help="one of " + ", ".join(SWEEP_PARAMS))
    s.add_argument("--values", required=True, help="comma-separated integers, e.g. 5,10,20")
    s.add_argument("--runs", type=int, default=30)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--out", metavar="PATH")
    s.add_argument("--format", choices=["csv", "report"])
    _algo_options(s)
    return p


# --- helpers --------------------------------------------------------------------

def make_config(algo: str, overrides: dict) -> AlgorithmConfig:
    """AlgorithmConfig for ``avla``/``vla`` with flag-style overrides applied."""
    algo = str(algo).lower()
    if algo not in ("avla", "vla"):
        raise UsageError(f"unknown algorithm {algo!r}; expected avla or vla")
    changes = {}
    for flag, value in overrides.items():
        if value is None:
            continue
        if flag not in _ALGO_FLAGS:
            raise UsageError(f"unknown algorithm setting {flag!r}")
        if flag == "cr" and algo != "vla":
            raise ConfigError("--cr applies only to vla; avla adapts CR from its memory")
        changes[_ALGO_FLAGS[flag]] = value
    cfg = AlgorithmConfig.vla(**changes) if algo == "vla" else AlgorithmConfig.avla(**changes)
    return cfg.validate()


def _algo_overrides(args) -> dict:
    return {flag: getattr(args, flag, None) for flag in _ALGO_FLAGS}


def _problem_ref(token: str, dim: Optional[int] = None, strict: bool = False) -> ProblemRef:
    """Parse ``ID`` or ``ID:DIM``.  ``dim`` fills in a missing dimension; unless
    ``strict`` it is skipped for fixed-dimension problems."""
    try:
        ref = ProblemRef.parse(token)
    except ValueError:
        raise UsageError(f"bad problem {token!r}; use ID or ID:DIM") from None
    if ref.id not in benchmarks.ids():
        raise UsageError(f"unknown problem {token!r}; expected one of F1..F29")
    if dim is not None and ref.dim is None and (strict or ref.id in benchmarks.SCALABLE):
        ref = ProblemRef(ref.id, dim)
    benchmarks.get(ref.id, ref.dim)  # surfaces dimension errors early
    return ref


def _split(items) -> list[str]:
    out = []
    for item in items or []:
        out.extend(tok.strip() for tok in str(item).split(",") if tok.strip())
    return out


def _parse_values(text: str) -> list[int]:
    vals = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        try:
            vals.append(int(tok))
        except ValueError:
            raise UsageError(f"bad sweep value {tok!r}; expected integers") from None
    if not vals:
        raise UsageError("--values needs at least one integer")
    return vals


def _config_provenance(label: str, cfg: AlgorithmConfig) -> str:
    fields = ", ".join(f"{f.name}={getattr(cfg, f.name)}" for f in dataclasses.fields(cfg) if f.name != "seed")
    return f"{label}: {fields}"


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    path = Path(out)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc


def _fmt(v: float) -> str:
    return repr(float(v))


# --- commands -------------------------------------------------------------------

def cmd_list(args) -> int:
    rows = benchmarks.catalog()
    cols = ["id", "name", "family", "dim", "range", "f_min"]
    if args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([r[c] for c in cols])
        return EXIT_OK
    table = [cols] + [[str(r[c]) for c in cols] for r in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(cols))]
    for row in table:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return EXIT_OK


def cmd_run(args) -> int:
    ref = _problem_ref(args.problem, args.dim, strict=True)
    if args.seed < 0:
        raise ConfigError(f"seed must be unsigned, got {args.seed}")
    cfg = make_config(args.algo, _algo_overrides(args))
    entry = benchmarks.get(ref.id, ref.dim, noise_stream=RandomStream(args.seed).fork("noise"))
    result = run(entry.problem, cfg, seed=args.seed)
    print(f"# problem: {entry.id} ({entry.name}), dim {entry.problem.dim}")
    print(f"# seed: {args.seed}")
    print("# " + _config_provenance(args.algo.upper(), cfg))
    print(f"best_fitness: {_fmt(result.best_fitness)}")
    print("best_position: " + " ".join(_fmt(v) for v in result.best_position))
    print(f"evaluations: {result.eval_count}")
    if args.trace:
        lines = ["iteration,best"] + [f"{t},{v:.17g}" for t, v in enumerate(result.trace)]
        _emit("\n".join(lines) + "\n", args.trace)
    return EXIT_OK


def _load_manifest(path: str) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        data = yaml.safe_load(text) or {}
    except yaml.YAMLError as exc:
        raise ConfigError(f"{path}: not valid YAML ({exc})") from exc
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: expected a mapping at the top level")
    known = {"problems", "algorithms", "runs", "base_seed", "dim", "jobs", "out", "format"}
    unknown = set(data) - known
    if unknown:
        raise ConfigError(f"{path}: unknown keys {sorted(unknown)}; allowed {sorted(known)}")
    return data


def _manifest_algorithms(entries, flag_overrides: dict) -> list[tuple[str, AlgorithmConfig]]:
    algos = []
    for item in entries:
        if isinstance(item, str):
            item = {"algo": item}
        if not isinstance(item, dict) or "algo" not in item:
            raise ConfigError(f"algorithm entry {item!r} needs an 'algo' key")
        item = dict(item)
        algo = str(item.pop("algo")).lower()
        label = str(item.pop("label", algo.upper()))
        settings = dict(item)
        for k, v in flag_overrides.items():
            # a --cr flag targets the vla entries of a mixed experiment
            if v is not None and not (k == "cr" and algo != "vla"):
                settings[k] = v
        try:
            algos.append((label, make_config(algo, settings)))
        except ConfigError as exc:
            raise ConfigError(f"algorithm {label!r}: {exc}") from exc
    return algos


def cmd_experiment(args) -> int:
    manifest = _load_manifest(args.config) if args.config else {}
    dim = args.dim if args.dim is not None else manifest.get("dim")

    if args.problem:
        problems = [_problem_ref(tok, dim) for tok in _split(args.problem)]
    else:
        raw = manifest.get("problems", list(CLASSICAL_SUITE))
        problems = []
        for item in raw:
            if isinstance(item, dict):
                tok = f"{item['id']}:{item['dim']}" if item.get("dim") else str(item["id"])
            else:
                tok = str(item)
            problems.append(_problem_ref(tok, dim))

    overrides = _algo_overrides(args)
    if args.algo:
        algos = _manifest_algorithms(_split(args.algo), overrides)
    else:
        algos = _manifest_algorithms(manifest.get("algorithms", ["avla"]), overrides)

    runs = args.runs if args.runs is not None else int(manifest.get("runs", 30))
    base_seed = args.seed if args.seed is not None else int(manifest.get("base_seed", 0))
    jobs = args.jobs if args.jobs is not None else int(manifest.get("jobs", 1))
    out = args.out if args.out is not None else manifest.get("out")
    fmt = args.format or manifest.get("format") or ("csv" if out else "report")
    if fmt not in ("csv", "report"):
        raise ConfigError(f"format must be csv or report, got {fmt!r}")
    if jobs < 1:
        raise ConfigError(f"jobs must be >= 1, got {jobs}")

    plan = ExperimentPlan(problems, algos, runs=runs, base_seed=base_seed)
    stats = run_experiment(plan, jobs=jobs)
    provenance = {
        "avla": __version__,
        "runs": runs,
        "base_seed": base_seed,
        "problems": " ".join(p.key for p in plan.problems),
    }
    for label, cfg in algos:
        provenance[f"algorithm {label}"] = _config_provenance(label, cfg).split(": ", 1)[1]
    if out:
        persist(stats, out, format=fmt, provenance=provenance)
    else:
        _emit(stats_csv(stats, provenance) if fmt == "csv" else stats_report(stats, provenance), None)
    return EXIT_OK


def cmd_sweep(args) -> int:
    ref = _problem_ref(args.problem, args.dim, strict=True)
    values = _parse_values(args.values)
    cfg = make_config(args.algo, _algo_overrides(args))
    if args.runs < 1:
        raise ConfigError(f"runs must be >= 1, got {args.runs}")
    if args.jobs < 1:
        raise ConfigError(f"jobs must be >= 1, got {args.jobs}")
    try:
        table = sweep(ref, cfg, args.param, values, runs=args.runs, base_seed=args.seed, jobs=args.jobs, label=args.algo.upper())
    except ConfigError as exc:
        if "cannot sweep" in str(exc):
            raise UsageError(str(exc)) from None
        raise
    provenance = {
        "avla": __version__,
        "problem": ref.key,
        "param": table.param,
        "runs": args.runs,
        "base_seed": args.seed,
        f"algorithm {args.algo.upper()}": _config_provenance(args.algo.upper(), cfg).split(": ", 1)[1],
    }
    fmt = args.format or ("csv" if args.out else "report")
    if args.out:
        persist(table, args.out, format=fmt, provenance=provenance)
    else:
        _emit(sweep_csv(table, provenance) if fmt == "csv" else sweep_report(table, provenance), None)
    return EXIT_OK


_COMMANDS = {"list": cmd_list, "run": cmd_run, "experiment": cmd_experiment, "sweep": cmd_sweep}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except KeyError as exc:
        print(f"usage error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConfigError, ExperimentError) as exc:
        print(f"invalid configuration: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
