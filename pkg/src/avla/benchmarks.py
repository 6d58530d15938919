"""The 29 classical test functions F1-F29.

F1-F7 unimodal, F8-F13 multimodal (both scalable), F14-F23 fixed-dimension
multimodal, F24-F29 composite.  Formulas are the canonical literature forms
of the named functions; a few printed variants of these functions carry
well-known misprints, and the canonical forms are the ones whose minima
match the catalogued ``f_min`` values:

* F6 is the step function ``sum(floor(x + 0.5)**2)``.
* F10 (Ackley) averages over the dimension in both exponentials.
* F11 (Griewank) uses ``cos(x_i / sqrt(i))``.
* F12 uses the ``pi / n`` prefactor, F13 couples ``x_i`` with ``x_{i+1}``.
* F14 (Shekel's foxholes) uses the sixth power, F15 (Kowalik) the
  ``x1 (b^2 + b x2) / (b^2 + b x3 + x4)`` model, F17 is Branin's
  ``5.1 / (4 pi^2)`` / ``5 / pi`` / ``1 / (8 pi)`` form, F19/F20 sum four
  Hartmann terms.

``known_min`` holds the minimum to full double precision where an exact or
numerically polished minimizer is stored; ``f_min`` holds the catalogue
value as printed (F8: ``-418.9829 * n``).

Composite functions follow the standard composition framework: ten
components evaluated at ``(x - o_k) / lambda_k``, each rescaled to a common
magnitude ``C * f_k(z) / |f_k(5 / lambda_k)|`` with ``C = 2000``, combined
with Gaussian distance weights of spread ``sigma_k`` (non-maximal weights
damped by ``1 - w_max**10``, then normalized) and biases ``0, 100, ..., 900``.
Optimum locations ``o_k`` are drawn uniformly in ``[-5, 5]^10`` from a fixed
stream (seed :data:`COMPOSITE_SEED`, forked by function id), so every build
generates the same landscape.  ``o_1`` is the global minimizer with value 0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .core import BoundsBox, ConfigError, ObjectiveProblem
from .stochastics import RandomStream

__all__ = [
    "UNIMODAL",
    "MULTIMODAL",
    "FIXED_DIMENSION",
    "COMPOSITE",
    "COMPOSITE_SEED",
    "BenchmarkEntry",
    "CompositeSpec",
    "ids",
    "normalize_id",
    "get",
    "evaluate",
    "catalog",
    "composite_spec",
    "composite_weights",
    "evaluate_composite",
]

UNIMODAL = "unimodal"
MULTIMODAL = "multimodal"
FIXED_DIMENSION = "fixed-dimension"
COMPOSITE = "composite"

COMPOSITE_SEED = 20240229
COMPOSITE_DIM = 10
COMPOSITE_C = 2000.0

TWO_PI = 2.0 * math.pi


# --- scalable functions ----------------------------------------------------

def sphere(x):
    return float(np.dot(x, x))


def schwefel_222(x):
    a = np.abs(x)
    return float(a.sum() + np.prod(a))


def schwefel_12(x):
    c = np.cumsum(x)
    return float(np.dot(c, c))


def schwefel_221(x):
    return float(np.max(np.abs(x)))


def rosenbrock(x):
    head = x[:-1]
    return float(np.sum(100.0 * (x[1:] - head * head) ** 2 + (head - 1.0) ** 2))


def step(x):
    y = np.floor(x + 0.5)
    return float(np.dot(y, y))


def quartic_weights(dim: int) -> np.ndarray:
    return np.arange(1, dim + 1, dtype=float)


def make_quartic_noise(stream: RandomStream) -> Callable[[np.ndarray], float]:
    """F7 with its additive uniform noise drawn from ``stream``."""

    def quartic_noise(x):
        x2 = x * x
        return float(np.dot(quartic_weights(x.size), x2 * x2)) + stream.random()

    return quartic_noise


def quartic(x):
    """F7 without the noise term."""
    x2 = x * x
    return float(np.dot(quartic_weights(x.size), x2 * x2))


def schwefel_sine(x):
    return float(-np.dot(x, np.sin(np.sqrt(np.abs(x)))))


def rastrigin(x):
    return float(np.sum(x * x - 10.0 * np.cos(TWO_PI * x)) + 10.0 * x.size)


def ackley(x):
    n = x.size
    return float(
        -20.0 * math.exp(-0.2 * math.sqrt(np.dot(x, x) / n))
        - math.exp(np.sum(np.cos(TWO_PI * x)) / n)
        + 20.0
        + math.e
    )


def griewank(x):
    i = np.sqrt(np.arange(1, x.size + 1, dtype=float))
    return float(np.dot(x, x) / 4000.0 - np.prod(np.cos(x / i)) + 1.0)


def _u(x, a, k, m):
    return np.where(x > a, k * (x - a) ** m, np.where(x < -a, k * (-x - a) ** m, 0.0))


def penalized_1(x):
    n = x.size
    y = 1.0 + (x + 1.0) / 4.0
    body = (
        10.0 * math.sin(math.pi * y[0]) ** 2
        + np.sum((y[:-1] - 1.0) ** 2 * (1.0 + 10.0 * np.sin(math.pi * y[1:]) ** 2))
        + (y[-1] - 1.0) ** 2
    )
    return float(math.pi / n * body + np.sum(_u(x, 10.0, 100.0, 4)))


def penalized_2(x):
    body = (
        math.sin(3.0 * math.pi * x[0]) ** 2
        + np.sum((x[:-1] - 1.0) ** 2 * (1.0 + np.sin(3.0 * math.pi * x[1:]) ** 2))
        + (x[-1] - 1.0) ** 2 * (1.0 + math.sin(TWO_PI * x[-1]) ** 2)
    )
    return float(0.1 * body + np.sum(_u(x, 5.0, 100.0, 4)))


# --- fixed-dimension functions ---------------------------------------------

_FOXHOLE_GRID = (-32.0, -16.0, 0.0, 16.0, 32.0)
_FOXHOLES = np.array(
    [list(_FOXHOLE_GRID) * 5, [v for v in _FOXHOLE_GRID for _ in range(5)]]
)
_FOXHOLE_J = np.arange(1, 26, dtype=float)


def shekel_foxholes(x):
    d = (x[:, None] - _FOXHOLES) ** 6
    return float(1.0 / (1.0 / 500.0 + np.sum(1.0 / (_FOXHOLE_J + d.sum(axis=0)))))


_KOWALIK_A = np.array(
    [0.1957, 0.1947, 0.1735, 0.16, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323, 0.0235, 0.0246]
)
_KOWALIK_B = 1.0 / np.array([0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0])


def kowalik(x):
    b = _KOWALIK_B
    with np.errstate(divide="ignore", invalid="ignore"):
        model = x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3])
        val = float(np.sum((_KOWALIK_A - model) ** 2))
    # the model has poles inside the box; treat them as infinitely bad
    return val if math.isfinite(val) else math.inf


def six_hump_camel(x):
    x1, x2 = x[0], x[1]
    return float(
        4.0 * x1**2 - 2.1 * x1**4 + x1**6 / 3.0 + x1 * x2 - 4.0 * x2**2 + 4.0 * x2**4
    )


def branin(x):
    x1, x2 = x[0], x[1]
    return float(
        (x2 - 5.1 / (4.0 * math.pi**2) * x1**2 + 5.0 / math.pi * x1 - 6.0) ** 2
        + 10.0 * (1.0 - 1.0 / (8.0 * math.pi)) * math.cos(x1)
        + 10.0
    )


def goldstein_price(x):
    x1, x2 = x[0], x[1]
    a = 1.0 + (x1 + x2 + 1.0) ** 2 * (
        19.0 - 14.0 * x1 + 3.0 * x1**2 - 14.0 * x2 + 6.0 * x1 * x2 + 3.0 * x2**2
    )
    b = 30.0 + (2.0 * x1 - 3.0 * x2) ** 2 * (
        18.0 - 32.0 * x1 + 12.0 * x1**2 + 48.0 * x2 - 36.0 * x1 * x2 + 27.0 * x2**2
    )
    return float(a * b)


_HARTMANN_C = np.array([1.0, 1.2, 3.0, 3.2])
_HARTMANN3_A = np.array([[3.0, 10, 30], [0.1, 10, 35], [3.0, 10, 30], [0.1, 10, 35]])
_HARTMANN3_P = np.array(
    [
        [0.3689, 0.117, 0.2673],
        [0.4699, 0.4387, 0.747],
        [0.1091, 0.8732, 0.5547],
        [0.03815, 0.5743, 0.8828],
    ]
)
_HARTMANN6_A = np.array(
    [
        [10.0, 3, 17, 3.5, 1.7, 8],
        [0.05, 10, 17, 0.1, 8, 14],
        [3.0, 3.5, 1.7, 10, 17, 8],
        [17.0, 8, 0.05, 10, 0.1, 14],
    ]
)
_HARTMANN6_P = np.array(
    [
        [0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886],
        [0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991],
        [0.2348, 0.1415, 0.3522, 0.2883, 0.3047, 0.6650],
        [0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381],
    ]
)


def hartmann3(x):
    return float(-np.dot(_HARTMANN_C, np.exp(-np.sum(_HARTMANN3_A * (x - _HARTMANN3_P) ** 2, axis=1))))


def hartmann6(x):
    return float(-np.dot(_HARTMANN_C, np.exp(-np.sum(_HARTMANN6_A * (x - _HARTMANN6_P) ** 2, axis=1))))


_SHEKEL_A = np.array(
    [
        [4.0, 4, 4, 4],
        [1, 1, 1, 1],
        [8, 8, 8, 8],
        [6, 6, 6, 6],
        [3, 7, 3, 7],
        [2, 9, 2, 9],
        [5, 5, 3, 3],
        [8, 1, 8, 1],
        [6, 2, 6, 2],
        [7, 3.6, 7, 3.6],
    ]
)
_SHEKEL_C = np.array([0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5])


def make_shekel(m: int) -> Callable[[np.ndarray], float]:
    a, c = _SHEKEL_A[:m], _SHEKEL_C[:m]

    def shekel(x):
        return float(-np.sum(1.0 / (np.sum((x - a) ** 2, axis=1) + c)))

    shekel.__name__ = f"shekel{m}"
    return shekel


# --- composite functions ---------------------------------------------------

WEIERSTRASS_A = 0.5
WEIERSTRASS_B = 3.0
WEIERSTRASS_KMAX = 20
_W_AK = WEIERSTRASS_A ** np.arange(WEIERSTRASS_KMAX + 1)
_W_BK = WEIERSTRASS_B ** np.arange(WEIERSTRASS_KMAX + 1)
_W_OFFSET = float(np.dot(_W_AK, np.cos(math.pi * _W_BK)))


def weierstrass(x):
    terms = _W_AK[:, None] * np.cos(TWO_PI * _W_BK[:, None] * (x + 0.5))
    return float(terms.sum() - x.size * _W_OFFSET)


_COMPONENTS = {
    "sphere": sphere,
    "griewank": griewank,
    "ackley": ackley,
    "rastrigin": rastrigin,
    "weierstrass": weierstrass,
}


@dataclass(frozen=True)
class CompositeSpec:
    components: tuple[str, ...]
    sigmas: np.ndarray
    lambdas: np.ndarray
    shifts: np.ndarray
    biases: np.ndarray
    scales: np.ndarray  # |f_k(5 / lambda_k)| per component

    @property
    def dim(self) -> int:
        return self.shifts.shape[1]


_CF_MIX_4 = ("ackley",) * 2 + ("rastrigin",) * 2 + ("weierstrass",) * 2 + ("griewank",) * 2 + ("sphere",) * 2
_CF_MIX_5 = ("rastrigin",) * 2 + ("weierstrass",) * 2 + ("griewank",) * 2 + ("ackley",) * 2 + ("sphere",) * 2
_CF5_LAMBDAS = [1 / 5, 1 / 5, 5 / 0.5, 5 / 0.5, 5 / 100, 5 / 100, 5 / 32, 5 / 32, 5 / 100, 5 / 100]
_CF6_SIGMAS = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0]

_COMPOSITE_TABLE = {
    "F24": (("sphere",) * 10, [1.0] * 10, [5 / 100] * 10),
    "F25": (("griewank",) * 10, [1.0] * 10, [5 / 100] * 10),
    "F26": (("griewank",) * 10, [1.0] * 10, [1.0] * 10),
    "F27": (_CF_MIX_4, [1.0] * 10, [5 / 32, 5 / 32, 1, 1, 5 / 0.5, 5 / 0.5, 5 / 100, 5 / 100, 5 / 100, 5 / 100]),
    "F28": (_CF_MIX_5, [1.0] * 10, _CF5_LAMBDAS),
    "F29": (_CF_MIX_5, _CF6_SIGMAS, [s * l for s, l in zip(_CF6_SIGMAS, _CF5_LAMBDAS)]),
}

_composite_cache: dict[str, CompositeSpec] = {}


def composite_spec(fid: str) -> CompositeSpec:
    """Frozen composition data for F24..F29."""
    fid = normalize_id(fid)
    if fid not in _COMPOSITE_TABLE:
        raise KeyError(f"{fid} is not a composite function (F24..F29)")
    if fid not in _composite_cache:
        names, sigmas, lambdas = _COMPOSITE_TABLE[fid]
        stream = RandomStream(COMPOSITE_SEED).fork(fid)
        shifts = np.array(
            [-5.0 + 10.0 * stream.random_vector(COMPOSITE_DIM) for _ in names]
        )
        lambdas = np.asarray(lambdas, dtype=float)
        probe = np.full(COMPOSITE_DIM, 5.0)
        scales = np.array(
            [abs(_COMPONENTS[n](probe / lam)) for n, lam in zip(names, lambdas)]
        )
        _composite_cache[fid] = CompositeSpec(
            components=tuple(names),
            sigmas=np.asarray(sigmas, dtype=float),
            lambdas=lambdas,
            shifts=shifts,
            biases=100.0 * np.arange(len(names), dtype=float),
            scales=scales,
        )
    return _composite_cache[fid]


def composite_weights(spec: CompositeSpec, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    d2 = np.sum((x - spec.shifts) ** 2, axis=1)
    w = np.exp(-d2 / (2.0 * spec.dim * spec.sigmas**2))
    wmax = w.max()
    w = np.where(w == wmax, w, w * (1.0 - wmax**10))
    total = w.sum()
    if total == 0.0:
        return np.full(w.size, 1.0 / w.size)
    return w / total


def evaluate_composite(spec: CompositeSpec, x) -> float:
    x = np.asarray(x, dtype=float)
    w = composite_weights(spec, x)
    vals = np.empty(len(spec.components))
    for k, name in enumerate(spec.components):
        z = (x - spec.shifts[k]) / spec.lambdas[k]
        vals[k] = COMPOSITE_C * _COMPONENTS[name](z) / spec.scales[k]
    return float(np.dot(w, vals + spec.biases))


def _composite_objective(fid: str) -> Callable[[np.ndarray], float]:
    spec = composite_spec(fid)

    def composite(x):
        return evaluate_composite(spec, x)

    composite.__name__ = f"composite_{fid}"
    return composite


# --- catalogue ---------------------------------------------------------------

@dataclass(frozen=True)
class _Def:
    family: str
    name: str
    dim: int
    low: float
    high: float
    f_min: float
    f_min_text: str
    objective: Optional[Callable]
    known_min: Optional[Callable[[int], float]] = None
    argmin: Optional[Callable[[int], np.ndarray]] = None


def _const(v):
    return lambda n: v


def _fill(v):
    return lambda n: np.full(n, float(v))


def _fixed(point):
    arr = np.array(point, dtype=float)
    return lambda n: arr.copy()


_SCHWEFEL_ARG = 420.9687463586784
_SCHWEFEL_MIN_PER_DIM = -418.9828872724338

_DEFS: dict[str, _Def] = {
    "F1": _Def(UNIMODAL, "sphere", 30, -100, 100, 0.0, "0", sphere, _const(0.0), _fill(0)),
    "F2": _Def(UNIMODAL, "schwefel_2.22", 30, -10, 10, 0.0, "0", schwefel_222, _const(0.0), _fill(0)),
    "F3": _Def(UNIMODAL, "schwefel_1.2", 30, -100, 100, 0.0, "0", schwefel_12, _const(0.0), _fill(0)),
    "F4": _Def(UNIMODAL, "schwefel_2.21", 30, -100, 100, 0.0, "0", schwefel_221, _const(0.0), _fill(0)),
    "F5": _Def(UNIMODAL, "rosenbrock", 30, -30, 30, 0.0, "0", rosenbrock, _const(0.0), _fill(1)),
    "F6": _Def(UNIMODAL, "step", 30, -100, 100, 0.0, "0", step, _const(0.0), _fill(0)),
    "F7": _Def(UNIMODAL, "quartic_noise", 30, -1.28, 1.28, 0.0, "0", None),
    "F8": _Def(
        MULTIMODAL, "schwefel_sine", 30, -500, 500, -418.9829, "-418.9829n", schwefel_sine,
        lambda n: _SCHWEFEL_MIN_PER_DIM * n, _fill(_SCHWEFEL_ARG),
    ),
    "F9": _Def(MULTIMODAL, "rastrigin", 30, -5.12, 5.12, 0.0, "0", rastrigin, _const(0.0), _fill(0)),
    "F10": _Def(MULTIMODAL, "ackley", 30, -32, 32, 0.0, "0", ackley, _const(0.0), _fill(0)),
    "F11": _Def(MULTIMODAL, "griewank", 30, -512, 512, 0.0, "0", griewank, _const(0.0), _fill(0)),
    "F12": _Def(MULTIMODAL, "penalized_1", 30, -50, 50, 0.0, "0", penalized_1, _const(0.0), _fill(-1)),
    "F13": _Def(MULTIMODAL, "penalized_2", 30, -50, 50, 0.0, "0", penalized_2, _const(0.0), _fill(1)),
    "F14": _Def(
        FIXED_DIMENSION, "shekel_foxholes", 2, -65.536, 65.536, 1.0, "1", shekel_foxholes,
        _const(0.9980038377944498), _fixed([-31.97833541083818, -31.978337883932586]),
    ),
    "F15": _Def(
        FIXED_DIMENSION, "kowalik", 4, -5, 5, 0.0003075, "0.0003075", kowalik,
        _const(0.0003074859878056051),
        _fixed([0.19283345304274813, 0.19083624027597035, 0.12311729907598003, 0.13576599033984466]),
    ),
    "F16": _Def(
        FIXED_DIMENSION, "six_hump_camel", 2, -5, 5, -1.0316285, "-1.0316285", six_hump_camel,
        _const(-1.0316284534898776), _fixed([0.08984201652927098, -0.7126564013807202]),
    ),
    "F17": _Def(
        FIXED_DIMENSION, "branin", 2, -5, 5, 0.398, "0.398", branin,
        _const(0.39788735772973816), _fixed([math.pi, 2.275]),
    ),
    "F18": _Def(
        FIXED_DIMENSION, "goldstein_price", 2, -2, 2, 3.0, "3", goldstein_price,
        _const(3.0), _fixed([0.0, -1.0]),
    ),
    "F19": _Def(
        FIXED_DIMENSION, "hartmann3", 3, 0, 1, -3.86, "-3.86", hartmann3,
        _const(-3.8627821478207554),
        _fixed([0.11461432790029832, 0.5556488504420141, 0.8525469546889314]),
    ),
    "F20": _Def(
        FIXED_DIMENSION, "hartmann6", 6, 0, 1, -3.32, "-3.32", hartmann6,
        _const(-3.3219951715842426),
        _fixed([
            0.20170762020691552, 0.14678094593623833, 0.4767448525021579,
            0.27534239180590087, 0.31165187358887503, 0.6572751652318374,
        ]),
    ),
    "F21": _Def(
        FIXED_DIMENSION, "shekel5", 4, 0, 10, -10.1532, "-10.1532", make_shekel(5),
        _const(-10.153199679058229),
        _fixed([4.000037152376549, 4.000133278657566, 4.000037151057555, 4.000133277090425]),
    ),
    "F22": _Def(
        FIXED_DIMENSION, "shekel7", 4, 0, 10, -10.4028, "-10.4028", make_shekel(7),
        _const(-10.402940566818664),
        _fixed([4.000572916903747, 4.000689366493592, 3.999489708812103, 3.9996061590298426]),
    ),
    "F23": _Def(
        FIXED_DIMENSION, "shekel10", 4, 0, 10, -10.5363, "-10.5363", make_shekel(10),
        _const(-10.536409816692045),
        _fixed([4.000746530253313, 4.000592936779709, 3.9996633957714787, 3.9995097993299975]),
    ),
}
for _i, _fid in enumerate(("F24", "F25", "F26", "F27", "F28", "F29"), start=1):
    _DEFS[_fid] = _Def(COMPOSITE, f"CF{_i}", COMPOSITE_DIM, -5, 5, 0.0, "0", None, _const(0.0))

SCALABLE = tuple(f"F{i}" for i in range(1, 14))


@dataclass(frozen=True)
class BenchmarkEntry:
    id: str
    name: str
    family: str
    default_dim: int
    range: tuple[float, float]
    f_min: float
    f_min_text: str
    problem: ObjectiveProblem


def ids() -> list[str]:
    return list(_DEFS)


def normalize_id(fid) -> str:
    """Canonical id: "f7", "7" and "F7" all become "F7"."""
    s = str(fid).strip().upper()
    if s.isdigit():
        s = "F" + s
    return s


def get(fid, dim: Optional[int] = None, noise_stream: Optional[RandomStream] = None) -> BenchmarkEntry:
    """Benchmark entry for ``fid`` ("F1".."F29").

    ``dim`` overrides the catalogue dimension for the scalable F1-F13 (at
    least 2).  ``noise_stream`` feeds F7's noise term; without it a fresh
    stream seeded 0 is used, so build one per run for reproducible runs.
    """
    key = normalize_id(fid)
    if key not in _DEFS:
        raise KeyError(f"unknown benchmark {fid!r}; expected one of F1..F29")
    d = _DEFS[key]
    n = d.dim
    if dim is not None and dim != d.dim:
        if key not in SCALABLE:
            raise ConfigError(f"{key} has fixed dimension {d.dim}; cannot use {dim}")
        if dim < 2:
            raise ConfigError(f"{key} needs dimension >= 2, got {dim}")
        n = int(dim)

    if key == "F7":
        objective = make_quartic_noise(noise_stream or RandomStream(0))
    elif d.family == COMPOSITE:
        objective = _composite_objective(key)
    else:
        objective = d.objective

    known_min = d.known_min(n) if d.known_min else None
    argmin = d.argmin(n) if d.argmin else None
    if d.family == COMPOSITE:
        argmin = composite_spec(key).shifts[0].copy()
    f_min = d.f_min * n if key == "F8" else d.f_min

    problem = ObjectiveProblem(
        name=key,
        dim=n,
        bounds=BoundsBox.uniform(d.low, d.high, n),
        objective=objective,
        known_min=known_min,
        known_argmin=argmin,
    )
    return BenchmarkEntry(
        id=key,
        name=d.name,
        family=d.family,
        default_dim=d.dim,
        range=(float(d.low), float(d.high)),
        f_min=f_min,
        f_min_text=d.f_min_text,
        problem=problem,
    )


def evaluate(fid, x: Sequence[float], noise_stream: Optional[RandomStream] = None) -> float:
    """Value of benchmark ``fid`` at ``x``; the dimension is taken from ``x``."""
    x = np.asarray(x, dtype=float).reshape(-1)
    key = normalize_id(fid)
    if key not in _DEFS:
        raise KeyError(f"unknown benchmark {fid!r}; expected one of F1..F29")
    d = _DEFS[key]
    if key in SCALABLE:
        if x.size < 2:
            raise ConfigError(f"{key} needs dimension >= 2, got {x.size}")
    elif x.size != d.dim:
        raise ConfigError(f"{key} expects a {d.dim}-vector, got length {x.size}")
    if key == "F7":
        return make_quartic_noise(noise_stream or RandomStream(0))(x)
    if d.family == COMPOSITE:
        return evaluate_composite(composite_spec(key), x)
    return d.objective(x)


def catalog() -> list[dict]:
    """One row per benchmark: id, name, family, dim, range, f_min."""
    rows = []
    for key, d in _DEFS.items():
        rows.append(
            {
                "id": key,
                "name": d.name,
                "family": d.family,
                "dim": d.dim,
                "range": f"[{d.low:g},{d.high:g}]^n",
                "f_min": d.f_min_text,
            }
        )
    return rows
