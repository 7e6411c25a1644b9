"""Benchmark cost functions over permutations.

Each landscape bundles a scalar cost, a vectorized batch cost, and (when
known) the explicit set of optimal permutations. Instances are immutable
and safe to share; costs are pure functions of the permutation.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np

from . import batch as _batch
from . import perms
from .distances import MEASURES, PSEUDO_METRIC, get_measure

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class Landscape:
    name: str
    n: int
    cost: Callable = field(repr=False)
    cost_batch: Callable = field(repr=False)
    optima: np.ndarray | None = field(default=None, repr=False)
    config: dict = field(default_factory=dict)

    def describe(self) -> str:
        """Replayable plain-text form of the construction parameters."""
        parts = [f"name={self.name}", f"n={self.n}"]
        parts += [f"{k}={v}" for k, v in sorted(self.config.items())]
        return ";".join(parts)


def parse_config(text: str) -> dict:
    """Inverse of Landscape.describe for replaying an experiment."""
    out = {}
    for item in text.split(";"):
        k, v = item.split("=", 1)
        out[k] = v
    return out


def _circle_points(n_cities: int) -> np.ndarray:
    ang = 2.0 * np.pi * np.arange(n_cities) / n_cities
    return np.stack([np.cos(ang), np.sin(ang)], axis=1)


def _rotations(n: int) -> np.ndarray:
    ident = np.arange(n, dtype=np.int64)
    return np.array([np.roll(ident, -r) for r in range(n)])


def _matrix_landscape(name, D, optima, config) -> Landscape:
    n = D.shape[0]

    def cost(p):
        a = np.asarray(p)
        return float(D[a[:-1], a[1:]].sum() + D[a[-1], a[0]])

    def cost_batch(P):
        return D[P[:, :-1], P[:, 1:]].sum(axis=1) + D[P[:, -1], P[:, 0]]

    return Landscape(name=name, n=n, cost=cost, cost_batch=cost_batch,
                     optima=optima, config=config)


def circle_tsp(n_cities: int = 20) -> Landscape:
    """Tour length over cities spaced equally on a unit circle.

    The shortest tours walk the circle in either direction; all 40
    (start city x direction) permutations of that tour are optimal.
    """
    if n_cities < 3:
        raise ValueError("need at least 3 cities")
    pts = _circle_points(n_cities)
    D = np.linalg.norm(pts[:, None, :] - pts[None, :, :], axis=2)
    rots = _rotations(n_cities)
    optima = np.concatenate([rots, rots[:, ::-1]], axis=0)
    return _matrix_landscape("circle-tsp", D, optima,
                             {"n_cities": n_cities})


def circle_atsp(n_cities: int = 20) -> Landscape:
    """Asymmetric variant: forward edges cost Euclidean, backward edges 2.0.

    Every tour pays the flat backward cost at least once; only the
    ascending tour pays it exactly once over nearest-neighbor hops, so its
    n rotations are the optima.
    """
    if n_cities < 3:
        raise ValueError("need at least 3 cities")
    pts = _circle_points(n_cities)
    D = np.linalg.norm(pts[:, None, :] - pts[None, :, :], axis=2)
    i, j = np.meshgrid(np.arange(n_cities), np.arange(n_cities), indexing="ij")
    D = np.where(i < j, D, 2.0)
    np.fill_diagonal(D, 0.0)
    return _matrix_landscape("circle-atsp", D, _rotations(n_cities),
                             {"n_cities": n_cities})


def zero_distance_class(measure_name: str, target: np.ndarray) -> np.ndarray:
    """All permutations at distance zero from the target under the measure.

    Singleton for metrics; rotations and/or reversals of the target for the
    pseudo-metrics.
    """
    t = np.asarray(target)
    n = t.size
    kind = get_measure(measure_name).kind
    if kind != PSEUDO_METRIC:
        return t[None, :]
    rots = np.array([np.roll(t, -r) for r in range(n)])
    if measure_name == "cyclic-rtype":
        return rots
    if measure_name == "acyclic-edge":
        return np.stack([t, t[::-1]])
    if measure_name == "cyclic-edge":
        return np.concatenate([rots, rots[:, ::-1]], axis=0)
    raise ValueError(f"unknown pseudo-metric {measure_name!r}")


def haystack(n: int, target, measure) -> Landscape:
    """Cost of a candidate is its distance to a fixed target permutation."""
    t = perms.require_permutation(target)
    if t.size != n:
        raise ValueError("target length must equal n")
    m = get_measure(measure if isinstance(measure, str) else measure.name)

    def cost(p):
        return float(m.evaluate(t, p))

    def cost_batch(P):
        return _batch.batch_distance(m.name, P, reference=t).astype(np.float64)

    return Landscape(name=f"haystack-{m.name}", n=n, cost=cost,
                     cost_batch=cost_batch,
                     optima=zero_distance_class(m.name, t),
                     config={"measure": m.name,
                             "target": ",".join(str(v) for v in t)})


def _alpha_factors(P: np.ndarray, noise_seed: int) -> np.ndarray:
    """Deterministic per-permutation factor in [1, 1.5) from a 64-bit mix."""
    h = np.full(P.shape[0], np.uint64(noise_seed & _MASK64))
    for i in range(P.shape[1]):
        col_salt = np.uint64((0x9E3779B97F4A7C15 * (i + 1)) & _MASK64)
        h = h ^ (P[:, i].astype(np.uint64) + col_salt)
        h = (h ^ (h >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
        h = (h ^ (h >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
        h = h ^ (h >> np.uint64(31))
    return 1.0 + 0.5 * (h >> np.uint64(11)).astype(np.float64) * 2.0 ** -53


def noisy_haystack(n: int, target, measure, noise_seed: int) -> Landscape:
    """Haystack with cost scaled by a fixed per-permutation noise factor.

    The factor is a pure function of (noise_seed, permutation), so repeated
    evaluation of the same candidate returns the same cost and the target
    stays uniquely optimal.
    """
    base = haystack(n, target, measure)
    mname = base.config["measure"]

    def cost(p):
        a = np.asarray(p)
        alpha = float(_alpha_factors(a[None, :], noise_seed)[0])
        return alpha * base.cost(a)

    def cost_batch(P):
        return _alpha_factors(P, noise_seed) * base.cost_batch(P)

    return Landscape(name=f"noisy-haystack-{mname}", n=n, cost=cost,
                     cost_batch=cost_batch, optima=base.optima,
                     config={**base.config, "noise_seed": noise_seed})


def random_matrix_tsp(n_cities: int, symmetric: bool,
                      rng: perms.RandomSource) -> Landscape:
    """Tour cost over a uniform-random distance matrix; optima unknown."""
    if n_cities < 3:
        raise ValueError("need at least 3 cities")
    D = rng.random((n_cities, n_cities))
    if symmetric:
        D = np.triu(D, 1)
        D = D + D.T
    np.fill_diagonal(D, 0.0)
    name = "random-tsp" if symmetric else "random-atsp"
    return _matrix_landscape(name, D, None, {"symmetric": symmetric})


# ---------------------------------------------------------------------------
# named landscapes for the experiment commands

FDC_LANDSCAPES = ("L1", "L2", "L3", "L4", "L5")
_NOISY = {"L3": "exact-match", "L4": "kendall-tau", "L5": "lee"}


def fdc_landscape(name: str, seed: int = 0) -> Landscape:
    """The five example landscapes: circle tours (n=20) and noisy haystacks (n=10)."""
    if name == "L1":
        return circle_tsp(20)
    if name == "L2":
        return circle_atsp(20)
    if name in _NOISY:
        n = 10
        rng = perms.RandomSource(perms.derive_seed(seed, "target", name))
        target = perms.random_permutation(n, rng)
        noise = perms.derive_seed(seed, "noise", name)
        return noisy_haystack(n, target, _NOISY[name], noise)
    raise ValueError(f"unknown landscape {name!r}; expected one of {FDC_LANDSCAPES}")


@dataclass(frozen=True)
class ProblemSpec:
    """Recipe for generating per-instance landscapes of a named problem."""
    name: str
    n: int = 100

    def build(self, instance_seed: int) -> Landscape:
        rng = perms.RandomSource(instance_seed)
        if self.name == "tsp":
            land = random_matrix_tsp(self.n, True, rng)
        elif self.name == "atsp":
            land = random_matrix_tsp(self.n, False, rng)
        elif self.name.startswith("haystack-"):
            measure = self.name[len("haystack-"):]
            target = perms.random_permutation(self.n, rng)
            land = haystack(self.n, target, measure)
        else:
            raise ValueError(f"unknown problem {self.name!r}")
        return replace(land, config={**land.config,
                                     "instance_seed": instance_seed})


def problem_spec(name: str, n: int = 100) -> ProblemSpec:
    if name not in ("tsp", "atsp"):
        if not name.startswith("haystack-"):
            raise ValueError(f"unknown problem {name!r}")
        measure = MEASURES.get(name[len("haystack-"):])
        if measure is None or measure.batch is None:
            raise ValueError(f"haystack problems need a batchable measure, got {name!r}")
    return ProblemSpec(name, n)
