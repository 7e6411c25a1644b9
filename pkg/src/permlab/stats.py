"""Correlation, PCA via Jacobi rotation, and fitness-distance correlation.

Distance datasets hold integer columns, so correlation sums are accumulated
exactly in integers and converted to floats only in the final ratio; results
are bit-identical regardless of batch partitioning or thread count.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import batch as _batch
from . import perms
from .distances import CapExceededError, get_measure

EXHAUSTIVE_CAP = 12
DEFAULT_BATCH = 131072


def pearson(x, y) -> float:
    """Sample Pearson correlation of two equal-length vectors."""
    xa = np.asarray(x, dtype=np.float64)
    ya = np.asarray(y, dtype=np.float64)
    if xa.size != ya.size:
        raise ValueError("length mismatch")
    if xa.size < 2:
        raise ValueError("need at least two observations")
    dx = xa - xa.mean()
    dy = ya - ya.mean()
    sxx = float(dx @ dx)
    syy = float(dy @ dy)
    if sxx == 0.0 or syy == 0.0:
        raise ValueError("correlation undefined for a constant vector")
    return float(dx @ dy) / math.sqrt(sxx * syy)


class CorrelationAccumulator:
    """Single-pass accumulator for a k-column correlation matrix.

    Integer input is accumulated exactly (int64 partials, arbitrary
    precision in the final ratios); float input falls back to float64
    sums. Accumulators merge associatively, so work may be partitioned
    into arbitrary batches.
    """

    def __init__(self, k: int):
        self.k = k
        self.count = 0
        self._s = np.zeros(k, dtype=np.int64)
        self._c = np.zeros((k, k), dtype=np.int64)
        self._sf = np.zeros(k, dtype=np.float64)
        self._cf = np.zeros((k, k), dtype=np.float64)
        self._exact = True

    def update(self, rows: np.ndarray):
        X = np.asarray(rows)
        if X.ndim != 2 or X.shape[1] != self.k:
            raise ValueError(f"expected (m, {self.k}) rows")
        if np.issubdtype(X.dtype, np.integer):
            Xi = X.astype(np.int64, copy=False)
            self._s += Xi.sum(axis=0)
            self._c += Xi.T @ Xi
        else:
            self._exact = False
            Xf = X.astype(np.float64, copy=False)
            self._sf += Xf.sum(axis=0)
            self._cf += Xf.T @ Xf
        self.count += X.shape[0]

    def merge(self, other: "CorrelationAccumulator"):
        self._s += other._s
        self._c += other._c
        self._sf += other._sf
        self._cf += other._cf
        self._exact = self._exact and other._exact
        self.count += other.count

    def correlation(self) -> np.ndarray:
        if self.count < 2:
            raise ValueError("need at least two observations")
        k, m = self.k, self.count
        R = np.eye(k)
        s = [int(v) for v in self._s]
        c = [[int(v) for v in row] for row in self._c]
        for i in range(k):
            for j in range(i):
                if self._exact:
                    num = m * c[i][j] - s[i] * s[j]
                    di = m * c[i][i] - s[i] * s[i]
                    dj = m * c[j][j] - s[j] * s[j]
                else:
                    num = m * (c[i][j] + self._cf[i, j]) \
                        - (s[i] + self._sf[i]) * (s[j] + self._sf[j])
                    di = m * (c[i][i] + self._cf[i, i]) - (s[i] + self._sf[i]) ** 2
                    dj = m * (c[j][j] + self._cf[j, j]) - (s[j] + self._sf[j]) ** 2
                if di <= 0 or dj <= 0:
                    raise ValueError(f"constant column {i if di <= 0 else j}")
                R[i, j] = R[j, i] = num / math.sqrt(di * dj)
        return R


@dataclass(frozen=True)
class DistanceDataset:
    """Rows of per-measure distances, one row per observed permutation."""
    measure_names: tuple
    rows: np.ndarray

    def __post_init__(self):
        if self.rows.ndim != 2 or self.rows.shape[1] != len(self.measure_names):
            raise ValueError("rows must be (m, k) with one column per measure")
        if self.rows.shape[0] < 2:
            raise ValueError("need at least two rows")


def _distance_batches(n, measures, mode, samples, rng, reference, batch_size):
    """Yield (m, k) distance blocks for the requested enumeration/sampling."""
    if mode == "exhaustive":
        for P in _batch.iter_permutation_batches(n, batch_size):
            yield _batch.distance_block(P, measures, reference)
    elif mode == "sampled":
        done = 0
        while done < samples:
            m = min(batch_size, samples - done)
            P = _batch.random_permutation_batch(n, m, rng)
            yield _batch.distance_block(P, measures, reference)
            done += m
    else:
        raise ValueError(f"unknown mode {mode!r}")


def build_dataset(n: int, measures=None, *, mode: str = "exhaustive",
                  samples: int | None = None, rng: perms.RandomSource | None = None,
                  reference=None, exhaustive_cap: int = EXHAUSTIVE_CAP,
                  batch_size: int = DEFAULT_BATCH) -> DistanceDataset:
    """Distances from every enumerated/sampled permutation to a reference.

    Exhaustive mode enumerates all n! permutations in lexicographic order
    (n! rows of memory, capped); sampled mode draws uniformly with the
    given source. The reference defaults to the identity.
    """
    measures = tuple(measures or _batch.PCA_MEASURES)
    for name in measures:
        if get_measure(name).batch is None:
            raise ValueError(f"measure {name!r} has no batch kernel")
    if mode == "exhaustive":
        if n > exhaustive_cap:
            raise CapExceededError(f"exhaustive n={n} exceeds cap {exhaustive_cap}")
    elif mode == "sampled":
        if samples is None or rng is None:
            raise ValueError("sampled mode needs samples and rng")
    blocks = list(_distance_batches(n, measures, mode, samples, rng,
                                    reference, batch_size))
    return DistanceDataset(measures, np.concatenate(blocks, axis=0))


def correlation_matrix(data: DistanceDataset, batch_size: int = DEFAULT_BATCH
                       ) -> np.ndarray:
    """Pearson correlation of every column pair, single streaming pass."""
    acc = CorrelationAccumulator(len(data.measure_names))
    for start in range(0, data.rows.shape[0], batch_size):
        acc.update(data.rows[start:start + batch_size])
    return acc.correlation()


def streamed_correlation(n: int, measures=None, *, mode: str = "exhaustive",
                         samples: int | None = None, seed: int = 0,
                         reference=None, threads: int = 1,
                         exhaustive_cap: int = EXHAUSTIVE_CAP,
                         batch_size: int = DEFAULT_BATCH) -> np.ndarray:
    """Correlation matrix over enumerated/sampled distances, never materialized.

    Work splits into fixed-size ranges with per-range child random sources;
    integer accumulators merge exactly, so the result is independent of
    `threads`.
    """
    measures = tuple(measures or _batch.PCA_MEASURES)
    if mode == "exhaustive" and n > exhaustive_cap:
        raise CapExceededError(f"exhaustive n={n} exceeds cap {exhaustive_cap}")
    if mode == "sampled":
        if samples is None:
            raise ValueError("sampled mode needs samples")
        root = perms.RandomSource(seed)
        ranges = []
        done = 0
        idx = 0
        while done < samples:
            m = min(batch_size, samples - done)
            ranges.append((idx, m))
            done += m
            idx += 1

        def work(task):
            i, m = task
            P = _batch.random_permutation_batch(n, m, root.child(i))
            a = CorrelationAccumulator(len(measures))
            a.update(_batch.distance_block(P, measures, reference))
            return a
    else:
        total = math.factorial(n)
        ranges = [(i, min(batch_size, total - i * batch_size))
                  for i in range((total + batch_size - 1) // batch_size)]

        def work(task):
            i, m = task
            start = i * batch_size
            P = _batch.batch_unrank(np.arange(start, start + m), n)
            a = CorrelationAccumulator(len(measures))
            a.update(_batch.distance_block(P, measures, reference))
            return a

    acc = CorrelationAccumulator(len(measures))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(work, ranges):
                acc.merge(part)
    else:
        for task in ranges:
            acc.merge(work(task))
    return acc.correlation()


# ---------------------------------------------------------------------------
# Jacobi eigendecomposition for PCA over correlation matrices

@dataclass(frozen=True)
class PcaResult:
    """Eigenstructure of a correlation matrix, components sorted by eigenvalue.

    `loadings[i, j]` is the correlation between original variable i and
    component j: the eigenvector entry scaled by sqrt(eigenvalue). Each
    eigenvector column's sign is fixed so its largest-magnitude entry is
    positive.
    """
    correlation: np.ndarray
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    proportions: np.ndarray
    loadings: np.ndarray


def jacobi_eigen(matrix, *, tol: float = 1e-10, max_sweeps: int = 100,
                 symmetry_tol: float = 1e-12) -> PcaResult:
    """Eigenpairs of a symmetric matrix via cyclic-by-row Jacobi rotations.

    Sweeps rotate every off-diagonal (p, q) in row order until all
    off-diagonal magnitudes drop below `tol`; raises if `max_sweeps`
    pass without convergence.
    """
    A = np.array(matrix, dtype=np.float64)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("matrix must be square")
    if np.abs(A - A.T).max() > symmetry_tol:
        raise ValueError("matrix is not symmetric")
    original = A.copy()
    k = A.shape[0]
    V = np.eye(k)
    for _ in range(max_sweeps):
        off = np.abs(A - np.diag(np.diag(A))).max()
        if off < tol:
            break
        for p in range(k - 1):
            for q in range(p + 1, k):
                apq = A[p, q]
                if abs(apq) < tol * 1e-4:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rot_p = c * A[:, p] - s * A[:, q]
                rot_q = s * A[:, p] + c * A[:, q]
                A[:, p], A[:, q] = rot_p, rot_q
                rot_p = c * A[p, :] - s * A[q, :]
                rot_q = s * A[p, :] + c * A[q, :]
                A[p, :], A[q, :] = rot_p, rot_q
                rot_p = c * V[:, p] - s * V[:, q]
                rot_q = s * V[:, p] + c * V[:, q]
                V[:, p], V[:, q] = rot_p, rot_q
    else:
        raise RuntimeError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")
    values = np.diag(A).copy()
    order = np.argsort(values)[::-1]
    values = values[order]
    V = V[:, order]
    for j in range(k):
        if V[np.argmax(np.abs(V[:, j])), j] < 0:
            V[:, j] = -V[:, j]
    proportions = values / values.sum()
    loadings = V * np.sqrt(np.maximum(values, 0.0))[None, :]
    return PcaResult(correlation=original, eigenvalues=values, eigenvectors=V,
                     proportions=proportions, loadings=loadings)


# ---------------------------------------------------------------------------
# fitness-distance correlation

def fdc(landscape, measure, samples: int, rng: perms.RandomSource, *,
        batch_size: int = DEFAULT_BATCH) -> float:
    """Pearson correlation between cost and distance to the nearest optimum.

    Draws `samples` uniformly random permutations; requires the landscape
    to expose its optimal permutations.
    """
    name = measure if isinstance(measure, str) else measure.name
    table = fdc_table(landscape, [name], samples, rng, batch_size=batch_size)
    return table[name]


def fdc_table(landscape, measures, samples: int, rng: perms.RandomSource, *,
              batch_size: int = DEFAULT_BATCH, threads: int = 1) -> dict:
    """FDC for several measures over one shared sample set.

    Reusing the same samples across measures keeps the per-measure values
    comparable. Sampling splits into fixed ranges with child sources, so
    results do not depend on `threads`.
    """
    if landscape.optima is None or len(landscape.optima) == 0:
        raise ValueError(f"landscape {landscape.name!r} has no known optima")
    measures = list(measures)
    optima = np.asarray(landscape.optima)
    n = landscape.n

    ranges = []
    done = 0
    idx = 0
    while done < samples:
        m = min(batch_size, samples - done)
        ranges.append((idx, m))
        done += m
        idx += 1

    def work(task):
        i, m = task
        P = _batch.random_permutation_batch(n, m, rng.child(i))
        cost = landscape.cost_batch(P)
        best = None
        for opt in optima:
            X = _batch.distance_block(P, measures, reference=opt)
            best = X if best is None else np.minimum(best, X)
        return cost, best

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(work, ranges))
    else:
        parts = [work(t) for t in ranges]
    costs = np.concatenate([p[0] for p in parts])
    dists = np.concatenate([p[1] for p in parts], axis=0)
    return {name: pearson(costs, dists[:, j]) for j, name in enumerate(measures)}
