"""Vectorized kernels over batches of permutations.

A batch is an (m, n) integer array whose rows are permutations of 0..n-1.
These kernels back the dataset builders, fitness-distance sampling, and
population cost evaluation; they are cross-checked against the scalar
implementations in `distances`.
"""
from __future__ import annotations

import itertools
import math
from functools import lru_cache

import numpy as np

from . import perms

# canonical measure order for correlation studies and reports
PCA_MEASURES = (
    "exact-match", "interchange", "acyclic-edge", "cyclic-edge", "rtype",
    "cyclic-rtype", "kendall-tau", "reinsertion", "deviation",
    "squared-deviation", "lee",
)


def batch_dtype(n: int):
    if n <= 127:
        return np.int8
    return np.int16 if n <= 32767 else np.int32


def batch_inverse(P: np.ndarray) -> np.ndarray:
    m, n = P.shape
    V = np.empty_like(P)
    V[np.arange(m)[:, None], P] = np.arange(n, dtype=P.dtype)[None, :]
    return V


def relabel(P: np.ndarray, reference) -> np.ndarray:
    """Rows mapped through the reference's inverse.

    Every bundled measure is invariant under consistent relabeling of both
    arguments, so distance(row, reference) equals distance(relabeled row,
    identity); the identity-reference kernels below then apply.
    """
    ref = np.asarray(reference)
    inv = np.empty(ref.size, dtype=P.dtype)
    inv[ref] = np.arange(ref.size, dtype=P.dtype)
    return inv[P]


def batch_cycle_count(Q: np.ndarray) -> np.ndarray:
    """Cycle count of each row (vs identity), via pointer-doubling min labels."""
    m, n = Q.shape
    lab = np.broadcast_to(np.arange(n, dtype=Q.dtype), (m, n)).copy()
    F = Q.copy()
    for _ in range(max(1, math.ceil(math.log2(max(n, 2))))):
        lab = np.minimum(lab, np.take_along_axis(lab, F, axis=1))
        F = np.take_along_axis(F, F, axis=1)
    return (lab == np.arange(n, dtype=Q.dtype)).sum(axis=1)


@lru_cache(maxsize=None)
def _pair_indices(n: int):
    iu, ju = np.triu_indices(n, k=1)
    return iu.astype(np.intp), ju.astype(np.intp)


def batch_kendall(Q: np.ndarray) -> np.ndarray:
    """Inversion count per row; O(n^2) element-pair comparisons."""
    n = Q.shape[1]
    if n < 2:
        return np.zeros(Q.shape[0], dtype=np.int64)
    iu, ju = _pair_indices(n)
    return (Q[:, iu] > Q[:, ju]).sum(axis=1, dtype=np.int64)


def batch_lis_length(Q: np.ndarray) -> np.ndarray:
    """Longest-increasing-subsequence length per row (quadratic DP)."""
    m, n = Q.shape
    L = np.ones((m, n), dtype=np.int16)
    for i in range(1, n):
        mask = Q[:, :i] < Q[:, i:i + 1]
        L[:, i] = 1 + np.where(mask, L[:, :i], 0).max(axis=1)
    return L.max(axis=1).astype(np.int64)


def _edge_diffs(Q: np.ndarray):
    d = Q[:, 1:].astype(np.int64) - Q[:, :-1]
    dw = Q[:, 0].astype(np.int64) - Q[:, -1]
    return d, dw


def batch_exact_match(Q):
    return (Q != np.arange(Q.shape[1], dtype=Q.dtype)).sum(axis=1).astype(np.int64)


def batch_interchange(Q):
    return (Q.shape[1] - batch_cycle_count(Q)).astype(np.int64)


def batch_acyclic_edge(Q):
    d, _ = _edge_diffs(Q)
    return (np.abs(d) != 1).sum(axis=1).astype(np.int64)


def batch_cyclic_edge(Q):
    n = Q.shape[1]
    d, dw = _edge_diffs(Q)
    ad, adw = np.abs(d), np.abs(dw)
    out = ((ad != 1) & (ad != n - 1)).sum(axis=1)
    return (out + ((adw != 1) & (adw != n - 1))).astype(np.int64)


def batch_rtype(Q):
    d, _ = _edge_diffs(Q)
    return (d != 1).sum(axis=1).astype(np.int64)


def batch_cyclic_rtype(Q):
    n = Q.shape[1]
    d, dw = _edge_diffs(Q)
    out = ((d != 1) & (d != 1 - n)).sum(axis=1)
    return (out + ((dw != 1) & (dw != 1 - n))).astype(np.int64)


def batch_reinsertion(Q):
    return Q.shape[1] - batch_lis_length(Q)


def _deviations(Q):
    n = Q.shape[1]
    V = batch_inverse(Q)
    return np.abs(V.astype(np.int64) - np.arange(n))


def batch_deviation(Q):
    return _deviations(Q).sum(axis=1)


def batch_squared_deviation(Q):
    dev = _deviations(Q)
    return (dev * dev).sum(axis=1)


def batch_lee(Q):
    n = Q.shape[1]
    dev = _deviations(Q)
    return np.minimum(dev, n - dev).sum(axis=1)


def batch_normalized_deviation(Q):
    if Q.shape[1] < 2:
        raise ValueError("normalized deviation requires n >= 2")
    return batch_deviation(Q) / (Q.shape[1] - 1)


def batch_edit_unit(Q):
    """Unit-cost edit distance of each row to the identity, row-vectorized DP."""
    m, n = Q.shape
    prev = np.broadcast_to(np.arange(n + 1, dtype=np.int64), (m, n + 1)).copy()
    cur = np.empty_like(prev)
    for i in range(1, n + 1):
        cur[:, 0] = i
        col = Q[:, i - 1]
        for j in range(1, n + 1):
            sub = prev[:, j - 1] + (col != j - 1)
            np.minimum(sub, prev[:, j] + 1, out=cur[:, j])
            np.minimum(cur[:, j], cur[:, j - 1] + 1, out=cur[:, j])
        prev, cur = cur, prev
    return prev[:, n].copy()


_reversal_tables: dict[int, np.ndarray] = {}


def batch_reversal_edit(Q):
    """Identity-reference reversal distances via the cached lookup table."""
    from . import distances  # deferred: distances imports this module
    n = Q.shape[1]
    if n not in _reversal_tables:
        _reversal_tables[n] = distances.build_reversal_table(n).table
    return _reversal_tables[n][batch_rank(Q)].astype(np.int64)


BATCH_KERNELS = {
    "exact-match": batch_exact_match,
    "interchange": batch_interchange,
    "acyclic-edge": batch_acyclic_edge,
    "cyclic-edge": batch_cyclic_edge,
    "rtype": batch_rtype,
    "cyclic-rtype": batch_cyclic_rtype,
    "kendall-tau": batch_kendall,
    "reinsertion": batch_reinsertion,
    "deviation": batch_deviation,
    "squared-deviation": batch_squared_deviation,
    "lee": batch_lee,
    "normalized-deviation": batch_normalized_deviation,
    "edit": batch_edit_unit,
    "reversal-edit": batch_reversal_edit,
}

# measures whose batch kernel yields non-integral values
FLOAT_MEASURES = frozenset({"normalized-deviation"})


def batch_distance(name: str, P: np.ndarray, reference=None) -> np.ndarray:
    """Distance from every row of P to the reference permutation."""
    if name not in BATCH_KERNELS:
        raise ValueError(f"no batch kernel for measure {name!r}")
    Q = P if reference is None else relabel(P, reference)
    return BATCH_KERNELS[name](Q)


def distance_block(P: np.ndarray, measures=PCA_MEASURES, reference=None) -> np.ndarray:
    """(m, k) matrix of distances from each row to the reference.

    Shares the relabeling, inverse, and edge-difference intermediates across
    measures, so a full block costs little more than its slowest column.
    """
    need = set(measures)
    unknown = need - BATCH_KERNELS.keys()
    if unknown:
        raise ValueError(f"no batch kernel for {sorted(unknown)}")
    Q = P if reference is None else relabel(P, reference)
    m, n = Q.shape
    cols = {}
    if need & {"acyclic-edge", "cyclic-edge", "rtype", "cyclic-rtype"}:
        d, dw = _edge_diffs(Q)
        ad, adw = np.abs(d), np.abs(dw)
        if "acyclic-edge" in need:
            cols["acyclic-edge"] = (ad != 1).sum(axis=1)
        if "cyclic-edge" in need:
            cols["cyclic-edge"] = ((ad != 1) & (ad != n - 1)).sum(axis=1) \
                + ((adw != 1) & (adw != n - 1))
        if "rtype" in need:
            cols["rtype"] = (d != 1).sum(axis=1)
        if "cyclic-rtype" in need:
            cols["cyclic-rtype"] = ((d != 1) & (d != 1 - n)).sum(axis=1) \
                + ((dw != 1) & (dw != 1 - n))
    if need & {"deviation", "squared-deviation", "lee"}:
        dev = _deviations(Q)
        if "deviation" in need:
            cols["deviation"] = dev.sum(axis=1)
        if "squared-deviation" in need:
            cols["squared-deviation"] = (dev * dev).sum(axis=1)
        if "lee" in need:
            cols["lee"] = np.minimum(dev, n - dev).sum(axis=1)
    for name in need - cols.keys():
        cols[name] = BATCH_KERNELS[name](Q)
    dtype = np.float64 if need & FLOAT_MEASURES else np.int64
    out = np.empty((m, len(measures)), dtype=dtype)
    for j, name in enumerate(measures):
        out[:, j] = cols[name]
    return out


def iter_permutation_batches(n: int, batch_size: int = 131072):
    """All n! permutations in lexicographic order, as (m, n) array chunks."""
    dtype = batch_dtype(n)
    it = itertools.permutations(range(n))
    while True:
        chunk = list(itertools.islice(it, batch_size))
        if not chunk:
            return
        yield np.array(chunk, dtype=dtype)


def random_permutation_batch(n: int, m: int, rng: perms.RandomSource) -> np.ndarray:
    base = np.arange(n, dtype=batch_dtype(n))
    return rng.permuted(np.broadcast_to(base, (m, n)), axis=1)


def batch_rank(P: np.ndarray) -> np.ndarray:
    """Lexicographic rank of each row, as int64 (valid for n <= 20)."""
    m, n = P.shape
    r = np.zeros(m, dtype=np.int64)
    for i in range(n - 1):
        smaller_after = (P[:, i + 1:] < P[:, i:i + 1]).sum(axis=1)
        r += smaller_after.astype(np.int64) * math.factorial(n - 1 - i)
    return r


def batch_unrank(ranks: np.ndarray, n: int) -> np.ndarray:
    """Rows of lexicographic rank `ranks`; inverse of batch_rank."""
    ranks = np.asarray(ranks, dtype=np.int64)
    m = ranks.size
    dtype = batch_dtype(n)
    avail = np.broadcast_to(np.arange(n, dtype=dtype), (m, n)).copy()
    out = np.empty((m, n), dtype=dtype)
    r = ranks.copy()
    for i in range(n):
        f = math.factorial(n - 1 - i)
        d, r = np.divmod(r, f)
        out[:, i] = np.take_along_axis(avail[:, :n - i], d[:, None], axis=1)[:, 0]
        # shift the selected entry out of the remaining pool
        keep = np.arange(n - i - 1)[None, :] + (np.arange(n - i - 1)[None, :] >= d[:, None])
        avail[:, :n - i - 1] = np.take_along_axis(avail[:, :n - i], keep, axis=1)
    return out
