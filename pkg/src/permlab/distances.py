"""Distance measures between equal-length permutations.

All measures are symmetric and zero on identical arguments. `kind`
distinguishes true metrics from pseudo-metrics (zero distance between
distinct permutations, via rotation/reversal invariance) and the one
semi-metric (no triangle inequality). Integral measures return Python ints.
"""
from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import batch as _batch
from . import perms
from .perms import as_array, require_same_length

PCA_MEASURES = _batch.PCA_MEASURES


class CapExceededError(Exception):
    """A size-capped operation was asked to exceed its configured cap."""


def _relabeled(p1, p2) -> np.ndarray:
    """seq[i] = position of p1[i] in p2; identity iff p1 == p2."""
    a, b = as_array(p1), as_array(p2)
    require_same_length(a, b)
    return perms.compose(perms.inverse(b), a)


def exact_match(p1, p2) -> int:
    """Number of positions holding different elements."""
    a, b = as_array(p1), as_array(p2)
    require_same_length(a, b)
    return int(np.count_nonzero(a != b))


def interchange(p1, p2) -> int:
    """Minimum number of element swaps transforming p1 into p2."""
    a, b = as_array(p1), as_array(p2)
    n = require_same_length(a, b)
    return n - perms.cycle_count(a, b)


def _require_edges(p1, p2) -> np.ndarray:
    seq = _relabeled(p1, p2)
    if seq.size < 2:
        raise ValueError("edge distances require n >= 2")
    return seq


def acyclic_edge(p1, p2) -> int:
    """Count of undirected adjacencies of p1 that are not adjacencies of p2."""
    seq = _require_edges(p1, p2)
    return int(np.count_nonzero(np.abs(np.diff(seq)) != 1))


def cyclic_edge(p1, p2) -> int:
    """Like acyclic_edge but the endpoints are treated as adjacent."""
    seq = _require_edges(p1, p2)
    n = seq.size
    x = np.abs(np.diff(seq, append=seq[0]))
    return int(np.count_nonzero((x != 1) & (x != n - 1)))


def rtype(p1, p2) -> int:
    """Directed-adjacency counterpart of acyclic_edge."""
    seq = _require_edges(p1, p2)
    return int(np.count_nonzero(np.diff(seq) != 1))


def cyclic_rtype(p1, p2) -> int:
    """Directed-adjacency counterpart of cyclic_edge."""
    seq = _require_edges(p1, p2)
    n = seq.size
    x = np.diff(seq, append=seq[0])
    return int(np.count_nonzero((x != 1) & (x != 1 - n)))


def kendall_tau(p1, p2) -> int:
    """Number of discordant element pairs: the adjacent-swap edit distance.

    Counted as inversions of the relabeled sequence with a merge sort,
    O(n log n).
    """
    return _count_inversions(_relabeled(p1, p2).tolist())


def _count_inversions(a: list) -> int:
    """Bottom-up merge sort over `a`, tallying the inversions it removes."""
    n = len(a)
    buf = [0] * n
    total = 0
    width = 1
    while width < n:
        for lo in range(0, n - width, 2 * width):
            mid = lo + width
            hi = min(lo + 2 * width, n)
            i, j, k = lo, mid, lo
            while i < mid and j < hi:
                if a[i] <= a[j]:
                    buf[k] = a[i]
                    i += 1
                else:
                    total += mid - i
                    buf[k] = a[j]
                    j += 1
                k += 1
            buf[k:k + mid - i] = a[i:mid]
            k += mid - i
            buf[k:k + hi - j] = a[j:hi]
            a[lo:hi] = buf[lo:hi]
        width *= 2
    return total


def reinsertion(p1, p2) -> int:
    """Minimum number of remove-and-reinsert moves transforming p1 into p2.

    Equals n minus the longest common subsequence length; for permutations
    the LCS reduces to a longest increasing subsequence of the relabeled
    sequence, found by patience sorting in O(n log n).
    """
    seq = _relabeled(p1, p2)
    tails: list[int] = []
    for v in seq.tolist():
        k = bisect.bisect_left(tails, v)
        if k == len(tails):
            tails.append(v)
        else:
            tails[k] = v
    return seq.size - len(tails)


def _position_deviations(p1, p2) -> np.ndarray:
    a, b = as_array(p1), as_array(p2)
    require_same_length(a, b)
    return np.abs(perms.inverse(a) - perms.inverse(b))


def deviation(p1, p2) -> int:
    """Sum over elements of absolute positional displacement."""
    return int(_position_deviations(p1, p2).sum())


def normalized_deviation(p1, p2) -> float:
    """deviation / (n - 1), scaling each element's share into [0, 1]."""
    dev = _position_deviations(p1, p2)
    if dev.size < 2:
        raise ValueError("normalized deviation requires n >= 2")
    return float(dev.sum()) / (dev.size - 1)


def squared_deviation(p1, p2) -> int:
    """Sum of squared positional displacements."""
    dev = _position_deviations(p1, p2)
    return int((dev * dev).sum())


def lee(p1, p2) -> int:
    """Sum of cyclic positional displacements min(d, n - d)."""
    dev = _position_deviations(p1, p2)
    return int(np.minimum(dev, dev.size - dev).sum())


@dataclass(frozen=True)
class EditCosts:
    insert: float = 1.0
    delete: float = 1.0
    change: float = 1.0

    def __post_init__(self):
        if min(self.insert, self.delete, self.change) < 0:
            raise ValueError("edit costs must be non-negative")


def edit_distance(p1, p2, costs: EditCosts = EditCosts()) -> float:
    """Minimum-cost sequence of insertions/deletions/changes, O(n*m) DP.

    Lengths may differ; permutations are treated as plain sequences.
    """
    a, b = list(as_array(p1)), list(as_array(p2))
    prev = [j * costs.insert for j in range(len(b) + 1)]
    for i in range(1, len(a) + 1):
        cur = [i * costs.delete] + [0.0] * len(b)
        for j in range(1, len(b) + 1):
            sub = prev[j - 1] + (0.0 if a[i - 1] == b[j - 1] else costs.change)
            cur[j] = min(sub, prev[j] + costs.delete, cur[j - 1] + costs.insert)
        prev = cur
    return float(prev[-1])


# ---------------------------------------------------------------------------
# reversal edit distance: breadth-first table over S_n, then O(n^2) lookups

REVERSAL_TABLE_CAP = 10


@dataclass(frozen=True)
class ReversalDistanceTable:
    """Minimum-reversal distances from every permutation of S_n to a reference.

    `table[rank_of(q)]` is the number of segment reversals needed to turn q
    into `reference`. Immutable and shareable once built.
    """
    n: int
    reference: np.ndarray
    table: np.ndarray

    @property
    def diameter(self) -> int:
        return int(self.table.max())


def build_reversal_table(n: int, reference=None, cap: int = REVERSAL_TABLE_CAP
                         ) -> ReversalDistanceTable:
    """Breadth-first enumeration of S_n under segment reversals.

    Memory is the binding constraint (n! table entries plus frontier
    batches), hence the explicit cap.
    """
    if n > cap:
        raise CapExceededError(f"reversal table n={n} exceeds cap {cap}")
    if reference is None:
        reference = perms.identity(n)
    ref = perms.require_permutation(reference)
    if ref.size != n:
        raise ValueError("reference length must equal n")
    size = math.factorial(n)
    dist = np.full(size, -1, dtype=np.int8)
    frontier = ref[None, :].astype(_batch.batch_dtype(n))
    dist[perms.rank_of(ref)] = 0
    # index maps for every segment reversal [i, j]
    moves = []
    base = np.arange(n)
    for i in range(n - 1):
        for j in range(i + 1, n):
            g = base.copy()
            g[i:j + 1] = g[i:j + 1][::-1]
            moves.append(g)
    moves = np.array(moves)
    level = 0
    chunk = max(1, 4_000_000 // (len(moves) * n))  # bound expansion memory
    while frontier.size:
        level += 1
        found = []
        for start in range(0, frontier.shape[0], chunk):
            nxt = frontier[start:start + chunk][:, moves].reshape(-1, n)
            ranks = _batch.batch_rank(nxt)
            new_mask = dist[ranks] < 0
            if not new_mask.any():
                continue
            ranks = ranks[new_mask]
            nxt = nxt[new_mask]
            ranks, first = np.unique(ranks, return_index=True)
            dist[ranks] = level
            found.append(nxt[first])
        if not found:
            break
        frontier = np.concatenate(found, axis=0)
    return ReversalDistanceTable(n=n, reference=ref, table=dist)


def reversal_edit(table: ReversalDistanceTable, p1, p2=None) -> int:
    """Minimum number of segment reversals transforming p1 into p2.

    p2 defaults to the table's reference. Reversals act on positions, so
    relabeling both permutations by p2's inverse preserves every reversal
    move; one table therefore serves arbitrary pairs.
    """
    a = as_array(p1)
    if a.size != table.n:
        raise ValueError(f"length mismatch: {a.size} != table n {table.n}")
    if p2 is None:
        q = a
    else:
        b = as_array(p2)
        require_same_length(a, b)
        q = perms.compose(table.reference, perms.compose(perms.inverse(b), a))
    return int(table.table[perms.rank_of(q)])


_reversal_table_cache: dict[int, ReversalDistanceTable] = {}


def reversal_edit_auto(p1, p2) -> int:
    """reversal_edit through a per-length cached identity-reference table."""
    a, b = as_array(p1), as_array(p2)
    n = require_same_length(a, b)
    if n not in _reversal_table_cache:
        _reversal_table_cache[n] = build_reversal_table(n)
    return reversal_edit(_reversal_table_cache[n], a, b)


# ---------------------------------------------------------------------------
# registry

METRIC = "metric"
PSEUDO_METRIC = "pseudo-metric"
SEMI_METRIC = "semi-metric"


@dataclass(frozen=True)
class DistanceMeasure:
    """A named distance measure with axiom metadata and optional batch kernel."""
    name: str
    kind: str
    evaluate: Callable
    batch: Callable | None = field(default=None, repr=False)

    def __call__(self, p1, p2):
        return self.evaluate(p1, p2)


def _measure(name, kind, fn):
    return DistanceMeasure(name, kind, fn, _batch.BATCH_KERNELS.get(name))


MEASURES = {m.name: m for m in [
    _measure("exact-match", METRIC, exact_match),
    _measure("interchange", METRIC, interchange),
    _measure("acyclic-edge", PSEUDO_METRIC, acyclic_edge),
    _measure("cyclic-edge", PSEUDO_METRIC, cyclic_edge),
    _measure("rtype", METRIC, rtype),
    _measure("cyclic-rtype", PSEUDO_METRIC, cyclic_rtype),
    _measure("kendall-tau", METRIC, kendall_tau),
    _measure("reinsertion", METRIC, reinsertion),
    _measure("deviation", METRIC, deviation),
    _measure("normalized-deviation", METRIC, normalized_deviation),
    # fails the triangle inequality (e.g. [0,1,2] -> [1,0,2] -> [1,2,0]
    # costs 2 + 2 while the direct distance is 6), so not a metric
    _measure("squared-deviation", SEMI_METRIC, squared_deviation),
    _measure("lee", METRIC, lee),
    _measure("edit", METRIC, edit_distance),
    _measure("reversal-edit", METRIC, reversal_edit_auto),
]}


def get_measure(name: str) -> DistanceMeasure:
    try:
        return MEASURES[name]
    except KeyError:
        raise ValueError(f"unknown distance measure {name!r}") from None
