"""Randomized mutation operators over permutations.

Every operator returns a fresh permutation of the same length, leaves its
input untouched, and always changes something: no-op outcomes are rejected
and redrawn. Segment endpoints for reversal and scramble are uniform over
distinct index pairs; block operators draw endpoints with replacement, so
single-element blocks occur.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import partial
from typing import Callable

import numpy as np

from .perms import RandomSource, as_array

DEFAULT_CYCLE_KMAX = 10
DEFAULT_USCRAMBLE_U = 1.0 / 3.0


def _require_n(p: np.ndarray, minimum: int, op: str) -> int:
    n = p.size
    if n < minimum:
        raise ValueError(f"{op} requires n >= {minimum}, got {n}")
    return n


def _distinct_pair(n: int, rng: RandomSource) -> tuple[int, int]:
    """Uniform unordered pair of distinct indices, returned sorted."""
    i = int(rng.integers(n))
    j = int(rng.integers(n - 1))
    if j >= i:
        j += 1
    return (i, j) if i < j else (j, i)


def adj_swap(p, rng: RandomSource) -> np.ndarray:
    """Swap one uniformly random adjacent pair."""
    a = as_array(p)
    n = _require_n(a, 2, "adj_swap")
    i = int(rng.integers(n - 1))
    out = a.copy()
    out[i], out[i + 1] = a[i + 1], a[i]
    return out


def swap(p, rng: RandomSource) -> np.ndarray:
    """Exchange two distinct uniformly random positions."""
    a = as_array(p)
    n = _require_n(a, 2, "swap")
    i, j = _distinct_pair(n, rng)
    out = a.copy()
    out[i], out[j] = a[j], a[i]
    return out


def insertion(p, rng: RandomSource) -> np.ndarray:
    """Remove the element at one index and reinsert it at another."""
    a = as_array(p)
    n = _require_n(a, 2, "insertion")
    i = int(rng.integers(n))
    j = int(rng.integers(n - 1))
    if j >= i:
        j += 1
    out = a.copy()
    if j < i:
        out[j + 1:i + 1] = a[j:i]
    else:
        out[i:j] = a[i + 1:j + 1]
    out[j] = a[i]
    return out


def reversal(p, rng: RandomSource) -> np.ndarray:
    """Reverse a uniformly random segment of length >= 2."""
    a = as_array(p)
    n = _require_n(a, 2, "reversal")
    i, j = _distinct_pair(n, rng)
    out = a.copy()
    out[i:j + 1] = a[i:j + 1][::-1]
    return out


def three_opt(p, rng: RandomSource) -> np.ndarray:
    """Remove three distinct edges of the cyclic tour and reconnect.

    One of the seven non-identity reconnections (segment order x
    orientation) is drawn uniformly; moves that happen to rebuild the
    input (single-element segment flips) are redrawn.
    """
    a = as_array(p)
    n = _require_n(a, 4, "three_opt")
    while True:
        cuts = np.sort(rng.choice(n, size=3, replace=False))
        e1, e2, e3 = (int(c) for c in cuts)
        head, x, y, tail = a[:e1 + 1], a[e1 + 1:e2 + 1], a[e2 + 1:e3 + 1], a[e3 + 1:]
        combos = (
            (x[::-1], y), (x, y[::-1]), (x[::-1], y[::-1]),
            (y, x), (y[::-1], x), (y, x[::-1]), (y[::-1], x[::-1]),
        )
        mid = combos[int(rng.integers(7))]
        out = np.concatenate([head, mid[0], mid[1], tail])
        if not np.array_equal(out, a):
            return out


def block_move(p, rng: RandomSource) -> np.ndarray:
    """Remove a contiguous segment and reinsert it at a different position."""
    a = as_array(p)
    n = _require_n(a, 2, "block_move")
    while True:
        i, j = sorted((int(rng.integers(n)), int(rng.integers(n))))
        length = j - i + 1
        if length < n:
            break
    t = int(rng.integers(n - length))
    if t >= i:
        t += 1
    seg = a[i:j + 1]
    rest = np.concatenate([a[:i], a[j + 1:]])
    return np.concatenate([rest[:t], seg, rest[t:]])


def block_swap(p, rng: RandomSource) -> np.ndarray:
    """Exchange two disjoint contiguous segments.

    Four endpoints drawn with replacement and sorted into i <= j < k <= l;
    draws with the middle pair equal are rejected to keep the segments
    disjoint.
    """
    a = as_array(p)
    n = _require_n(a, 2, "block_swap")
    while True:
        i, j, k, l = sorted(int(rng.integers(n)) for _ in range(4))
        if j < k:
            break
    return np.concatenate([a[:i], a[k:l + 1], a[j + 1:k], a[i:j + 1], a[l + 1:]])


def cycle_mutation(p, rng: RandomSource, *, kmax: int = DEFAULT_CYCLE_KMAX
                   ) -> np.ndarray:
    """Cyclically shift the elements at k random positions (a random k-cycle).

    k is uniform over [2, min(kmax, n)]; the chosen positions shift along a
    uniformly random cycle, so exactly k positions change.
    """
    a = as_array(p)
    n = _require_n(a, 2, "cycle_mutation")
    if kmax < 2:
        raise ValueError("kmax must be >= 2")
    k = 2 + int(rng.integers(min(kmax, n) - 1))
    pos = rng.choice(n, size=k, replace=False)
    out = a.copy()
    out[np.roll(pos, -1)] = a[pos]
    return out


def scramble(p, rng: RandomSource) -> np.ndarray:
    """Uniformly shuffle a random segment, rejecting the unchanged order."""
    a = as_array(p)
    n = _require_n(a, 2, "scramble")
    i, j = _distinct_pair(n, rng)
    out = a.copy()
    while True:
        seg = rng.permuted(a[i:j + 1])
        if not np.array_equal(seg, a[i:j + 1]):
            out[i:j + 1] = seg
            return out


def uniform_scramble(p, rng: RandomSource, *, u: float = DEFAULT_USCRAMBLE_U
                     ) -> np.ndarray:
    """Shuffle the elements at positions selected independently w.p. u.

    Selections with fewer than two positions are redrawn from scratch, and
    the unchanged arrangement is rejected, so the output always differs.
    """
    a = as_array(p)
    n = _require_n(a, 2, "uniform_scramble")
    if not 0.0 < u <= 1.0:
        raise ValueError("u must be in (0, 1]")
    while True:
        mask = rng.random(n) < u
        if mask.sum() >= 2:
            break
    idx = np.flatnonzero(mask)
    out = a.copy()
    while True:
        vals = rng.permuted(a[idx])
        if not np.array_equal(vals, a[idx]):
            out[idx] = vals
            return out


@dataclass(frozen=True)
class MutationOperator:
    """Named operator; calling it applies one mutation."""
    name: str
    fn: Callable

    def __call__(self, p, rng: RandomSource) -> np.ndarray:
        return self.fn(p, rng)


_PLAIN = {
    "adjswap": adj_swap,
    "swap": swap,
    "insertion": insertion,
    "reversal": reversal,
    "3opt": three_opt,
    "blockmove": block_move,
    "blockswap": block_swap,
    "scramble": scramble,
}

OPERATOR_NAMES = ("adjswap", "swap", "insertion", "reversal", "3opt",
                  "blockmove", "blockswap", "cycle", "scramble", "uscramble")


def make_operator(spec: str) -> MutationOperator:
    """Operator from a name with an optional parameter suffix.

    "cycle" and "cycle:7" set the maximum cycle length; "uscramble" and
    "uscramble:0.25" set the per-position selection probability.
    """
    name, _, arg = spec.partition(":")
    if name in _PLAIN:
        if arg:
            raise ValueError(f"operator {name!r} takes no parameter")
        return MutationOperator(name, _PLAIN[name])
    if name == "cycle":
        kmax = int(arg) if arg else DEFAULT_CYCLE_KMAX
        return MutationOperator(spec, partial(cycle_mutation, kmax=kmax))
    if name == "uscramble":
        u = float(arg) if arg else DEFAULT_USCRAMBLE_U
        return MutationOperator(spec, partial(uniform_scramble, u=u))
    raise ValueError(f"unknown mutation operator {name!r}")
