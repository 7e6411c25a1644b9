"""Core permutation type, its algebra, enumeration, and seeded randomness.

A permutation of length n is represented as an integer array containing each
of 0..n-1 exactly once. All functions accept any integer sequence and return
numpy arrays.
"""
from __future__ import annotations

import itertools
import math

import numpy as np

_MASK64 = (1 << 64) - 1


def as_array(p) -> np.ndarray:
    return np.asarray(p, dtype=np.int64)


def is_permutation(p) -> bool:
    """True iff p contains each of 0..n-1 exactly once (n >= 1)."""
    a = as_array(p)
    n = a.size
    if n == 0 or a.ndim != 1:
        return False
    if a.min() != 0 or a.max() != n - 1:
        return False
    seen = np.zeros(n, dtype=bool)
    seen[a] = True
    return bool(seen.all())


def require_permutation(p) -> np.ndarray:
    a = as_array(p)
    if not is_permutation(a):
        raise ValueError(f"not a permutation of 0..n-1: {list(np.ravel(p))!r}")
    return a


def require_same_length(p1: np.ndarray, p2: np.ndarray) -> int:
    if p1.size != p2.size:
        raise ValueError(f"length mismatch: {p1.size} != {p2.size}")
    return p1.size


def identity(n: int) -> np.ndarray:
    if n < 1:
        raise ValueError("n must be >= 1")
    return np.arange(n, dtype=np.int64)


def inverse(p) -> np.ndarray:
    """Inverse permutation q with q[p[i]] = i."""
    a = as_array(p)
    q = np.empty_like(a)
    q[a] = np.arange(a.size, dtype=a.dtype)
    return q


def compose(a, b) -> np.ndarray:
    """(a o b)[i] = a[b[i]]."""
    aa, bb = as_array(a), as_array(b)
    require_same_length(aa, bb)
    return aa[bb]


def cycle_count(p1, p2) -> int:
    """Number of cycles (fixed points included) relating two permutations.

    Counts the cycles of the mapping that sends each element's position in
    p2 to its position in p1; cycle_count(p, p) == len(p).
    """
    a, b = as_array(p1), as_array(p2)
    n = require_same_length(a, b)
    sigma = compose(inverse(a), b)
    seen = np.zeros(n, dtype=bool)
    count = 0
    for start in range(n):
        if seen[start]:
            continue
        count += 1
        i = start
        while not seen[i]:
            seen[i] = True
            i = sigma[i]
    return count


def next_lexicographic(p) -> np.ndarray | None:
    """Lexicographic successor of p, or None if p is the last permutation."""
    a = as_array(p).copy()
    n = a.size
    i = n - 2
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return None
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    a[i + 1:] = a[i + 1:][::-1]
    return a


def iter_permutations(n: int):
    """Yield all permutations of length n in lexicographic order."""
    for t in itertools.permutations(range(n)):
        yield np.array(t, dtype=np.int64)


def rank_of(p) -> int:
    """Rank of p in lexicographic order: the factorial-number-system index.

    rank_of(identity(n)) == 0 and rank_of(reversed identity) == n! - 1.
    """
    a = as_array(p)
    n = a.size
    r = 0
    for i in range(n):
        smaller_after = int(np.count_nonzero(a[i + 1:] < a[i]))
        r += smaller_after * math.factorial(n - 1 - i)
    return r


def unrank(r: int, n: int) -> np.ndarray:
    """Permutation of length n with lexicographic rank r."""
    if not 0 <= r < math.factorial(n):
        raise ValueError(f"rank {r} out of range for n={n}")
    avail = list(range(n))
    out = np.empty(n, dtype=np.int64)
    for i in range(n):
        f = math.factorial(n - 1 - i)
        d, r = divmod(r, f)
        out[i] = avail.pop(d)
    return out


def random_permutation(n: int, rng: "RandomSource") -> np.ndarray:
    """Uniformly random permutation of length n (each with probability 1/n!)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return rng.generator.permutation(n).astype(np.int64)


def derive_seed(*parts) -> int:
    """Stable 64-bit seed derived from a mixed tuple of ints and strings."""
    h = 0x9E3779B97F4A7C15
    for part in parts:
        if isinstance(part, str):
            vals = [int.from_bytes(part.encode(), "little") & _MASK64,
                    len(part)]
        else:
            vals = [int(part) & _MASK64]
        for v in vals:
            h = (h ^ v) & _MASK64
            h = (h * 0xBF58476D1CE4E5B9) & _MASK64
            h ^= h >> 30
            h = (h * 0x94D049BB133111EB) & _MASK64
            h ^= h >> 27
    return h


class RandomSource:
    """Seeded random stream with derivable, independent child streams.

    Identical (seed, path) pairs produce identical streams. `child(i)`
    derives an independent stream for parallel replicates; a source is
    single-owner and must not be shared across threads.
    """

    __slots__ = ("seed", "path", "_gen")

    def __init__(self, seed: int, path: tuple = ()):
        self.seed = int(seed) & _MASK64
        self.path = tuple(int(i) for i in path)
        ss = np.random.SeedSequence(self.seed, spawn_key=self.path)
        self._gen = np.random.Generator(np.random.PCG64(ss))

    def child(self, *indices: int) -> "RandomSource":
        return RandomSource(self.seed, self.path + indices)

    @property
    def generator(self) -> np.random.Generator:
        return self._gen

    def integers(self, low, high=None, size=None):
        return self._gen.integers(low, high, size=size)

    def random(self, size=None):
        return self._gen.random(size)

    def uniform(self, low=0.0, high=1.0, size=None):
        return self._gen.uniform(low, high, size)

    def shuffle(self, x):
        self._gen.shuffle(x)

    def permuted(self, x, axis=None):
        return self._gen.permuted(x, axis=axis)

    def choice(self, a, size=None, replace=True):
        return self._gen.choice(a, size=size, replace=replace)

    def __repr__(self):
        return f"RandomSource(seed={self.seed}, path={self.path})"
