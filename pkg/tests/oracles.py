"""Independent brute-force oracles used to pin expected values.

Everything here is deliberately naive: breadth-first searches over move
graphs, quadratic dynamic programs, and direct set arithmetic. None of it
shares code with the library paths it checks.
"""
from __future__ import annotations

import itertools
from collections import deque

import numpy as np


def all_perms(n):
    return [tuple(t) for t in itertools.permutations(range(n))]


def bfs_distances(start: tuple, neighbors) -> dict:
    """Hop counts from start to every permutation reachable via `neighbors`."""
    dist = {start: 0}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for nxt in neighbors(cur):
            if nxt not in dist:
                dist[nxt] = dist[cur] + 1
                queue.append(nxt)
    return dist


def adjacent_swap_neighbors(p: tuple):
    for i in range(len(p) - 1):
        q = list(p)
        q[i], q[i + 1] = q[i + 1], q[i]
        yield tuple(q)


def swap_neighbors(p: tuple):
    for i in range(len(p) - 1):
        for j in range(i + 1, len(p)):
            q = list(p)
            q[i], q[j] = q[j], q[i]
            yield tuple(q)


def reinsertion_neighbors(p: tuple):
    for i in range(len(p)):
        rest = list(p[:i]) + list(p[i + 1:])
        for j in range(len(p)):
            if j != i:
                yield tuple(rest[:j] + [p[i]] + rest[j:])


def reversal_neighbors(p: tuple):
    for i in range(len(p) - 1):
        for j in range(i + 1, len(p)):
            yield tuple(p[:i] + p[i:j + 1][::-1] + p[j + 1:])


def hamming(p1, p2) -> int:
    return sum(a != b for a, b in zip(p1, p2))


def undirected_edge_set(p) -> set:
    return {frozenset((p[i], p[i + 1])) for i in range(len(p) - 1)}


def directed_edge_set(p) -> set:
    return {(p[i], p[i + 1]) for i in range(len(p) - 1)}


def cyclic_undirected_edge_set(p) -> set:
    return undirected_edge_set(p) | {frozenset((p[-1], p[0]))}


def cyclic_directed_edge_set(p) -> set:
    return directed_edge_set(p) | {(p[-1], p[0])}


def edge_distance(p1, p2, *, directed: bool, cyclic: bool) -> int:
    build = {
        (False, False): undirected_edge_set,
        (True, False): directed_edge_set,
        (False, True): cyclic_undirected_edge_set,
        (True, True): cyclic_directed_edge_set,
    }[(directed, cyclic)]
    return len(build(p1) - set(build(p2)))


def discordant_pairs(p1, p2) -> int:
    pos1 = {e: i for i, e in enumerate(p1)}
    pos2 = {e: i for i, e in enumerate(p2)}
    count = 0
    for x, y in itertools.combinations(p1, 2):
        if (pos1[x] - pos1[y]) * (pos2[x] - pos2[y]) < 0:
            count += 1
    return count


def lcs_length_dp(p1, p2) -> int:
    m, n = len(p1), len(p2)
    dp = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            if p1[i - 1] == p2[j - 1]:
                dp[i][j] = dp[i - 1][j - 1] + 1
            else:
                dp[i][j] = max(dp[i - 1][j], dp[i][j - 1])
    return dp[m][n]


def positional_deviation_sums(p1, p2):
    """(sum |d|, sum d^2, sum min(|d|, n-|d|)) via direct index search."""
    n = len(p1)
    total = sq = wrap = 0
    for e in range(n):
        d = abs(list(p1).index(e) - list(p2).index(e))
        total += d
        sq += d * d
        wrap += min(d, n - d)
    return total, sq, wrap


def edit_distance_dp(p1, p2, insert=1.0, delete=1.0, change=1.0) -> float:
    m, n = len(p1), len(p2)
    dp = [[0.0] * (n + 1) for _ in range(m + 1)]
    for i in range(1, m + 1):
        dp[i][0] = i * delete
    for j in range(1, n + 1):
        dp[0][j] = j * insert
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            sub = dp[i - 1][j - 1] + (0.0 if p1[i - 1] == p2[j - 1] else change)
            dp[i][j] = min(sub, dp[i - 1][j] + delete, dp[i][j - 1] + insert)
    return dp[m][n]


def cycle_count_union_find(p1, p2) -> int:
    n = len(p1)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pos1 = {e: i for i, e in enumerate(p1)}
    for i in range(n):
        a, b = find(pos1[p2[i]]), find(i)
        if a != b:
            parent[a] = b
    return len({find(i) for i in range(n)})


def pearson_two_pass(x, y) -> float:
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    dx = x - x.mean()
    dy = y - y.mean()
    return float((dx * dy).sum() / np.sqrt((dx * dx).sum() * (dy * dy).sum()))
