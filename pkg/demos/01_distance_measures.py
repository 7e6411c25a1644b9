"""Tour of the bundled permutation distance measures.

Fourteen measures ship in the registry. Eleven of them are cheap enough to
run over millions of permutations; the other three (edit distance with
configurable costs, normalized deviation, and table-backed reversal edit
distance) round out the catalog.
"""
import numpy as np

from permlab import (EditCosts, MEASURES, RandomSource, build_reversal_table,
                     edit_distance, random_permutation, reversal_edit)

p = np.array([0, 1, 2, 3, 4, 5])
q = np.array([1, 2, 3, 4, 5, 0])   # one rotation
r = p[::-1]                        # full reversal

print("p =", p)
print("q =", q, "(rotation of p)")
print("r =", r, "(reversal of p)\n")

print(f"{'measure':20s} {'kind':14s} {'d(p,q)':>8s} {'d(p,r)':>8s}")
for m in MEASURES.values():
    print(f"{m.name:20s} {m.kind:14s} {m(p, q)!s:>8s} {m(p, r)!s:>8s}")

print("""
Things to notice:
 * cyclic-edge and cyclic-rtype see the rotation q as identical to p;
 * acyclic-edge and cyclic-edge see the reversal r as identical to p;
 * the positional measures (deviation family, lee) treat both as far away.
""")

# the edit distance takes per-operation costs
cheap_changes = EditCosts(insert=1, delete=1, change=1)
dear_changes = EditCosts(insert=1, delete=1, change=10)
print("edit([0,1,2], [0,2,1]) unit costs:     ", edit_distance([0, 1, 2], [0, 2, 1], cheap_changes))
print("edit([0,1], [1,0]) with change cost 10:", edit_distance([0, 1], [1, 0], dear_changes))

# reversal edit distance needs a one-off breadth-first table per length
table = build_reversal_table(6)
rng = RandomSource(7)
sample = random_permutation(6, rng)
print("\nreversal table: n=6 holds", table.table.size, "entries,",
      "graph diameter", table.diameter)
print("reversals to sort", sample, "->", reversal_edit(table, sample))
