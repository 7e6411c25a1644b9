"""What each mutation operator does to a permutation, measured.

Applies every registered operator to the same parent many times and
records how far the children land under a few diagnostic measures. Each
operator has a characteristic signature: a swap always moves exactly two
positions, a reversal replaces at most two undirected adjacencies, a
block swap at most four, and so on.
"""
from permlab import (MEASURES, OPERATOR_NAMES, RandomSource, identity,
                     make_operator)

N = 30
TRIALS = 400
parent = identity(N)
diagnostics = ("exact-match", "kendall-tau", "acyclic-edge", "cyclic-edge",
               "interchange", "reinsertion")

print(f"max distance from parent over {TRIALS} applications (n={N}):\n")
header = " ".join(f"{d:>12s}" for d in diagnostics)
print(f"{'operator':12s} {header}")
for name in OPERATOR_NAMES:
    op = make_operator(name)
    rng = RandomSource(17).child(OPERATOR_NAMES.index(name))
    worst = {d: 0 for d in diagnostics}
    for _ in range(TRIALS):
        child = op(parent, rng)
        for d in diagnostics:
            worst[d] = max(worst[d], MEASURES[d](parent, child))
    row = " ".join(f"{worst[d]:>12d}" for d in diagnostics)
    print(f"{name:12s} {row}")

print("""
Reading the table:
 * adjswap moves two adjacent positions: kendall-tau distance is always 1.
 * reversal touches at most 2 undirected edges; 3opt and blockmove at most 3;
   blockswap at most 4. Their positional damage is unbounded though.
 * scramble and uscramble are the blunt instruments: they can displace
   many elements at once, which is also what makes them good at escaping.

Operators accept parameters through a suffix, e.g. cycle:4 or uscramble:0.2:
""")
for spec in ("cycle:4", "uscramble:0.2"):
    op = make_operator(spec)
    child = op(parent, RandomSource(3))
    moved = int(MEASURES["exact-match"](parent, child))
    print(f"  {spec:14s} displaced {moved} positions")
