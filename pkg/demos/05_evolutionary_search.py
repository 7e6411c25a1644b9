"""Pick the mutation operator that matches the problem's structure.

Runs the generational EA (fitness-proportionate selection with a single
elite, one mutation per selected parent) on two problems with opposite
structure:

 * a random symmetric tour problem, where cost lives on adjacencies, and
 * a needle-in-a-haystack seeking a target permutation under exact-match
   distance, where cost lives on absolute positions.

The adjacency-preserving reversal wins the first; the position-level swap
wins the second. Matching the operator's edit signature to the landscape's
structure is the whole game.
"""
from permlab import compare, problem_spec

OPS = ["swap", "insertion", "reversal", "scramble"]
SCALE = dict(runs=3, instances=3, generations=500, population_size=50, seed=7)

for problem, n in (("tsp", 40), ("haystack-exact-match", 40)):
    spec = problem_spec(problem, n=n)
    result = compare(OPS, spec, **SCALE)
    print(f"\n{problem} (n={n}, mean best cost, {SCALE['runs']}x{SCALE['instances']} runs):")
    print(f"{'generation':>10s} " + " ".join(f"{op:>10s}" for op in OPS))
    for i, gen in enumerate(result.checkpoints):
        row = " ".join(f"{result.mean_best[op][i]:>10.3f}" for op in OPS)
        print(f"{gen:>10d} {row}")
    ranked = sorted(OPS, key=lambda op: result.mean_best[op][-1])
    print("final ranking:", " < ".join(ranked))
