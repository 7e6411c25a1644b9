"""Mutation-only generational evolutionary algorithm.

Each generation keeps the single best member unaltered, fills the rest of
the population by stochastic universal sampling over fitness 1/(1+cost),
and applies exactly one mutation to every selected parent. Identical
configurations (seed included) reproduce identical traces.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import batch as _batch
from .landscapes import Landscape, ProblemSpec
from .mutation import MutationOperator, make_operator
from .perms import RandomSource, derive_seed


def fitness(cost: float) -> float:
    """Map a non-negative cost into (0, 1], monotonically decreasing."""
    if cost < 0:
        raise ValueError("cost must be non-negative")
    return 1.0 / (1.0 + cost)


def sus_select(fitnesses, count: int, rng: RandomSource) -> np.ndarray:
    """Stochastic universal sampling: `count` indices from one spin.

    Equally spaced pointers with a single uniform offset walk the
    cumulative fitness wheel, so each index is drawn either floor or ceil
    of its expected copy count.
    """
    f = np.asarray(fitnesses, dtype=np.float64)
    if count < 1:
        raise ValueError("count must be >= 1")
    if f.ndim != 1 or f.size == 0 or (f <= 0).any():
        raise ValueError("fitnesses must be a non-empty positive vector")
    wheel = np.cumsum(f)
    step = wheel[-1] / count
    points = rng.uniform(0.0, step) + step * np.arange(count)
    idx = np.searchsorted(wheel, points, side="right")
    return np.minimum(idx, f.size - 1)


def default_checkpoints(generations: int) -> tuple:
    """1-2-5 grid up to and including the final generation."""
    marks = []
    base = 1
    while base <= generations:
        for mult in (1, 2, 5):
            g = base * mult
            if g <= generations:
                marks.append(g)
        base *= 10
    if generations not in marks:
        marks.append(generations)
    return tuple(sorted(marks))


@dataclass(frozen=True)
class EaConfig:
    landscape: Landscape
    operator: MutationOperator
    generations: int
    population_size: int = 100
    seed: int = 0
    checkpoints: tuple | None = None

    def __post_init__(self):
        if self.population_size < 2:
            raise ValueError("population_size must be >= 2")
        if self.generations < 1:
            raise ValueError("generations must be >= 1")
        cks = self.checkpoints
        if cks is not None and any(c > self.generations or c < 1 for c in cks):
            raise ValueError("checkpoints must lie in [1, generations]")


@dataclass(frozen=True)
class RunTrace:
    generations: np.ndarray
    best_cost: np.ndarray
    mean_cost: np.ndarray

    def final_best(self) -> float:
        return float(self.best_cost[-1])


def run(config: EaConfig) -> RunTrace:
    """Execute one seeded run and record statistics at the checkpoints."""
    rng = RandomSource(config.seed)
    land = config.landscape
    op = config.operator
    pop_size = config.population_size
    checkpoints = config.checkpoints or default_checkpoints(config.generations)
    pop = _batch.random_permutation_batch(land.n, pop_size, rng)
    costs = np.asarray(land.cost_batch(pop), dtype=np.float64)
    best_so_far = float(costs.min())
    marks = set(checkpoints)
    gens, bests, means = [], [], []
    for gen in range(1, config.generations + 1):
        elite = int(np.argmin(costs))
        parents = sus_select(1.0 / (1.0 + costs), pop_size - 1, rng)
        children = np.empty((pop_size - 1, land.n), dtype=pop.dtype)
        for row, idx in enumerate(parents):
            children[row] = op(pop[idx], rng)
        child_costs = np.asarray(land.cost_batch(children), dtype=np.float64)
        pop = np.concatenate([pop[elite:elite + 1], children], axis=0)
        costs = np.concatenate([costs[elite:elite + 1], child_costs])
        best_so_far = min(best_so_far, float(costs.min()))
        if gen in marks:
            gens.append(gen)
            bests.append(best_so_far)
            means.append(float(costs.mean()))
    return RunTrace(np.array(gens), np.array(bests), np.array(means))


@dataclass(frozen=True)
class ComparisonResult:
    """Mean best-cost convergence per operator, averaged over all runs."""
    problem: str
    checkpoints: tuple
    mean_best: dict
    runs: int
    instances: int
    params: dict = field(default_factory=dict)


def _one_run(problem: ProblemSpec, op_spec: str, population_size: int,
             generations: int, checkpoints: tuple, seed: int,
             instance: int, run_idx: int) -> np.ndarray:
    land = problem.build(derive_seed(seed, "instance", instance))
    config = EaConfig(landscape=land, operator=make_operator(op_spec),
                      generations=generations, population_size=population_size,
                      seed=derive_seed(seed, "run", instance, run_idx),
                      checkpoints=checkpoints)
    return run(config).best_cost


def compare(operators, problem: ProblemSpec, *, runs: int, instances: int,
            generations: int, population_size: int = 100, seed: int = 0,
            checkpoints: tuple | None = None, threads: int = 1
            ) -> ComparisonResult:
    """Convergence comparison of operators over seeded problem instances.

    Instance landscapes and run seeds derive from (seed, instance, run)
    only, so every operator sees the same instances and starting
    populations, and results are identical at any thread count.
    """
    op_specs = [op if isinstance(op, str) else op.name for op in operators]
    if not op_specs:
        raise ValueError("need at least one operator")
    for spec in op_specs:
        make_operator(spec)
    checkpoints = checkpoints or default_checkpoints(generations)
    tasks = [(spec, inst, r)
             for spec in op_specs for inst in range(instances) for r in range(runs)]
    args = [(problem, spec, population_size, generations, checkpoints, seed,
             inst, r) for spec, inst, r in tasks]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_one_run, *zip(*args), chunksize=4))
    else:
        results = [_one_run(*a) for a in args]
    totals = {spec: np.zeros(len(checkpoints)) for spec in op_specs}
    for (spec, _, _), best in zip(tasks, results):
        totals[spec] += best
    scale = 1.0 / (runs * instances)
    mean_best = {spec: totals[spec] * scale for spec in op_specs}
    return ComparisonResult(problem=problem.name, checkpoints=checkpoints,
                            mean_best=mean_best, runs=runs, instances=instances,
                            params={"population_size": population_size,
                                    "generations": generations, "seed": seed,
                                    "n": problem.n})
