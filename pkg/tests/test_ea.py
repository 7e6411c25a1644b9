import numpy as np
import pytest

from permlab import ea, landscapes, mutation, perms


def small_config(seed=0, generations=40, operator="swap"):
    land = landscapes.problem_spec("haystack-exact-match", n=12).build(999)
    return ea.EaConfig(landscape=land, operator=mutation.make_operator(operator),
                       generations=generations, population_size=20, seed=seed)


def test_fitness_examples():
    assert ea.fitness(0) == 1.0
    assert ea.fitness(1) == 0.5
    assert ea.fitness(0.5) > ea.fitness(2.0)
    with pytest.raises(ValueError):
        ea.fitness(-0.1)


def test_sus_uniform_fitness_selects_everyone_once():
    rng = perms.RandomSource(1)
    idx = ea.sus_select(np.ones(10), 10, rng)
    assert sorted(idx.tolist()) == list(range(10))


def test_sus_dominant_individual_always_selected():
    # index 0 holds half the total fitness: expected copies >= 1 for count=2
    f = np.array([3.0, 1.0, 1.0, 1.0])
    for seed in range(200):
        idx = ea.sus_select(f, 2, perms.RandomSource(seed))
        assert 0 in idx.tolist()


def test_sus_copy_counts_bracket_expectation():
    rng = perms.RandomSource(2)
    for trial in range(100):
        k = int(rng.integers(2, 12))
        f = rng.random(k) + 0.01
        count = int(rng.integers(1, 30))
        idx = ea.sus_select(f, count, perms.RandomSource(trial + 500))
        copies = np.bincount(idx, minlength=k)
        expected = count * f / f.sum()
        assert (copies >= np.floor(expected) - 1e-9).all()
        assert (copies <= np.ceil(expected) + 1e-9).all()


def test_sus_frequencies_match_fitness_shares():
    f = np.array([5.0, 3.0, 1.0, 1.0])
    totals = np.zeros(4)
    trials = 2000
    for seed in range(trials):
        totals += np.bincount(ea.sus_select(f, 5, perms.RandomSource(seed)),
                              minlength=4)
    expected = trials * 5 * f / f.sum()
    sigma = np.sqrt(trials * 5 * (f / f.sum()) * (1 - f / f.sum()))
    assert (np.abs(totals - expected) < 3 * sigma + 1).all()


def test_sus_rejects_bad_input():
    rng = perms.RandomSource(3)
    with pytest.raises(ValueError):
        ea.sus_select(np.array([1.0, 0.0]), 2, rng)
    with pytest.raises(ValueError):
        ea.sus_select(np.array([1.0, 2.0]), 0, rng)


def test_default_checkpoints():
    assert ea.default_checkpoints(1000) == (1, 2, 5, 10, 20, 50, 100, 200, 500, 1000)
    assert ea.default_checkpoints(7) == (1, 2, 5, 7)
    assert ea.default_checkpoints(1) == (1,)


def test_config_validation():
    land = landscapes.problem_spec("tsp", n=8).build(1)
    op = mutation.make_operator("swap")
    with pytest.raises(ValueError):
        ea.EaConfig(landscape=land, operator=op, generations=10,
                    population_size=1)
    with pytest.raises(ValueError):
        ea.EaConfig(landscape=land, operator=op, generations=10,
                    checkpoints=(5, 20))


def test_run_trace_monotone_and_deterministic():
    trace1 = ea.run(small_config(seed=11))
    trace2 = ea.run(small_config(seed=11))
    trace3 = ea.run(small_config(seed=12))
    assert np.array_equal(trace1.best_cost, trace2.best_cost)
    assert np.array_equal(trace1.mean_cost, trace2.mean_cost)
    assert not np.array_equal(trace1.best_cost, trace3.best_cost)
    assert (np.diff(trace1.best_cost) <= 0).all()
    assert trace1.generations[-1] == 40


def test_identity_cost_operator_keeps_best_flat():
    # rotating the whole array leaves an integer cyclic-edge cost untouched,
    # so the operator is cost-identity and elitism pins the best forever
    land = landscapes.problem_spec("haystack-cyclic-edge", n=10).build(5)

    def rotate(p, rng):
        return np.roll(p, 1 + int(rng.integers(p.size - 1)))

    op = mutation.MutationOperator("rotate", rotate)
    config = ea.EaConfig(landscape=land, operator=op, generations=30,
                         population_size=10, seed=3)
    trace = ea.run(config)
    assert trace.best_cost.min() == trace.best_cost.max()


def test_population_stays_valid_with_custom_checkpoints():
    land = landscapes.problem_spec("haystack-lee", n=10).build(2)
    inner = mutation.make_operator("insertion")
    seen = []

    def checked(p, rng):
        assert perms.is_permutation(p)
        seen.append(1)
        return inner(p, rng)

    config = ea.EaConfig(landscape=land,
                         operator=mutation.MutationOperator("checked", checked),
                         generations=25, population_size=12, seed=9,
                         checkpoints=(1, 25))
    trace = ea.run(config)
    # every selected parent across all generations was a valid permutation
    assert len(seen) == 25 * 11
    assert trace.generations.tolist() == [1, 25]
    assert trace.best_cost[1] <= trace.best_cost[0]


def test_swap_solves_small_haystack():
    # desk-scale pilot: exact-match haystack, n=10, swap; all seeds reach 0
    spec = landscapes.problem_spec("haystack-exact-match", n=10)
    solved = 0
    for seed in range(10):
        land = spec.build(seed)
        config = ea.EaConfig(landscape=land,
                             operator=mutation.make_operator("swap"),
                             generations=1000, population_size=100, seed=seed)
        if ea.run(config).final_best() == 0.0:
            solved += 1
    assert solved >= 9


def test_compare_single_cell_equals_run():
    spec = landscapes.problem_spec("haystack-exact-match", n=12)
    result = ea.compare(["swap"], spec, runs=1, instances=1, generations=30,
                        population_size=20, seed=42)
    land = spec.build(perms.derive_seed(42, "instance", 0))
    config = ea.EaConfig(landscape=land, operator=mutation.make_operator("swap"),
                         generations=30, population_size=20,
                         seed=perms.derive_seed(42, "run", 0, 0),
                         checkpoints=result.checkpoints)
    trace = ea.run(config)
    assert np.array_equal(result.mean_best["swap"], trace.best_cost)


def test_compare_thread_invariance_and_shared_instances():
    spec = landscapes.problem_spec("tsp", n=10)
    kwargs = dict(runs=2, instances=2, generations=20, population_size=10, seed=7)
    r1 = ea.compare(["swap", "reversal"], spec, threads=1, **kwargs)
    r2 = ea.compare(["swap", "reversal"], spec, threads=2, **kwargs)
    for op in ("swap", "reversal"):
        assert np.array_equal(r1.mean_best[op], r2.mean_best[op])
    assert r1.checkpoints == r2.checkpoints


def test_compare_rejects_empty_and_unknown_operators():
    spec = landscapes.problem_spec("tsp", n=8)
    with pytest.raises(ValueError):
        ea.compare([], spec, runs=1, instances=1, generations=5)
    with pytest.raises(ValueError):
        ea.compare(["nope"], spec, runs=1, instances=1, generations=5)
