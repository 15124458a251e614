import corrmetric as C
import itertools
import numpy as np
import pytest


def all_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(2 ** len(pairs)):
        edges = [pair for i, pair in enumerate(pairs) if mask >> i & 1]
        yield C.SignedGraph.from_edges(n, edges)


def random_graphs(seed, count=30):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(2, 9))
        p = float(rng.random())
        yield C.random_signed_gnp(n, p, seed=int(rng.integers(2**31)))


def check_bounds(g):
    opt = C.brute_force_opt(g).opt_value
    oracle = C.build_dense_oracle(g)
    clustering = C.round_dense(oracle, C.RoundingParams.theory())
    y = C.disagreement_vector(g, clustering)
    cost = C.fractional_cost(g, oracle)

    assert cost.exact
    assert y.max_value <= 40 * opt
    assert cost.max_value <= 8 * opt
    for u in range(g.n):
        assert y[u] <= 5 * cost[u]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_all_small_graphs(n):
    for g in all_graphs(n):
        check_bounds(g)


@pytest.mark.parametrize("seed", range(10))
def test_random_graphs(seed):
    for g in random_graphs(seed):
        check_bounds(g)


def test_sparse_rounding_bounds():
    for g in random_graphs(99, count=20):
        opt = C.brute_force_opt(g).opt_value
        clustering = C.round_sparse(C.build_sparse_oracle(g), g, C.RoundingParams.theory())
        assert C.disagreement_vector(g, clustering).max_value <= 40 * opt
