import corrmetric as C
import itertools
import numpy as np
import pytest


@pytest.mark.parametrize("seed", range(5))
def test_all_negative_graph_gives_singletons(seed):
    g = C.SignedGraph.from_edges(6, [])
    assert C.pivot(g, seed=seed).num_clusters == 6


@pytest.mark.parametrize("seed", range(5))
def test_clique_gives_one_cluster(seed):
    g = C.SignedGraph.from_edges(6, list(itertools.combinations(range(6), 2)))
    assert C.pivot(g, seed=seed).num_clusters == 1


def test_path_expectation_over_all_orders():
    g = C.SignedGraph.from_edges(3, [(0, 1), (1, 2)])
    values = [
        C.disagreement_vector(g, C.pivot(g, order=order)).max_value
        for order in itertools.permutations(range(3))
    ]
    assert np.mean(values) == 1


def test_path_mean_over_random_orders():
    g = C.SignedGraph.from_edges(3, [(0, 1), (1, 2)])
    mean = C.pivot_mean_objective(g, trials=10000, seed=0)
    assert mean == pytest.approx(1, abs=0.02)
