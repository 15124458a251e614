import corrmetric as C
import pytest


def test_path():
    g = C.SignedGraph.from_edges(3, [(0, 1), (1, 2)])
    result = C.brute_force_opt(g)
    assert result.opt_value == 1
    assert C.disagreement_vector(g, result.witness).max_value == 1


def test_no_pruning_scans_every_partition():
    g = C.SignedGraph.from_edges(3, [(0, 1), (1, 2)])
    assert C.brute_force_opt(g, prune=False).partitions_scanned == 5
    g = C.SignedGraph.from_edges(5, [])
    assert C.brute_force_opt(g, prune=False).partitions_scanned == 52


def test_pruning_keeps_the_optimum():
    for seed in range(5):
        g = C.random_signed_gnp(7, 0.4, seed=seed)
        pruned = C.brute_force_opt(g)
        full = C.brute_force_opt(g, prune=False)
        assert pruned.opt_value == full.opt_value
        assert pruned.partitions_scanned <= full.partitions_scanned


def test_perfect_instance():
    g, truth = C.planted_cliques(2, 3)
    result = C.brute_force_opt(g)
    assert result.opt_value == 0
    assert result.witness.same_partition(truth)


def test_single_vertex():
    result = C.brute_force_opt(C.SignedGraph.from_edges(1, []))
    assert result.opt_value == 0
    assert result.partitions_scanned == 1


def test_capacity():
    g = C.SignedGraph.from_edges(6, [])
    settings = C.Settings(brute_force_max_vertices=5)
    with pytest.raises(ValueError, match="brute-force capacity"):
        C.brute_force_opt(g, settings=settings)
