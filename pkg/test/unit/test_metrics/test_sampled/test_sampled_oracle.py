import corrmetric as C
import numpy as np
import pytest


def test_post_process():
    g = C.SignedGraph.from_edges(3, [(0, 1)])
    initial = np.array(
        [
            [0.0, 0.05, 0.99],
            [0.05, 0.0, 0.2],
            [0.99, 0.2, 0.0],
        ]
    )
    ladder = C.ConstantLadder(0.01)
    oracle = C.post_process(g, initial, ladder)
    assert oracle.kind == "sampled"
    assert not oracle.is_exact
    # positive edge below t_low
    assert oracle.query(0, 1) == 0.0
    # negative edge above t_high
    assert oracle.query(0, 2) == 1.0
    # negative edge between the thresholds
    assert oracle.query(1, 2) == 0.2
    # the input is left untouched
    assert initial[0, 1] == 0.05


def test_post_process_snaps_at_the_thresholds():
    # 0 - 1 - 2, the only negative pair is (0, 2)
    g = C.SignedGraph.from_edges(3, [(0, 1), (1, 2)])
    ladder = C.ConstantLadder(0.01)
    t_low, t_high = float(ladder.t_low), float(ladder.t_high)
    initial = np.array(
        [
            [0.0, t_low, t_high],
            [t_low, 0.0, np.nextafter(t_low, 1)],
            [t_high, np.nextafter(t_low, 1), 0.0],
        ]
    )
    oracle = C.post_process(g, initial, ladder)
    assert oracle.query(0, 1) == 0.0
    assert oracle.query(0, 2) == 1.0
    assert oracle.query(1, 2) == np.nextafter(t_low, 1)

    initial[0, 2] = initial[2, 0] = np.nextafter(t_high, 0)
    assert C.post_process(g, initial, ladder).query(0, 2) == np.nextafter(t_high, 0)


def test_post_process_keeps_positive_edges_above_t_low():
    g = C.SignedGraph.from_edges(3, [(0, 1)])
    initial = np.full((3, 3), 0.6)
    np.fill_diagonal(initial, 0)
    oracle = C.post_process(g, initial, C.ConstantLadder(0.01))
    assert oracle.query(0, 1) == 0.6


def test_build_on_planted_cliques():
    g, _ = C.planted_cliques(3, 4)
    config = C.SampleConfig(0.02, seed=0)
    oracle = C.build_sampled_oracle(g, config)
    assert oracle.query(0, 1) == 0.0
    assert oracle.query(0, 4) == 1.0
    assert isinstance(oracle.query(0, 1), float)
    assert oracle.ladder.epsilon == C.ConstantLadder(0.02).epsilon


def test_ball():
    g = C.SignedGraph.from_edges(3, [(0, 1)])
    table = np.array(
        [
            [0.0, 0.3, 0.6],
            [0.3, 0.0, 0.9],
            [0.6, 0.9, 0.0],
        ]
    )
    oracle = C.SampledOracle(g, table)
    vertices, distances = oracle.ball(0, 0.5)
    assert list(vertices) == [1]
    assert distances == [0.3]


def test_dense_array_is_a_copy():
    g = C.SignedGraph.from_edges(2, [])
    table = np.array([[0.0, 1.0], [1.0, 0.0]])
    oracle = C.SampledOracle(g, table)
    oracle.to_dense_array()[0, 1] = 0.5
    assert oracle.query(0, 1) == 1.0


def test_dense_capacity():
    g = C.random_signed_gnp(10, 0.5)
    config = C.SampleConfig(0.01, sample_size=3)
    with pytest.raises(ValueError, match="dense table capacity"):
        C.build_sampled_oracle(g, config, settings=C.Settings(dense_max_vertices=5))
