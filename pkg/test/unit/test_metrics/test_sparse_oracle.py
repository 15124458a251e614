import corrmetric as C
from fractions import Fraction
import pytest


@pytest.fixture
def path():
    """0 - 1 - 2 - 3"""
    return C.SignedGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])


def test_stores_two_hop_pairs_only(path):
    oracle = C.build_sparse_oracle(path)
    assert oracle.kind == "sparse-exact"
    assert oracle.num_stored_pairs == 5
    stored = [(u, v) for u, v, _ in oracle.stored_pairs()]
    assert stored == [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]


def test_queries(path):
    oracle = C.build_sparse_oracle(path)
    assert oracle.query(0, 1) == Fraction(1, 3)
    assert oracle.query(1, 2) == Fraction(1, 2)
    assert oracle.query(0, 2) == Fraction(3, 4)
    assert oracle.query(0, 3) == 1
    assert oracle.query(3, 0) == 1


def test_rows_are_sorted(path):
    oracle = C.build_sparse_oracle(path)
    partners, nums, dens = oracle.row(1)
    assert list(partners) == [0, 2, 3]
    assert len(nums) == len(dens) == 3


def test_ball(path):
    oracle = C.build_sparse_oracle(path)
    vertices, distances = oracle.ball(1, Fraction(1, 2))
    assert list(vertices) == [0, 2]
    assert distances == [Fraction(1, 3), Fraction(1, 2)]


def test_ball_radius_must_be_below_one(path):
    oracle = C.build_sparse_oracle(path)
    with pytest.raises(ValueError, match="radius < 1"):
        oracle.ball(0, 1)


def test_empty_graph():
    g = C.SignedGraph.from_edges(5, [])
    oracle = C.build_sparse_oracle(g)
    assert oracle.num_stored_pairs == 0
    assert oracle.query(1, 4) == 1


@pytest.mark.parametrize("seed", [0, 1, 2, 3])
def test_agrees_with_dense(seed):
    g = C.random_signed_gnp(20, 0.15, seed=seed)
    dense = C.build_dense_oracle(g)
    sparse = C.build_sparse_oracle(g)
    for u in range(g.n):
        for v in range(g.n):
            if u != v:
                assert dense.query(u, v) == sparse.query(u, v)
