import corrmetric as C
import time


def test_sparse_pipeline_on_bounded_degree_graph():
    g = C.random_bounded_degree(5000, 25, seed=0)
    assert g.delta_max <= 50

    start = time.perf_counter()
    oracle = C.build_sparse_oracle(g)
    clustering = C.round_sparse(oracle, g, C.RoundingParams.theory())
    elapsed = time.perf_counter() - start

    assert clustering.n == 5000
    assert elapsed < 60


def test_dense_pipeline_on_small_graph():
    g = C.random_signed_gnp(100, 0.3, seed=0)

    start = time.perf_counter()
    oracle = C.build_dense_oracle(g)
    C.round_dense(oracle, C.RoundingParams.theory())
    elapsed = time.perf_counter() - start

    assert elapsed < 1
