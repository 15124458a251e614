import corrmetric as C
import numpy as np
import pytest


@pytest.fixture
def cliques():
    graph, _ = C.planted_cliques(2, 5)
    return graph


def test_genuine_sampling(cliques):
    config = C.SampleConfig(0.01, seed=3, sample_size=3)
    samples = C.draw_samples(cliques, config)
    assert samples.m == 3
    assert not samples.exact_flag.any()
    for u in range(cliques.n):
        sample = samples[u]
        assert len(sample) == 3
        assert len(set(sample.tolist())) == 3
        assert list(sample) == sorted(sample)
        assert set(sample.tolist()) <= cliques.positive_set_with_self(u)
    assert np.allclose(samples.scale, 5 / 3)


def test_exact_fallback(cliques):
    config = C.SampleConfig(0.01, sample_size=6)
    samples = C.draw_samples(cliques, config)
    assert samples.exact_flag.all()
    for u in range(cliques.n):
        assert list(samples[u]) == cliques.positive_neighborhood_with_self(u)
    assert np.allclose(samples.scale, 1)


def test_sample_size_equal_to_degree(cliques):
    config = C.SampleConfig(0.01, sample_size=5)
    samples = C.draw_samples(cliques, config)
    assert not samples.exact_flag.any()
    for u in range(cliques.n):
        assert list(samples[u]) == cliques.positive_neighborhood_with_self(u)


def test_default_size_falls_back_on_small_graphs(cliques):
    samples = C.draw_samples(cliques, C.SampleConfig(0.01))
    assert samples.exact_flag.all()


def test_same_seed_same_samples():
    g = C.random_signed_gnp(40, 0.5, seed=0)
    first = C.draw_samples(g, C.SampleConfig(0.01, seed=9, sample_size=4))
    second = C.draw_samples(g, C.SampleConfig(0.01, seed=9, sample_size=4))
    for a, b in zip(first.samples, second.samples):
        assert np.array_equal(a, b)


def test_indicator_matrix(cliques):
    samples = C.draw_samples(cliques, C.SampleConfig(0.01, seed=1, sample_size=2))
    matrix = samples.indicator_matrix().toarray()
    assert matrix.shape == (10, 10)
    assert np.all(matrix.sum(axis=1) == 2)
    for u in range(cliques.n):
        assert list(np.flatnonzero(matrix[u])) == list(samples[u])
