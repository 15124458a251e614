import corrmetric as C
import numpy as np
import pytest


def test_clusters():
    clustering = C.Clustering([0, 0, 1, 0])
    assert clustering.n == 4
    assert clustering.clusters == [[0, 1, 3], [2]]
    assert clustering.num_clusters == len(clustering) == 2
    assert clustering.sizes == [3, 1]
    assert clustering.cluster_of(2) == 1
    assert clustering.same_cluster(0, 3)
    assert not clustering.same_cluster(0, 2)
    assert list(clustering) == [[0, 1, 3], [2]]


def test_empty_cluster():
    with pytest.raises(ValueError, match="cluster 1 is empty"):
        C.Clustering([0, 2, 2])


def test_negative_label():
    with pytest.raises(ValueError, match="non-negative"):
        C.Clustering([0, -1])


def test_centers():
    clustering = C.Clustering([0, 0, 1], centers=[1, 2])
    assert clustering.centers == [1, 2]
    with pytest.raises(ValueError, match="center 2 does not belong to cluster 0"):
        C.Clustering([0, 0, 1], centers=[2, 2])
    with pytest.raises(ValueError, match="expected 2 centers"):
        C.Clustering([0, 0, 1], centers=[0])


class TestFromClusters:
    def test_assignment(self):
        clustering = C.Clustering.from_clusters([[0, 2], [1]])
        assert list(clustering.assignment) == [0, 1, 0]

    def test_overlap(self):
        with pytest.raises(ValueError, match="vertex 0 appears in two clusters"):
            C.Clustering.from_clusters([[0, 1], [0]], n=2)

    def test_missing_vertex(self):
        with pytest.raises(ValueError, match="vertex 2 is not clustered"):
            C.Clustering.from_clusters([[0], [1]], n=3)

    def test_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            C.Clustering.from_clusters([[0, 5]], n=2)


def test_canonical_and_same_partition():
    a = C.Clustering([1, 1, 0, 2])
    b = C.Clustering([0, 0, 2, 1])
    assert list(a.canonical().assignment) == [0, 0, 1, 2]
    assert a.same_partition(b)
    assert a != b
    assert not a.same_partition(C.Clustering([0, 1, 1, 2]))


def test_equality():
    assert C.Clustering(np.array([0, 1])) == C.Clustering([0, 1])
