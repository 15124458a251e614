import corrmetric as C
import numpy as np
import pytest
from pathlib import Path


@pytest.fixture
def folder(tmpdir):
    return str(Path(tmpdir.mkdir("test_folder")))


@pytest.fixture
def path():
    """0 - 1 - 2"""
    return C.SignedGraph.from_edges(3, [(0, 1), (1, 2)])


class TestFilename:
    def test_extension(self):
        with pytest.raises(ValueError, match="must end with .csv"):
            C.MetricCSVExport("metric.txt")

    def test_type(self):
        with pytest.raises(TypeError, match="filename must be a string"):
            C.ClusteringCSVExport(3)

    def test_field(self):
        assert C.MetricCSVExport("m.csv").field == "metric"
        assert C.ClusteringCSVExport("c.csv").field == "clustering"


def test_write_dense_metric(folder, path):
    filename = folder + "/metric.csv"
    C.write_metric(C.build_dense_oracle(path), filename)
    data = np.genfromtxt(filename, delimiter=",", names=True, dtype=int)
    assert data.dtype.names == ("u", "v", "num", "den")
    assert [tuple(row) for row in data] == [(0, 1, 1, 3), (0, 2, 2, 3), (1, 2, 1, 3)]


def test_write_sparse_metric_with_external_ids(folder):
    g = C.SignedGraph.from_edges(4, [(0, 1), (2, 3)])
    filename = folder + "/sub/metric.csv"
    C.write_metric(C.build_sparse_oracle(g), filename, external_ids=[11, 12, 13, 14])
    data = np.genfromtxt(filename, delimiter=",", names=True, dtype=int)
    assert [tuple(row) for row in data] == [(11, 12, 0, 1), (13, 14, 0, 1)]


def test_write_sampled_metric(folder):
    g = C.SignedGraph.from_edges(3, [])
    table = np.array([[0.0, 0.25, 1.0], [0.25, 0.0, 0.5], [1.0, 0.5, 0.0]])
    filename = folder + "/metric.csv"
    C.write_metric(C.SampledOracle(g, table), filename)
    data = np.genfromtxt(filename, delimiter=",", names=True)
    assert data.dtype.names == ("u", "v", "value")
    assert list(data["value"]) == [0.25, 1.0, 0.5]


def test_exports_write_from_a_run(folder, path):
    metric_file = folder + "/metric.csv"
    clustering_file = folder + "/clustering.csv"
    model = C.CorrelationClustering(
        path,
        exports=[C.MetricCSVExport(metric_file), C.ClusteringCSVExport(clustering_file)],
        external_ids=[5, 6, 7],
    )
    model.run()
    clusters = np.genfromtxt(clustering_file, delimiter=",", names=True, dtype=int)
    assert list(clusters["vertex"]) == [5, 6, 7]
    assert list(clusters["cluster"]) == [0, 0, 1]
    metric = np.genfromtxt(metric_file, delimiter=",", names=True, dtype=int)
    assert len(metric) == 3
