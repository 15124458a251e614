import corrmetric as C
import numpy as np
import pytest
from pathlib import Path


@pytest.fixture
def folder(tmpdir):
    return str(Path(tmpdir.mkdir("test_folder")))


class TestParse:
    def test_remap_in_order_of_first_appearance(self):
        text = "# a comment\n107 42\n\n42 13\n13 107\n"
        n, edges, id_map = C.parse_edge_list(text)
        assert n == 3
        assert id_map == {107: 0, 42: 1, 13: 2}
        assert edges == [(0, 1), (1, 2), (0, 2)]

    def test_duplicates_and_self_pairs(self):
        edge_list = C.parse_edge_list("1 2\n2 1\n3 3\n1 2\n")
        assert edge_list.n == 3
        assert edge_list.edges == [(0, 1)]
        assert edge_list.external_ids == [1, 2, 3]

    def test_to_graph(self):
        g = C.parse_edge_list("5 6\n6 7\n").to_graph()
        assert g.edges() == [(0, 1), (1, 2)]

    def test_reads_lines(self):
        edge_list = C.parse_edge_list(["0 1\n", "1 2\n"])
        assert edge_list.n == 3

    def test_wrong_token_count(self):
        with pytest.raises(ValueError, match="line 2: expected two vertex ids"):
            C.parse_edge_list("0 1\n0 1 2\n")

    def test_non_integer(self):
        with pytest.raises(ValueError, match="line 3: vertex ids must be integers"):
            C.parse_edge_list("0 1\n# comment\na b\n")


def test_load(folder):
    filename = folder + "/graph.txt"
    with open(filename, "w") as f:
        f.write("10 20\n20 30\n")
    edge_list = C.load_edge_list(filename)
    assert edge_list.n == 3
    assert edge_list.external_ids == [10, 20, 30]


def test_write_round_trip(folder):
    g = C.SignedGraph.from_edges(5, [(0, 3), (3, 4)])
    filename = folder + "/out/graph.txt"
    C.write_edge_list(g, filename)
    edge_list = C.load_edge_list(filename)
    assert edge_list.n == 5
    assert edge_list.to_graph() == g


def test_write_external_ids(folder):
    g = C.SignedGraph.from_edges(2, [(0, 1)])
    filename = folder + "/graph.txt"
    C.write_edge_list(g, filename, external_ids=[100, 7])
    assert C.load_edge_list(filename).id_map == {100: 0, 7: 1}


def test_write_clustering(folder):
    clustering = C.Clustering([0, 1, 0])
    filename = folder + "/clusters.csv"
    C.write_clustering(clustering, filename, external_ids=[10, 20, 30])
    data = np.genfromtxt(filename, delimiter=",", names=True, dtype=int)
    assert list(data["vertex"]) == [10, 20, 30]
    assert list(data["cluster"]) == [0, 1, 0]


def test_write_clustering_extension(folder):
    with pytest.raises(ValueError, match="must end with .csv"):
        C.write_clustering(C.Clustering([0]), folder + "/clusters.txt")
