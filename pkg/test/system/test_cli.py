from corrmetric.cli import main
import json
import numpy as np
import pytest
from pathlib import Path


@pytest.fixture
def folder(tmpdir):
    return str(Path(tmpdir.mkdir("test_folder")))


@pytest.fixture
def instance(folder):
    graph = folder + "/graph.txt"
    truth = folder + "/graph.circles"
    assert main(["gen", "--k", "3", "--size", "4", "--output", graph, "--truth", truth]) == 0
    return graph, truth


def test_gen_with_noise(folder):
    graph = folder + "/noisy.txt"
    assert main(["gen", "--k", "3", "--size", "4", "--flips", "5", "--seed", "2", "-o", graph]) == 0
    with open(graph) as f:
        assert f.readline().startswith("# vertices: 12")


def test_gen_gnp(folder):
    graph = folder + "/gnp.txt"
    assert main(["gen", "--k", "2", "--size", "5", "--gnp", "0.3", "-o", graph]) == 0


def test_cluster(instance, folder):
    graph, _ = instance
    output = folder + "/clusters.csv"
    report = folder + "/report.json"
    metric = folder + "/metric.csv"
    code = main(
        ["cluster", "-i", graph, "-o", output, "--json", report, "--metric-output", metric, "--per-vertex"]
    )
    assert code == 0
    with open(report) as f:
        data = json.load(f)
    assert data["schema"] == 1
    assert data["algorithm"] == "round_dense"
    assert data["num_clusters"] == 3
    assert data["objective_linf"] == 0
    assert data["per_vertex"]["disagreements"] == [0] * 12
    clusters = np.genfromtxt(output, delimiter=",", names=True, dtype=int)
    assert list(clusters["cluster"]) == [0] * 4 + [1] * 4 + [2] * 4


def test_cluster_sparse_swept(instance, folder, capsys):
    graph, _ = instance
    code = main(["cluster", "-i", graph, "--metric", "sparse", "--mode", "swept", "--r1", "0.7"])
    assert code == 0
    assert "round_sparse: 3 clusters" in capsys.readouterr().out


def test_cluster_sampled(instance, folder):
    graph, _ = instance
    report = folder + "/report.json"
    code = main(
        ["cluster", "-i", graph, "--metric", "sampled", "--ladder-limit", "--sample-size", "2", "--json", report]
    )
    assert code == 0
    with open(report) as f:
        data = json.load(f)
    assert data["algorithm"] == "round_approx"
    assert data["num_clusters"] == 3
    assert data["fractional_cost_max_exact"] is None


def test_cluster_infeasible_ladder(instance, capsys):
    graph, _ = instance
    code = main(["cluster", "-i", graph, "--mode", "approx", "--epsilon", "0.02"])
    assert code == 1
    assert "delta2 is too large" in capsys.readouterr().err


def test_cluster_malformed_input(folder, capsys):
    graph = folder + "/bad.txt"
    with open(graph, "w") as f:
        f.write("1 2\n3\n")
    assert main(["cluster", "-i", graph]) == 1
    assert "line 2" in capsys.readouterr().err


def test_pivot(instance, folder, capsys):
    graph, _ = instance
    output = folder + "/pivot.csv"
    assert main(["pivot", "-i", graph, "--trials", "5", "-o", output]) == 0
    assert "Pivot mean max disagreements over 5 trials: 0.0000" in capsys.readouterr().out
    assert Path(output).exists()


def test_oracle(folder, capsys):
    graph = folder + "/small.txt"
    with open(graph, "w") as f:
        f.write("10 20\n20 30\n")
    assert main(["oracle", "-i", graph]) == 0
    out = capsys.readouterr().out
    assert "opt_value: 1" in out
    assert "cluster 0: 10 20" in out


def test_eval(instance, folder):
    graph, truth = instance
    report = folder + "/row.json"
    code = main(
        ["eval", "-i", graph, "--circles", truth, "--min-size", "4", "--trials", "5", "--json", report]
    )
    assert code == 0
    with open(report) as f:
        row = json.load(f)
    assert row["vertices"] == 12
    assert row["objective_linf"] == 0
    assert [entry[3] for entry in row["containment"]] == [1.0, 1.0, 1.0]


def test_sweep(instance, folder):
    graph, _ = instance
    output = folder + "/sweep.csv"
    assert main(["sweep", "-i", graph, "--steps", "3", "-o", output]) == 0
    with open(output) as f:
        assert len(f.read().splitlines()) == 4


def test_noise(folder, capsys):
    output = folder + "/noise.csv"
    code = main(
        ["noise", "--k", "2", "--size", "4", "--levels", "2", "--flips-per-level", "2", "-o", output]
    )
    assert code == 0
    out = capsys.readouterr().out
    assert "level 2:" in out
    assert "clusters below 88% containment" in out
    with open(output) as f:
        assert len(f.read().splitlines()) == 4


def test_cluster_sampled_defaults(instance, folder):
    graph, _ = instance
    report = folder + "/report.json"
    with pytest.warns(UserWarning, match="no rounding radius"):
        code = main(["cluster", "-i", graph, "--metric", "sampled", "--json", report])
    assert code == 0
    with open(report) as f:
        data = json.load(f)
    assert data["algorithm"] == "round_approx"
    assert data["num_clusters"] == 3
    assert data["params"]["epsilon"] == 0.02
    assert data["params"]["rounding_epsilon"] == 0.0


def test_cluster_sampled_keeps_epsilon_thresholds(folder):
    # clique on 10..14 plus the edge 10 - 15, d(10, 11) = 1/6
    graph = folder + "/tail.txt"
    with open(graph, "w") as f:
        for u in range(10, 15):
            for v in range(u + 1, 15):
                f.write(f"{u} {v}\n")
        f.write("10 15\n")
    metric = folder + "/metric.csv"
    code = main(
        ["cluster", "-i", graph, "--metric", "sampled", "--ladder-limit", "--metric-output", metric]
    )
    assert code == 0
    table = np.genfromtxt(metric, delimiter=",", names=True)
    row = (table["u"] == 10) & (table["v"] == 11)
    assert row.sum() == 1
    assert table["value"][row][0] == 0.0


def test_gen_truth_in_new_folder(folder):
    graph = folder + "/graph.txt"
    truth = folder + "/truth/nested/graph.circles"
    assert main(["gen", "--k", "2", "--size", "3", "-o", graph, "--truth", truth]) == 0
    with open(truth) as f:
        assert f.read().splitlines() == ["circle0\t0\t1\t2", "circle1\t3\t4\t5"]
