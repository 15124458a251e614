import math

from corrmetric.rounding.clustering import Clustering
from corrmetric.settings import DEFAULT_SETTINGS


class OracleResult:
    """
    Optimal Min-Max value of a small instance

    Args:
        opt_value (int): the optimal l_inf objective
        witness (corrmetric.Clustering): an optimal clustering (the
            lexicographically smallest restricted-growth string)
        partitions_scanned (int): complete partitions evaluated

    Attributes:
        opt_value (int): the optimal l_inf objective
        witness (corrmetric.Clustering): an optimal clustering
        partitions_scanned (int): complete partitions evaluated
    """

    def __init__(self, opt_value, witness, partitions_scanned) -> None:
        self.opt_value = opt_value
        self.witness = witness
        self.partitions_scanned = partitions_scanned

    def __repr__(self):
        return (
            f"OracleResult(opt_value={self.opt_value}, "
            f"clusters={self.witness.num_clusters}, "
            f"partitions_scanned={self.partitions_scanned})"
        )


def brute_force_opt(g, prune=True, settings=None):
    """Exact Min-Max correlation clustering by enumerating set partitions as
    restricted-growth strings in lexicographic order.

    Disagreements are updated incrementally as vertices get labels. With
    prune, a branch is abandoned as soon as some vertex already has at
    least as many disagreements as the best complete partition.

    Args:
        g (corrmetric.SignedGraph): the graph
        prune (bool, optional): abandon dominated branches. Defaults to
            True.
        settings (corrmetric.Settings, optional): holds the vertex cap.
            Defaults to None.

    Raises:
        ValueError: if n exceeds settings.brute_force_max_vertices

    Returns:
        OracleResult: the optimum
    """
    settings = settings or DEFAULT_SETTINGS
    n = g.n
    if n > settings.brute_force_max_vertices:
        raise ValueError(
            f"n={n} exceeds the brute-force capacity "
            f"({settings.brute_force_max_vertices} vertices)"
        )

    is_positive = [[g.is_positive(u, v) for v in range(n)] for u in range(n)]
    labels = [0] * n
    y = [0] * n
    best = {"value": math.inf, "labels": None, "scanned": 0}

    def assign(i, num_labels):
        if i == n:
            best["scanned"] += 1
            value = max(y, default=0)
            if value < best["value"]:
                best["value"] = value
                best["labels"] = list(labels)
            return
        for label in range(num_labels + 1):
            labels[i] = label
            changed = []
            for j in range(i):
                if is_positive[i][j] != (labels[j] == label):
                    y[i] += 1
                    y[j] += 1
                    changed.append(j)
            if not prune or max(y, default=0) < best["value"]:
                assign(i + 1, max(num_labels, label + 1))
            y[i] -= len(changed)
            for j in changed:
                y[j] -= 1

    assign(0, 0)
    return OracleResult(
        opt_value=int(best["value"]),
        witness=Clustering(best["labels"]),
        partitions_scanned=best["scanned"],
    )
