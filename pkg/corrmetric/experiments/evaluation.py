import time

from corrmetric.baselines.pivot import pivot_mean_objective
from corrmetric.graph.signed_graph import graph_statistics
from corrmetric.model import CorrelationClustering


def evaluate_instance(g, metric="exact", rounding=None, trials=500, seed=0, settings=None):
    """One row of the evaluation table of a graph: dataset statistics,
    fractional cost, our objective, the mean Pivot objective and run-time

    Args:
        g (corrmetric.SignedGraph): the graph
        metric (str, optional): "exact" or "sparse". Defaults to "exact".
        rounding (corrmetric.RoundingParams, optional): Defaults to None
            (r1 = 1/5, r2 = 2/5).
        trials (int, optional): Pivot runs averaged. Defaults to 500.
        seed (int, optional): seed of the Pivot orders. Defaults to 0.
        settings (corrmetric.Settings, optional): Defaults to None.

    Returns:
        dict: the row, plus the CorrelationClustering under "model"
    """
    model = CorrelationClustering(g, metric=metric, rounding=rounding, settings=settings)
    report = model.run()

    start = time.perf_counter()
    pivot_mean = pivot_mean_objective(g, trials=trials, seed=seed)
    pivot_ms = (time.perf_counter() - start) * 1e3

    row = graph_statistics(g)
    row.update(
        {
            "fractional_cost_max": float(report.fractional_cost_max),
            "objective_linf": report.objective_linf,
            "pivot_mean_linf": pivot_mean,
            "runtime_ms": report.runtime_ms,
            "pivot_runtime_ms": pivot_ms,
            "num_clusters": report.num_clusters,
            "model": model,
        }
    )
    return row
