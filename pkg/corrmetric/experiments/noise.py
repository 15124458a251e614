import warnings

import numpy as np

from corrmetric.exports.run_report import RunReports
from corrmetric.generators.planted_cliques import flip_noise, planted_cliques
from corrmetric.io.circles import Circle, CircleSet, circle_containment_report
from corrmetric.model import CorrelationClustering
from corrmetric.rounding.rounding_params import RoundingParams


def preservation_counts(truth, clustering):
    """For every ground-truth cluster, the largest number of its members
    placed in a single output cluster

    Args:
        truth (corrmetric.Clustering): the planted clusters
        clustering (corrmetric.Clustering): the output

    Returns:
        list of int: one count per planted cluster
    """
    if truth.n != clustering.n:
        raise ValueError("both clusterings must cover the same vertices")
    counts = []
    for members in truth.clusters:
        labels = clustering.assignment[members]
        counts.append(int(np.bincount(labels).max()))
    return counts


def containment_fractions(truth, clustering):
    """For every output cluster, the largest fraction of its members lying
    in a single ground-truth cluster

    Args:
        truth (corrmetric.Clustering): the planted clusters
        clustering (corrmetric.Clustering): the output

    Returns:
        list of float: one fraction per output cluster
    """
    if truth.n != clustering.n:
        raise ValueError("both clusterings must cover the same vertices")
    circles = CircleSet(
        [Circle(f"clique{label}", members) for label, members in enumerate(truth.clusters)]
    )
    report = circle_containment_report(clustering, circles, min_size=1)
    return [entry.fraction for entry in report]


def noise_experiment(
    k=10,
    size=10,
    levels=range(21),
    flips_per_level=45,
    seed=0,
    r1=0.7,
    r2=0.7,
    metric="exact",
    containment_threshold=0.88,
    filename=None,
):
    """Planted cliques with increasing sign noise.

    Level i flips flips_per_level * i pairs of the clean graph. Every level
    is drawn independently from the child of the root seed keyed by i, so
    the graph of a level does not depend on which other levels are run.

    Args:
        k (int, optional): number of planted cliques. Defaults to 10.
        size (int, optional): clique size. Defaults to 10.
        levels (iterable, optional): noise levels. Defaults to 0..20.
        flips_per_level (int, optional): Defaults to 45.
        seed (int, optional): root seed. Defaults to 0.
        r1 (float, optional): score radius. Defaults to 0.7.
        r2 (float, optional): cut radius. Defaults to 0.7.
        metric (str, optional): "exact" or "sparse". Defaults to "exact".
        containment_threshold (float, optional): output clusters whose
            containment in a planted cluster is below this value are
            counted as poorly contained. Defaults to 0.88.
        filename (str, optional): CSV output. Defaults to None.

    Returns:
        corrmetric.RunReports: one report per level; params hold the level,
            the number of flips, the smallest and mean preservation count
            over planted clusters, the smallest containment of an output
            cluster and the number of poorly contained output clusters
    """
    clean, truth = planted_cliques(k, size)
    levels = [int(level) for level in levels]
    if any(level < 0 for level in levels):
        raise ValueError("noise levels must be non-negative")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UserWarning)
        rounding = RoundingParams.swept(r1, r2)

    reports = RunReports(filename=filename)
    for level in levels:
        flips = flips_per_level * level
        child = np.random.SeedSequence(seed, spawn_key=(level,))
        noisy = flip_noise(clean, flips, seed=child)
        model = CorrelationClustering(noisy, metric=metric, rounding=rounding)
        report = model.run()
        preserved = preservation_counts(truth, model.clustering)
        containment = containment_fractions(truth, model.clustering)
        report.params.update(
            {
                "level": level,
                "flips": flips,
                "min_preserved": min(preserved),
                "mean_preserved": float(np.mean(preserved)),
                "min_containment": min(containment),
                "poorly_contained": sum(f < containment_threshold for f in containment),
            }
        )
        report.seed = seed
        reports.append(report)
    reports.write()
    return reports
