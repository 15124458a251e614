import warnings
from fractions import Fraction

from corrmetric.exports.run_report import RunReports
from corrmetric.model import CorrelationClustering
from corrmetric.rounding.rounding_params import RoundingParams


def common_radius_grid(num=19):
    """Grid of common radii r1 = r2 = k / (num + 1), k = 1..num
    (0.05, 0.10, ..., 0.95 by default)"""
    return [(Fraction(k, num + 1), Fraction(k, num + 1)) for k in range(1, num + 1)]


def full_grid(num=19):
    """All pairs (r1, r2) of radii k / (num + 1), k = 1..num"""
    radii = [Fraction(k, num + 1) for k in range(1, num + 1)]
    return [(r1, r2) for r1 in radii for r2 in radii]


def radius_sweep(g, metric="exact", grid=None, seed=0, sample_config=None, settings=None, filename=None):
    """Clusters g once per grid point, reusing the same distance oracle

    Args:
        g (corrmetric.SignedGraph): the graph
        metric (str, optional): "exact", "sparse" or "sampled".
            Defaults to "exact".
        grid (list, optional): (r1, r2) pairs. Defaults to
            common_radius_grid().
        seed (int, optional): recorded in the reports. Defaults to 0.
        sample_config (corrmetric.SampleConfig, optional): required for the
            sampled metric. Defaults to None.
        settings (corrmetric.Settings, optional): Defaults to None.
        filename (str, optional): CSV output of the reports. Defaults to
            None.

    Raises:
        ValueError: if the grid is empty

    Returns:
        corrmetric.RunReports: one report per grid point, sorted by (r1, r2)
    """
    grid = common_radius_grid() if grid is None else list(grid)
    if not grid:
        raise ValueError("the radius grid is empty")

    model = CorrelationClustering(
        g, metric=metric, sample_config=sample_config, settings=settings
    )
    model.initialise()
    reports = RunReports(filename=filename)
    for r1, r2 in sorted(grid):
        with warnings.catch_warnings():
            # sweeps leave the guarantee regime on purpose
            warnings.simplefilter("ignore", UserWarning)
            model.rounding = RoundingParams.swept(r1, r2)
        model.round()
        report = model.evaluate()
        if report.seed is None:
            report.seed = seed
        reports.append(report)
    reports.write()
    return reports
