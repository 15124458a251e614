import time
import warnings

from corrmetric.exports.exports import Exports
from corrmetric.exports.export import Export
from corrmetric.exports.run_report import RunReport
from corrmetric.graph.signed_graph import SignedGraph
from corrmetric.helpers import corrmetric_print
from corrmetric.metrics.dense_oracle import build_dense_oracle
from corrmetric.metrics.sparse_oracle import build_sparse_oracle
from corrmetric.metrics.sampled.constant_ladder import ConstantLadder
from corrmetric.metrics.sampled.sample_config import SampleConfig
from corrmetric.metrics.sampled.sampled_oracle import build_sampled_oracle
from corrmetric.objectives.disagreements import disagreement_vector, lp_norm_objective
from corrmetric.objectives.fractional_cost import fractional_cost
from corrmetric.rounding.approx_triangle_constants import approx_triangle_constants
from corrmetric.rounding.ball_growing import round_approx, round_dense, round_sparse
from corrmetric.rounding.rounding_params import RoundingParams
from corrmetric.settings import Settings


EXACT = "exact"
SPARSE = "sparse"
SAMPLED = "sampled"


class CorrelationClustering:
    """
    Main corrmetric class: computes the correlation metric of a signed graph,
    rounds it into a clustering and evaluates the result

    Args:
        graph (corrmetric.SignedGraph): the graph
        metric (str, optional): "exact" (dense table), "sparse" (two-hop
            pairs) or "sampled". Defaults to "exact".
        rounding (corrmetric.RoundingParams, optional): the radii. If None,
            r1 = 1/5, r2 = 2/5 for exact metrics and the approximate
            triangle constants of the ladder for the sampled metric.
            Defaults to None.
        sample_config (corrmetric.SampleConfig, optional): sampling
            parameters, required for the sampled metric. Defaults to None.
        ladder (corrmetric.ConstantLadder, optional): post-processing
            constants of the sampled pipeline. If None, the ladder of
            sample_config.epsilon. Defaults to None.
        rounding_ladder (corrmetric.ConstantLadder, optional): constants
            the approximate rounding radii are derived from. If None, the
            post-processing ladder is used when it admits positive radii,
            else ConstantLadder.limit() with a warning. Defaults to None.
        settings (corrmetric.Settings, optional): capacities and
            arithmetic. Defaults to None.
        exports (corrmetric.Exports or list or corrmetric.Export, optional):
            outputs written at the end of run(). Defaults to None.
        external_ids (list, optional): external id of every vertex, used in
            exported files. Defaults to None.
        log_level (int, optional): progress messages are printed when
            log_level <= 20. Defaults to 40.
            CRITICAL  = 50
            ERROR     = 40
            WARNING   = 30
            INFO      = 20
            DEBUG     = 10

    Attributes:
        approx_ladder (corrmetric.ConstantLadder): the constants used by the
            last approximate rounding, or None
        oracle (corrmetric.DistanceOracle): the distances, set by
            initialise()
        clustering (corrmetric.Clustering): the result, set by run()
        disagreements (corrmetric.DisagreementVector): per-vertex
            disagreements of the result
        fractional_costs (corrmetric.FractionalCostVector): per-vertex
            fractional cost of the distances
        report (corrmetric.RunReport): the run summary
        timings (dict): wall-clock milliseconds of each stage
    """

    def __init__(
        self,
        graph,
        metric=EXACT,
        rounding=None,
        sample_config=None,
        ladder=None,
        rounding_ladder=None,
        settings=None,
        exports=None,
        external_ids=None,
        log_level=40,
    ):
        self.graph = graph
        self.metric = metric
        self.rounding = rounding
        self.sample_config = sample_config
        self.ladder = ladder
        self.rounding_ladder = rounding_ladder
        self.settings = settings
        self.exports = exports
        self.external_ids = external_ids
        self.log_level = log_level

        self.oracle = None
        self.algorithm = None
        self.approx_ladder = None
        self.clustering = None
        self.disagreements = None
        self.fractional_costs = None
        self.report = None
        self.timings = {}

    @property
    def graph(self):
        return self._graph

    @graph.setter
    def graph(self, value):
        if not isinstance(value, SignedGraph):
            raise TypeError("graph must be a corrmetric.SignedGraph")
        self._graph = value

    @property
    def metric(self):
        return self._metric

    @metric.setter
    def metric(self, value):
        if value not in [EXACT, SPARSE, SAMPLED]:
            raise ValueError(
                f"metric must be one of {EXACT}, {SPARSE}, {SAMPLED}, got {value}"
            )
        self._metric = value

    @property
    def rounding(self):
        return self._rounding

    @rounding.setter
    def rounding(self, value):
        if value is not None and not isinstance(value, RoundingParams):
            raise TypeError("rounding must be a corrmetric.RoundingParams")
        self._rounding = value

    @property
    def sample_config(self):
        return self._sample_config

    @sample_config.setter
    def sample_config(self, value):
        if value is not None and not isinstance(value, SampleConfig):
            raise TypeError("sample_config must be a corrmetric.SampleConfig")
        self._sample_config = value

    @property
    def ladder(self):
        return self._ladder

    @ladder.setter
    def ladder(self, value):
        if value is not None and not isinstance(value, ConstantLadder):
            raise TypeError("ladder must be a corrmetric.ConstantLadder")
        self._ladder = value

    @property
    def rounding_ladder(self):
        return self._rounding_ladder

    @rounding_ladder.setter
    def rounding_ladder(self, value):
        if value is not None and not isinstance(value, ConstantLadder):
            raise TypeError("rounding_ladder must be a corrmetric.ConstantLadder")
        self._rounding_ladder = value

    @property
    def settings(self):
        return self._settings

    @settings.setter
    def settings(self, value):
        if value is None:
            self._settings = Settings()
        elif isinstance(value, Settings):
            self._settings = value
        else:
            raise TypeError("settings must be a corrmetric.Settings")

    @property
    def exports(self):
        return self._exports

    @exports.setter
    def exports(self, value):
        if value is None:
            self._exports = Exports([])
        elif isinstance(value, Exports):
            self._exports = value
        elif isinstance(value, list):
            self._exports = Exports(value)
        elif isinstance(value, Export):
            self._exports = Exports([value])
        else:
            raise TypeError(
                "Accepted types for exports are list, corrmetric.Exports or corrmetric.Export"
            )

    def log(self, msg):
        if self.log_level <= 20:
            corrmetric_print(msg)

    def initialise(self):
        """Builds the distance oracle"""
        self.fractional_costs = None
        start = time.perf_counter()
        if self.metric == EXACT:
            self.oracle = build_dense_oracle(self.graph, self.settings)
        elif self.metric == SPARSE:
            self.oracle = build_sparse_oracle(self.graph)
        else:
            if self.sample_config is None:
                raise ValueError("the sampled metric needs a corrmetric.SampleConfig")
            if self.ladder is None:
                self.ladder = ConstantLadder(self.sample_config.epsilon)
            self.oracle = build_sampled_oracle(
                self.graph, self.sample_config, self.ladder, self.settings
            )
        self.timings["metric_ms"] = (time.perf_counter() - start) * 1e3
        self.log(
            f"{self.oracle.kind} metric on {self.graph.n} vertices "
            f"built in {self.timings['metric_ms']:.1f} ms"
        )

    def select_rounding_ladder(self):
        """The ladder the approximate rounding radii come from: rounding_ladder
        if set, else the post-processing ladder if its constants admit a
        positive radius, else the epsilon -> 0 ladder

        Returns:
            corrmetric.ConstantLadder: the ladder
        """
        if self.rounding_ladder is not None:
            return self.rounding_ladder
        try:
            approx_triangle_constants(self.ladder.delta1, self.ladder.delta2)
        except ValueError as error:
            warnings.warn(
                f"no rounding radius for epsilon={float(self.ladder.epsilon)} "
                f"({error}), rounding with the epsilon -> 0 constants",
                UserWarning,
            )
            return ConstantLadder.limit()
        return self.ladder

    def round(self):
        """Rounds the oracle into a clustering"""
        if self.oracle is None:
            self.initialise()
        self.approx_ladder = None
        start = time.perf_counter()
        if self.metric == SAMPLED and self.rounding is None:
            self.algorithm = "round_approx"
            self.approx_ladder = self.select_rounding_ladder()
            self.clustering = round_approx(self.oracle, self.approx_ladder)
        else:
            params = self.rounding or RoundingParams.theory()
            if self.metric == SPARSE:
                self.algorithm = "round_sparse"
                self.clustering = round_sparse(self.oracle, self.graph, params)
            else:
                self.algorithm = "round_dense"
                self.clustering = round_dense(self.oracle, params)
        self.timings["rounding_ms"] = (time.perf_counter() - start) * 1e3
        self.log(
            f"{self.algorithm}: {self.clustering.num_clusters} clusters "
            f"in {self.timings['rounding_ms']:.1f} ms"
        )
        return self.clustering

    def params(self):
        """The run parameters as a flat dictionary"""
        params = {"metric": self.metric}
        if self.rounding is not None:
            params.update(self.rounding.as_dict())
        elif self.metric == SAMPLED:
            params["mode"] = "approx"
        else:
            params.update(RoundingParams.theory().as_dict())
        if self.metric == SAMPLED:
            params["epsilon"] = self.sample_config.epsilon
            if self.approx_ladder is not None:
                params["rounding_epsilon"] = float(self.approx_ladder.epsilon)
        return params

    def evaluate(self, per_vertex=False):
        """Computes the disagreements of the current clustering and the
        fractional cost of the oracle, and fills the report

        Args:
            per_vertex (bool, optional): keep per-vertex arrays in the
                report. Defaults to False.

        Returns:
            corrmetric.RunReport: the run summary
        """
        self.disagreements = disagreement_vector(self.graph, self.clustering)
        if self.fractional_costs is None:
            self.fractional_costs = fractional_cost(
                self.graph, self.oracle, self.settings
            )

        runtime_ms = self.timings["metric_ms"] + self.timings["rounding_ms"]
        seed = self.sample_config.seed if self.metric == SAMPLED else None
        self.report = RunReport(
            algorithm=self.algorithm,
            params=self.params(),
            objective_linf=lp_norm_objective(self.disagreements, "inf"),
            objective_l1=lp_norm_objective(self.disagreements, 1),
            fractional_cost_max=self.fractional_costs.max_value,
            num_clusters=self.clustering.num_clusters,
            runtime_ms=runtime_ms,
            seed=seed,
            per_vertex=(
                {
                    "disagreements": list(self.disagreements),
                    "fractional_cost": self.fractional_costs.as_array().tolist(),
                }
                if per_vertex
                else None
            ),
        )
        self.log(
            f"objective (max disagreements) {self.report.objective_linf:g}, "
            f"max fractional cost {float(self.fractional_costs.max_value):.4g}"
        )
        return self.report

    def run(self, per_vertex=False):
        """Builds the oracle, rounds it, evaluates the clustering and
        writes the exports

        Args:
            per_vertex (bool, optional): keep per-vertex arrays in the
                report. Defaults to False.

        Returns:
            corrmetric.RunReport: the run summary
        """
        self.timings = {}
        self.initialise()
        self.round()
        self.evaluate(per_vertex=per_vertex)
        self.exports.write(self)
        return self.report
