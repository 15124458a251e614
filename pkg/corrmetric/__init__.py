try:
    # Python 3.8+
    from importlib import metadata
except ImportError:
    try:
        import importlib_metadata as metadata
    except ImportError:
        __version__ = "unknown"

try:
    __version__ = metadata.version("corrmetric")
except Exception:
    __version__ = "unknown"


from .helpers import (
    as_fraction,
    as_rational,
    exact_sum,
    n_pairs,
    pair_from_index,
    corrmetric_print,
)
from .settings import Settings

from .graph.degree_profile import PosDegreeProfile
from .graph.signed_graph import SignedGraph, build_from_edges, graph_statistics

from .metrics.distance_oracle import (
    DistanceOracle,
    approx_triangle_fraction,
    count_violations,
)
from .metrics.dense_oracle import (
    DenseOracle,
    common_pos_counts_dense,
    distance_from_count,
    build_dense_oracle,
)
from .metrics.sparse_oracle import SparseOracle, build_sparse_oracle

from .metrics.sampled.constant_ladder import ConstantLadder, constant_ladder
from .metrics.sampled.sample_config import SampleConfig
from .metrics.sampled.neighborhood_samples import NeighborhoodSamples, draw_samples
from .metrics.sampled.estimators import (
    estimate_W_Y,
    initial_estimate,
    estimate_tables,
    initial_estimate_table,
)
from .metrics.sampled.sampled_oracle import (
    SampledOracle,
    post_process,
    build_sampled_oracle,
)

from .rounding.rounding_params import RoundingParams
from .rounding.approx_triangle_constants import (
    ApproxTriangleConstants,
    approx_triangle_constants,
)
from .rounding.clustering import Clustering
from .rounding.max_queue import MaxScoreQueue
from .rounding.ball_growing import round_dense, round_sparse, round_approx

from .objectives.disagreements import (
    DisagreementVector,
    disagreement_vector,
    lp_norm_objective,
)
from .objectives.fractional_cost import FractionalCostVector, fractional_cost

from .baselines.pivot import pivot, pivot_mean_objective
from .baselines.brute_force import OracleResult, brute_force_opt

from .generators.planted_cliques import planted_cliques, flip_noise, toggle_pairs
from .generators.random_graphs import random_signed_gnp, random_bounded_degree

from .io.edge_list import (
    EdgeList,
    parse_edge_list,
    load_edge_list,
    write_edge_list,
    write_clustering,
)
from .io.circles import (
    Circle,
    CircleSet,
    ClusterContainment,
    parse_circles,
    load_circles,
    circle_containment_report,
)

from .exports.export import Export
from .exports.exports import Exports
from .exports.csv_exports import (
    CSVExport,
    MetricCSVExport,
    ClusteringCSVExport,
    write_metric,
)
from .exports.run_report import RunReport, RunReports

from .model import CorrelationClustering

from .experiments.sweeps import radius_sweep, common_radius_grid, full_grid
from .experiments.noise import (
    noise_experiment,
    preservation_counts,
    containment_fractions,
)
from .experiments.evaluation import evaluate_instance
