import argparse
import json
import sys
import warnings

from corrmetric.baselines.brute_force import brute_force_opt
from corrmetric.baselines.pivot import pivot, pivot_mean_objective
from corrmetric.exports.csv_exports import ClusteringCSVExport, MetricCSVExport
from corrmetric.experiments.evaluation import evaluate_instance
from corrmetric.experiments.noise import noise_experiment
from corrmetric.experiments.sweeps import common_radius_grid, full_grid, radius_sweep
from corrmetric.generators.planted_cliques import flip_noise, planted_cliques
from corrmetric.generators.random_graphs import random_signed_gnp
from corrmetric.helpers import corrmetric_print, ensure_parent_dir
from corrmetric.io.circles import circle_containment_report, load_circles
from corrmetric.io.edge_list import load_edge_list, write_clustering, write_edge_list
from corrmetric.metrics.sampled.constant_ladder import ConstantLadder
from corrmetric.metrics.sampled.sample_config import SampleConfig
from corrmetric.model import CorrelationClustering, SAMPLED
from corrmetric.rounding.approx_triangle_constants import approx_triangle_constants
from corrmetric.rounding.rounding_params import RoundingParams


def _add_input(parser):
    parser.add_argument("--input", "-i", required=True, help="edge list file")


def _add_rounding(parser):
    parser.add_argument(
        "--metric", choices=["exact", "sparse", "sampled"], default="exact",
        help="how the correlation metric is computed",
    )
    parser.add_argument(
        "--mode", choices=["theory", "approx", "swept"], default=None,
        help="radii: theory (1/5, 2/5), approx (from the sampling constants) "
        "or swept (--r1, --r2). Defaults to approx for the sampled metric, "
        "theory otherwise",
    )
    parser.add_argument("--r1", type=float, default=0.7, help="score radius (swept mode)")
    parser.add_argument("--r2", type=float, default=None, help="cut radius (swept mode), defaults to r1")
    parser.add_argument("--epsilon", type=float, default=0.02, help="sampling accuracy")
    parser.add_argument(
        "--sample-size", type=int, default=None,
        help="fixed sample size overriding ceil(32 / eps^2 ln n)",
    )
    parser.add_argument(
        "--ladder-limit", action="store_true",
        help="derive approx rounding radii from the epsilon -> 0 constants; "
        "post-processing keeps the --epsilon thresholds. Without it the sampled "
        "metric falls back to these constants when --epsilon admits no radius",
    )


def _add_verbosity(parser):
    parser.add_argument("--verbose", "-v", action="store_true", help="print progress")


def make_parser():
    parser = argparse.ArgumentParser(
        prog="corrmetric",
        description="Correlation metric clustering for Min-Max correlation clustering",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cluster = sub.add_parser("cluster", help="cluster an edge list")
    _add_input(cluster)
    _add_rounding(cluster)
    cluster.add_argument("--seed", type=int, default=0, help="sampling seed")
    cluster.add_argument("--output", "-o", default=None, help="clustering CSV")
    cluster.add_argument("--metric-output", default=None, help="metric dump CSV")
    cluster.add_argument("--json", default=None, help="report JSON file, '-' for stdout")
    cluster.add_argument("--per-vertex", action="store_true", help="per-vertex arrays in the JSON report")
    _add_verbosity(cluster)

    piv = sub.add_parser("pivot", help="Pivot baseline")
    _add_input(piv)
    piv.add_argument("--trials", type=int, default=500, help="number of random orders")
    piv.add_argument("--seed", type=int, default=0)
    piv.add_argument("--output", "-o", default=None, help="clustering CSV of the first run")

    oracle = sub.add_parser("oracle", help="brute-force optimum of a tiny instance")
    _add_input(oracle)

    gen = sub.add_parser("gen", help="generate a synthetic instance")
    gen.add_argument("--k", type=int, default=10, help="number of planted cliques")
    gen.add_argument("--size", type=int, default=10, help="clique size")
    gen.add_argument("--flips", type=int, default=0, help="number of pairs whose sign is flipped")
    gen.add_argument("--gnp", type=float, default=None, help="random G(n, p) graph with n = k * size instead")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--output", "-o", required=True, help="edge list file")
    gen.add_argument("--truth", default=None, help="ground-truth circles file")

    ev = sub.add_parser("eval", help="evaluation table row of an edge list")
    _add_input(ev)
    ev.add_argument("--metric", choices=["exact", "sparse"], default="exact")
    ev.add_argument("--swept", action="store_true", help="use --r1, --r2 instead of 1/5, 2/5")
    ev.add_argument("--r1", type=float, default=0.7)
    ev.add_argument("--r2", type=float, default=None)
    ev.add_argument("--circles", default=None, help="ground-truth circles file")
    ev.add_argument("--min-size", type=int, default=10, help="smallest cluster compared to circles")
    ev.add_argument("--trials", type=int, default=500, help="Pivot runs averaged")
    ev.add_argument("--seed", type=int, default=0)
    ev.add_argument("--json", default=None, help="row JSON file, '-' for stdout")

    sweep = sub.add_parser("sweep", help="radius sweep")
    _add_input(sweep)
    sweep.add_argument("--metric", choices=["exact", "sparse"], default="exact")
    sweep.add_argument("--grid", choices=["common", "full"], default="common")
    sweep.add_argument("--steps", type=int, default=19, help="radii k / (steps + 1)")
    sweep.add_argument("--seed", type=int, default=0)
    sweep.add_argument("--output", "-o", required=True, help="CSV file")

    noise = sub.add_parser("noise", help="planted cliques under increasing noise")
    noise.add_argument("--k", type=int, default=10)
    noise.add_argument("--size", type=int, default=10)
    noise.add_argument("--levels", type=int, default=20, help="levels 0..levels")
    noise.add_argument("--flips-per-level", type=int, default=45)
    noise.add_argument("--r1", type=float, default=0.7)
    noise.add_argument("--r2", type=float, default=None)
    noise.add_argument(
        "--containment", type=float, default=0.88,
        help="output clusters less contained than this in a planted clique are counted",
    )
    noise.add_argument("--seed", type=int, default=0)
    noise.add_argument("--output", "-o", required=True, help="CSV file")
    return parser


def make_model(args, graph, external_ids=None, exports=None):
    """Builds the CorrelationClustering described by the rounding flags"""
    mode = args.mode or ("approx" if args.metric == SAMPLED else "theory")
    sample_config = None
    ladder = None
    rounding_ladder = ConstantLadder.limit() if args.ladder_limit else None
    if args.metric == SAMPLED:
        sample_config = SampleConfig(args.epsilon, seed=args.seed, sample_size=args.sample_size)
        ladder = ConstantLadder(args.epsilon)

    if mode == "theory":
        rounding = RoundingParams.theory()
    elif mode == "swept":
        rounding = RoundingParams.swept(args.r1, args.r2)
    elif args.metric == SAMPLED:
        rounding = None
    else:
        source = rounding_ladder or ConstantLadder(args.epsilon)
        constants = approx_triangle_constants(source.delta1, source.delta2)
        rounding = RoundingParams.approx(constants)

    return CorrelationClustering(
        graph,
        metric=args.metric,
        rounding=rounding,
        sample_config=sample_config,
        ladder=ladder,
        rounding_ladder=rounding_ladder,
        exports=exports,
        external_ids=external_ids,
        log_level=20 if getattr(args, "verbose", False) else 40,
    )


def _dump_json(data, destination):
    text = json.dumps(data, indent=2)
    if destination == "-":
        corrmetric_print(text)
    else:
        with open(destination, "w") as f:
            f.write(text + "\n")


def _external_clusters(clustering, external_ids):
    return [[external_ids[u] for u in members] for members in clustering.clusters]


def run_cluster(args):
    edge_list = load_edge_list(args.input)
    graph = edge_list.to_graph()
    exports = []
    if args.output:
        exports.append(ClusteringCSVExport(args.output))
    if args.metric_output:
        exports.append(MetricCSVExport(args.metric_output))
    model = make_model(args, graph, edge_list.external_ids, exports)
    report = model.run(per_vertex=args.per_vertex)
    corrmetric_print(
        f"{report.algorithm}: {report.num_clusters} clusters, "
        f"max disagreements {report.objective_linf:g}, "
        f"total disagreements {report.objective_l1:g}, "
        f"max fractional cost {float(report.fractional_cost_max):.4g}"
    )
    if args.json:
        _dump_json(report.to_dict(), args.json)
    return 0


def run_pivot(args):
    edge_list = load_edge_list(args.input)
    graph = edge_list.to_graph()
    mean = pivot_mean_objective(graph, trials=args.trials, seed=args.seed)
    corrmetric_print(f"Pivot mean max disagreements over {args.trials} trials: {mean:.4f}")
    if args.output:
        write_clustering(pivot(graph, seed=args.seed), args.output, edge_list.external_ids)
    return 0


def run_oracle(args):
    edge_list = load_edge_list(args.input)
    result = brute_force_opt(edge_list.to_graph())
    corrmetric_print(f"opt_value: {result.opt_value}")
    corrmetric_print(f"partitions_scanned: {result.partitions_scanned}")
    for label, members in enumerate(_external_clusters(result.witness, edge_list.external_ids)):
        corrmetric_print(f"cluster {label}: {' '.join(str(m) for m in members)}")
    return 0


def run_gen(args):
    if args.gnp is not None:
        graph = random_signed_gnp(args.k * args.size, args.gnp, seed=args.seed)
        truth = None
    else:
        graph, truth = planted_cliques(args.k, args.size)
        graph = flip_noise(graph, args.flips, seed=args.seed)
    write_edge_list(graph, args.output)
    if args.truth and truth is not None:
        ensure_parent_dir(args.truth)
        with open(args.truth, "w") as f:
            for label, members in enumerate(truth.clusters):
                f.write(f"circle{label}\t" + "\t".join(str(u) for u in members) + "\n")
    corrmetric_print(f"{graph.n} vertices, {graph.num_positive_edges} positive edges written to {args.output}")
    return 0


def run_eval(args):
    edge_list = load_edge_list(args.input)
    graph = edge_list.to_graph()
    row = evaluate_instance(
        graph,
        metric=args.metric,
        rounding=RoundingParams.swept(args.r1, args.r2) if args.swept else None,
        trials=args.trials,
        seed=args.seed,
    )
    model = row.pop("model")
    for key, value in row.items():
        corrmetric_print(f"{key}: {value}")
    if args.circles:
        circles = load_circles(args.circles, edge_list.id_map)
        report = circle_containment_report(model.clustering, circles, min_size=args.min_size)
        row["containment"] = [entry.as_row() for entry in report]
        for entry in report:
            corrmetric_print(
                f"cluster {entry.cluster} (size {entry.size}): "
                f"{entry.fraction:.2f} in {entry.best_label}"
            )
    if args.json:
        _dump_json(row, args.json)
    return 0


def run_sweep(args):
    graph = load_edge_list(args.input).to_graph()
    grid = full_grid(args.steps) if args.grid == "full" else common_radius_grid(args.steps)
    reports = radius_sweep(graph, metric=args.metric, grid=grid, seed=args.seed, filename=args.output)
    corrmetric_print(f"{len(reports)} grid points written to {args.output}")
    return 0


def run_noise(args):
    reports = noise_experiment(
        k=args.k,
        size=args.size,
        levels=range(args.levels + 1),
        flips_per_level=args.flips_per_level,
        seed=args.seed,
        r1=args.r1,
        r2=args.r1 if args.r2 is None else args.r2,
        containment_threshold=args.containment,
        filename=args.output,
    )
    for report in reports:
        corrmetric_print(
            f"level {report.params['level']}: {report.num_clusters} clusters, "
            f"max disagreements {report.objective_linf:g}, "
            f"min preserved {report.params['min_preserved']}, "
            f"{report.params['poorly_contained']} clusters below "
            f"{args.containment:.0%} containment"
        )
    return 0


COMMANDS = {
    "cluster": run_cluster,
    "pivot": run_pivot,
    "oracle": run_oracle,
    "gen": run_gen,
    "eval": run_eval,
    "sweep": run_sweep,
    "noise": run_noise,
}


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("default", UserWarning)
            return COMMANDS[args.command](args)
    except (ValueError, TypeError, OSError) as error:
        print(f"corrmetric {args.command}: error: {error}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
