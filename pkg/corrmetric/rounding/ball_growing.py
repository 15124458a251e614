import numpy as np

from corrmetric.metrics.distance_oracle import SPARSE_EXACT
from corrmetric.rounding.approx_triangle_constants import approx_triangle_constants
from corrmetric.rounding.clustering import Clustering
from corrmetric.rounding.max_queue import MaxScoreQueue
from corrmetric.rounding.rounding_params import RoundingParams


def score_contributions(oracle, r1):
    """For every vertex w, the vertices of Ball(w, r1) \\ {w} with their
    contributions r1 - d(w, v), and the initial score
    L(w) = r1 + sum of contributions (w contributes r1 to its own ball).

    Args:
        oracle (corrmetric.DistanceOracle): the distances
        r1 (Fraction, float): the score radius, in the oracle's number type

    Returns:
        tuple: list of (vertices, contributions) and list of scores
    """
    balls = []
    scores = []
    for w in range(oracle.n):
        vertices, distances = oracle.ball(w, r1)
        contributions = [r1 - d for d in distances]
        balls.append((vertices, contributions))
        scores.append(sum(contributions, r1))
    return balls, scores


def _cut(oracle, w, r2, is_remaining):
    vertices, _ = oracle.ball(w, r2)
    return [w] + [int(v) for v in vertices if is_remaining(v)]


def round_dense(oracle, params):
    """Ball-growing rounding over an oracle covering all pairs.

    While vertices remain, the remaining vertex w maximising
    L(w) = sum over v in Ball(w, r1) of (r1 - d(w, v)) becomes a centre
    (smallest id on ties) and Ball(w, r2) is cut out as a cluster. Scores
    are computed once and the contributions of clustered vertices are
    subtracted from their neighbours, for O(n^2) total work.

    Exact oracles compare Fractions, sampled oracles floats.

    Args:
        oracle (corrmetric.DistanceOracle): the distances
        params (corrmetric.RoundingParams): the radii

    Returns:
        corrmetric.Clustering: the clustering, with its centres
    """
    n = oracle.n
    r1, r2 = params.radii_for(oracle)
    balls, scores = score_contributions(oracle, r1)
    if not oracle.is_exact:
        scores = np.array(scores, dtype=float)

    remaining = np.ones(n, dtype=bool)
    assignment = np.full(n, -1, dtype=np.int64)
    centers = []
    num_remaining = n
    while num_remaining:
        w = _argmax_remaining(scores, remaining, oracle.is_exact)
        cluster = _cut(oracle, w, r2, lambda v: remaining[v])
        label = len(centers)
        centers.append(w)
        for v in cluster:
            remaining[v] = False
            assignment[v] = label
        num_remaining -= len(cluster)
        for v in cluster:
            vertices, contributions = balls[v]
            for x, contribution in zip(vertices, contributions):
                if remaining[x]:
                    scores[x] -= contribution
    return Clustering(assignment, centers=centers)


def _argmax_remaining(scores, remaining, exact):
    if not exact:
        masked = np.where(remaining, scores, -np.inf)
        # np.argmax returns the first, i.e. smallest, maximiser
        return int(np.argmax(masked))
    best = None
    for u in np.flatnonzero(remaining):
        if best is None or scores[u] > scores[best]:
            best = int(u)
    return best


def round_sparse(oracle, g, params):
    """Heap-based ball-growing rounding over a sparse exact oracle.

    Produces the same clustering as round_dense on the same oracle and
    radii. Scores live in a max-heap keyed by (score, smallest id); when
    a vertex is clustered only its two-hop neighbourhood is updated.

    Args:
        oracle (corrmetric.SparseOracle): the two-hop distances
        g (corrmetric.SignedGraph): the graph of the oracle
        params (corrmetric.RoundingParams): the radii

    Raises:
        ValueError: if the oracle is not sparse-exact, doesn't match g, or
            a radius is >= 1

    Returns:
        corrmetric.Clustering: the clustering, with its centres
    """
    if oracle.kind != SPARSE_EXACT:
        raise ValueError(f"round_sparse needs a sparse-exact oracle, got {oracle.kind}")
    if oracle.n != g.n:
        raise ValueError(f"oracle has {oracle.n} vertices but the graph has {g.n}")
    if params.r1 >= 1 or params.r2 >= 1:
        raise ValueError("round_sparse needs radii r1, r2 < 1")

    r1, r2 = params.radii_for(oracle)
    balls, scores = score_contributions(oracle, r1)
    queue = MaxScoreQueue(dict(enumerate(scores)))

    assignment = np.full(g.n, -1, dtype=np.int64)
    centers = []
    while len(queue):
        w, _ = queue.peek()
        cluster = _cut(oracle, w, r2, lambda v: int(v) in queue)
        label = len(centers)
        centers.append(w)
        for v in cluster:
            queue.remove(v)
            assignment[v] = label
        for v in cluster:
            vertices, contributions = balls[v]
            for x, contribution in zip(vertices, contributions):
                x = int(x)
                if x in queue:
                    queue[x] = queue[x] - contribution
    return Clustering(assignment, centers=centers)


def round_approx(oracle, ladder):
    """Rounding of an approximate semi-metric with r1 = r and r2 = b r,
    the constants of (ladder.delta1, ladder.delta2)

    Args:
        oracle (corrmetric.DistanceOracle): the distances, usually sampled
        ladder (corrmetric.ConstantLadder): the constants

    Raises:
        ValueError: if the constants of the ladder are infeasible

    Returns:
        corrmetric.Clustering: the clustering
    """
    constants = approx_triangle_constants(ladder.delta1, ladder.delta2)
    return round_dense(oracle, RoundingParams.approx(constants))
