"""Hop-count shortest paths and the path-derived scalar metrics.

All-pairs work is done by a level-synchronous breadth-first search that
advances a whole batch of sources at once with one sparse product per level.
Unreachable pairs are infinite; ``1/inf`` contributes zero to the average
inverse path length, which is what makes it usable on fragmented graphs.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np
from scipy import sparse

from .errors import NoFinitePairs, TooSmall
from .graph import Graph, hop_distances

INF = math.inf

# Upper bound on entries of one (n x batch) working array.
_BATCH_CELLS = 1 << 22
# Below this many vertices a dense adjacency beats sparse-matrix overhead.
_DENSE_MAX = 256


def adjacency_matrix(g: Graph):
    """Adjacency over the alive vertices, with the row -> vertex id map.

    Small graphs get a dense ``ndarray``, larger ones a CSR matrix; both
    support ``a @ x``.
    """
    ids = g.vertices()
    index = {v: i for i, v in enumerate(ids)}
    rows, cols = [], []
    for i, v in enumerate(ids):
        for w in g.adjacency(v):
            rows.append(i)
            cols.append(index[w])
    n = len(ids)
    if n <= _DENSE_MAX:
        a = np.zeros((n, n))
        a[rows, cols] = 1.0
        return a, ids
    data = np.ones(len(rows), dtype=np.float64)
    a = sparse.csr_matrix((data, (rows, cols)), shape=(n, n))
    return a, ids


def source_batches(n: int):
    size = max(1, min(n, _BATCH_CELLS // max(n, 1)))
    for start in range(0, n, size):
        yield np.arange(start, min(n, start + size))


def bfs_levels(a, sources: np.ndarray):
    """Level-synchronous BFS from every vertex in ``sources`` at once.

    Yields ``(level, new)`` where ``new`` is the boolean ``(n, len(sources))``
    mask of vertices first reached at hop count ``level``.
    """
    n = a.shape[0]
    cols = np.arange(len(sources))
    visited = np.zeros((n, len(sources)), dtype=bool)
    visited[sources, cols] = True
    frontier = visited.astype(np.float64)
    level = 0
    while True:
        new = a @ frontier > 0
        new &= ~visited
        if not new.any():
            return
        level += 1
        visited |= new
        yield level, new
        frontier = new.astype(np.float64)


def batched_bfs(a, sources: np.ndarray, count_paths: bool = False):
    """BFS from every vertex in ``sources`` simultaneously.

    Returns ``(dist, sigma)`` shaped ``(n, len(sources))``; column ``k`` holds
    hop counts from ``sources[k]`` (``-1`` where unreachable) and, when
    ``count_paths`` is set, the number of shortest paths (else ``None``).
    """
    n = a.shape[0]
    b = len(sources)
    cols = np.arange(b)
    dist = np.full((n, b), -1, dtype=np.int64)
    dist[sources, cols] = 0
    if not count_paths:
        for level, new in bfs_levels(a, sources):
            dist[new] = level
        return dist, None
    sigma = np.zeros((n, b))
    sigma[sources, cols] = 1.0
    frontier = sigma.copy()
    level = 0
    while True:
        reach = a @ frontier
        new = (reach > 0) & (dist < 0)
        if not new.any():
            break
        level += 1
        dist[new] = level
        frontier = np.where(new, reach, 0.0)
        sigma += frontier
    return dist, sigma


@dataclass(frozen=True)
class DistanceMatrix:
    """Hop counts between alive vertices; ``inf`` marks unreachable pairs."""

    vertices: list[int]
    values: np.ndarray

    def d(self, u: int, v: int) -> float:
        i = self.vertices.index(u)
        j = self.vertices.index(v)
        return float(self.values[i, j])


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    a, ids = adjacency_matrix(g)
    n = len(ids)
    out = np.full((n, n), INF)
    for batch in source_batches(n):
        dist, _ = batched_bfs(a, batch)
        block = dist.T.astype(np.float64)
        block[block < 0] = INF
        out[batch] = block
    return DistanceMatrix(ids, out)


def _level_counts(g: Graph) -> dict[int, int]:
    """Number of ordered pairs at each finite hop count >= 1."""
    a, ids = adjacency_matrix(g)
    counts: dict[int, int] = {}
    for batch in source_batches(len(ids)):
        for level, new in bfs_levels(a, batch):
            counts[level] = counts.get(level, 0) + int(np.count_nonzero(new))
    return counts


def inverse_distance_sum(g: Graph) -> float:
    """Sum of ``1/d(u, v)`` over ordered pairs ``u != v``."""
    return sum(c / d for d, c in sorted(_level_counts(g).items()))


def aipl(g: Graph) -> float:
    """Average inverse path length over ordered pairs of alive vertices.

    Returns 0 for graphs with fewer than two alive vertices.
    """
    n = g.number_of_vertices()
    if n < 2:
        return 0.0
    return inverse_distance_sum(g) / (n * (n - 1))


def apl_constrained(g: Graph) -> float:
    """Mean hop count over the unordered pairs that are connected."""
    counts = _level_counts(g)
    total = sum(d * c for d, c in counts.items())
    count = sum(counts.values())
    if count == 0:
        raise NoFinitePairs("no connected vertex pairs")
    # every unordered pair was seen from both ends
    return total / count


def eccentricity(g: Graph, v: int) -> float:
    dist = hop_distances(g, v)
    if len(dist) < g.number_of_vertices():
        return INF
    return max(dist.values())


def eccentricities(g: Graph) -> dict[int, float]:
    dm = all_pairs_distances(g)
    if not dm.vertices:
        return {}
    ecc = dm.values.max(axis=1)
    return {v: float(e) if math.isinf(e) else int(e) for v, e in zip(dm.vertices, ecc)}


def diameter(g: Graph) -> float:
    ecc = eccentricities(g)
    return max(ecc.values()) if ecc else 0


def radius(g: Graph) -> float:
    ecc = eccentricities(g)
    return min(ecc.values()) if ecc else 0


def graph_eccentricity(g: Graph) -> float:
    """Largest vertex eccentricity; identical to the diameter."""
    return diameter(g)


def triangles_at(g: Graph, v: int) -> int:
    nbrs = g.adjacency(v)
    return sum(1 for x, y in combinations(sorted(nbrs), 2) if y in g.adjacency(x))


def clustering_coefficient(g: Graph, v: int) -> float:
    k = g.degree(v)
    if k < 2:
        return 0.0
    return 2.0 * triangles_at(g, v) / (k * (k - 1))


def mean_clustering(g: Graph) -> float:
    vs = g.vertices()
    if not vs:
        return 0.0
    return sum(clustering_coefficient(g, v) for v in vs) / len(vs)


def density(g: Graph) -> float:
    n = g.number_of_vertices()
    if n < 2:
        raise TooSmall("density needs at least two vertices")
    return 2.0 * g.number_of_edges() / (n * (n - 1))


@dataclass(frozen=True)
class MetricReport:
    vertex_count: int
    edge_count: int
    apl_constrained: float | None
    aipl: float
    diameter: float
    radius: float
    mean_clustering: float
    density: float | None
    max_eccentricity: float

    CSV_HEADER = ("n", "m", "apl", "aipl", "diameter", "radius", "mean_clustering", "density")

    def csv_row(self) -> tuple:
        return (
            self.vertex_count,
            self.edge_count,
            self.apl_constrained,
            self.aipl,
            self.diameter,
            self.radius,
            self.mean_clustering,
            self.density,
        )


def metric_report(g: Graph) -> MetricReport:
    try:
        apl = apl_constrained(g)
    except NoFinitePairs:
        apl = None
    try:
        dens = density(g)
    except TooSmall:
        dens = None
    ecc = eccentricities(g)
    diam = max(ecc.values()) if ecc else 0
    return MetricReport(
        vertex_count=g.number_of_vertices(),
        edge_count=g.number_of_edges(),
        apl_constrained=apl,
        aipl=aipl(g),
        diameter=diam,
        radius=min(ecc.values()) if ecc else 0,
        mean_clustering=mean_clustering(g),
        density=dens,
        max_eccentricity=diam,
    )
