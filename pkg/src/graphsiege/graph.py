"""Undirected simple graphs with logical vertex deletion.

Vertex ids are dense integers that never change for the lifetime of a graph;
removing a vertex only clears its alive flag, so traces recorded during an
attack can keep naming the original ids.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, TextIO

from .errors import (
    AlreadyRemoved,
    DeadCenter,
    DuplicateEdge,
    GraphError,
    NoSuchEdge,
    SelfLoop,
    VertexOutOfRange,
)

Edge = tuple[int, int]


def edge_id(u: int, v: int) -> Edge:
    """Canonical (min, max) form of an undirected edge."""
    if u == v:
        raise SelfLoop(u)
    return (u, v) if u < v else (v, u)


class Graph:
    """Undirected, simple, unweighted graph over vertex ids ``0..n-1``."""

    __slots__ = ("_adj", "_alive", "_m")

    def __init__(self, n: int = 0):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        self._adj: list[set[int]] = [set() for _ in range(n)]
        self._alive = [True] * n
        self._m = 0

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        g = cls(n)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    # -- queries -----------------------------------------------------------

    @property
    def vertex_count(self) -> int:
        """Number of id slots, alive or not."""
        return len(self._adj)

    def number_of_vertices(self) -> int:
        return sum(self._alive)

    def number_of_edges(self) -> int:
        return self._m

    def vertices(self) -> list[int]:
        return [v for v, a in enumerate(self._alive) if a]

    def is_alive(self, v: int) -> bool:
        return 0 <= v < len(self._adj) and self._alive[v]

    def neighbors(self, v: int) -> list[int]:
        self._check(v)
        return sorted(self._adj[v])

    def adjacency(self, v: int) -> set[int]:
        """Live neighbor set of ``v``; callers must not mutate it."""
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < len(self._adj) and v in self._adj[u]

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(len(self._adj)) for v in sorted(self._adj[u]) if u < v]

    def copy(self) -> "Graph":
        g = Graph.__new__(Graph)
        g._adj = [set(a) for a in self._adj]
        g._alive = list(self._alive)
        g._m = self._m
        return g

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._alive == other._alive and self._adj == other._adj

    def __repr__(self):
        return f"Graph(n={self.number_of_vertices()}, m={self._m})"

    # -- mutation ----------------------------------------------------------

    def add_vertex(self) -> int:
        self._adj.append(set())
        self._alive.append(True)
        return len(self._adj) - 1

    def add_edge(self, u: int, v: int) -> None:
        self._check(u)
        self._check(v)
        if u == v:
            raise SelfLoop(u)
        if v in self._adj[u]:
            raise DuplicateEdge(u, v)
        self._adj[u].add(v)
        self._adj[v].add(u)
        self._m += 1

    def remove_edge(self, u: int, v: int) -> None:
        if not self.has_edge(u, v):
            raise NoSuchEdge(u, v)
        self._adj[u].discard(v)
        self._adj[v].discard(u)
        self._m -= 1

    def remove_vertex(self, v: int) -> None:
        if not (0 <= v < len(self._adj)):
            raise VertexOutOfRange(v, len(self._adj))
        if not self._alive[v]:
            raise AlreadyRemoved(v)
        for w in self._adj[v]:
            self._adj[w].discard(v)
        self._m -= len(self._adj[v])
        self._adj[v] = set()
        self._alive[v] = False

    def _check(self, v: int) -> None:
        if not (0 <= v < len(self._adj)):
            raise VertexOutOfRange(v, len(self._adj))
        if not self._alive[v]:
            raise AlreadyRemoved(v)

    # -- derived graphs ----------------------------------------------------

    def subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``vertices`` relabelled ``0..k-1`` in id order.

        Returns the subgraph and the local -> global id list.
        """
        to_global = sorted(set(vertices))
        local = {g: i for i, g in enumerate(to_global)}
        sub = Graph(len(to_global))
        for i, u in enumerate(to_global):
            self._check(u)
            for w in self._adj[u]:
                j = local.get(w)
                if j is not None and i < j:
                    sub._adj[i].add(j)
                    sub._adj[j].add(i)
                    sub._m += 1
        return sub, to_global

    def compact(self) -> tuple["Graph", list[int]]:
        """Drop dead vertices; returns the compacted graph and its id map."""
        return self.subgraph(self.vertices())


def components(g: Graph) -> list[list[int]]:
    """Connected components of the alive vertices.

    Each component is a sorted id list; components are ordered by size
    descending, then by smallest member ascending.
    """
    seen = [False] * g.vertex_count
    out = []
    for s in g.vertices():
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comp.sort()
        out.append(comp)
    out.sort(key=lambda c: (-len(c), c[0]))
    return out


def hop_distances(g: Graph, source: int, limit: int | None = None) -> dict[int, int]:
    """Breadth-first hop counts from ``source``, optionally cut at ``limit``."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        d = dist[u]
        if limit is not None and d >= limit:
            continue
        for w in g.adjacency(u):
            if w not in dist:
                dist[w] = d + 1
                queue.append(w)
    return dist


@dataclass
class DiscoveredView:
    """What an attacker knows: the ball of ``radius`` hops around ``center``.

    ``graph`` uses local ids ``0..k-1``; ``to_global[i]`` is the id of local
    vertex ``i`` in the graph it was discovered from.  ``radius=None`` means
    unlimited.
    """

    center: int
    radius: int | None
    graph: Graph
    to_global: list[int]
    _to_local: dict[int, int] = field(init=False, repr=False)

    def __post_init__(self):
        self._to_local = {g: i for i, g in enumerate(self.to_global)}

    def local_id(self, global_id: int) -> int | None:
        return self._to_local.get(global_id)

    def global_edge(self, e: Edge) -> Edge:
        return edge_id(self.to_global[e[0]], self.to_global[e[1]])

    def global_vertices(self) -> list[int]:
        return [self.to_global[v] for v in self.graph.vertices()]


def discover(g: Graph, center: int, radius: int | None) -> DiscoveredView:
    if not g.is_alive(center):
        raise DeadCenter(center)
    if radius is not None and radius < 0:
        raise GraphError("radius must be non-negative")
    ball = hop_distances(g, center, radius)
    sub, to_global = g.subgraph(ball)
    return DiscoveredView(center, radius, sub, to_global)


# -- edge-list text format ---------------------------------------------------


def parse_edgelist(lines: Iterable[str]) -> Graph:
    """Read ``n m`` followed by ``m`` lines of ``u v``; ``#`` lines are skipped."""
    rows = []
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(line.split())
    if not rows:
        raise GraphError("empty edge list")
    try:
        n, m = (int(x) for x in rows[0][:2])
        edges = [(int(r[0]), int(r[1])) for r in rows[1:]]
    except (ValueError, IndexError) as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise GraphError(f"header declares {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def read_edgelist(path) -> Graph:
    with open(path) as fh:
        return parse_edgelist(fh)


def format_edgelist(g: Graph, comments: Iterable[str] = ()) -> str:
    """Serialise ``g``; dead vertices are written as isolated slots."""
    out = [f"# {c}" for c in comments]
    edges = g.edges()
    out.append(f"{g.vertex_count} {len(edges)}")
    out.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"


def write_edgelist(g: Graph, fh: TextIO, comments: Iterable[str] = ()) -> None:
    fh.write(format_edgelist(g, comments))
