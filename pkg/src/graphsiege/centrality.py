"""Vertex and edge betweenness, and extremal-component selection.

Raw values count unordered source/target pairs.  Edge betweenness includes
the pair formed by the edge's own endpoints, so every connected pair spreads
exactly ``d(s, t)`` units over the edges of its shortest paths.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Hashable, Literal

import numpy as np

from .errors import EmptyTable
from .graph import Graph
from .paths import _BATCH_CELLS, adjacency_matrix, batched_bfs

Mode = Literal["low", "high", "median", "random"]
MODES = ("low", "high", "median", "random")

# Relative gap below which two betweenness values count as tied.
TIE_RTOL = 1e-9


@dataclass(frozen=True)
class BetweennessTable:
    kind: Literal["vertex", "edge"]
    raw: dict
    normalized: dict

    def __len__(self):
        return len(self.raw)

    def csv_rows(self):
        for key in sorted(self.raw):
            ident = f"{key[0]}-{key[1]}" if self.kind == "edge" else key
            yield (self.kind, ident, self.raw[key], self.normalized[key])


def _edge_index(a):
    if isinstance(a, np.ndarray):
        return np.nonzero(np.triu(a, 1))
    c = a.tocoo()
    keep = c.row < c.col
    return c.row[keep], c.col[keep]


def _dependencies(a, sources):
    """Brandes back-propagation for a batch of sources, level by level."""
    dist, sigma = batched_bfs(a, sources, count_paths=True)
    delta = np.zeros_like(sigma)
    for d in range(int(dist.max(initial=0)), 0, -1):
        at_d = dist == d
        coef = np.zeros_like(sigma)
        coef[at_d] = (1.0 + delta[at_d]) / sigma[at_d]
        pulled = a @ coef
        at_prev = dist == d - 1
        delta[at_prev] += sigma[at_prev] * pulled[at_prev]
    return dist, sigma, delta


def _betweenness(g: Graph, want_vertex: bool, want_edge: bool):
    a, ids = adjacency_matrix(g)
    ei, ej = _edge_index(a)
    n = len(ids)
    size = max(1, min(max(n, 1), _BATCH_CELLS // max(n, len(ei), 1)))
    vraw = np.zeros(n)
    eraw = np.zeros(len(ei))
    for start in range(0, n, size):
        sources = np.arange(start, min(n, start + size))
        dist, sigma, delta = _dependencies(a, sources)
        if want_vertex:
            vraw += np.where(dist > 0, delta, 0.0).sum(axis=1)
        if want_edge and len(ei):
            di, dj = dist[ei], dist[ej]
            si, sj = sigma[ei], sigma[ej]
            fwd = (dj == di + 1) & (di >= 0)
            bwd = (di == dj + 1) & (dj >= 0)
            flow = np.zeros_like(si)
            flow[fwd] = si[fwd] / sj[fwd] * (1.0 + delta[ej][fwd])
            flow[bwd] = sj[bwd] / si[bwd] * (1.0 + delta[ei][bwd])
            eraw += flow.sum(axis=1)
    # each unordered pair was accumulated once from each end
    return ids, (ei, ej), vraw / 2.0, eraw / 2.0


def vertex_betweenness(g: Graph) -> BetweennessTable:
    ids, _, vraw, _ = _betweenness(g, True, False)
    n = len(ids)
    norm = (n - 1) * (n - 2) / 2
    raw = {v: float(x) for v, x in zip(ids, vraw)}
    normalized = {v: (x / norm if norm > 0 else 0.0) for v, x in raw.items()}
    return BetweennessTable("vertex", raw, normalized)


def edge_betweenness(g: Graph) -> BetweennessTable:
    ids, (ei, ej), _, eraw = _betweenness(g, False, True)
    n = len(ids)
    norm = n * (n - 1) / 2
    raw = {(ids[i], ids[j]): float(x) for i, j, x in zip(ei, ej, eraw)}
    normalized = {e: (x / norm if norm > 0 else 0.0) for e, x in raw.items()}
    return BetweennessTable("edge", raw, normalized)


def _tied(x: float, y: float) -> bool:
    return abs(x - y) <= TIE_RTOL * max(1.0, abs(x), abs(y))


def extremal(values: dict[Hashable, float] | BetweennessTable, mode: Mode, rng: random.Random):
    """Pick the id holding the lowest/highest/median value.

    Ties are broken uniformly at random with ``rng``; ``random`` ignores the
    values.  ``median`` is the lower median of the sorted values.
    """
    if isinstance(values, BetweennessTable):
        values = values.raw
    if not values:
        raise EmptyTable("nothing to select from")
    keys = sorted(values)
    if mode == "random":
        return rng.choice(keys)
    if mode == "high":
        target = max(values.values())
    elif mode == "low":
        target = min(values.values())
    elif mode == "median":
        ordered = sorted(values.values())
        target = ordered[(len(ordered) - 1) // 2]
    else:
        raise ValueError(f"unknown selection mode {mode!r}")
    tied = [k for k in keys if _tied(values[k], target)]
    return tied[0] if len(tied) == 1 else rng.choice(tied)
