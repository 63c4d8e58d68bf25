"""Seeded random, small-world and scale-free graph families."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations

from .errors import BadSpec
from .graph import Graph, components

FAMILIES = ("ER_gnp", "ER_gnm", "WS", "BA")


@dataclass(frozen=True)
class GenSpec:
    """Family name plus parameters.

    The defaults describe a 100-vertex graph with about 120 edges in every
    family (BA and WS get the nearest integer setting: 99 and 100 edges).
    """

    family: str
    n: int = 100
    p: float = 120 / 4950
    m_edges: int = 120
    k: int = 2
    rewire_p: float = 0.1
    m_attach: int = 1
    seed: int = 0

    def validate(self) -> None:
        if self.family not in FAMILIES:
            raise BadSpec(f"unknown family {self.family!r}")
        if self.n < 0:
            raise BadSpec("n must be non-negative")
        if self.family == "ER_gnp" and not 0.0 <= self.p <= 1.0:
            raise BadSpec("p must lie in [0, 1]")
        if self.family == "ER_gnm" and not 0 <= self.m_edges <= self.n * (self.n - 1) // 2:
            raise BadSpec("m_edges out of range")
        if self.family == "WS":
            if self.k % 2 or not 0 <= self.k < self.n:
                raise BadSpec("WS needs even k with 0 <= k < n")
            if not 0.0 <= self.rewire_p <= 1.0:
                raise BadSpec("rewire_p must lie in [0, 1]")
        if self.family == "BA" and not 1 <= self.m_attach < self.n:
            raise BadSpec("BA needs 1 <= m_attach < n")


def generate(spec: GenSpec) -> Graph:
    spec.validate()
    rng = random.Random(spec.seed)
    if spec.family == "ER_gnp":
        return gnp(spec.n, spec.p, rng)
    if spec.family == "ER_gnm":
        return gnm(spec.n, spec.m_edges, rng)
    if spec.family == "WS":
        return watts_strogatz(spec.n, spec.k, spec.rewire_p, rng)
    return barabasi_albert(spec.n, spec.m_attach, rng)


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    g = Graph(n)
    if p >= 1.0:
        for u, v in combinations(range(n), 2):
            g.add_edge(u, v)
        return g
    if p <= 0.0:
        return g
    # geometric skipping over the pair sequence (Batagelj & Brandes)
    lp = math.log(1.0 - p)
    v, w = 1, -1
    while v < n:
        w += 1 + int(math.log(1.0 - rng.random()) / lp)
        while w >= v and v < n:
            w -= v
            v += 1
        if v < n:
            g.add_edge(v, w)
    return g


def gnm(n: int, m: int, rng: random.Random) -> Graph:
    g = Graph(n)
    total = n * (n - 1) // 2
    for idx in sorted(rng.sample(range(total), m)):
        # pair index -> (u, v) in row-major upper-triangle order
        v = int((1 + math.isqrt(1 + 8 * idx)) // 2)
        while v * (v - 1) // 2 > idx:
            v -= 1
        while (v + 1) * v // 2 <= idx:
            v += 1
        u = idx - v * (v - 1) // 2
        g.add_edge(u, v)
    return g


def ring_lattice(n: int, k: int) -> Graph:
    g = Graph(n)
    for u in range(n):
        for step in range(1, k // 2 + 1):
            v = (u + step) % n
            if not g.has_edge(u, v):
                g.add_edge(u, v)
    return g


def watts_strogatz(n: int, k: int, rewire_p: float, rng: random.Random) -> Graph:
    g = ring_lattice(n, k)
    if rewire_p <= 0.0:
        return g
    for step in range(1, k // 2 + 1):
        for u in range(n):
            v = (u + step) % n
            if rng.random() >= rewire_p or not g.has_edge(u, v):
                continue
            if g.degree(u) >= n - 1:
                continue
            w = rng.randrange(n)
            while w == u or g.has_edge(u, w):
                w = rng.randrange(n)
            g.remove_edge(u, v)
            g.add_edge(u, w)
    return g


def barabasi_albert(n: int, m_attach: int, rng: random.Random) -> Graph:
    """Preferential attachment grown from a star on ``m_attach + 1`` vertices."""
    g = Graph(n)
    repeated = []
    for v in range(1, m_attach + 1):
        g.add_edge(0, v)
        repeated += [0, v]
    for new in range(m_attach + 1, n):
        targets = set()
        while len(targets) < m_attach:
            targets.add(rng.choice(repeated))
        for t in sorted(targets):
            g.add_edge(new, t)
            repeated += [new, t]
    return g


def connected_fragment(size: int, mean_degree: float, seed: int) -> Graph:
    """Connected ER graph on ``size`` vertices, redrawn until connected."""
    if size < 1:
        raise BadSpec("fragment size must be positive")
    if size <= 2:
        return Graph.from_edges(size, [(0, 1)] if size == 2 else [])
    p = min(1.0, mean_degree / (size - 1))
    rng = random.Random(seed)
    while True:
        g = gnp(size, p, rng)
        if len(components(g)) == 1:
            return g


def disjoint_union(parts) -> Graph:
    parts = list(parts)
    g = Graph(sum(p.vertex_count for p in parts))
    offset = 0
    for p in parts:
        for u, v in p.edges():
            g.add_edge(u + offset, v + offset)
        offset += p.vertex_count
    return g
