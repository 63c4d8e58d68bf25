"""Damage of a fragmented graph relative to a coalesced reference.

The reference graph is rebuilt from the fragments themselves: the two
largest fragments are joined by one edge between their anchor vertices, the
merged fragment takes its place in the size order, and this repeats until a
single component remains.  Damage is ``1 - aipl(g) / aipl(reference)``, so a
connected graph scores 0 and a graph with no edges at all scores 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .centrality import _tied, vertex_betweenness
from .errors import ZeroBaseline
from .fragmentation import FragmentProfile
from .graph import Edge, Graph, components, edge_id
from .paths import aipl


@dataclass
class _Fragment:
    members: list[int]
    anchor: int | None = None

    @property
    def key(self):
        return (-len(self.members), self.members[0])


def anchor_vertex(g: Graph, members: list[int]) -> int:
    """Highest-degree member; ties go to higher betweenness, then lower id."""
    deg = {v: len(g.adjacency(v)) for v in members}
    top = max(deg.values())
    tied = [v for v in members if deg[v] == top]
    if len(tied) == 1 or len(members) <= 3:
        # betweenness cannot separate tied vertices of so small a fragment
        return tied[0]
    sub, to_global = g.subgraph(members)
    local = vertex_betweenness(sub).normalized
    score = {to_global[i]: x for i, x in local.items()}
    best = max(score[v] for v in tied)
    return min(v for v in tied if _tied(score[v], best))


def coalesce(g: Graph) -> tuple[Graph, list[Edge]]:
    """Join fragments largest-first until connected.

    Returns a new graph holding every original edge plus exactly ``m - 1``
    added edges, and the list of those edges in the order they were added.
    """
    h = g.copy()
    frags = [_Fragment(c) for c in components(h)]
    added = []
    while len(frags) > 1:
        first, second = frags[0], frags[1]
        for f in (first, second):
            if f.anchor is None:
                f.anchor = anchor_vertex(h, f.members)
        h.add_edge(first.anchor, second.anchor)
        added.append(edge_id(first.anchor, second.anchor))
        merged = _Fragment(sorted(first.members + second.members))
        frags = sorted([merged] + frags[2:], key=lambda f: f.key)
    return h, added


@dataclass(frozen=True)
class DamageReport:
    aipl_fragmented: float
    aipl_reference: float
    ratio: float
    damage: float
    fragments: FragmentProfile
    edges_added: list[Edge] = field(default_factory=list)

    CSV_HEADER = ("n", "m_fragments", "lcc", "aipl_frag", "aipl_ref", "ratio", "damage", "edges_added")

    def csv_row(self) -> tuple:
        return (
            self.fragments.n,
            self.fragments.m,
            self.fragments.lcc,
            self.aipl_fragmented,
            self.aipl_reference,
            self.ratio,
            self.damage,
            ";".join(f"{u}-{v}" for u, v in self.edges_added),
        )


def damage(g: Graph) -> DamageReport:
    profile = FragmentProfile.of(g)
    frag = aipl(g)
    if profile.m <= 1:
        return DamageReport(frag, frag, 1.0, 0.0, profile, [])
    ref_graph, added = coalesce(g)
    ref = aipl(ref_graph)
    ratio = frag / ref if ref > 0 else 1.0
    return DamageReport(frag, ref, ratio, 1.0 - ratio, profile, added)


def robustness_ratio(e_after: float, e_before: float) -> float:
    """Efficiency after a change divided by efficiency before it."""
    if e_before <= 0:
        raise ZeroBaseline("baseline efficiency must be positive")
    return e_after / e_before
