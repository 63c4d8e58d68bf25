"""Damage along a ladder of fragment profiles, at several graph scales.

Each rung lists fragment sizes.  At scale ``k`` every fragment of size
``s > 1`` becomes one fragment of size ``s * k``, drawn as a connected random
graph of mean degree ``mean_degree`` with the same per-fragment seed at every
scale.  An isolated vertex is replicated into ``k`` isolated vertices instead:
a scaled isolated vertex is still isolated, so a shattered graph stays
shattered at every scale.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .damage import DamageReport, damage
from .fixtures import LADDER
from .generators import connected_fragment, disjoint_union
from .graph import Graph

DEFAULT_SCALES = (1, 2, 4, 8, 10)


def scaled_sizes(sizes: Sequence[int], scale: int) -> list[int]:
    out = []
    for s in sizes:
        out.extend([1] * scale if s == 1 else [s * scale])
    return out


def rung_graph(sizes: Sequence[int], scale: int = 1, mean_degree: float = 4.0, seed: int = 0) -> Graph:
    parts = []
    for i, s in enumerate(sizes):
        if s == 1:
            parts.extend(Graph(1) for _ in range(scale))
        else:
            parts.append(connected_fragment(s * scale, mean_degree, seed * 1000 + i))
    return disjoint_union(parts)


@dataclass(frozen=True)
class LadderRow:
    scale: int
    rung: int
    sizes: tuple[int, ...]
    report: DamageReport

    CSV_HEADER = ("scale", "rung", "sizes", "n", "m_fragments", "aipl_frag", "aipl_ref", "ratio", "damage")

    def csv_row(self) -> tuple:
        r = self.report
        return (
            self.scale,
            self.rung,
            "+".join(str(s) for s in self.sizes),
            r.fragments.n,
            r.fragments.m,
            r.aipl_fragmented,
            r.aipl_reference,
            r.ratio,
            r.damage,
        )


def run_ladder(
    scales: Sequence[int] = DEFAULT_SCALES,
    rungs: Sequence[Sequence[int]] = LADDER,
    mean_degree: float = 4.0,
    seed: int = 0,
) -> list[LadderRow]:
    rows = []
    for k in scales:
        for i, sizes in enumerate(rungs, start=1):
            g = rung_graph(sizes, k, mean_degree, seed)
            rows.append(LadderRow(k, i, tuple(sizes), damage(g)))
    return rows


def by_scale(rows: Sequence[LadderRow]) -> dict[int, list[float]]:
    """Damage per rung, grouped by scale."""
    out: dict[int, list[float]] = {}
    for r in sorted(rows, key=lambda r: (r.scale, r.rung)):
        out.setdefault(r.scale, []).append(r.report.damage)
    return out
