"""Attack profiles and the remove-and-recompute attack loop.

A profile is written ``C:V``: the component selector ``C`` is ``E`` (edges by
betweenness), ``V`` (vertices by betweenness) or ``D`` (vertices by degree),
and the value selector ``V`` is ``L``, ``M``, ``H`` or ``R`` for the lowest,
median, highest or a uniformly random candidate.

The attacker only knows the vertices discovered within ``radius`` hops of the
center before the first removal.  Every step the view is re-derived from the
damaged graph as the subgraph induced on the surviving known vertices, so
knowledge never grows and pieces of the view that get cut off from the center
stay attackable.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass, field, replace
from typing import Sequence

from .centrality import edge_betweenness, extremal, vertex_betweenness
from .damage import damage
from .errors import BadSyntax, NothingToAttack
from .fragmentation import FragmentProfile
from .graph import Edge, Graph, discover

COMPONENTS = {"E": "edge", "V": "vertex", "D": "degree"}
VALUES = {"L": "low", "M": "median", "H": "high", "R": "random"}
RECOMPUTE = ("recomputed", "initial")

_PROFILE_RE = re.compile(r"^\s*([EVD])\s*:\s*([LMHR])\s*$")


@dataclass(frozen=True)
class AttackProfile:
    component: str
    value: str
    recompute: str = "recomputed"
    radius: int | None = None
    seed: int = 0
    center: int | None = None

    def __post_init__(self):
        if self.component not in COMPONENTS:
            raise BadSyntax(f"unknown component selector {self.component!r}")
        if self.value not in VALUES:
            raise BadSyntax(f"unknown value selector {self.value!r}")
        if self.recompute not in RECOMPUTE:
            raise BadSyntax(f"unknown recompute mode {self.recompute!r}")

    @property
    def label(self) -> str:
        return f"{self.component}:{self.value}"

    @property
    def targets_edges(self) -> bool:
        return self.component == "E"


def parse_profile(text: str, **overrides) -> AttackProfile:
    m = _PROFILE_RE.match(text)
    if not m:
        raise BadSyntax(f"bad attack profile {text!r}; expected C:V with C in E,V,D and V in L,M,H,R")
    return AttackProfile(m.group(1), m.group(2), **overrides)


def default_center(g: Graph) -> int:
    """Alive vertex of highest degree, lowest id on ties."""
    vs = g.vertices()
    if not vs:
        raise NothingToAttack("graph has no vertices")
    return max(vs, key=lambda v: (g.degree(v), -v))


def criterion_table(view: Graph, to_global: list[int], component: str) -> dict:
    """Selector values of every candidate in ``view``, keyed by global id."""
    if component == "E":
        table = edge_betweenness(view).raw
        return {(to_global[u], to_global[v]): x for (u, v), x in table.items()}
    if component == "V":
        table = vertex_betweenness(view).raw
        return {to_global[v]: x for v, x in table.items()}
    return {to_global[v]: float(view.degree(v)) for v in view.vertices()}


def select_target(view, profile: AttackProfile, rng: random.Random, table: dict | None = None):
    """Global id of the component ``profile`` picks from ``view``.

    ``view`` is either a :class:`DiscoveredView` or a ``(graph, to_global)``
    pair.  A precomputed ``table`` overrides the criterion computation.
    """
    graph, to_global = (view.graph, view.to_global) if hasattr(view, "graph") else view
    if table is None:
        table = criterion_table(graph, to_global, profile.component)
    if not table:
        raise NothingToAttack(f"no {COMPONENTS[profile.component]} candidates in view")
    return extremal(table, VALUES[profile.value], rng)


@dataclass(frozen=True)
class TraceStep:
    step: int
    kind: str
    removed: int | Edge
    criterion: float
    local_damage: float
    global_damage: float
    local_fragments: FragmentProfile
    global_fragments: FragmentProfile

    CSV_HEADER = (
        "step", "kind", "removed", "criterion", "local_damage",
        "global_damage", "local_lcc", "global_lcc", "global_m",
    )

    def csv_row(self) -> tuple:
        removed = f"{self.removed[0]}-{self.removed[1]}" if self.kind == "edge" else self.removed
        return (
            self.step,
            self.kind,
            removed,
            self.criterion,
            self.local_damage,
            self.global_damage,
            self.local_fragments.lcc,
            self.global_fragments.lcc,
            self.global_fragments.m,
        )


@dataclass
class DamageTrace:
    profile: AttackProfile
    center: int
    steps: list[TraceStep] = field(default_factory=list)
    reason: str = ""

    def global_curve(self) -> list[float]:
        return [s.global_damage for s in self.steps]

    def local_curve(self) -> list[float]:
        return [s.local_damage for s in self.steps]


def run_attack(g: Graph, profile: AttackProfile, max_steps: int | None = None) -> DamageTrace:
    """Repeatedly remove the selected component and record the damage.

    ``g`` is not modified.  The loop stops after ``max_steps`` removals or
    when the view has no candidate left; ``trace.reason`` says which.
    """
    if max_steps is not None and max_steps < 1:
        raise ValueError("max_steps must be at least 1")
    g = g.copy()
    rng = random.Random(profile.seed)
    center = default_center(g) if profile.center is None else profile.center
    known = discover(g, center, profile.radius).global_vertices()
    frozen = None
    if profile.recompute == "initial":
        local, to_global = g.subgraph(known)
        frozen = criterion_table(local, to_global, profile.component)

    trace = DamageTrace(profile, center)
    kind = "edge" if profile.targets_edges else "vertex"
    while max_steps is None or len(trace.steps) < max_steps:
        view = g.subgraph([v for v in known if g.is_alive(v)])
        if frozen is None:
            table = criterion_table(*view, profile.component)
        else:
            current = _candidates(*view, profile.targets_edges)
            table = {k: frozen[k] for k in current}
        try:
            target = select_target(view, profile, rng, table)
        except NothingToAttack:
            trace.reason = "exhausted"
            break
        if profile.targets_edges:
            g.remove_edge(*target)
        else:
            g.remove_vertex(target)
        survivors = [v for v in known if g.is_alive(v)]
        world = damage(g)
        if len(survivors) == g.number_of_vertices():
            local = world
        else:
            local = damage(g.subgraph(survivors)[0])
        trace.steps.append(
            TraceStep(
                step=len(trace.steps) + 1,
                kind=kind,
                removed=target,
                criterion=table[target],
                local_damage=local.damage,
                global_damage=world.damage,
                local_fragments=local.fragments,
                global_fragments=world.fragments,
            )
        )
    else:
        trace.reason = "max_steps"
    return trace


def _candidates(graph: Graph, to_global: list[int], edges: bool):
    if edges:
        return [(to_global[u], to_global[v]) for u, v in graph.edges()]
    return [to_global[v] for v in graph.vertices()]


@dataclass(frozen=True)
class CampaignResult:
    profile: str
    seed_count: int
    auc: float
    local_damage: list[float]
    global_damage: list[float]
    local_lcc: list[float]
    global_lcc: list[float]
    global_m: list[float]

    CSV_HEADER = (
        "profile", "seed_count", "auc", "step", "local_damage",
        "global_damage", "local_lcc", "global_lcc", "global_m",
    )

    def csv_rows(self):
        for i, (ld, gd, ll, gl, gm) in enumerate(
            zip(self.local_damage, self.global_damage, self.local_lcc, self.global_lcc, self.global_m),
            start=1,
        ):
            yield (self.profile, self.seed_count, self.auc, i, ld, gd, ll, gl, gm)


def _padded_mean(series: list[list[float]]) -> list[float]:
    """Per-step mean; shorter series hold their final value."""
    length = max((len(s) for s in series), default=0)
    out = []
    for i in range(length):
        vals = [s[i] if i < len(s) else s[-1] for s in series if s]
        out.append(sum(vals) / len(vals))
    return out


def mean_trace(traces: Sequence[DamageTrace], label: str) -> CampaignResult:
    def col(attr):
        return _padded_mean([[float(getattr(s, attr)) for s in t.steps] for t in traces])

    def prof(which, attr):
        return _padded_mean([[float(getattr(getattr(s, which), attr)) for s in t.steps] for t in traces])

    glob = col("global_damage")
    return CampaignResult(
        profile=label,
        seed_count=len(traces),
        auc=sum(glob),
        local_damage=col("local_damage"),
        global_damage=glob,
        local_lcc=prof("local_fragments", "lcc"),
        global_lcc=prof("global_fragments", "lcc"),
        global_m=prof("global_fragments", "m"),
    )


def campaign(
    g: Graph,
    profiles: Sequence[AttackProfile],
    seeds: Sequence[int],
    max_steps: int | None = None,
) -> list[CampaignResult]:
    """Average each profile over ``seeds``; results ranked by AUC, highest first.

    The AUC is the sum over steps of the seed-averaged global damage.
    """
    if not profiles or not seeds:
        raise ValueError("campaign needs at least one profile and one seed")
    results = []
    for p in profiles:
        traces = [run_attack(g, replace(p, seed=s), max_steps) for s in seeds]
        results.append(mean_trace(traces, p.label))
    results.sort(key=lambda r: (-r.auc, r.profile))
    return results
