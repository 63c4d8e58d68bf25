"""Component statistics of a fragmented graph.

``S`` is the share of vertices in the largest component and ``s`` is the mean
size of every other component.  This module also carries the constraint
checks on ``(n, lcc, m)``, the closed-form large-``n`` approximations of
``s`` for the standard ``(m, lcc)`` classes, and the family of two-value
aggregates that were tried as single-number damage scores.
"""
from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from typing import Sequence

from .errors import EmptyProfile, Infeasible, RatioUndefined, Undefined
from .graph import Graph, components

M_CLASSES = ("n/2", "n/j", "n-1", "n")
LCC_CLASSES = ("1", "n/2", "n/j", "n-1")

# Constraint ids used in violation lists.
#   LCC  1 <= lcc <= n
#   M    m_min <= m <= m_max
#   DIV  s needs m >= 2
#   C1   s <= lcc
#   C2   1/n <= S <= 1
#   C3   lcc == 1  <=>  m == n
#   C4   lcc == n/2 caps m (reported alongside M)
#   C5   lcc == n/j, j >= 3, caps m (reported alongside M)
#   C6   lcc == n-1  =>  m == 2
CONSTRAINTS = ("LCC", "M", "DIV", "C1", "C2", "C3", "C4", "C5", "C6")

_EPS = 1e-9


@dataclass(frozen=True)
class FragmentProfile:
    n: int
    sizes: tuple[int, ...]

    @classmethod
    def from_sizes(cls, sizes: Sequence[int]) -> "FragmentProfile":
        if any(s < 1 for s in sizes):
            raise ValueError("fragment sizes must be positive")
        ordered = tuple(sorted(sizes, reverse=True))
        return cls(sum(ordered), ordered)

    @classmethod
    def of(cls, g: Graph) -> "FragmentProfile":
        return cls.from_sizes([len(c) for c in components(g)])

    @property
    def m(self) -> int:
        return len(self.sizes)

    @property
    def lcc(self) -> int:
        return self.sizes[0] if self.sizes else 0


@dataclass(frozen=True)
class AjbStats:
    n: float
    m: float
    lcc: float
    S: float
    s: float | None


def ajb_stats(profile: FragmentProfile) -> AjbStats:
    if profile.n < 1 or not profile.sizes:
        raise EmptyProfile("profile has no vertices")
    n, m, lcc = profile.n, profile.m, profile.lcc
    s = (n - lcc) / (m - 1) if m >= 2 else None
    return AjbStats(n=n, m=m, lcc=lcc, S=lcc / n, s=s)


def stats_for(n: float, lcc: float, m: float) -> AjbStats:
    """Stats for a hypothetical ``(n, lcc, m)`` triple, no partition needed."""
    s = (n - lcc) / (m - 1) if m > 1 + _EPS else None
    return AjbStats(n=n, m=m, lcc=lcc, S=lcc / n if n else math.nan, s=s)


def _eq(x: float, y: float) -> bool:
    return abs(x - y) <= _EPS * max(1.0, abs(x), abs(y))


def m_bounds(n: float, lcc: float) -> tuple[float, float]:
    """Feasible component counts for a given largest-component size.

    With ``lcc < n`` the most fragments come from one big component plus
    ``n - lcc`` singletons, hence ``1 + n - lcc``.
    """
    if _eq(lcc, n):
        return 1, 1
    return 2, 1 + n - lcc


def validate(stats: AjbStats) -> list[str]:
    """Ids of every constraint the stats break; empty when consistent."""
    n, m, lcc = stats.n, stats.m, stats.lcc
    out = []
    if lcc < 1 - _EPS or lcc > n + _EPS:
        out.append("LCC")
    lo, hi = m_bounds(n, lcc)
    m_bad = m < lo - _EPS or m > hi + _EPS
    if m_bad:
        out.append("M")
    if m < 2 - _EPS:
        if stats.s is not None:
            out.append("DIV")
    elif stats.s is not None and stats.s > lcc + _EPS:
        out.append("C1")
    if n > 0 and (stats.S < 1 / n - _EPS or stats.S > 1 + _EPS):
        out.append("C2")
    if _eq(lcc, 1) != _eq(m, n):
        out.append("C3")
    if m_bad and lcc > 0 and not _eq(lcc, n):
        j = n / lcc
        if _eq(j, round(j)):
            out.append("C4" if round(j) == 2 else "C5")
    if _eq(lcc, n - 1) and n > 2 and not _eq(m, 2):
        out.append("C6")
    return out


def s_exact(n: float, lcc: float, m: float) -> float:
    if m < 2 - _EPS:
        raise Undefined("s is undefined for a single component")
    return (n - lcc) / (m - 1)


@dataclass(frozen=True)
class SApproxCase:
    m_class: str
    lcc_class: str
    j: int = 2

    def __post_init__(self):
        if self.m_class not in M_CLASSES or self.lcc_class not in LCC_CLASSES:
            raise ValueError(f"unknown cell ({self.m_class}, {self.lcc_class})")
        if self.j < 2:
            raise ValueError("j must be at least 2")

    def instantiate(self, n: float) -> tuple[float, float]:
        """``(m, lcc)`` for this cell at graph size ``n``."""
        return _class_value(self.m_class, n, self.j), _class_value(self.lcc_class, n, self.j)


def _class_value(label: str, n: float, j: int) -> float:
    return {"1": 1, "n/2": n / 2, "n/j": n / j, "n-1": n - 1, "n": n}[label]


def s_approx(case: SApproxCase, n: float) -> float:
    """Large-``n`` closed form of ``s`` for one ``(m, lcc)`` cell.

    Cells with no closed form raise :class:`Infeasible`.  Whether the cell is
    actually reachable is a separate question answered by :func:`classify`.
    """
    j = case.j
    table = {
        ("n/2", "1"): 2,
        ("n/2", "n/2"): 1,
        ("n/2", "n/j"): 2 - 2 / j,
        ("n/2", "n-1"): 2 / n,
        ("n/j", "1"): j,
        ("n/j", "n/2"): j / 2,
        ("n/j", "n/j"): j - 1,
        ("n/j", "n-1"): j / n,
        ("n-1", "1"): 1,
        ("n-1", "n/2"): 1 / 2,
        ("n-1", "n/j"): 1 - 1 / j,
        ("n-1", "n-1"): 1 / n,
        ("n", "1"): 1,
        ("n", "n/2"): 1 / 2,
        ("n", "n/j"): 1 - 1 / j,
        ("n", "n-1"): 1 / n,
    }
    try:
        return float(table[(case.m_class, case.lcc_class)])
    except KeyError:
        raise Infeasible(["DIV"], f"no closed form for {case}") from None


@dataclass(frozen=True)
class SCell:
    case: SApproxCase
    n: float
    m: float
    lcc: float
    s_exact: float | None
    s_approx: float
    violations: tuple[str, ...]

    @property
    def feasible(self) -> bool:
        return not self.violations

    @property
    def rel_error(self) -> float:
        return abs(self.s_exact - self.s_approx) / abs(self.s_approx)

    CSV_HEADER = ("m_class", "lcc_class", "j", "n", "s_exact", "s_approx", "feasible", "violations")

    def csv_row(self) -> tuple:
        return (
            self.case.m_class,
            self.case.lcc_class,
            self.case.j,
            self.n,
            self.s_exact,
            self.s_approx,
            str(self.feasible).lower(),
            ";".join(self.violations),
        )


def classify(case: SApproxCase, n: float) -> SCell:
    m, lcc = case.instantiate(n)
    stats = stats_for(n, lcc, m)
    violations = tuple(validate(stats))
    exact = s_exact(n, lcc, m) if m >= 2 else None
    return SCell(case, n, m, lcc, exact, s_approx(case, n), violations)


def s_table(n: float, js: Sequence[int]) -> list[SCell]:
    cells = []
    for j in js:
        for mc in M_CLASSES:
            for lc in LCC_CLASSES:
                cells.append(classify(SApproxCase(mc, lc, j), n))
    return cells


@dataclass(frozen=True)
class Aggregates:
    fscore: float
    arithmetic: float
    geometric: float
    quadratic: float
    ratio: float
    S_pow_s: float
    s_pow_S: float
    S: float
    s: float

    def fscore_beta(self, beta: float = 1.0) -> float:
        return fscore_beta(self.S, self.s, beta)


def fscore_beta(S: float, s: float, beta: float = 1.0) -> float:
    b2 = beta * beta
    den = b2 * S + s
    return (1 + b2) * S * s / den if den else 0.0


def aggregates(S: float, s: float) -> Aggregates:
    if S < 0 or s < 0:
        raise ValueError("S and s must be non-negative")
    if S == 0:
        raise RatioUndefined("s/S needs S > 0")
    return Aggregates(
        fscore=2 * S * s / (S + s) if S + s else 0.0,
        arithmetic=(S + s) / 2,
        geometric=math.sqrt(S * s),
        quadratic=math.sqrt((S * S + s * s) / 2),
        ratio=s / S,
        S_pow_s=S**s,
        s_pow_S=s**S,
        S=S,
        s=s,
    )


@dataclass(frozen=True)
class FragmentListStats:
    median: float | None
    mean: float | None
    stdev: float | None
    harmonic: float | None
    geometric: float | None


def fragment_list_stats(sizes: Sequence[float]) -> FragmentListStats:
    """Summary statistics of the non-LCC fragment sizes (population stdev)."""
    if not sizes:
        return FragmentListStats(None, None, None, None, None)
    return FragmentListStats(
        median=float(statistics.median(sizes)),
        mean=float(statistics.fmean(sizes)),
        stdev=float(statistics.pstdev(sizes)),
        harmonic=float(statistics.harmonic_mean(sizes)),
        geometric=float(statistics.geometric_mean(sizes)),
    )
