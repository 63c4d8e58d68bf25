"""Figures for attack traces, campaigns and the scale ladder.

Everything renders off-screen; the output format follows the file suffix
(``.png``, ``.pdf``, ``.svg``).
"""
from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .attacks import CampaignResult, DamageTrace  # noqa: E402
from .ladder import LadderRow, by_scale  # noqa: E402


def _finish(fig, ax, path, xlabel, ylabel, title):
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    ax.set_ylim(-0.02, 1.02)
    ax.grid(alpha=0.3)
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    # drop creation dates so reruns give the same file
    fig.savefig(path, metadata={"Date": None} if str(path).endswith((".svg", ".pdf")) else None)
    plt.close(fig)


def plot_trace(trace: DamageTrace, path) -> None:
    fig, ax = plt.subplots(figsize=(5, 3.5))
    steps = [s.step for s in trace.steps]
    ax.plot(steps, trace.global_curve(), "o-", ms=3, label="global")
    ax.plot(steps, trace.local_curve(), "s--", ms=3, label="local")
    _finish(fig, ax, path, "removals", "damage",
            f"{trace.profile.label} from vertex {trace.center}")


def plot_campaign(results: Sequence[CampaignResult], path) -> None:
    fig, ax = plt.subplots(figsize=(5, 3.5))
    for r in results:
        xs = range(1, len(r.global_damage) + 1)
        ax.plot(xs, r.global_damage, label=f"{r.profile} (AUC {r.auc:.3g})")
    seeds = results[0].seed_count if results else 0
    _finish(fig, ax, path, "removals", "mean global damage", f"{seeds} seeds per profile")


def plot_ladder(rows: Sequence[LadderRow], path) -> None:
    fig, ax = plt.subplots(figsize=(5, 3.5))
    for scale, dmg in by_scale(rows).items():
        ax.plot(range(1, len(dmg) + 1), dmg, "o-", ms=3, label=f"x{scale}")
    _finish(fig, ax, path, "ladder rung", "damage", "damage along the fragment ladder")
