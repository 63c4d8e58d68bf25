"""Command-line experiment driver.

Every subcommand reads an edge list (``--input``, default stdin; ``@sample21``
names the shipped two-community fixture) and writes CSV or an edge list to
``--output`` (default stdout).  ``attack``, ``campaign`` and ``ladder`` can
also render a figure with ``--plot FILE``.

Exit status is 0 on success, 1 when a computation fails and 2 on bad usage.
"""
from __future__ import annotations

import argparse
import contextlib
import os
import sys

from . import attacks, centrality, fragmentation, generators, ladder, paths
from .damage import damage as damage_report
from .errors import BadSyntax, GraphsiegeError
from .fixtures import load_sample21
from .graph import Graph, discover, format_edgelist, parse_edgelist
from .report import write_csv

PROG = "graphsiege"
SEED_ENV = "GRAPHSIEGE_SEED"
DEFAULT_PROFILES = "E:H,V:H,D:H,E:L,V:L,D:L,V:R"


def int_list(text: str) -> list[int]:
    """``"1,2,4"`` or an inclusive range ``"2..10"``."""
    out = []
    try:
        for part in text.split(","):
            part = part.strip()
            if ".." in part:
                lo, hi = part.split("..", 1)
                out.extend(range(int(lo), int(hi) + 1))
            elif part:
                out.append(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers like 1,2,4 or 2..10, got {text!r}") from None
    if not out:
        raise argparse.ArgumentTypeError("empty list")
    return out


def positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {v}")
    return v


def default_seed(parser: argparse.ArgumentParser) -> int:
    raw = os.environ.get(SEED_ENV, "")
    if not raw:
        return 0
    try:
        return int(raw)
    except ValueError:
        parser.error(f"{SEED_ENV} must be an integer, got {raw!r}")


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=PROG, description="Fragmentation damage and attack experiments.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    io_opts = argparse.ArgumentParser(add_help=False)
    io_opts.add_argument("--input", "-i", default="-",
                         help="edge-list file, '-' for stdin, '@sample21' for the shipped fixture")
    io_opts.add_argument("--output", "-o", default="-", help="output file, '-' for stdout")

    out_only = argparse.ArgumentParser(add_help=False)
    out_only.add_argument("--output", "-o", default="-", help="output file, '-' for stdout")

    seed_opt = argparse.ArgumentParser(add_help=False)
    seed_opt.add_argument("--seed", type=int, default=None, help=f"RNG seed (default ${SEED_ENV} or 0)")

    p = sub.add_parser("gen", parents=[out_only, seed_opt], help="generate a random graph")
    p.add_argument("--family", required=True, choices=generators.FAMILIES)
    p.add_argument("--n", type=nonneg_int, default=100)
    p.add_argument("--p", type=float, default=None, help="edge probability (ER_gnp)")
    p.add_argument("--m", type=nonneg_int, default=None, help="edge count (ER_gnm) or attachments per vertex (BA)")
    p.add_argument("--k", type=nonneg_int, default=None, help="lattice degree (WS)")
    p.add_argument("--rewire-p", type=float, default=None, help="rewiring probability (WS)")

    sub.add_parser("stats", parents=[io_opts], help="distance and clustering metrics")

    p = sub.add_parser("betweenness", parents=[io_opts], help="vertex or edge betweenness table")
    p.add_argument("--kind", choices=("vertex", "edge"), default="vertex")

    p = sub.add_parser("discover", parents=[io_opts], help="radius-limited view around a vertex")
    p.add_argument("--center", type=nonneg_int, required=True)
    p.add_argument("--radius", type=nonneg_int, default=None, help="hop limit (default unlimited)")

    sub.add_parser("damage", parents=[io_opts], help="damage of a fragmented graph")

    attack_opts = argparse.ArgumentParser(add_help=False)
    attack_opts.add_argument("--radius", type=nonneg_int, default=None, help="discovery radius (default unlimited)")
    attack_opts.add_argument("--center", type=nonneg_int, default=None,
                             help="discovery center (default: highest-degree vertex)")
    attack_opts.add_argument("--steps", type=positive_int, default=None, help="maximum removals")
    attack_opts.add_argument("--recompute", choices=attacks.RECOMPUTE, default="recomputed",
                             help="recompute the criterion every step or freeze the initial table")
    attack_opts.add_argument("--plot", default=None, metavar="FILE", help="also render a figure")

    p = sub.add_parser("attack", parents=[io_opts, seed_opt, attack_opts], help="run one attack profile")
    p.add_argument("--profile", required=True, help="C:V, e.g. D:H")

    p = sub.add_parser("campaign", parents=[io_opts, seed_opt, attack_opts],
                       help="average several profiles over seeds, ranked by AUC")
    p.add_argument("--profile", default=DEFAULT_PROFILES, help="comma-separated profiles")
    p.add_argument("--seeds", type=positive_int, default=20, help="number of seeds, starting at --seed")

    p = sub.add_parser("s-table", parents=[out_only], help="exact vs approximate mean fragment size grid")
    p.add_argument("--n", type=positive_int, default=2520)
    p.add_argument("--j", type=int_list, default=list(range(2, 11)), help="e.g. 4 or 2..10 or 2,3,5")

    p = sub.add_parser("ladder", parents=[out_only, seed_opt], help="damage along the fragment ladder")
    p.add_argument("--scales", type=int_list, default=list(ladder.DEFAULT_SCALES))
    p.add_argument("--plot", default=None, metavar="FILE", help="also render a figure")

    return parser


# -- I/O helpers -------------------------------------------------------------


def read_graph(spec: str) -> Graph:
    if spec == "@sample21":
        return load_sample21()
    if spec == "-":
        return parse_edgelist(sys.stdin)
    with open(spec) as fh:
        return parse_edgelist(fh)


@contextlib.contextmanager
def open_output(spec: str):
    if spec == "-":
        yield sys.stdout
    else:
        with open(spec, "w", newline="") as fh:
            yield fh


# -- commands ----------------------------------------------------------------


def cmd_gen(args, out):
    kw = {"family": args.family, "n": args.n, "seed": args.seed}
    if args.p is not None:
        kw["p"] = args.p
    if args.k is not None:
        kw["k"] = args.k
    if args.rewire_p is not None:
        kw["rewire_p"] = args.rewire_p
    if args.m is not None:
        kw["m_attach" if args.family == "BA" else "m_edges"] = args.m
    spec = generators.GenSpec(**kw)
    g = generators.generate(spec)
    out.write(format_edgelist(g, [f"{k}={v}" for k, v in vars(spec).items()]))


def cmd_stats(args, out):
    r = paths.metric_report(read_graph(args.input))
    write_csv(out, r.CSV_HEADER, [r.csv_row()])


def cmd_betweenness(args, out):
    g = read_graph(args.input)
    table = centrality.edge_betweenness(g) if args.kind == "edge" else centrality.vertex_betweenness(g)
    write_csv(out, ("kind", "id", "raw", "normalized"), table.csv_rows())


def cmd_discover(args, out):
    view = discover(read_graph(args.input), args.center, args.radius)
    radius = "unlimited" if args.radius is None else args.radius
    comments = [f"view center={args.center} radius={radius}", "map local global"]
    comments += [f"map {i} {gid}" for i, gid in enumerate(view.to_global)]
    out.write(format_edgelist(view.graph, comments))


def cmd_damage(args, out):
    r = damage_report(read_graph(args.input))
    write_csv(out, r.CSV_HEADER, [r.csv_row()])


def _profile(text, args, seed):
    return attacks.parse_profile(
        text, recompute=args.recompute, radius=args.radius, seed=seed, center=args.center
    )


def cmd_attack(args, out):
    g = read_graph(args.input)
    trace = attacks.run_attack(g, _profile(args.profile, args, args.seed), args.steps)
    write_csv(out, attacks.TraceStep.CSV_HEADER, (s.csv_row() for s in trace.steps))
    if args.plot:
        from .plotting import plot_trace

        plot_trace(trace, args.plot)


def cmd_campaign(args, out):
    g = read_graph(args.input)
    profiles = [_profile(t, args, args.seed) for t in args.profile.split(",") if t.strip()]
    if not profiles:
        raise BadSyntax("no attack profiles given")
    seeds = range(args.seed, args.seed + args.seeds)
    results = attacks.campaign(g, profiles, seeds, args.steps)
    write_csv(out, attacks.CampaignResult.CSV_HEADER, (row for r in results for row in r.csv_rows()))
    if args.plot:
        from .plotting import plot_campaign

        plot_campaign(results, args.plot)


def cmd_s_table(args, out):
    cells = fragmentation.s_table(args.n, args.j)
    write_csv(out, fragmentation.SCell.CSV_HEADER, (c.csv_row() for c in cells))


def cmd_ladder(args, out):
    rows = ladder.run_ladder(args.scales, seed=args.seed)
    write_csv(out, ladder.LadderRow.CSV_HEADER, (r.csv_row() for r in rows))
    if args.plot:
        from .plotting import plot_ladder

        plot_ladder(rows, args.plot)


COMMANDS = {
    "gen": cmd_gen,
    "stats": cmd_stats,
    "betweenness": cmd_betweenness,
    "discover": cmd_discover,
    "damage": cmd_damage,
    "attack": cmd_attack,
    "campaign": cmd_campaign,
    "s-table": cmd_s_table,
    "ladder": cmd_ladder,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seed", 0) is None:
        args.seed = default_seed(parser)
    try:
        with open_output(args.output) as out:
            COMMANDS[args.command](args, out)
    except (GraphsiegeError, OSError, ValueError) as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
