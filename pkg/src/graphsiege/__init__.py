"""Fragmentation damage, betweenness and attack experiments on simple graphs."""
from .attacks import AttackProfile, CampaignResult, DamageTrace, campaign, parse_profile, run_attack
from .centrality import BetweennessTable, edge_betweenness, extremal, vertex_betweenness
from .damage import DamageReport, coalesce, damage, robustness_ratio
from .errors import GraphsiegeError
from .fragmentation import FragmentProfile, ajb_stats, s_approx, s_exact, s_table, validate
from .generators import GenSpec, generate
from .graph import DiscoveredView, Graph, components, discover, parse_edgelist, read_edgelist
from .paths import aipl, all_pairs_distances, apl_constrained, metric_report

__version__ = "0.1.0"

__all__ = [
    "AttackProfile", "BetweennessTable", "CampaignResult", "DamageReport", "DamageTrace",
    "DiscoveredView", "FragmentProfile", "GenSpec", "Graph", "GraphsiegeError",
    "aipl", "ajb_stats", "all_pairs_distances", "apl_constrained", "campaign", "coalesce",
    "components", "damage", "discover", "edge_betweenness", "extremal", "generate",
    "metric_report", "parse_edgelist", "parse_profile", "read_edgelist", "robustness_ratio",
    "run_attack", "s_approx", "s_exact", "s_table", "validate", "vertex_betweenness",
]
