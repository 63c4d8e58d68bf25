"""Shipped graphs and fragment ladders."""
from __future__ import annotations

from importlib import resources

from .graph import Graph, parse_edgelist


def load_sample21() -> Graph:
    """21-vertex, 27-edge two-community test graph (see the data file header)."""
    text = resources.files("graphsiege").joinpath("data/sample21.edges").read_text()
    return parse_edgelist(text.splitlines())


# Fragment-size profiles on 20 vertices, ordered from intact to shattered.
LADDER: tuple[tuple[int, ...], ...] = (
    (20,),
    (19, 1),
    (15, 5),
    (10, 10),
    (10, 5, 5),
    (5, 5, 5, 5),
    (4, 4, 4, 4, 2, 2),
    (1,) * 20,
)
