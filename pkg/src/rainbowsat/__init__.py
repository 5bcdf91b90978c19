"""Rainbow saturation: coloured-graph constructions, rainbow search and exact small cases."""
from .core import (ColouredGraph, GraphFormatError, LabelledColouredGraph, PatternGraph, fresh_colour,
                   parse_graph, serialize_graph, used_colours)
from .saturation import UNBOUNDED, BadColours, Palette, SaturationReport, absorb, bad_colours, is_bad, saturation_report
from .search import SearchConstraint, find_rainbow_embedding, max_rainbow_clique, rainbow_clique_exists

__all__ = [
    "ColouredGraph", "GraphFormatError", "LabelledColouredGraph", "PatternGraph", "fresh_colour",
    "parse_graph", "serialize_graph", "used_colours", "UNBOUNDED", "BadColours", "Palette",
    "SaturationReport", "absorb", "bad_colours", "is_bad", "saturation_report", "SearchConstraint",
    "find_rainbow_embedding", "max_rainbow_clique", "rainbow_clique_exists",
]
