"""Named pattern graphs accepted wherever a pattern file is expected.

Names: ``K2``..``K6``, ``P2``..``P8`` (paths on k vertices), ``C3``..``C8``,
``paw``, ``paw+pendant``, ``diamond``, ``B2`` (two triangles on a shared
spine), ``W4`` (hub plus 4-cycle), ``3K3+2K2`` (three triangles and two
disjoint edges) and ``K3+K2``.
"""
from __future__ import annotations

from itertools import combinations

from .core import PatternGraph


def complete(k: int) -> PatternGraph:
    return PatternGraph(k, frozenset(combinations(range(k), 2)))


def path(k: int) -> PatternGraph:
    return PatternGraph(k, frozenset((i, i + 1) for i in range(k - 1)))


def cycle(k: int) -> PatternGraph:
    return PatternGraph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def disjoint_union(*parts: PatternGraph) -> PatternGraph:
    edges, offset = set(), 0
    for p in parts:
        edges.update((u + offset, v + offset) for u, v in p.edges)
        offset += p.n
    return PatternGraph(offset, frozenset(edges))


# triangle 0-1-2 with pendant 3 at vertex 2
PAW = PatternGraph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
PAW_PENDANT = PatternGraph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)])
# K4 minus the edge 2-3; the spine is 0-1
DIAMOND = PatternGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
BOOK2 = DIAMOND
# hub 0, rim 1-2-3-4
WHEEL4 = PatternGraph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (1, 4)])
THREE_TRIANGLES_TWO_EDGES = FIG1 = disjoint_union(complete(3), complete(3), complete(3), complete(2), complete(2))
TRIANGLE_EDGE = disjoint_union(complete(3), complete(2))


def named_pattern(name: str) -> PatternGraph:
    fixed = {
        "paw": PAW, "paw+pendant": PAW_PENDANT, "diamond": DIAMOND, "B2": BOOK2,
        "W4": WHEEL4, "3K3+2K2": FIG1, "K3+K2": TRIANGLE_EDGE,
    }
    if name in fixed:
        return fixed[name]
    kind, num = name[:1], name[1:]
    if num.isdigit():
        k = int(num)
        if kind == "K" and 2 <= k <= 6:
            return complete(k)
        if kind == "P" and 2 <= k <= 8:
            return path(k)
        if kind == "C" and 3 <= k <= 8:
            return cycle(k)
    raise KeyError(f"unknown pattern name {name!r}")


PATTERN_NAMES = (
    [f"K{k}" for k in range(2, 7)] + [f"P{k}" for k in range(2, 9)]
    + [f"C{k}" for k in range(3, 9)]
    + ["paw", "paw+pendant", "diamond", "B2", "W4", "3K3+2K2", "K3+K2"]
)
