"""Exact rainbow saturation numbers for tiny n by exhaustive enumeration.

Graphs are enumerated by ascending edge count and deduplicated by a
brute-force canonical form.  For each graph the colourings are enumerated up
to renaming of colours, i.e. as set partitions of the edge set (with at most
t blocks for a bounded palette).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterator

from .core import ColouredGraph, Edge, PatternGraph
from .saturation import UNBOUNDED, Palette, absorb, is_saturated, saturation_report

SOFT_MAX_N = 6


def canonical_form(n: int, edges: tuple[Edge, ...]) -> tuple[Edge, ...]:
    """Lexicographically smallest sorted edge tuple over all vertex relabellings."""
    best = None
    for perm in permutations(range(n)):
        img = tuple(sorted((perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])
                           for u, v in edges))
        if best is None or img < best:
            best = img
    return best if best is not None else ()


def graphs_with_edges(n: int, k: int) -> list[tuple[Edge, ...]]:
    """One representative per isomorphism class, in canonical-form order."""
    pairs = list(combinations(range(n), 2))
    forms = {canonical_form(n, es) for es in combinations(pairs, k)}
    return sorted(forms)


def set_partitions(m: int, max_blocks: int | None = None) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings of length m (block of each element)."""
    if m == 0:
        yield ()
        return
    limit = m if max_blocks is None else max_blocks
    rgs = [0] * m

    def rec(i: int, blocks: int):
        if i == m:
            yield tuple(rgs)
            return
        for b in range(min(blocks + 1, limit)):
            rgs[i] = b
            yield from rec(i + 1, max(blocks, b + 1))

    yield from rec(1, 1)


@dataclass
class OracleResult:
    n: int
    H: PatternGraph
    palette: Palette
    min_edges: int | None = None
    witness: ColouredGraph | None = None
    stats: dict = field(default_factory=lambda: {"graphs": 0, "colourings": 0, "max_edges_tried": -1})

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "pattern": {"n": self.H.n, "edges": [list(e) for e in self.H.sorted_edges]},
            "palette": None if self.palette.t is None else self.palette.t,
            "min_edges": self.min_edges,
            "witness": None if self.witness is None else
            {"n": self.witness.n, "edges": [[u, v, self.witness.colour[(u, v)]] for u, v in self.witness.edges]},
            "search_space_stats": self.stats,
        }


def exact_rsat(n: int, h: PatternGraph, palette: Palette = UNBOUNDED, edge_budget: int | None = None,
               max_n: int = SOFT_MAX_N, colourings=None) -> OracleResult:
    """Minimum edge count of an H-rainbow saturated coloured graph on n vertices.

    ``colourings(m)`` may replace the partition enumeration (used to check the
    quotient); it must yield colour tuples for m edges.
    """
    if n > max_n:
        raise ValueError(f"n={n} exceeds the oracle limit {max_n} (raise max_n to override)")
    if h.num_edges == 0:
        raise ValueError("pattern must have at least one edge")
    res = OracleResult(n, h, palette)
    top = n * (n - 1) // 2 if edge_budget is None else min(edge_budget, n * (n - 1) // 2)
    if colourings is None:
        def colourings(m):
            return set_partitions(m, palette.t)
    for k in range(top + 1):
        res.stats["max_edges_tried"] = k
        for edges in graphs_with_edges(n, k):
            res.stats["graphs"] += 1
            for cols in colourings(k):
                res.stats["colourings"] += 1
                g = ColouredGraph(n, dict(zip(edges, cols)))
                if is_saturated(g, h, palette):
                    if not saturation_report(g, h, palette).is_saturated:
                        raise AssertionError("checker disagreement on oracle witness")
                    res.min_edges, res.witness = k, g
                    return res
    return res


def verify_upper_bound(g: ColouredGraph, h: PatternGraph, palette: Palette = UNBOUNDED) -> tuple[int, bool]:
    """Absorb ``g`` and re-check it; the edge count is an upper bound on rsat(n, H)."""
    out, _ = absorb(g, h, palette)
    return out.num_edges, saturation_report(out, h, palette).is_saturated
