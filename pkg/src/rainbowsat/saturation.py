"""Bad non-edges, saturation verdicts and the greedy absorb completion.

Adding a non-edge ``e`` in colour ``c`` creates a new rainbow copy of H
exactly when some copy of H through ``e`` is rainbow on its other edges and
avoids ``c``.  Colours that no edge of G carries are all interchangeable, so
under an unbounded palette one representative fresh colour decides for all
of them.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .core import ColouredGraph, Edge, PatternGraph, fresh_colour, norm_edge, used_colours
from .search import Embedding, SearchConstraint, find_rainbow_embedding


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class Palette:
    """``t=None`` is the unbounded palette (all non-negative integers)."""

    t: int | None = None

    def __post_init__(self):
        if self.t is not None and self.t < 1:
            raise ValueError("a bounded palette needs t >= 1")

    @classmethod
    def bounded(cls, t: int) -> Palette:
        return cls(t)

    @property
    def is_bounded(self) -> bool:
        return self.t is not None

    def too_small_for(self, h: PatternGraph) -> bool:
        return self.t is not None and self.t < h.num_edges

    def __str__(self):
        return "unbounded" if self.t is None else f"bounded({self.t})"


UNBOUNDED = Palette()


@dataclass(frozen=True)
class BadColours:
    """The c-bad colours of one non-edge.

    ``colours`` lists bad colours that are used in G (or, for a bounded
    palette, every bad colour in ``0..t-1``).  ``fresh`` means every colour
    absent from G is bad.
    """

    colours: frozenset[int] = frozenset()
    fresh: bool = False

    def __bool__(self):
        return self.fresh or bool(self.colours)

    def witness(self, g: ColouredGraph) -> int | None:
        """Used colours in increasing order first, then the fresh colour."""
        if self.colours:
            return min(self.colours)
        if self.fresh:
            return fresh_colour(g)
        return None

    def to_dict(self) -> dict:
        return {"colours": sorted(self.colours), "fresh": self.fresh}


def _check_non_edge(g: ColouredGraph, e: Edge) -> Edge:
    u, v = e
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"{u}-{v} is not a vertex pair of the graph")
    e = norm_edge(u, v)
    if e in g.colour:
        raise ValueError(f"{e[0]}-{e[1]} is already an edge")
    return e


def _image_colours(g: ColouredGraph, h: PatternGraph, emb: Embedding, skip: Edge) -> set[int]:
    out = set()
    for a, b in h.edges:
        f = norm_edge(emb[a], emb[b])
        if f != skip:
            out.add(g.colour[f])
    return out


def bad_colours(g: ColouredGraph, h: PatternGraph, e: Edge, palette: Palette = UNBOUNDED) -> BadColours:
    """All colours c such that adding ``e`` in colour c creates no rainbow H.

    ``e`` is added once in a colour outside every candidate, so it never
    clashes; a copy through it that avoids ``c`` witnesses that ``c`` is good.
    Each copy found rules out every candidate it does not use, and a
    candidate is only confirmed bad after an exhaustive search avoiding it.
    """
    e = _check_non_edge(g, e)
    used = used_colours(g)
    candidates = set(range(palette.t)) if palette.is_bounded else set(used)
    spare = max(used | candidates, default=-1) + 1
    g2 = g.with_edge(*e, spare)
    first = find_rainbow_embedding(g2, h, SearchConstraint(required_edge=e))
    if first is None:
        return BadColours(frozenset(candidates), fresh=not palette.is_bounded)
    bad = candidates & _image_colours(g2, h, first, e)
    confirmed: set[int] = set()
    while bad - confirmed:
        c = min(bad - confirmed)
        emb = find_rainbow_embedding(g2, h, SearchConstraint(required_edge=e, forbidden_colour=c))
        if emb is None:
            confirmed.add(c)
        else:
            bad &= _image_colours(g2, h, emb, e)
    return BadColours(frozenset(bad), fresh=False)


def is_bad(g: ColouredGraph, h: PatternGraph, e: Edge, palette: Palette = UNBOUNDED) -> int | None:
    """Lowest bad colour of ``e`` (used colours first, then fresh), or None."""
    return bad_colours(g, h, e, palette).witness(g)


@dataclass
class SaturationReport:
    has_rainbow: bool
    rainbow_witness: Embedding | None
    bad_nonedges: list[tuple[Edge, BadColours]] = field(default_factory=list)
    palette_too_small: bool = False

    @property
    def is_saturated(self) -> bool:
        return not self.has_rainbow and not self.bad_nonedges

    def to_dict(self) -> dict:
        return {
            "has_rainbow": self.has_rainbow,
            "rainbow_witness": None if self.rainbow_witness is None
            else {str(k): v for k, v in sorted(self.rainbow_witness.items())},
            "bad_nonedges": [{"edge": list(e), **bc.to_dict()} for e, bc in self.bad_nonedges],
            "is_saturated": self.is_saturated,
            "palette_too_small": self.palette_too_small,
        }


def _bad_task(args):
    g, h, e, palette = args
    return bad_colours(g, h, e, palette)


def saturation_report(g: ColouredGraph, h: PatternGraph, palette: Palette = UNBOUNDED,
                      workers: int = 1, stop_early: bool = False) -> SaturationReport:
    """Full verdict.  ``stop_early`` returns at the first failure (verdict only)."""
    witness = find_rainbow_embedding(g, h)
    report = SaturationReport(witness is not None, witness, palette_too_small=palette.too_small_for(h))
    if stop_early and witness is not None:
        return report
    non_edges = list(g.non_edges())
    if workers > 1 and len(non_edges) > 1 and not stop_early:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = pool.map(_bad_task, [(g, h, e, palette) for e in non_edges], chunksize=4)
            report.bad_nonedges = [(e, bc) for e, bc in zip(non_edges, results) if bc]
        return report
    for e in non_edges:
        bc = bad_colours(g, h, e, palette)
        if bc:
            report.bad_nonedges.append((e, bc))
            if stop_early:
                break
    return report


def is_saturated(g: ColouredGraph, h: PatternGraph, palette: Palette = UNBOUNDED) -> bool:
    return saturation_report(g, h, palette, stop_early=True).is_saturated


def absorb(g: ColouredGraph, h: PatternGraph, palette: Palette = UNBOUNDED,
           check_each_step: bool = False) -> tuple[ColouredGraph, list[tuple[Edge, int]]]:
    """Add the initially bad non-edges, in lexicographic order, in a bad colour.

    Each non-edge is re-tested against the current graph and skipped once it
    is no longer bad.  The result has at most ``|E(g)| + m`` edges where m is
    the number of initially bad non-edges.
    """
    if find_rainbow_embedding(g, h) is not None:
        raise PreconditionError("input graph already contains a rainbow copy of the pattern")
    initially_bad = [e for e in g.non_edges() if bad_colours(g, h, e, palette)]
    current, added = g, []
    for e in initially_bad:
        c = is_bad(current, h, e, palette)
        if c is None:
            continue
        current = current.with_edge(*e, c)
        added.append((e, c))
        if check_each_step and find_rainbow_embedding(current, h) is not None:
            raise AssertionError(f"adding {e} in colour {c} created a rainbow copy")
    return current, added
