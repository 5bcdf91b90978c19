"""Edge-coloured graphs, pattern graphs and their JSON/DOT forms.

Vertices are ``0..n-1``, edges are stored as ``(u, v)`` with ``u < v`` and
colours are non-negative integers.  Every value here is immutable; the
``with_*`` helpers return new graphs.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Iterable, Iterator, Mapping

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Raised for malformed graph input (bad JSON, loops, duplicates, ...)."""


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def _check_pair(n: int, u: int, v: int, seen: set[Edge]) -> Edge:
    if not isinstance(u, int) or not isinstance(v, int) or isinstance(u, bool) or isinstance(v, bool):
        raise GraphFormatError(f"edge endpoints must be integers, got {u!r}, {v!r}")
    if u == v:
        raise GraphFormatError(f"loop at vertex {u}")
    if not (0 <= u < n and 0 <= v < n):
        raise GraphFormatError(f"edge {u}-{v} has an endpoint outside 0..{n - 1}")
    e = norm_edge(u, v)
    if e in seen:
        raise GraphFormatError(f"duplicate edge {e[0]}-{e[1]}")
    seen.add(e)
    return e


@dataclass(frozen=True)
class PatternGraph:
    """An uncoloured simple graph H."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.n < 0:
            raise GraphFormatError("vertex count must be non-negative")
        seen: set[Edge] = set()
        for u, v in self.edges:
            _check_pair(self.n, u, v, seen)
        if any(u > v for u, v in self.edges):
            object.__setattr__(self, "edges", frozenset(norm_edge(u, v) for u, v in self.edges))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> PatternGraph:
        edges = list(edges)
        seen: set[Edge] = set()
        for u, v in edges:
            _check_pair(n, u, v, seen)
        return cls(n, frozenset(seen))

    @cached_property
    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    @cached_property
    def neighbours(self) -> tuple[frozenset[int], ...]:
        nb: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(frozenset(s) for s in nb)

    def degree(self, v: int) -> int:
        return len(self.neighbours[v])

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def is_complete(self) -> bool:
        return self.num_edges == self.n * (self.n - 1) // 2

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by lowest vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.neighbours[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced(self, vertices: Iterable[int]) -> PatternGraph:
        """Induced subgraph, relabelled to ``0..k-1`` preserving vertex order."""
        vs = sorted(vertices)
        index = {v: i for i, v in enumerate(vs)}
        return PatternGraph(len(vs), frozenset(
            (index[u], index[v]) for u, v in self.edges if u in index and v in index))


@dataclass(frozen=True)
class ColouredGraph:
    """A simple graph on ``0..n-1`` with a colour on every edge."""

    n: int
    colour: Mapping[Edge, int]

    def __post_init__(self):
        if self.n < 0:
            raise GraphFormatError("vertex count must be non-negative")
        fixed: dict[Edge, int] = {}
        for (u, v), c in self.colour.items():
            if u == v:
                raise GraphFormatError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphFormatError(f"edge {u}-{v} has an endpoint outside 0..{self.n - 1}")
            if not isinstance(c, int) or isinstance(c, bool) or c < 0:
                raise GraphFormatError(f"edge {u}-{v} has invalid colour {c!r}")
            e = norm_edge(u, v)
            if e in fixed:
                raise GraphFormatError(f"duplicate edge {e[0]}-{e[1]}")
            fixed[e] = c
        object.__setattr__(self, "colour", fixed)

    @classmethod
    def from_triples(cls, n: int, triples: Iterable[tuple[int, int, int]]) -> ColouredGraph:
        colour: dict[Edge, int] = {}
        seen: set[Edge] = set()
        for u, v, c in triples:
            colour[_check_pair(n, u, v, seen)] = c
        return cls(n, colour)

    @classmethod
    def empty(cls, n: int) -> ColouredGraph:
        return cls(n, {})

    def __eq__(self, other):
        if not isinstance(other, ColouredGraph):
            return NotImplemented
        return self.n == other.n and self.colour == other.colour

    def __hash__(self):
        return hash((self.n, frozenset(self.colour.items())))

    @cached_property
    def edges(self) -> list[Edge]:
        return sorted(self.colour)

    @property
    def num_edges(self) -> int:
        return len(self.colour)

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitmasks."""
        adj = [0] * self.n
        for u, v in self.colour:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @cached_property
    def colour_matrix(self) -> tuple[tuple[int, ...], ...]:
        """``colour_matrix[u][v]`` is the colour of uv, or -1 for a non-edge."""
        rows = [[-1] * self.n for _ in range(self.n)]
        for (u, v), c in self.colour.items():
            rows[u][v] = c
            rows[v][u] = c
        return tuple(tuple(r) for r in rows)

    def neighbours(self, v: int) -> list[int]:
        mask, out = self.adjacency[v], []
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return out

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.colour

    def colour_of(self, u: int, v: int) -> int:
        return self.colour[norm_edge(u, v)]

    def non_edges(self) -> Iterator[Edge]:
        """Non-edges in lexicographic order."""
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if norm_edge(u, v) not in self.colour:
                    yield (u, v)

    def with_edge(self, u: int, v: int, c: int) -> ColouredGraph:
        e = norm_edge(u, v)
        if e in self.colour:
            raise ValueError(f"{e[0]}-{e[1]} is already an edge")
        colour = dict(self.colour)
        colour[e] = c
        return ColouredGraph(self.n, colour)

    def induced(self, vertices: Iterable[int]) -> ColouredGraph:
        """Induced subgraph, relabelled to ``0..k-1`` preserving vertex order."""
        vs = sorted(vertices)
        index = {v: i for i, v in enumerate(vs)}
        return ColouredGraph(len(vs), {
            (index[u], index[v]): c for (u, v), c in self.colour.items()
            if u in index and v in index})

    def underlying(self) -> PatternGraph:
        return PatternGraph(self.n, frozenset(self.colour))


def used_colours(g: ColouredGraph) -> set[int]:
    return set(g.colour.values())


def fresh_colour(g: ColouredGraph) -> int:
    """Smallest non-negative integer not used on any edge of ``g``."""
    used = used_colours(g)
    c = 0
    while c in used:
        c += 1
    return c


@dataclass(frozen=True)
class LabelledColouredGraph:
    """A coloured graph together with the labels its builder attached.

    ``vertex_labels[v]`` is a ``(role, index)`` pair, ``edge_labels`` maps
    some edges to a label tuple, and ``meta`` holds JSON-ready builder data.
    """

    graph: ColouredGraph
    vertex_labels: tuple[tuple[Any, int], ...]
    edge_labels: Mapping[Edge, tuple] = field(default_factory=dict)
    meta: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if len(self.vertex_labels) != self.graph.n:
            raise GraphFormatError(
                f"{len(self.vertex_labels)} vertex labels for {self.graph.n} vertices")
        for e in self.edge_labels:
            if e not in self.graph.colour:
                raise GraphFormatError(f"edge label on non-edge {e}")

    @property
    def n(self) -> int:
        return self.graph.n

    def vertices_with_role(self, role) -> list[int]:
        return [v for v, (r, _) in enumerate(self.vertex_labels) if r == role]


# -- serialization ---------------------------------------------------------

def _tuplify(x):
    if isinstance(x, list):
        return tuple(_tuplify(i) for i in x)
    return x


def _listify(x):
    if isinstance(x, (tuple, list)):
        return [_listify(i) for i in x]
    return x


def graph_to_dict(g: ColouredGraph | PatternGraph | LabelledColouredGraph) -> dict:
    if isinstance(g, PatternGraph):
        return {"n": g.n, "edges": [[u, v] for u, v in g.sorted_edges]}
    if isinstance(g, LabelledColouredGraph):
        d = graph_to_dict(g.graph)
        d["labels"] = {
            "vertices": [_listify(lab) for lab in g.vertex_labels],
            "edges": [[u, v, _listify(lab)] for (u, v), lab in sorted(g.edge_labels.items())],
            "meta": json.loads(json.dumps(g.meta)),
        }
        return d
    return {"n": g.n, "edges": [[u, v, g.colour[(u, v)]] for u, v in g.edges]}


def serialize_graph(g: ColouredGraph | PatternGraph | LabelledColouredGraph, indent: int | None = None) -> str:
    return json.dumps(graph_to_dict(g), indent=indent)


def graph_from_dict(data: Any, pattern: bool | None = None):
    """Build a graph from parsed JSON.

    With ``pattern=None`` the kind is inferred: 2-element edges give a
    PatternGraph, 3-element edges a ColouredGraph (an edgeless graph is read
    as coloured).  A ``labels`` block yields a LabelledColouredGraph.
    """
    if not isinstance(data, dict):
        raise GraphFormatError("graph JSON must be an object")
    n = data.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise GraphFormatError("'n' must be a non-negative integer")
    edges = data.get("edges", [])
    if not isinstance(edges, list):
        raise GraphFormatError("'edges' must be a list")
    for item in edges:
        if not isinstance(item, list) or len(item) not in (2, 3):
            raise GraphFormatError(f"bad edge entry {item!r}")
    if pattern is None:
        pattern = bool(edges) and all(len(item) == 2 for item in edges)
    if pattern:
        if any(len(item) != 2 for item in edges):
            raise GraphFormatError("pattern edges must be [u, v] pairs")
        return PatternGraph.from_edges(n, ((u, v) for u, v in edges))
    for item in edges:
        if len(item) != 3:
            raise GraphFormatError(f"edge {item!r} has no colour")
    g = ColouredGraph.from_triples(n, ((u, v, c) for u, v, c in edges))
    labels = data.get("labels")
    if labels is None:
        return g
    if not isinstance(labels, dict):
        raise GraphFormatError("'labels' must be an object")
    vlabels = tuple(_tuplify(lab) for lab in labels.get("vertices", []))
    elabels = {}
    for item in labels.get("edges", []):
        u, v, lab = item
        elabels[norm_edge(u, v)] = _tuplify(lab)
    return LabelledColouredGraph(g, vlabels, elabels, labels.get("meta", {}))


def parse_graph(text: str, pattern: bool | None = None):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"malformed JSON: {exc}") from exc
    return graph_from_dict(data, pattern)


def plain(g: ColouredGraph | LabelledColouredGraph) -> ColouredGraph:
    return g.graph if isinstance(g, LabelledColouredGraph) else g


def to_dot(g: ColouredGraph | LabelledColouredGraph, name: str = "G") -> str:
    cg = plain(g)
    lines = [f"graph {name} {{"]
    for v in range(cg.n):
        if isinstance(g, LabelledColouredGraph):
            role, idx = g.vertex_labels[v]
            lines.append(f'  {v} [label="{v}\\n{role}:{idx}"];')
        else:
            lines.append(f"  {v};")
    for u, v in cg.edges:
        c = cg.colour[(u, v)]
        lines.append(f'  {u} -- {v} [label="{c}", colorscheme=set312, color={c % 12 + 1}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
