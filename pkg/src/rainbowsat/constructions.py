"""Builders for the edge-coloured constructions.

Vertex orders and colour allocation are fixed so outputs are reproducible:

* ``build_construction31``: the m shared ``x|y`` clones first, then the r
  copies one after another, each listing the remaining pattern vertices in
  increasing order.  Colours ``0..k-1`` go to the k edges of H'' in
  lexicographic order, ``k`` is black, and unique colours from ``k+1`` go to
  the edges from the clones to S, in (copy, label, clone) order.
* ``build_clique_construction``: gadget vertices, then U, then T1, then T2.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .core import ColouredGraph, Edge, LabelledColouredGraph, PatternGraph, norm_edge, used_colours
from .search import find_embedding

XY = "x|y"


class ConstructionError(ValueError):
    pass


# -- contraction and the clone construction ------------------------------

@dataclass(frozen=True)
class ContractionData:
    """Contraction of the edge xy of H.

    ``Hprime`` has vertex 0 for ``x|y`` and vertices ``1..`` for the other
    vertices of H in increasing order (``hp_to_h`` maps them back).
    ``S``/``T`` are in H's numbering, ``Tprime`` in H''s.
    """

    H: PatternGraph
    x: int
    y: int
    Hprime: PatternGraph
    hp_to_h: tuple[int | None, ...]
    S: frozenset[int]
    T: frozenset[Edge]
    Tprime: frozenset[Edge]
    Hpp: PatternGraph

    def role(self, w: int):
        """Label of H' vertex ``w``: ``"x|y"`` or the original vertex of H."""
        return XY if w == 0 else self.hp_to_h[w]


def contract(h: PatternGraph, x: int, y: int) -> ContractionData:
    if not h.has_edge(x, y):
        raise ConstructionError(f"{x}-{y} is not an edge of the pattern")
    rest = [v for v in range(h.n) if v not in (x, y)]
    h_to_hp = {v: i + 1 for i, v in enumerate(rest)}
    h_to_hp[x] = h_to_hp[y] = 0
    edges = set()
    for u, v in h.edges:
        a, b = h_to_hp[u], h_to_hp[v]
        if a != b:
            edges.add(norm_edge(a, b))
    hprime = PatternGraph(len(rest) + 1, frozenset(edges))
    S = h.neighbours[x] & h.neighbours[y]
    T = frozenset(norm_edge(s, z) for s in S for z in (x, y))
    Tprime = frozenset((0, h_to_hp[s]) for s in S)
    hpp = PatternGraph(hprime.n, frozenset(edges - Tprime))
    return ContractionData(h, x, y, hprime, (None, *rest), frozenset(S), T, Tprime, hpp)


def build_construction31(h: PatternGraph, x: int, y: int, m: int, r: int) -> LabelledColouredGraph:
    """The clone construction on (H, x, y) with m clones and r copies, coloured.

    Vertex labels are ``("x|y", i)`` for the i-th clone and ``(v, j)`` for the
    copy of pattern vertex v in copy j.  Copies ``0..k-1`` are indexed by the
    edges of H'' (``meta["copy_index"]``), the rest are plain.
    """
    if not h.is_connected():
        raise ConstructionError("pattern must be connected")
    if h.n < 3:
        raise ConstructionError("pattern must have at least 3 vertices")
    cd = contract(h, x, y)
    if not cd.S:
        raise ConstructionError(
            f"edge {x}-{y} is in no triangle; use build_pendant or another construction")
    if m < 2:
        raise ConstructionError(f"need m >= 2 clones, got {m}")
    k = cd.Hpp.num_edges
    rmin = max(k + 1, 2)
    if r < rmin:
        raise ConstructionError(f"need r >= {rmin} copies, got {r}")

    hpp_edges = cd.Hpp.sorted_edges
    chi0 = {e: i for i, e in enumerate(hpp_edges)}
    black = k
    per_copy = cd.Hprime.n - 1

    def vid(copy: int, w: int) -> int:
        return m + copy * per_copy + (w - 1)

    labels = [(XY, i) for i in range(m)]
    for j in range(r):
        labels.extend((cd.role(w), j) for w in range(1, cd.Hprime.n))

    colour: dict[Edge, int] = {}
    elabels: dict[Edge, tuple] = {}
    nxt = k + 1
    for j in range(r):
        indexed = hpp_edges[j] if j < k else None
        for a, b in cd.Hprime.sorted_edges:
            lab = (cd.role(a), cd.role(b))
            if a == 0:
                pairs = [norm_edge(i, vid(j, b)) for i in range(m)]
            else:
                pairs = [norm_edge(vid(j, a), vid(j, b))]
            for e in pairs:
                if (a, b) in cd.Tprime:
                    colour[e] = nxt
                    nxt += 1
                elif (a, b) == indexed:
                    colour[e] = black
                else:
                    colour[e] = chi0[(a, b)]
                elabels[e] = lab
    meta = {
        "construction": "construction31",
        "pattern": [list(e) for e in h.sorted_edges], "pattern_n": h.n,
        "x": x, "y": y, "m": m, "r": r, "black": black,
        "hpp_edges": [[cd.role(a), cd.role(b)] for a, b in hpp_edges],
        "copy_index": [[cd.role(a), cd.role(b)] for a, b in hpp_edges[:r]] + [None] * (r - min(r, k)),
    }
    return LabelledColouredGraph(ColouredGraph(m + r * per_copy, colour), tuple(labels), elabels, meta)


def gxy_parameters(h: PatternGraph, x: int, y: int) -> tuple[int, int]:
    """``(r, n_min)`` for the clone construction on n vertices."""
    cd = contract(h, x, y)
    r = max(cd.Hpp.num_edges + 1, 2)
    return r, r * (h.n - 2) + 2


def build_Gxy_n(h: PatternGraph, x: int, y: int, n: int) -> LabelledColouredGraph:
    """Clone construction on exactly n vertices: r = max(|E(H'')|+1, 2) copies and m = n - r(|V(H)|-2) clones."""
    r, nmin = gxy_parameters(h, x, y)
    if n < nmin:
        raise ConstructionError(f"n={n} is too small; the minimum n is {nmin}")
    return build_construction31(h, x, y, n - r * (h.n - 2), r)


# -- preliminaries: pendant and disconnected patterns ------------------------

def build_pendant(h: PatternGraph, n: int) -> LabelledColouredGraph:
    """q = n // (k-1) disjoint K_{k-1}, globally rainbow, plus n mod (k-1) isolated vertices."""
    k = h.n
    if k < 2 or not h.is_connected():
        raise ConstructionError("pattern must be connected with at least 2 vertices")
    if min(h.degree(v) for v in range(k)) != 1:
        raise ConstructionError("pattern must have minimum degree 1")
    if n < k - 1:
        raise ConstructionError(f"n must be at least {k - 1}")
    q, rem = divmod(n, k - 1)
    colour, labels = {}, []
    for j in range(q):
        base = j * (k - 1)
        for a, b in combinations(range(k - 1), 2):
            colour[(base + a, base + b)] = len(colour)
        labels.extend(("K", j) for _ in range(k - 1))
    labels.extend(("isolated", i) for i in range(rem))
    meta = {"construction": "pendant", "q": q, "isolated": rem, "clique_size": k - 1}
    return LabelledColouredGraph(ColouredGraph(n, colour), tuple(labels), {}, meta)


def largest_component(h: PatternGraph) -> PatternGraph:
    """Component with most vertices, then most edges, then lowest vertex."""
    comps = h.components()
    best = max(comps, key=lambda c: (len(c), h.induced(c).num_edges, -c[0]))
    return h.induced(best)


def _isomorphic(a: PatternGraph, b: PatternGraph) -> bool:
    if a.n != b.n or a.num_edges != b.num_edges:
        return False
    # an injective homomorphism between graphs of equal size is an isomorphism
    return find_embedding(ColouredGraph(b.n, {e: 0 for e in b.edges}), a) is not None


def disconnect_offset(h: PatternGraph) -> int:
    """Extra vertices m = 2(|V(H)| - |V(H')|) - (s - 1) added around the inner graph."""
    hp = largest_component(h)
    s = sum(_isomorphic(hp, h.induced(c)) for c in h.components())
    return 2 * (h.n - hp.n) - (s - 1)


def build_disconnect(h: PatternGraph, inner: ColouredGraph, verify_limit: int = 10) -> LabelledColouredGraph:
    """Inner graph plus (s-1) glued double copies of H' and two copies of every other component.

    The inner graph should be H'-rainbow saturated.  It is verified when it
    has at most ``verify_limit`` vertices; otherwise ``meta["inner_verified"]``
    is False and a warning is issued.
    """
    from .saturation import is_saturated

    if h.is_connected():
        raise ConstructionError("pattern must be disconnected")
    hp = largest_component(h)
    comps = [h.induced(c) for c in h.components()]
    is_hp = [_isomorphic(hp, c) for c in comps]
    s = sum(is_hp)
    verified = inner.n <= verify_limit
    if verified and not is_saturated(inner, hp):
        raise ConstructionError("inner graph is not rainbow saturated for the largest component")
    if not verified:
        warnings.warn("inner graph too large to verify; trusting that it is saturated", stacklevel=2)

    colour = dict(inner.colour)
    labels = [("inner", v) for v in range(inner.n)]
    nxt = max(used_colours(inner), default=-1) + 1
    n = inner.n

    def add_copy(p: PatternGraph, vmap: list[int]):
        nonlocal nxt
        for a, b in p.sorted_edges:
            colour[norm_edge(vmap[a], vmap[b])] = nxt
            nxt += 1

    # H2: two copies of H' sharing H' vertex 0
    for j in range(s - 1):
        first = list(range(n, n + hp.n))
        second = [first[0]] + list(range(n + hp.n, n + 2 * hp.n - 1))
        add_copy(hp, first)
        add_copy(hp, second)
        labels.extend(("H2", j) for _ in range(2 * hp.n - 1))
        n += 2 * hp.n - 1
    for ci, (c, iso) in enumerate(zip(comps, is_hp)):
        if iso:
            continue
        for _ in range(2):
            add_copy(c, list(range(n, n + c.n)))
            labels.extend(("component", ci) for _ in range(c.n))
            n += c.n
    meta = {"construction": "disconnect", "s": s, "m": n - inner.n,
            "inner_n": inner.n, "inner_verified": verified}
    return LabelledColouredGraph(ColouredGraph(n, colour), tuple(labels), {}, meta)


# -- cliques ---------------------------------------------------------------

@dataclass(frozen=True)
class CliqueGadget:
    """Complete graph on s element vertices ``0..s-1`` and the C(s,2) pair
    vertices ``s..`` (pairs in lexicographic order).

    ``pair_colour[(x, y)]`` is the shared colour of the edges from x and y
    to the pair vertex for {x, y}.
    """

    graph: ColouredGraph
    s: int
    pair_colour: dict[tuple[int, int], int]
    pair_vertex: dict[tuple[int, int], int]

    @property
    def clique_bound(self) -> int:
        return comb(self.s, 2) + 1


def build_clique_gadget(s: int) -> CliqueGadget:
    if s < 3:
        raise ConstructionError("gadget needs s >= 3")
    pairs = list(combinations(range(s), 2))
    pair_vertex = {p: s + i for i, p in enumerate(pairs)}
    pair_colour = {p: i for i, p in enumerate(pairs)}
    colour = {}
    for p, pv in pair_vertex.items():
        for z in p:
            colour[(z, pv)] = pair_colour[p]
    nxt = len(pairs)
    for e in combinations(range(s + len(pairs)), 2):
        if e not in colour:
            colour[e] = nxt
            nxt += 1
    return CliqueGadget(ColouredGraph(s + len(pairs), colour), s, pair_colour, pair_vertex)


def gadget_T(x: int, y: int, gadget: CliqueGadget) -> frozenset[int]:
    """{x, y} together with every pair vertex except the one for {x, y}."""
    if x == y or not (0 <= x < gadget.s and 0 <= y < gadget.s):
        raise ConstructionError("x and y must be distinct element vertices")
    skip = gadget.pair_vertex[norm_edge(x, y)]
    return frozenset({x, y} | {v for v in gadget.pair_vertex.values() if v != skip})


def clique_parameters(r: int) -> tuple[int, int]:
    """``(s, t)``: largest s with r >= C(s,2)+1, and t = r - C(s,2) - 1."""
    s = 1
    while comb(s + 1, 2) + 1 <= r:
        s += 1
    return s, r - comb(s, 2) - 1


def clique_edge_count(r: int, n: int) -> int:
    s, t = clique_parameters(r)
    vh = s + comb(s, 2)
    eh = comb(vh, 2)
    return (vh + 2 * t) * (n - vh - 2 * t) + eh + 2 * comb(t, 2) + 2 * t * vh


def build_clique_construction(r: int, n: int) -> LabelledColouredGraph:
    """Gadget plus U, T1, T2: every pair is an edge except inside U and across T1 x T2.

    Saturation target is K_{r+2}.  Vertex labels are ``("S", i)``,
    ``("pair", i)``, ``("U", i)``, ``("T1", i)`` and ``("T2", i)``.
    """
    if r < 10:
        raise ConstructionError("the clique construction is only defined for r >= 10")
    s, t = clique_parameters(r)
    gadget = build_clique_gadget(s)
    vh = gadget.graph.n
    nu = n - 2 * t - vh
    if nu < 2:
        raise ConstructionError(f"n={n} is too small; the minimum n is {vh + 2 * t + 2}")
    U = range(vh, vh + nu)
    T1 = range(vh + nu, vh + nu + t)
    T2 = range(vh + nu + t, n)
    labels = [("S", i) for i in range(s)] + [("pair", i) for i in range(vh - s)]
    labels += [("U", i) for i in range(nu)] + [("T1", i) for i in range(t)] + [("T2", i) for i in range(t)]
    in_u = set(U)
    cross = {norm_edge(a, b) for a in T1 for b in T2}
    colour = dict(gadget.graph.colour)
    nxt = max(colour.values()) + 1
    for e in combinations(range(n), 2):
        if e in colour or (e[0] in in_u and e[1] in in_u) or e in cross:
            continue
        colour[e] = nxt
        nxt += 1
    meta = {"construction": "clique", "r": r, "s": s, "t": t, "target_clique": r + 2,
            "U": [U.start, U.stop], "T1": [T1.start, T1.stop], "T2": [T2.start, T2.stop]}
    return LabelledColouredGraph(ColouredGraph(n, colour), tuple(labels), {}, meta)
