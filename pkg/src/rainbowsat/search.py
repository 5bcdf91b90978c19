"""Rainbow subgraph search.

Two engines share one constraint type:

* a general backtracking embedder (pattern vertices placed in a
  connectivity-preserving, maximum back-degree order; candidates filtered by
  adjacency bitmasks, degree and colour availability), and
* a clique search used whenever the pattern is complete, ordered by
  degeneracy with a size bound.

Candidate vertices are always tried in increasing index order, so the first
witness returned is reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import ColouredGraph, Edge, PatternGraph, norm_edge

Embedding = dict[int, int]


@dataclass(frozen=True)
class SearchConstraint:
    """Restrictions on the embeddings a search may return.

    ``required_edge`` must be an edge of the host graph and must be the image
    of some pattern edge.  No image edge may carry ``forbidden_colour``.
    """

    required_edge: Edge | None = None
    forbidden_colour: int | None = None

    def __post_init__(self):
        if self.required_edge is not None:
            object.__setattr__(self, "required_edge", norm_edge(*self.required_edge))


NO_CONSTRAINT = SearchConstraint()


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_constraint(g: ColouredGraph, c: SearchConstraint | None) -> SearchConstraint:
    c = c or NO_CONSTRAINT
    if c.required_edge is not None and not g.has_edge(*c.required_edge):
        raise ValueError(f"required edge {c.required_edge} is not an edge of the host graph")
    return c


def search_order(h: PatternGraph, start: tuple[int, ...] = ()) -> list[int]:
    """Vertex order: maximum back-degree, then degree, then lowest index."""
    order = list(start)
    placed = set(order)
    while len(order) < h.n:
        best = None
        for v in range(h.n):
            if v in placed:
                continue
            key = (len(h.neighbours[v] & placed), h.degree(v), -v)
            if best is None or key > best[0]:
                best = (key, v)
        order.append(best[1])
        placed.add(best[1])
    return order


def embedding_colours(g: ColouredGraph, h: PatternGraph, emb: Embedding) -> list[int]:
    return [g.colour_of(emb[a], emb[b]) for a, b in h.sorted_edges]


def is_valid_embedding(g: ColouredGraph, h: PatternGraph, emb: Embedding,
                       constraint: SearchConstraint | None = None, rainbow: bool = True) -> bool:
    """Independent linear-time check of an embedding and its constraint."""
    if sorted(emb) != list(range(h.n)):
        return False
    images = list(emb.values())
    if len(set(images)) != len(images) or any(not 0 <= w < g.n for w in images):
        return False
    if any(not g.has_edge(emb[a], emb[b]) for a, b in h.edges):
        return False
    cols = embedding_colours(g, h, emb)
    if rainbow and len(set(cols)) != len(cols):
        return False
    if constraint is not None:
        if constraint.forbidden_colour is not None and constraint.forbidden_colour in cols:
            return False
        if constraint.required_edge is not None:
            if constraint.required_edge not in {norm_edge(emb[a], emb[b]) for a, b in h.edges}:
                return False
    return True


# -- general engine --------------------------------------------------------

class _Embedder:
    def __init__(self, g: ColouredGraph, h: PatternGraph, forbidden: int | None, rainbow: bool):
        self.g, self.h = g, h
        self.adj = g.adjacency
        self.col = g.colour_matrix
        self.forbidden = -1 if forbidden is None else forbidden
        self.rainbow = rainbow
        degs = [g.degree(v) for v in range(g.n)]
        self.deg_ok = []
        for d in range(h.n):
            self.deg_ok.append(sum(1 << v for v in range(g.n) if degs[v] >= d))
        self.all_mask = (1 << g.n) - 1

    def run(self, order: list[int], fixed: dict[int, int]) -> Iterator[Embedding]:
        h = self.h
        pos = {v: i for i, v in enumerate(order)}
        back = [[w for w in h.neighbours[v] if pos[w] < i] for i, v in enumerate(order)]
        need = [self.deg_ok[h.degree(v)] for v in order]
        image = [-1] * h.n
        adj, col, forbidden, rainbow = self.adj, self.col, self.forbidden, self.rainbow
        k = len(order)

        def place(i: int, w: int, cmask: int):
            # colour mask of the new edges, or -1 if they clash
            row = col[w]
            new = 0
            for b in back[i]:
                c = row[image[b]]
                if c == forbidden:
                    return -1
                bit = 1 << c
                if rainbow and (cmask & bit or new & bit):
                    return -1
                new |= bit
            return new

        def rec(i: int, used: int, cmask: int):
            if i == k:
                yield {v: image[v] for v in range(h.n)}
                return
            v = order[i]
            if v in fixed:
                cands = 1 << fixed[v]
                if used & cands or not need[i] & cands:
                    return
            else:
                cands = self.all_mask & ~used & need[i]
                for b in back[i]:
                    cands &= adj[image[b]]
            while cands:
                low = cands & -cands
                cands ^= low
                w = low.bit_length() - 1
                new = place(i, w, cmask)
                if new < 0:
                    continue
                image[v] = w
                yield from rec(i + 1, used | low, cmask | new)
                image[v] = -1

        yield from rec(0, 0, 0)


def iter_embeddings(g: ColouredGraph, h: PatternGraph, constraint: SearchConstraint | None = None,
                    rainbow: bool = True) -> Iterator[Embedding]:
    """All (rainbow) embeddings of ``h`` into ``g`` satisfying ``constraint``.

    With a required edge, each embedding is produced exactly once: the edge
    has a unique pattern preimage and orientation.
    """
    c = _check_constraint(g, constraint)
    if h.n > g.n:
        return
    eng = _Embedder(g, h, c.forbidden_colour, rainbow)
    if c.required_edge is None:
        yield from eng.run(search_order(h), {})
        return
    u, v = c.required_edge
    if g.colour_of(u, v) == c.forbidden_colour:
        return
    for a, b in h.sorted_edges:
        for x, y in ((u, v), (v, u)):
            yield from eng.run(search_order(h, (a, b)), {a: x, b: y})


def find_rainbow_embedding(g: ColouredGraph, h: PatternGraph,
                           constraint: SearchConstraint | None = None) -> Embedding | None:
    """A rainbow copy of ``h`` in ``g`` satisfying ``constraint``, or None.

    Complete patterns go through the clique search.
    """
    c = _check_constraint(g, constraint)
    if h.n >= 2 and h.is_complete():
        clique = find_rainbow_clique(g, h.n, c)
        return None if clique is None else dict(enumerate(clique))
    return next(iter_embeddings(g, h, c), None)


def find_embedding(g: ColouredGraph, h: PatternGraph) -> Embedding | None:
    """Any (not necessarily rainbow) subgraph embedding of ``h`` into ``g``."""
    return next(iter_embeddings(g, h, rainbow=False), None)


# -- clique engine ---------------------------------------------------------

def degeneracy_order(g: ColouredGraph) -> list[int]:
    """Smallest-last order: repeatedly remove a minimum-degree vertex (lowest index on ties)."""
    adj = list(g.adjacency)
    alive = (1 << g.n) - 1
    deg = [a.bit_count() for a in adj]
    order = []
    for _ in range(g.n):
        v = min(_bits(alive), key=lambda x: (deg[x], x))
        order.append(v)
        alive &= ~(1 << v)
        for w in _bits(adj[v] & alive):
            deg[w] -= 1
    return order


class _CliqueSearch:
    """Branch and bound over rainbow cliques.

    A candidate carries the colour mask of its edges into the current clique;
    it is dropped as soon as one of those colours clashes.
    """

    def __init__(self, g: ColouredGraph, forbidden: int | None):
        self.adj = g.adjacency
        self.col = g.colour_matrix
        self.forbidden = -1 if forbidden is None else forbidden
        self.best: list[int] = []
        self.target = 0
        self.nodes = 0

    def extend(self, clique: list[int], used: int, cands: list[tuple[int, int]], target: int) -> bool:
        """Grow ``clique``; True once a clique of size ``target`` has been stored in ``best``."""
        self.nodes += 1
        if len(clique) > len(self.best):
            self.best = list(clique)
            if len(clique) >= target:
                return True
        size = len(clique)
        if size + len(cands) <= len(self.best) or size + len(cands) < self.target:
            return False
        adj, col, forbidden = self.adj, self.col, self.forbidden
        for i, (p, pm) in enumerate(cands):
            remaining = len(cands) - i
            if size + remaining <= len(self.best) or size + remaining < self.target:
                return False
            new_used = used | pm
            prow, padj = col[p], adj[p]
            nxt = []
            for w, wm in cands[i + 1:]:
                if not padj >> w & 1:
                    continue
                c = prow[w]
                bit = 1 << c
                if c == forbidden or bit & new_used or bit & wm or wm & pm:
                    continue
                nxt.append((w, wm | bit))
            clique.append(p)
            if self.extend(clique, new_used, nxt, target):
                return True
            clique.pop()
        return False


def _clique_candidates(g: ColouredGraph, clique: list[int], pool: int, forbidden: int | None
                       ) -> tuple[int, list[tuple[int, int]]] | None:
    """Colour mask of ``clique`` plus the compatible candidates drawn from ``pool``."""
    col = g.colour_matrix
    used = 0
    for i, a in enumerate(clique):
        for b in clique[:i]:
            c = col[a][b]
            if c < 0 or c == forbidden or used >> c & 1:
                return None
            used |= 1 << c
    cands = []
    for w in _bits(pool):
        m, ok = 0, True
        for a in clique:
            c = col[w][a]
            bit = 1 << c
            if c < 0 or c == forbidden or bit & used or bit & m:
                ok = False
                break
            m |= bit
        if ok:
            cands.append((w, m))
    return used, cands


def _run_clique(g: ColouredGraph, q: int | None, c: SearchConstraint) -> list[int]:
    """Largest rainbow clique found, stopping early once size ``q`` is reached."""
    target = g.n + 1 if q is None else q
    eng = _CliqueSearch(g, c.forbidden_colour)
    if c.required_edge is not None:
        u, v = c.required_edge
        pool = g.adjacency[u] & g.adjacency[v]
        start = _clique_candidates(g, [u, v], pool, c.forbidden_colour)
        if start is None:
            return []
        eng.best = []
        eng.target = 0 if q is None else q
        eng.extend([u, v], start[0], start[1], target)
        return eng.best if len(eng.best) >= 2 else []
    if q is not None:
        eng.target = q
    order = degeneracy_order(g)
    later = (1 << g.n) - 1
    for v in order:
        later &= ~(1 << v)
        pool = g.adjacency[v] & later
        _, cands = _clique_candidates(g, [v], pool, c.forbidden_colour)
        if eng.extend([v], 0, cands, target):
            break
    return eng.best


def find_rainbow_clique(g: ColouredGraph, q: int, constraint: SearchConstraint | None = None
                        ) -> list[int] | None:
    """Vertices (sorted) of a rainbow clique of size ``q`` satisfying ``constraint``."""
    if q < 1:
        raise ValueError("clique size must be at least 1")
    c = _check_constraint(g, constraint)
    if c.required_edge is not None:
        if q < 2:
            return None
        if c.forbidden_colour is not None and g.colour_of(*c.required_edge) == c.forbidden_colour:
            return None
    best = _run_clique(g, q, c)
    if len(best) < q:
        return None
    # any prefix of a rainbow clique is one; with a required edge it starts with that edge
    return sorted(best[:q])


def rainbow_clique_exists(g: ColouredGraph, q: int, constraint: SearchConstraint | None = None) -> bool:
    return find_rainbow_clique(g, q, constraint) is not None


def max_rainbow_clique(g: ColouredGraph) -> tuple[int, list[int]]:
    """Size of a largest rainbow clique and a witness (sorted vertex list)."""
    if g.n == 0:
        return 0, []
    best = _run_clique(g, None, NO_CONSTRAINT)
    return len(best), sorted(best)
