from __future__ import annotations

import random
import sys
from itertools import combinations, count, islice, permutations

from rainbowsat.core import ColouredGraph, PatternGraph, norm_edge, used_colours
from rainbowsat.search import SearchConstraint, find_rainbow_embedding


def brute_embeddings(g: ColouredGraph, h: PatternGraph, constraint: SearchConstraint | None = None,
                     rainbow: bool = True):
    """Every injective map V(H) -> V(G) that is a valid (rainbow) embedding."""
    out = []
    for img in permutations(range(g.n), h.n):
        if any(not g.has_edge(img[a], img[b]) for a, b in h.edges):
            continue
        cols = [g.colour_of(img[a], img[b]) for a, b in h.edges]
        if rainbow and len(set(cols)) != len(cols):
            continue
        if constraint is not None:
            if constraint.forbidden_colour is not None and constraint.forbidden_colour in cols:
                continue
            if constraint.required_edge is not None and constraint.required_edge not in {
                    norm_edge(img[a], img[b]) for a, b in h.edges}:
                continue
        out.append(dict(enumerate(img)))
    return out


def brute_max_rainbow_clique(g: ColouredGraph) -> int:
    best = min(g.n, 1)
    for k in range(2, g.n + 1):
        found = False
        for vs in combinations(range(g.n), k):
            if all(g.has_edge(a, b) for a, b in combinations(vs, 2)):
                cols = [g.colour_of(a, b) for a, b in combinations(vs, 2)]
                if len(set(cols)) == len(cols):
                    found = True
                    break
        if not found:
            break
        best = k
    return best


def naive_bad(g: ColouredGraph, h: PatternGraph, e, n_fresh: int = 5):
    """Badness of ``e`` for each colour in used(G) plus ``n_fresh`` fresh colours.

    Returns (set of bad used colours, list of verdicts for the fresh colours).
    """
    used = used_colours(g)
    fresh = list(islice((c for c in count() if c not in used), n_fresh))
    req = SearchConstraint(required_edge=e)

    def bad(c):
        return find_rainbow_embedding(g.with_edge(*e, c), h, req) is None

    return {c for c in used if bad(c)}, [bad(c) for c in fresh]


def random_coloured_graph(rng: random.Random, max_n: int = 8, max_edges: int = 12, max_colours: int = 6,
                          min_n: int = 3) -> ColouredGraph:
    n = rng.randint(min_n, max_n)
    pairs = list(combinations(range(n), 2))
    k = rng.randint(0, min(max_edges, len(pairs)))
    ncol = rng.randint(1, max_colours)
    return ColouredGraph(n, {e: rng.randrange(ncol) for e in rng.sample(pairs, k)})


def rainbow_free_seed(rng: random.Random, h: PatternGraph, max_n: int = 10) -> ColouredGraph:
    """Random coloured graph with rainbow copies of ``h`` removed edge by edge."""
    g = random_coloured_graph(rng, max_n=max_n, max_edges=18, max_colours=5)
    while True:
        emb = find_rainbow_embedding(g, h)
        if emb is None:
            return g
        a, b = min(h.edges)
        drop = norm_edge(emb[a], emb[b])
        g = ColouredGraph(g.n, {e: c for e, c in g.colour.items() if e != drop})


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[name])
