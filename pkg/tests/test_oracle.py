from itertools import combinations, permutations, product

import pytest

from rainbowsat.constructions import build_clique_construction, build_Gxy_n
from rainbowsat.core import ColouredGraph
from rainbowsat.oracle import canonical_form, exact_rsat, graphs_with_edges, set_partitions, verify_upper_bound
from rainbowsat.patterns import PAW, complete, path
from rainbowsat.saturation import Palette, saturation_report

K3 = complete(3)
BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140]


def test_bell_numbers():
    assert [sum(1 for _ in set_partitions(m)) for m in range(9)] == BELL
    # Stirling sums: partitions of 5 into at most 2 blocks = 1 + 15
    assert sum(1 for _ in set_partitions(5, 2)) == 16


def test_partitions_are_restricted_growth():
    for rgs in set_partitions(6):
        seen = -1
        for b in rgs:
            assert b <= seen + 1
            seen = max(seen, b)


def test_graph_classes():
    # number of unlabelled graphs on 4 vertices by edge count
    assert [len(graphs_with_edges(4, k)) for k in range(7)] == [1, 1, 2, 3, 2, 1, 1]
    assert sum(len(graphs_with_edges(5, k)) for k in range(11)) == 34


def test_canonical_form_invariant():
    edges = ((0, 1), (1, 2), (2, 3))
    forms = {canonical_form(4, tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in edges)))
             for p in permutations(range(4))}
    assert len(forms) == 1


@pytest.mark.parametrize("n", range(2, 7))
def test_rsat_k2(n):
    res = exact_rsat(n, complete(2))
    assert res.min_edges == 0 and res.witness == ColouredGraph.empty(n)


def test_rsat_small_triangle():
    res = exact_rsat(3, K3)
    assert res.min_edges == 3
    assert len(set(res.witness.colour.values())) < 3
    res4 = exact_rsat(4, K3)
    edges, ok = verify_upper_bound(build_Gxy_n(K3, 0, 1, 4).graph, K3)
    assert ok and edges == 4
    assert res4.min_edges <= edges
    assert saturation_report(res4.witness, K3).is_saturated
    assert res4.witness.num_edges == res4.min_edges


def test_budget_exhausted():
    res = exact_rsat(4, K3, edge_budget=2)
    assert res.min_edges is None and res.witness is None
    assert res.stats["graphs"] > 0 and res.stats["max_edges_tried"] == 2


def test_soft_limit():
    with pytest.raises(ValueError):
        exact_rsat(7, K3)


def _direct_colourings(m):
    return product(range(m + 1), repeat=m)


@pytest.mark.parametrize("n, h", [(3, K3), (4, K3), (4, path(3)), (4, PAW), (3, path(3))])
def test_quotient_matches_direct_enumeration(n, h):
    quotient = exact_rsat(n, h, edge_budget=4)
    direct = exact_rsat(n, h, edge_budget=4, colourings=_direct_colourings)
    assert quotient.min_edges == direct.min_edges


@pytest.mark.parametrize("n, h", [(3, K3), (4, K3), (4, path(3)), (3, path(3))])
def test_bounded_stabilises(n, h):
    unbounded = exact_rsat(n, h)
    t = h.num_edges + n * (n - 1) // 2
    assert exact_rsat(n, h, Palette.bounded(t)).min_edges == unbounded.min_edges


def test_verify_upper_bound_constructions():
    g = build_Gxy_n(K3, 0, 1, 10).graph
    nbad = len(saturation_report(g, K3).bad_nonedges)
    edges, ok = verify_upper_bound(g, K3)
    assert ok and edges <= 16 + nbad


def test_exact_upper_bound_consistency():
    for n in (4, 5):
        exact = exact_rsat(n, K3).min_edges
        edges, ok = verify_upper_bound(build_Gxy_n(K3, 0, 1, n).graph, K3)
        assert ok and edges >= exact
