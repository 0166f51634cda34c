from __future__ import annotations

import random

import pytest

from oddstab import graph6
from oddstab.canon import canonical_form
from oddstab.constructions import f_func, h_graph, turan
from oddstab.cycles import has_cycle_of_length
from oddstab.errors import GraphError, HypothesisError, UnsupportedSizeError
from oddstab.graph import cycle_graph
from oddstab.search import (
    GraphFilter,
    blowup_family,
    block_family,
    conjecture_explore,
    enumerate_graphs,
    extremal_search,
    pareto_frontier,
    FamilyMember,
    verify_theorem,
)

from conftest import random_graph


def code(g):
    return graph6.encode(canonical_form(g).graph())


def test_counts():
    assert sum(1 for _ in enumerate_graphs(4)) == 11
    assert sum(1 for _ in enumerate_graphs(5)) == 34
    c5 = code(cycle_graph(5))
    got = [graph6.encode(g) for g in enumerate_graphs(5, GraphFilter(triangle_free=True, non_bipartite=True))]
    assert c5 in got


def test_sorted_output():
    codes = [graph6.encode(g) for g in enumerate_graphs(6)]
    assert codes == sorted(codes)


def test_filter_soundness_and_completeness():
    filters = [
        GraphFilter(triangle_free=True),
        GraphFilter(frozenset({5}), non_bipartite=True),
        GraphFilter(connected=True, min_degree=2),
        GraphFilter(min_d2=1),
        GraphFilter(min_gamma2=2, forbidden_cycles=frozenset({4})),
    ]
    rng = random.Random(99)
    for filt in filters:
        emitted = {n: {graph6.encode(g) for g in enumerate_graphs(n, filt)} for n in range(1, 8)}
        for n, codes in emitted.items():
            for text in codes:
                assert filt.accepts(graph6.decode(text))
        hits = 0
        for _ in range(1000):
            n = rng.randint(1, 7)
            g = random_graph(rng, n, rng.random())
            if filt.accepts(g):
                hits += 1
                assert code(g) in emitted[n]
        assert hits > 0


def test_extremal_examples():
    rec = extremal_search(6, GraphFilter(frozenset({5})))
    assert rec.max_edges == 9 and code(turan(6, 2)) in rec.witness_canonical_forms
    rec = extremal_search(7, GraphFilter(triangle_free=True, non_bipartite=True))
    assert rec.max_edges == 36 // 4 + 1
    rec = extremal_search(5, GraphFilter(triangle_free=True))
    assert rec.max_edges == 25 // 4
    for w in rec.witness_canonical_forms:
        g = graph6.decode(w)
        assert g.e == 6 and has_cycle_of_length(g, 3) is None
    assert extremal_search(2, GraphFilter(non_bipartite=True)).max_edges is None


def test_extremal_monotone_in_n():
    for filt in (GraphFilter(frozenset({3})), GraphFilter(frozenset({5})), GraphFilter(frozenset({4}))):
        vals = [extremal_search(n, filt).max_edges for n in range(1, 9)]
        assert vals == sorted(vals)


def test_limits():
    with pytest.raises(UnsupportedSizeError):
        next(enumerate_graphs(11))
    with pytest.raises(UnsupportedSizeError):
        next(enumerate_graphs(12, allow_slow=True))
    with pytest.raises(GraphError):
        GraphFilter(frozenset({2}))


def test_verify_examples():
    assert verify_theorem("T1.1", range(6, 10), k=2).passed
    assert verify_theorem("T1.5", range(5, 10)).passed
    assert verify_theorem("H-witness", range(4, 15), k=2, t=1).passed
    with pytest.raises(HypothesisError):
        verify_theorem("T1.1", [3], k=2)
    with pytest.raises(HypothesisError):
        verify_theorem("T1.2", [4])
    with pytest.raises(HypothesisError):
        verify_theorem("H-witness", [8], k=2, t=3)
    with pytest.raises(HypothesisError):
        verify_theorem("T9.9", [5])
    with pytest.raises(UnsupportedSizeError):
        verify_theorem("T1.2", [12])


def test_verify_aliases_and_variants():
    rep = verify_theorem("T1.6-path", range(1, 7))
    assert rep.passed and rep.params["variant"] == "path"
    assert verify_theorem("erdos-gallai", range(1, 6), variant="cycle").passed
    assert verify_theorem("identities", bound=50).passed


def test_h_witness_reports_values():
    rep = verify_theorem("H-witness", [10], k=3, t=2)
    (p,) = rep.points
    assert p.observed == {"edges": 49 // 4 + 6, "cycle_free": True, "d2": 2, "gamma2": f_func(3)}


def test_families():
    b7 = blowup_family(7, 2)
    assert [(m.e, m.gamma2) for m in b7] == [(7, 1)]
    assert len(blowup_family(9, 2)) == 4  # 9 into 7 parts up to symmetry: 3111111, 2211111, 2121111, 2112111
    g5 = block_family(5, 2)
    assert any(m.spec == "blocks:bip=2x1;cliques=3@cut=0" and (m.e, m.gamma2) == (5, 1) for m in g5)
    assert h_graph(5, 1).e == 5


def test_pareto_frontier():
    ms = [FamilyMember("x", s, e, g) for s, e, g in [("a", 5, 1), ("b", 6, 0), ("c", 4, 2), ("d", 3, 1), ("e", 6, 0)]]
    front = pareto_frontier(ms)
    assert [(m.e, m.gamma2, m.spec) for m in front] == [(4, 2, "c"), (5, 1, "a"), (6, 0, "b")]


def test_explore_c7():
    rep = conjecture_explore(7, 2, threads=1)
    d = rep.to_dict()
    assert [(m["e"], m["gamma2"]) for m in d["frontiers"]["B"]] == [(7, 1)]
    assert d["frontiers"]["B"][0]["spec"] == "blowup:L=7,sizes=1,1,1,1,1,1,1"
    # T_2(7) is itself a family member, so (12, 0) never shows up as undominated
    assert all((r["e"], r["gamma2"]) != (12, 0) for r in d["undominated"]["union"])
    assert rep.graphs_examined == sum(r["count"] for r in d["observed"])
    with pytest.raises(UnsupportedSizeError):
        conjecture_explore(11, 2)
