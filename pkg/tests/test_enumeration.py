from __future__ import annotations

import itertools

import pytest

from oddstab.canon import canonical_form
from oddstab.cycles import has_cycle_of_length
from oddstab.enumeration import ROOT, children, generate
from oddstab.graph import Graph, graph_from_edges


def brute_classes(n, forbidden=(), min_degree=0):
    pairs = list(itertools.combinations(range(n), 2))
    seen = set()
    for bits in range(1 << len(pairs)):
        g = graph_from_edges(n, [p for i, p in enumerate(pairs) if bits >> i & 1])
        if n and g.min_degree() < min_degree:
            continue
        if any(L <= n and has_cycle_of_length(g, L) for L in forbidden):
            continue
        seen.add(canonical_form(g))
    return seen


def forms(n, rows_list):
    return {canonical_form(Graph(n, rows)) for rows in rows_list}


@pytest.mark.parametrize("n", range(0, 7))
def test_unfiltered_matches_brute_force(n):
    out = generate(n, threads=1)
    assert len(out) == len(set(out))
    assert forms(n, out) == brute_classes(n)


@pytest.mark.parametrize("forbidden", [(3,), (4,), (5,), (3, 5)])
@pytest.mark.parametrize("min_degree", [0, 1, 2, 3])
def test_filtered_matches_brute_force(forbidden, min_degree):
    for n in range(1, 7):
        out = generate(n, forbidden, min_degree, threads=1)
        assert len(out) == len(set(out))
        assert forms(n, out) == brute_classes(n, forbidden, min_degree)


def test_known_class_counts():
    counts = [len(generate(n, threads=1)) for n in range(9)]
    assert counts == [1, 1, 2, 4, 11, 34, 156, 1044, 12346]


def test_triangle_free_counts():
    assert [len(generate(n, (3,), threads=1)) for n in range(1, 10)] == [
        1, 2, 3, 7, 14, 38, 107, 410, 1897
    ]


def test_outputs_are_canonical():
    for rows in generate(7, threads=1):
        g = Graph(7, rows)
        assert canonical_form(g).graph() == g


def test_parallel_matches_sequential():
    a = sorted(generate(8, (5,), threads=1))
    b = sorted(generate(8, (5,), threads=3))
    assert a == b


def test_children_of_root():
    (child,) = children(ROOT)
    assert child[0] == (0,)
