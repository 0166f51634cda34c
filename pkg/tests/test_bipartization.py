from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given

from oddstab.bipartization import (
    MAX_D2_N,
    d2,
    d2_oracle,
    gamma2,
    gamma2_oracle,
    max_cut,
)
from oddstab.constructions import cycle_blowup, h_graph, turan
from oddstab.errors import UnsupportedSizeError
from oddstab.graph import (
    complete_graph,
    cycle_graph,
    empty_graph,
    petersen_graph,
    two_colour,
)

from conftest import graphs, random_graph


def lex_smallest_oct(g):
    full = g.vertex_mask
    for size in range(g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            m = sum(1 << v for v in combo)
            if two_colour(g.rows, full & ~m) is not None:
                return frozenset(combo)


@pytest.mark.parametrize(
    "g,dv,ge",
    [
        (complete_graph(4), 2, 2),
        (cycle_graph(5), 1, 1),
        (petersen_graph(), 3, 3),
        (complete_graph(5), 3, 4),
        (turan(8, 2), 0, 0),
        (empty_graph(0), 0, 0),
    ],
)
def test_known_values(g, dv, ge):
    k, cert = d2(g)
    assert k == dv and cert.check(g)
    k, cert = gamma2(g)
    assert k == ge and cert.check(g)


def test_maxcut_petersen():
    cut, part = max_cut(petersen_graph())
    assert cut == 12
    assert part.X | part.Y == frozenset(range(10)) and not part.X & part.Y
    crossing = sum((u in part.X) != (v in part.X) for u, v in petersen_graph().edges())
    assert crossing == cut


@given(graphs(max_n=10))
def test_solvers_match_oracles(g):
    k, cert = d2(g)
    assert k == d2_oracle(g)
    assert cert.check(g) and len(cert.removed) == k
    assert cert.removed == lex_smallest_oct(g)
    m, ecert = gamma2(g)
    assert m == gamma2_oracle(g)
    assert ecert.check(g) and len(ecert.removed) == m


def test_larger_random_graphs_against_gamma2_oracle():
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randint(12, 18)
        g = random_graph(rng, n, rng.choice([0.2, 0.4, 0.6]))
        assert gamma2(g)[0] == gamma2_oracle(g)


def test_block_structure_values():
    for t in (1, 2, 3):
        g = h_graph(14, t)
        assert d2(g)[0] == t
    assert d2(cycle_blowup(7, [2] * 7))[0] == 2


def test_limits():
    with pytest.raises(UnsupportedSizeError):
        d2(empty_graph(MAX_D2_N + 1))
    assert d2(complete_graph(MAX_D2_N))[0] == MAX_D2_N - 2
