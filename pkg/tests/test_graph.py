from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given

from oddstab.errors import GraphError
from oddstab.graph import (
    Bipartition,
    Graph,
    complete_bipartite,
    biconnected_blocks,
    complete_graph,
    connected_components,
    cycle_graph,
    delete_edges,
    delete_vertices,
    disjoint_union,
    empty_graph,
    graph_from_edges,
    induced_subgraph,
    is_bipartite,
    is_connected,
    iter_bits,
    path_graph,
    petersen_graph,
    relabel,
    star_graph,
)

from conftest import graphs


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_basic_counts():
    assert complete_graph(5).e == 10
    assert cycle_graph(7).e == 7
    assert path_graph(4).e == 3
    assert star_graph(5).n == 6 and star_graph(5).e == 5
    assert complete_bipartite(3, 4).e == 12
    assert petersen_graph().degrees() == [3] * 10
    assert empty_graph(4).e == 0


def test_rejects_bad_edges():
    with pytest.raises(GraphError):
        graph_from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        graph_from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph.from_rows([0b10, 0])  # asymmetric


def test_edge_and_vertex_deletion():
    g = complete_graph(4)
    h = delete_edges(g, [(0, 1)])
    assert h.e == 5 and not h.has_edge(0, 1)
    with pytest.raises(GraphError):
        delete_edges(h, [(0, 1)])
    k = delete_vertices(g, [0])
    assert k.n == 3 and k.e == 3


def test_induced_subgraph_compacts_in_order():
    g = path_graph(5)
    h = induced_subgraph(g, [4, 2, 3])
    assert h.n == 3 and h.edges() == [(0, 1), (1, 2)]


def test_bipartite_certificate():
    assert is_bipartite(cycle_graph(5)) is None
    cert = is_bipartite(complete_bipartite(2, 3))
    assert cert is not None and cert.is_valid_for(complete_bipartite(2, 3))
    assert not Bipartition(frozenset({0, 1}), frozenset({2})).is_valid_for(complete_graph(3))


def test_components():
    g = disjoint_union(cycle_graph(3), path_graph(2))
    assert connected_components(g) == [[0, 1, 2], [3, 4]]
    assert not is_connected(g)
    assert is_connected(empty_graph(1))


@given(graphs(max_n=12))
def test_bipartite_and_components_match_networkx(g):
    h = to_nx(g)
    assert (is_bipartite(g) is not None) == nx.is_bipartite(h)
    cert = is_bipartite(g)
    if cert is not None:
        assert cert.is_valid_for(g)
    ours = sorted(sorted(c) for c in connected_components(g))
    theirs = sorted(sorted(c) for c in nx.connected_components(h))
    assert ours == theirs


@given(graphs(max_n=9))
def test_relabel_preserves_degrees(g):
    perm = list(reversed(range(g.n)))
    h = relabel(g, perm)
    assert sorted(h.degrees()) == sorted(g.degrees())
    assert all(h.has_edge(perm[u], perm[v]) for u, v in g.edges())


@given(graphs(max_n=12))
def test_blocks_match_networkx(g):
    ours = sorted(sorted(iter_bits(b)) for b in biconnected_blocks(g.rows, g.vertex_mask))
    theirs = sorted(sorted(c) for c in nx.biconnected_components(to_nx(g)))
    assert ours == theirs
