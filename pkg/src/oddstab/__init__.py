"""Exact tools for odd-cycle-free extremal graph problems.

Graphs are stored as tuples of adjacency bitmasks (:class:`Graph`).  The
modules cover graph6 I/O, canonical labelling, cycle structure, vertex and
edge bipartization, named constructions, integer identities, peeling and
decomposition procedures, and exhaustive small-order search.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .bipartization import BipartizationCertificate, d2, d2_oracle, gamma2, gamma2_oracle, max_cut
from .canon import CanonicalForm, are_isomorphic, canonical_form, canonical_graph
from .constructions import (
    cycle_blowup,
    edge_bound,
    f_func,
    h0,
    h_graph,
    parse_construction,
    turan,
)
from .cycles import (
    CycleCertificate,
    circumference,
    girth,
    has_cycle_of_length,
    is_weakly_pancyclic,
    longest_path_length,
    neighbors_on_cycle,
    odd_girth,
)
from .errors import GraphError, HypothesisError, UnsupportedSizeError
from .graph import Bipartition, Graph, graph_from_edges, is_bipartite
from .graph6 import decode as from_graph6
from .graph6 import encode as to_graph6
from .search import (
    ExtremalRecord,
    GraphFilter,
    VerificationReport,
    conjecture_explore,
    enumerate_graphs,
    extremal_search,
    verify_theorem,
)
from .structure import PeelingTrace, peel, stability_decompose
