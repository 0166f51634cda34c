"""Exhaustive extremal numbers at small orders.

Enumerates every graph class once and reads off the largest edge count.
Takes a few seconds; n = 9 dominates.
"""

from __future__ import annotations

from oddstab import GraphFilter, extremal_search, to_graph6, turan
from oddstab.canon import canonical_form

# Odd cycles: once n >= 4k-2 nothing beats the balanced bipartite graph.
print("no C5:")
for n in range(4, 10):
    rec = extremal_search(n, GraphFilter(frozenset({5})), threads=1)
    bip = to_graph6(canonical_form(turan(n, 2)).graph())
    tag = "T2(n) extremal" if bip in rec.witness_canonical_forms else "T2(n) beaten"
    print(f"  n={n}: {rec.max_edges:>2} edges, {rec.witness_count} extremal graph(s), {tag}")

# Forbidding triangles but insisting on an odd cycle costs edges.
print("\ntriangle-free, not bipartite:")
for n in range(5, 10):
    rec = extremal_search(n, GraphFilter(triangle_free=True, non_bipartite=True), threads=1)
    print(f"  n={n}: {rec.max_edges:>2} edges (floor((n-1)^2/4)+1 = {(n - 1) ** 2 // 4 + 1})"
          f" among {rec.graphs_examined} graphs")
