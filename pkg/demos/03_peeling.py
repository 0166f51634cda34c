"""Peeling low-degree vertices and splitting off the low-degree set."""

from __future__ import annotations

import time

from oddstab import h_graph, peel, stability_decompose
from oddstab.graph import graph_from_edges

g = h_graph(2000, 1)
start = time.perf_counter()
trace = peel(g)
print(f"peel(h(2000,1)) in {time.perf_counter() - start:.2f}s")
for step in trace.removed:
    print(f"  step {step.step}: vertex {step.vertex}, degree {step.degree}")
print("  remainder:", trace.remainder.n, "vertices, min degree", trace.remainder.min_degree(),
      "bipartite" if trace.remainder_bipartition else "not bipartite")

# Deleting a vertex can drag its neighbours under the threshold too.
star_plus = graph_from_edges(7, [(0, i) for i in range(1, 7)] + [(1, 2)])
print("\nstar with one extra edge:", [(s.vertex, s.degree) for s in peel(star_plus).removed])

for n in (300, 1000, 3000):
    rep = stability_decompose(h_graph(n, 1), 1, 2)
    flags = " ".join(f"{k}:{v}" for k, v in rep.flags.items())
    print(f"\nn={n}: B={sorted(rep.B)} |X|={len(rep.X)} |Y|={len(rep.Y)}\n  {flags}")
    print("  hypotheses:", rep.hypotheses)
