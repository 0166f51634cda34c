"""Where do small C5-free graphs sit against the blowup and block families?

Prints the (edges, gamma2) Pareto frontier of each family and the observed
pairs that no family member matches in both coordinates.  At these sizes
this is only a picture; nothing is being proved.
"""

from __future__ import annotations

from oddstab import conjecture_explore

for n in (7, 8, 9):
    rep = conjecture_explore(n, 2, threads=1)
    print(f"n={n}: {rep.graphs_examined} C5-free graphs, family sizes {rep.family_sizes}")
    for key, members in rep.frontiers.items():
        print(f"  {key:5s} frontier:", ", ".join(f"({m.e},{m.gamma2})" for m in members))
    rows = rep.undominated["union"]
    print("  beyond both families:", ", ".join(f"({e},{g}) e.g. {ex}" for e, g, _, ex in rows) or "nothing")
