"""The extremal constructions and their bipartization numbers.

Run with ``python demos/01_constructions.py``.
"""

from __future__ import annotations

from oddstab import d2, edge_bound, f_func, gamma2, h0, h_graph, has_cycle_of_length, turan
from oddstab.constructions import h0_real_bound

# H(n,t) glues a balanced complete bipartite graph on n-t-1 vertices to a
# clique K_{t+2} at one shared vertex.  It has no C5 while t+2 <= 4, and
# deleting t vertices (or f(t+1) edges) from the clique makes it bipartite.
print(f"{'n':>3} {'t':>2} {'edges':>6} {'bound':>6} {'C5?':>4} {'d2':>3} {'gamma2':>7} {'f(t+1)':>7}")
for n in (8, 12, 16):
    for t in (1, 2):
        g = h_graph(n, t)
        c5 = has_cycle_of_length(g, 5) is not None
        print(f"{n:>3} {t:>2} {g.e:>6} {edge_bound(n, t):>6} {str(c5):>4} {d2(g)[0]:>3} {gamma2(g)[0]:>7} {f_func(t + 1):>7}")

# The certificate says which vertices to drop, and colours what is left.
k, cert = d2(h_graph(10, 2))
print("\nh(10,2): drop", sorted(cert.removed), "-> sides", sorted(cert.witness.X), sorted(cert.witness.Y))

# H0 replaces one edge of T2(n-1) by a path of length two: triangle-free,
# not bipartite, and one edge above T2(n-1).
for n in (6, 9, 12):
    g = h0(n)
    print(f"h0({n}): e={g.e}  T2({n - 1})={turan(n - 1, 2).e}  unfloored bound={h0_real_bound(n)}")
