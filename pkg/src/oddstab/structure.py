"""Min-degree peeling and the low-degree decomposition, with property checks.

All threshold comparisons are done in integers: ``d < (n-i+2)/3`` becomes
``3d < n-i+2`` and ``d < 2 sqrt(tn)`` becomes ``d*d < 4tn``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .constructions import edge_bound
from .cycles import has_cycle_of_length
from .graph import Bipartition, Graph, induced_subgraph, iter_bits, two_colour

HELD = "held"
FAILED = "failed"
NOT_APPLICABLE = "not-applicable"

FLAG_NAMES = ("bipartite", "i", "ii", "iii", "iv", "v", "vi")


@dataclass(frozen=True)
class PeelStep:
    step: int
    vertex: int
    degree: int


@dataclass(frozen=True)
class PeelingTrace:
    """Deleted vertices in order, and what is left.

    ``remainder`` is compacted to ``0..n'-1``; ``remainder_vertices`` maps its
    labels back to the input graph, and ``remainder_bipartition`` uses the
    input labels.
    """

    n: int
    removed: tuple[PeelStep, ...]
    remainder: Graph
    remainder_vertices: tuple[int, ...]
    remainder_bipartition: Optional[Bipartition]

    def to_dict(self) -> dict:
        bip = self.remainder_bipartition
        return {
            "n": self.n,
            "removed": [[s.step, s.vertex, s.degree] for s in self.removed],
            "remainder_order": self.remainder.n,
            "remainder_edges": self.remainder.e,
            "remainder_min_degree": self.remainder.min_degree(),
            "remainder_bipartite": bip is not None,
            "remainder_parts": [sorted(bip.X), sorted(bip.Y)] if bip else None,
        }


def peel(g: Graph) -> PeelingTrace:
    """Repeatedly delete the smallest-labelled vertex whose current degree d
    satisfies 3d < (n - i) + 2, where i counts deletions so far."""
    n = g.n
    rows = g.rows
    deg = [r.bit_count() for r in rows]
    alive = g.vertex_mask
    steps: list[PeelStep] = []
    i = 0
    while alive:
        limit = n - i + 2
        pick = -1
        for v in iter_bits(alive):
            if 3 * deg[v] < limit:
                pick = v
                break
        if pick < 0:
            break
        steps.append(PeelStep(i, pick, deg[pick]))
        alive &= ~(1 << pick)
        for u in iter_bits(rows[pick] & alive):
            deg[u] -= 1
        i += 1
    keep = tuple(iter_bits(alive))
    rest = induced_subgraph(g, keep)
    col = two_colour(rows, alive)
    bip = None
    if col is not None:
        bip = Bipartition(frozenset(iter_bits(col[0])), frozenset(iter_bits(col[1])))
    return PeelingTrace(n, tuple(steps), rest, keep, bip)


def low_degree_set(g: Graph, t: int) -> frozenset[int]:
    """Vertices with deg(v) < 2 sqrt(t n), compared as deg^2 < 4 t n."""
    if t < 1:
        raise ValueError("t must be >= 1")
    cap = 4 * t * g.n
    return frozenset(v for v, r in enumerate(g.rows) if r.bit_count() ** 2 < cap)


@dataclass(frozen=True)
class DecompositionReport:
    """Outcome of splitting ``V(G)`` into low-degree vertices B and a
    bipartition (X, Y) of the rest.

    When ``G - B`` is not bipartite, X holds all of ``V(G) - B`` and Y is empty.
    ``hypotheses`` records whether G is C_{2k+1}-free and whether the
    edge-count and order conditions hold; flags are reported either way.
    """

    n: int
    t: int
    k: int
    B: frozenset[int]
    X: frozenset[int]
    Y: frozenset[int]
    flags: dict = field(compare=False)
    hypotheses: dict = field(compare=False)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "t": self.t,
            "k": self.k,
            "B": sorted(self.B),
            "X_size": len(self.X),
            "Y_size": len(self.Y),
            "flags": {name: self.flags[name] for name in FLAG_NAMES},
            "hypotheses": dict(self.hypotheses),
        }


def _flag(ok: bool) -> str:
    return HELD if ok else FAILED


def stability_decompose(g: Graph, t: int, k: int) -> DecompositionReport:
    if t < 1 or k < 2:
        raise ValueError(f"need t >= 1 and k >= 2, got t={t}, k={k}")
    n = g.n
    rows = g.rows
    tn = t * n
    b_set = low_degree_set(g, t)
    b_mask = sum(1 << v for v in b_set)
    rest = g.vertex_mask & ~b_mask
    col = two_colour(rows, rest)
    hyp = {
        "cycle_free": has_cycle_of_length(g, 2 * k + 1) is None,
        "edge_count": n >= t + 1 and g.e >= edge_bound(n, t),
        "order": n >= 252 * t * t * k,
    }
    flags = {name: NOT_APPLICABLE for name in FLAG_NAMES}
    flags["i"] = _flag(len(b_set) <= t + 1)
    if col is None:
        flags["bipartite"] = FAILED
        return DecompositionReport(
            n, t, k, b_set, frozenset(iter_bits(rest)), frozenset(), flags, hyp
        )
    flags["bipartite"] = HELD
    xm, ym = col

    sizes_ok = all((n - 2 * m.bit_count()) ** 2 <= 16 * tn for m in (xm, ym))
    flags["ii"] = _flag(sizes_ok)

    # low: deg <= n/2 - sqrt(3tn)  <=>  2d <= n and (n-2d)^2 >= 12tn
    low = 0
    for v in iter_bits(rest):
        d = (rows[v] & rest).bit_count()
        if 2 * d <= n and (n - 2 * d) ** 2 >= 12 * tn:
            low += 1
    flags["iii"] = _flag(4 * low * low <= 9 * tn)

    b_list = sorted(b_set)
    flags["iv"] = _flag(all(not (rows[v] & xm and rows[v] & ym) for v in b_list))

    def two_distinct(u: int, v: int, side: int) -> bool:
        nu, nv = rows[u] & side, rows[v] & side
        return bool(nu and nv and (nu | nv).bit_count() >= 2)

    ok_v = True
    for u in b_list:
        for v in iter_bits(rows[u] & b_mask):
            if v > u and (two_distinct(u, v, xm) or two_distinct(u, v, ym)):
                ok_v = False
    flags["v"] = _flag(ok_v)

    if not b_list:
        flags["vi"] = HELD
    else:
        any_path = False
        ok_vi = True
        for w in b_list:
            inner = rows[w] & b_mask
            if inner.bit_count() < 2:
                continue
            any_path = True
            if (rows[w] & rest).bit_count() > 1:
                continue
            ends = list(iter_bits(inner))
            for a in ends:
                for c in ends:
                    if a != c and rows[a] & ym and rows[c] & xm:
                        ok_vi = False
        flags["vi"] = _flag(ok_vi) if any_path else NOT_APPLICABLE
    return DecompositionReport(
        n, t, k, b_set, frozenset(iter_bits(xm)), frozenset(iter_bits(ym)), flags, hyp
    )
