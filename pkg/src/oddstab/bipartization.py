"""Exact bipartization numbers.

``d2`` is the odd cycle transversal number (fewest vertex deletions leaving a
bipartite graph), ``gamma2`` the fewest edge deletions, i.e. ``e(G)`` minus
the maximum cut.  Each has a main solver and an exhaustive oracle that shares
no code with it beyond the 2-colouring test.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Literal, Optional, Sequence

from .errors import UnsupportedSizeError
from .graph import Bipartition, Graph, iter_bits, two_colour

MAX_D2_N = 24
MAX_D2_ORACLE_N = 14
MAX_MAXCUT_N = 30
MAX_GAMMA2_ORACLE_N = 24

_INF = 1 << 30


@dataclass(frozen=True)
class BipartizationCertificate:
    """What to delete and a 2-colouring of what is left.

    For ``kind == "vertex"`` the witness colours ``V(G) - removed`` in the
    original labels; for ``kind == "edge"`` it colours all of ``V(G)``.
    """

    kind: Literal["vertex", "edge"]
    removed: frozenset
    witness: Bipartition

    def check(self, g: Graph) -> bool:
        if self.kind == "vertex":
            rest = set(range(g.n)) - set(self.removed)
            return self.witness.is_valid_for(g, rest)
        rows = list(g.rows)
        for u, v in self.removed:
            if not rows[u] >> v & 1:
                return False
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return self.witness.is_valid_for(Graph(g.n, tuple(rows)))


def _bipartition_of(rows: Sequence[int], mask: int) -> Bipartition:
    x, y = two_colour(rows, mask)
    return Bipartition(frozenset(iter_bits(x)), frozenset(iter_bits(y)))


# -- odd cycle transversal by iterative compression --------------------------


class _UnitFlow:
    """Max-flow on a small digraph; capacities are 1 or effectively infinite."""

    def __init__(self, size: int):
        self.adj: list[list[int]] = [[] for _ in range(size)]
        self.cap: dict[tuple[int, int], int] = {}

    def add(self, a: int, b: int, c: int) -> None:
        if (a, b) not in self.cap:
            self.adj[a].append(b)
            self.adj[b].append(a)
            self.cap[(a, b)] = 0
            self.cap.setdefault((b, a), 0)
        self.cap[(a, b)] += c

    def run(self, s: int, t: int, limit: int) -> int:
        """Augment until max flow or until ``limit`` is reached."""
        flow = 0
        cap = self.cap
        adj = self.adj
        while flow < limit:
            prev = {s: s}
            q = deque([s])
            while q and t not in prev:
                a = q.popleft()
                for b in adj[a]:
                    if b not in prev and cap[(a, b)] > 0:
                        prev[b] = a
                        q.append(b)
            if t not in prev:
                break
            b = t
            while b != s:
                a = prev[b]
                cap[(a, b)] -= 1
                cap[(b, a)] += 1
                b = a
            flow += 1
        return flow

    def source_side(self, s: int) -> set[int]:
        seen = {s}
        q = deque([s])
        while q:
            a = q.popleft()
            for b in self.adj[a]:
                if b not in seen and self.cap[(a, b)] > 0:
                    seen.add(b)
                    q.append(b)
        return seen


def _separate(rows, w_mask, a_mask, b_mask, undeletable, limit):
    """Fewest deletable vertices of ``w_mask`` meeting every A-B path in G[w_mask].

    Returns ``(size, cut_mask)`` or None if no cut below ``limit`` exists.
    Vertex v is split into nodes 2i (in) and 2i+1 (out).
    """
    if not a_mask or not b_mask:
        return 0, 0
    # a flow above the deletable count means only undeletable cuts remain
    limit = min(limit, (w_mask & ~undeletable).bit_count() + 1)
    verts = list(iter_bits(w_mask))
    idx = {v: i for i, v in enumerate(verts)}
    src, snk = 2 * len(verts), 2 * len(verts) + 1
    net = _UnitFlow(2 * len(verts) + 2)
    for i, v in enumerate(verts):
        net.add(2 * i, 2 * i + 1, _INF if undeletable >> v & 1 else 1)
        for u in iter_bits(rows[v] & w_mask):
            net.add(2 * i + 1, 2 * idx[u], _INF)
        if a_mask >> v & 1:
            net.add(src, 2 * i, _INF)
        if b_mask >> v & 1:
            net.add(2 * i + 1, snk, _INF)
    flow = net.run(src, snk, limit)
    if flow >= limit:
        return None
    side = net.source_side(src)
    cut = 0
    for i, v in enumerate(verts):
        if 2 * i in side and 2 * i + 1 not in side:
            cut |= 1 << v
    return flow, cut


def _compress(rows, alive: int, sp: int, undeletable: int) -> Optional[int]:
    """Minimum transversal of G[alive] avoiding ``undeletable``, given that
    ``sp`` is a transversal.  Tries every split of ``sp`` into kept-left,
    kept-right and deleted, then finishes with a minimum vertex cut."""
    w_mask = alive & ~sp
    wx, wy = two_colour(rows, w_mask)
    sp_list = list(iter_bits(sp))
    best_size = _INF
    best: Optional[int] = None

    def finish(lm: int, rm: int, dm: int) -> None:
        nonlocal best_size, best
        base = dm.bit_count()
        to_r = 0
        to_l = 0
        for v in iter_bits(lm):
            to_r |= rows[v]
        for v in iter_bits(rm):
            to_l |= rows[v]
        to_r &= w_mask
        to_l &= w_mask
        forced = to_r & to_l
        if forced & undeletable:
            return
        base += forced.bit_count()
        if base >= best_size:
            return
        rest = w_mask & ~forced
        to_r &= rest
        to_l &= rest
        a_mask = (wx & to_l) | (wy & to_r)
        b_mask = (wx & to_r) | (wy & to_l)
        res = _separate(rows, rest, a_mask, b_mask, undeletable, best_size - base)
        if res is None:
            return
        size, cut = res
        if base + size < best_size:
            best_size = base + size
            best = dm | forced | cut

    def assign(i: int, lm: int, rm: int, dm: int) -> None:
        if dm.bit_count() >= best_size:
            return
        if i == len(sp_list):
            finish(lm, rm, dm)
            return
        v = sp_list[i]
        bit = 1 << v
        if not rows[v] & lm:
            assign(i + 1, lm | bit, rm, dm)
        if not rows[v] & rm:
            assign(i + 1, lm, rm | bit, dm)
        if not undeletable & bit:
            assign(i + 1, lm, rm, dm | bit)

    assign(0, 0, 0, 0)
    return best


def _min_oct(rows: Sequence[int], alive: int, undeletable: int = 0) -> Optional[int]:
    """Minimum odd cycle transversal of G[alive] as a bitmask, or None if
    every transversal would need an undeletable vertex."""
    sol = 0
    cur = 0
    for v in iter_bits(alive):
        cur |= 1 << v
        if two_colour(rows, cur & ~sol) is not None:
            continue
        nxt = _compress(rows, cur, sol | (1 << v), undeletable)
        if nxt is None:
            return None
        sol = nxt
    return sol


def _on_odd_cycle(rows: Sequence[int], n: int) -> int:
    """Vertices lying on some odd cycle (via the bipartite double cover)."""
    out = 0
    for r in range(n):
        reached = [1 << r, 0]
        layer = 1 << r
        p = 0
        while layer:
            p ^= 1
            nxt = 0
            for v in iter_bits(layer):
                nxt |= rows[v]
            nxt &= ~reached[p]
            reached[p] |= nxt
            layer = nxt
        if reached[1] >> r & 1:
            out |= 1 << r
    return out


def d2(g: Graph) -> tuple[int, BipartizationCertificate]:
    """Odd cycle transversal number with the lexicographically smallest optimal set."""
    if g.n > MAX_D2_N:
        raise UnsupportedSizeError("d2", g.n, MAX_D2_N)
    rows = g.rows
    full = g.vertex_mask
    opt = _min_oct(rows, full)
    k = opt.bit_count()
    chosen = 0
    if k:
        # only vertices on odd cycles can belong to a minimum transversal
        cand = _on_odd_cycle(rows, g.n)
        excluded = 0
        for v in range(g.n):
            have = chosen.bit_count()
            if have == k:
                break
            bit = 1 << v
            if cand & bit:
                rest = _min_oct(rows, full & ~(chosen | bit), excluded)
                if rest is not None and rest.bit_count() <= k - have - 1:
                    chosen |= bit
                    continue
            excluded |= bit
    removed = frozenset(iter_bits(chosen))
    return k, BipartizationCertificate("vertex", removed, _bipartition_of(rows, full & ~chosen))


def d2_oracle(g: Graph) -> int:
    """Smallest vertex set whose removal is bipartite, by subsets of increasing size."""
    if g.n > MAX_D2_ORACLE_N:
        raise UnsupportedSizeError("d2_oracle", g.n, MAX_D2_ORACLE_N)
    full = g.vertex_mask
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            m = 0
            for v in combo:
                m |= 1 << v
            if two_colour(g.rows, full & ~m) is not None:
                return size
    return g.n


# -- maximum cut --------------------------------------------------------------


def max_cut(g: Graph) -> tuple[int, Bipartition]:
    """Exact maximum cut by depth-first branch and bound.

    Vertices are placed in order of decreasing degree.  The bound adds, for
    each unplaced vertex, the larger of its edge counts to the two sides,
    plus every edge between unplaced vertices.
    """
    n = g.n
    if n > MAX_MAXCUT_N:
        raise UnsupportedSizeError("max_cut", n, MAX_MAXCUT_N)
    if n == 0:
        return 0, Bipartition(frozenset(), frozenset())
    rows = g.rows
    order = sorted(range(n), key=lambda v: (-rows[v].bit_count(), v))
    # unplaced[i] = vertices order[i:], as a mask
    unplaced = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        unplaced[i] = unplaced[i + 1] | (1 << order[i])
    best = -1
    best_x = 0

    def bound(i: int, xm: int, ym: int) -> int:
        rest = unplaced[i]
        b = 0
        inner = 0
        for u in iter_bits(rest):
            r = rows[u]
            a, c = (r & xm).bit_count(), (r & ym).bit_count()
            b += a if a > c else c
            inner += (r & rest).bit_count()
        return b + inner // 2

    def go(i: int, xm: int, ym: int, cut: int) -> None:
        nonlocal best, best_x
        if i == n:
            if cut > best:
                best, best_x = cut, xm
            return
        if cut + bound(i, xm, ym) <= best:
            return
        v = order[i]
        bit = 1 << v
        to_x = (rows[v] & xm).bit_count()
        to_y = (rows[v] & ym).bit_count()
        # putting v in X cuts its edges to Y
        if i == 0 or to_y >= to_x:
            go(i + 1, xm | bit, ym, cut + to_y)
            if i:
                go(i + 1, xm, ym | bit, cut + to_x)
        else:
            go(i + 1, xm, ym | bit, cut + to_x)
            go(i + 1, xm | bit, ym, cut + to_y)

    go(0, 0, 0, 0)
    x = frozenset(iter_bits(best_x))
    return best, Bipartition(x, frozenset(range(n)) - x)


def gamma2(g: Graph) -> tuple[int, BipartizationCertificate]:
    """Fewest edge deletions leaving a bipartite graph: ``e(G) - maxcut(G)``."""
    if g.n > MAX_MAXCUT_N:
        raise UnsupportedSizeError("gamma2", g.n, MAX_MAXCUT_N)
    cut, part = max_cut(g)
    xm = sum(1 << v for v in part.X)
    removed = frozenset(
        (u, v) for u, v in g.edges() if (xm >> u & 1) == (xm >> v & 1)
    )
    return g.e - cut, BipartizationCertificate("edge", removed, part)


def gamma2_oracle(g: Graph) -> int:
    """``e(G)`` minus the best cut over all ``2^(n-1)`` bipartitions (Gray-code sweep)."""
    n = g.n
    if n > MAX_GAMMA2_ORACLE_N:
        raise UnsupportedSizeError("gamma2_oracle", n, MAX_GAMMA2_ORACLE_N)
    if n <= 1:
        return 0
    rows = g.rows
    degs = [r.bit_count() for r in rows]
    side = 0  # bit v set: v on side 1; vertex n-1 never moves
    cut = 0
    best = 0
    for i in range(1, 1 << (n - 1)):
        v = (i & -i).bit_length() - 1
        r = rows[v]
        same = (r & side).bit_count() if side >> v & 1 else (r & ~side).bit_count()
        cut += 2 * same - degs[v]
        side ^= 1 << v
        if cut > best:
            best = cut
    return g.e - best
