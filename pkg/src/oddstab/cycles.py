"""Cycle structure: girth, odd girth, fixed-length cycles, long cycles and paths."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import GraphError, UnsupportedSizeError
from .graph import Graph, biconnected_blocks, iter_bits, two_colour

MAX_LONG_CYCLE_N = 20
MAX_PANCYCLIC_N = 16


@dataclass(frozen=True)
class CycleCertificate:
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def mask(self) -> int:
        m = 0
        for v in self.vertices:
            m |= 1 << v
        return m

    def is_valid_for(self, g: Graph) -> bool:
        vs = self.vertices
        if len(vs) < 3 or len(set(vs)) != len(vs):
            return False
        return all(g.has_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or None for forests.

    Layered BFS from every root: an edge inside layer d closes a walk of
    length 2d+1, a vertex of layer d+1 with two parents in layer d closes
    one of length 2d+2.  The minimum over roots is the girth.
    """
    rows = g.rows
    best = None
    for r in range(g.n):
        seen = 1 << r
        layer = 1 << r
        d = 0
        while layer:
            if best is not None and 2 * d + 1 >= best:
                break
            nxt = 0
            for v in iter_bits(layer):
                if rows[v] & layer:
                    best = 2 * d + 1
                    break
                nxt |= rows[v]
            else:
                nxt &= ~seen
                if best is None or 2 * d + 2 < best:
                    for w in iter_bits(nxt):
                        if (rows[w] & layer).bit_count() >= 2:
                            best = 2 * d + 2
                            break
                seen |= nxt
                layer = nxt
                d += 1
                continue
            break
    return best


def _splice_odd(walk: list[int]) -> list[int]:
    """Shortcut a closed odd walk to a simple odd cycle of no greater length."""
    while True:
        first: dict[int, int] = {}
        for j, v in enumerate(walk):
            i = first.get(v)
            if i is not None:
                inner = walk[i:j]
                outer = walk[:i] + walk[j:]
                walk = inner if len(inner) % 2 else outer
                break
            first[v] = j
        else:
            return walk


def _odd_walk_through(rows: Sequence[int], r: int, limit: Optional[int]) -> Optional[list[int]]:
    """Shortest closed odd walk through ``r`` via BFS on the bipartite double cover.

    Double-cover vertex (v, p) is stored as bit v of ``reached[p]``.  Search
    stops once the walk could not be shorter than ``limit``.
    """
    reached = [1 << r, 0]
    layers = [1 << r]
    length = 0
    while True:
        length += 1
        if limit is not None and length >= limit:
            return None
        p = length & 1
        nxt = 0
        for v in iter_bits(layers[-1]):
            nxt |= rows[v]
        nxt &= ~reached[p]
        if not nxt:
            return None
        reached[p] |= nxt
        layers.append(nxt)
        if p and nxt >> r & 1:
            break
    # walk back through the layers from (r, 1) to (r, 0)
    walk = [r]
    cur = r
    for i in range(length - 1, 0, -1):
        cur = (rows[cur] & layers[i]).bit_length() - 1
        walk.append(cur)
    return walk


def odd_girth(g: Graph) -> Optional[tuple[int, CycleCertificate]]:
    """Shortest odd cycle length with a witness cycle, or None if bipartite."""
    best: Optional[list[int]] = None
    for r in range(g.n):
        w = _odd_walk_through(g.rows, r, len(best) if best else None)
        if w is not None:
            best = w
            if len(best) == 3:
                break
    if best is None:
        return None
    cyc = _splice_odd(best)
    return len(cyc), CycleCertificate(tuple(cyc))


def _distances_within(rows: Sequence[int], src: int, mask: int) -> list[int]:
    n = len(rows)
    dist = [n + 1] * n
    dist[src] = 0
    seen = 1 << src
    layer = 1 << src
    d = 0
    while layer:
        d += 1
        nxt = 0
        for v in iter_bits(layer):
            nxt |= rows[v]
        nxt &= mask & ~seen
        for v in iter_bits(nxt):
            dist[v] = d
        seen |= nxt
        layer = nxt
    return dist


def _cycle_from(rows: Sequence[int], s: int, length: int, allowed: int) -> Optional[list[int]]:
    """Backtracking search for a cycle of ``length`` vertices through ``s``
    using only vertices in ``allowed`` (which must contain ``s``)."""
    dist = _distances_within(rows, s, allowed)
    path = [s]
    back = rows[s]

    def extend(cur: int, used: int) -> bool:
        k = len(path)
        if k == length:
            return bool(back >> cur & 1)
        # still need length-k vertices, then the closing edge
        slack = length - k + 1
        for w in iter_bits(rows[cur] & allowed & ~used):
            if dist[w] > slack - 1:
                continue
            path.append(w)
            if extend(w, used | (1 << w)):
                return True
            path.pop()
        return False

    if extend(s, 1 << s):
        return path
    return None


def has_cycle_of_length(g: Graph, length: int) -> Optional[CycleCertificate]:
    """A simple cycle with exactly ``length`` vertices, or None.

    Every cycle lies inside one block, so the search runs block by block,
    skipping blocks that are too small and, for odd lengths, bipartite ones.
    """
    if length < 3:
        raise GraphError("cycle length must be at least 3")
    if length > g.n:
        return None
    rows = g.rows
    for block in biconnected_blocks(rows, g.vertex_mask):
        if block.bit_count() < length:
            continue
        if length % 2 and two_colour(rows, block) is not None:
            continue
        for s in iter_bits(block):
            allowed = block & ~((1 << s) - 1)
            if allowed.bit_count() < length:
                break
            if (rows[s] & allowed).bit_count() < 2:
                continue
            cyc = _cycle_from(rows, s, length, allowed)
            if cyc is not None:
                return CycleCertificate(tuple(cyc))
    return None


def has_cycle_through(rows: Sequence[int], v: int, length: int, mask: Optional[int] = None) -> bool:
    """Whether some cycle of ``length`` vertices passes through ``v``."""
    if mask is None:
        mask = (1 << len(rows)) - 1
    nb = rows[v] & mask
    if nb.bit_count() < 2:
        return False
    if length == 3:
        return any(rows[u] & nb for u in iter_bits(nb))
    return _cycle_from(rows, v, length, mask) is not None


def _check_long(g: Graph, what: str, limit: int) -> None:
    if g.n > limit:
        raise UnsupportedSizeError(what, g.n, limit)


def cycle_vertex_sets(g: Graph) -> dict[int, int]:
    """Map from vertex bitmask to its size, for every vertex set spanned by a cycle.

    Subset dynamic programming anchored at the smallest vertex of each cycle:
    ``ends[mask]`` holds the endpoints of paths that start at the anchor and
    cover exactly ``mask``.
    """
    _check_long(g, "cycle_vertex_sets", MAX_LONG_CYCLE_N)
    rows = g.rows
    full = g.vertex_mask
    found: dict[int, int] = {}
    for s in range(g.n):
        higher = full & ~((1 << (s + 1)) - 1)
        close = rows[s]
        if (close & higher).bit_count() < 2:
            continue
        layer = {1 << s: 1 << s}
        size = 1
        while layer:
            nxt: dict[int, int] = {}
            for mask, ends in layer.items():
                if size >= 3 and ends & close:
                    found[mask] = size
                for v in iter_bits(ends):
                    for w in iter_bits(rows[v] & higher & ~mask):
                        m2 = mask | (1 << w)
                        nxt[m2] = nxt.get(m2, 0) | (1 << w)
            layer = nxt
            size += 1
    return found


def cycle_lengths(g: Graph) -> set[int]:
    return set(cycle_vertex_sets(g).values())


def circumference(g: Graph) -> Optional[int]:
    """Length of a longest cycle, or None when acyclic (n <= 20)."""
    _check_long(g, "circumference", MAX_LONG_CYCLE_N)
    lengths = cycle_lengths(g)
    return max(lengths) if lengths else None


def longest_path_length(g: Graph) -> int:
    """Number of edges of a longest path (n <= 20)."""
    _check_long(g, "longest_path_length", MAX_LONG_CYCLE_N)
    rows = g.rows
    if g.n == 0:
        return 0
    layer = {1 << v: 1 << v for v in range(g.n)}
    size = 1
    while True:
        nxt: dict[int, int] = {}
        for mask, ends in layer.items():
            for v in iter_bits(ends):
                for w in iter_bits(rows[v] & ~mask):
                    m2 = mask | (1 << w)
                    nxt[m2] = nxt.get(m2, 0) | (1 << w)
        if not nxt:
            return size - 1
        layer = nxt
        size += 1


def is_weakly_pancyclic(g: Graph) -> bool:
    """Cycles of every length from the girth to the circumference (n <= 16)."""
    _check_long(g, "is_weakly_pancyclic", MAX_PANCYCLIC_N)
    lengths = cycle_lengths(g)
    if not lengths:
        return True
    return len(lengths) == max(lengths) - min(lengths) + 1


def neighbors_on_cycle(g: Graph, cycle: CycleCertificate, v: int) -> int:
    """``|N(v) ∩ V(C)|`` for a vertex off the cycle."""
    m = cycle.mask
    if m >> v & 1:
        raise GraphError(f"vertex {v} lies on the cycle")
    return (g.rows[v] & m).bit_count()
