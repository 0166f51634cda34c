"""Immutable simple graphs stored as adjacency-row bitsets.

Row ``rows[v]`` is a Python int whose bit ``u`` is set iff ``uv`` is an edge.
Python ints are arbitrary precision, so the same representation covers the
one-word case (n <= 64) and the multi-word case without branching.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import GraphError


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Equality is labelled equality; use :func:`oddstab.canon.canonical_form`
    for isomorphism.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise GraphError(f"row count {len(self.rows)} does not match n={self.n}")

    @classmethod
    def from_rows(cls, rows: Iterable[int], check: bool = True) -> "Graph":
        rows = tuple(rows)
        n = len(rows)
        if check:
            full = (1 << n) - 1
            for v, r in enumerate(rows):
                if r >> v & 1:
                    raise GraphError(f"self-loop at vertex {v}")
                if r & ~full:
                    raise GraphError(f"vertex {v} has a neighbour out of range")
                for u in iter_bits(r):
                    if not rows[u] >> v & 1:
                        raise GraphError(f"adjacency not symmetric at ({v},{u})")
        return cls(n, rows)

    @property
    def e(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def min_degree(self) -> int:
        return min((r.bit_count() for r in self.rows), default=0)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v``, sorted."""
        out = []
        for u, r in enumerate(self.rows):
            out.extend((u, v) for v in iter_bits(r >> (u + 1) << (u + 1)))
        return out

    def induced_edge_count(self, mask: int) -> int:
        return sum((self.rows[v] & mask).bit_count() for v in iter_bits(mask)) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.e})"


@dataclass(frozen=True)
class Bipartition:
    """A proper 2-colouring ``(X, Y)`` of some vertex set."""

    X: frozenset[int]
    Y: frozenset[int]

    def is_valid_for(self, g: Graph, vertices: Optional[Iterable[int]] = None) -> bool:
        """Check disjointness, coverage of ``vertices`` and that no edge is monochromatic."""
        if self.X & self.Y:
            return False
        covered = self.X | self.Y
        want = set(range(g.n)) if vertices is None else set(vertices)
        if covered != want:
            return False
        xm, ym = mask_of(self.X), mask_of(self.Y)
        return all(not (g.rows[v] & xm) for v in self.X) and all(
            not (g.rows[v] & ym) for v in self.Y
        )


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate pairs collapse."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    """Path on ``n`` vertices (``n - 1`` edges)."""
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return graph_from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    left = (1 << a) - 1
    right = ((1 << b) - 1) << a
    return Graph(a + b, tuple([right] * a + [left] * b))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return graph_from_edges(10, outer + spokes + inner)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph(g.n + h.n, g.rows + tuple(r << shift for r in h.rows))


def relabel(g: Graph, perm: list[int] | tuple[int, ...]) -> Graph:
    """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
    rows = [0] * g.n
    for v, r in enumerate(g.rows):
        m = 0
        for u in iter_bits(r):
            m |= 1 << perm[u]
        rows[perm[v]] = m
    return Graph(g.n, tuple(rows))


def _check_vertices(g: Graph, vertices: Iterable[int]) -> set[int]:
    s = set(vertices)
    for v in s:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
    return s


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    """Induced subgraph on ``keep``, compacted to ``0..len-1`` in increasing order."""
    order = sorted(_check_vertices(g, keep))
    index = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        m = 0
        for u in iter_bits(g.rows[v]):
            j = index.get(u)
            if j is not None:
                m |= 1 << j
        rows.append(m)
    return Graph(len(order), tuple(rows))


def delete_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    """``G - S``: remaining vertices keep their relative order."""
    s = _check_vertices(g, vertices)
    if not s:
        return g
    return induced_subgraph(g, (v for v in range(g.n) if v not in s))


def delete_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    """``G - E``: labels are preserved."""
    rows = list(g.rows)
    for u, v in edges:
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise GraphError(f"edge ({u},{v}) has an endpoint outside 0..{g.n - 1}")
        if not rows[u] >> v & 1:
            raise GraphError(f"({u},{v}) is not an edge")
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def two_colour(rows: tuple[int, ...] | list[int], mask: int) -> Optional[tuple[int, int]]:
    """BFS 2-colouring of the subgraph induced by ``mask``.

    Components are seeded at their smallest vertex, which gets colour X.
    Returns ``(xmask, ymask)`` or None when an odd cycle exists.
    """
    # A component is bipartite iff no BFS layer spans an edge.
    x = y = 0
    todo = mask
    while todo:
        frontier = todo & -todo
        todo ^= frontier
        side = 0
        while frontier:
            if side:
                y |= frontier
            else:
                x |= frontier
            nxt = 0
            for v in iter_bits(frontier):
                r = rows[v]
                if r & frontier:
                    return None
                nxt |= r
            frontier = nxt & todo
            todo &= ~frontier
            side ^= 1
    return x, y


def is_bipartite(g: Graph) -> Optional[Bipartition]:
    """Return a 2-colouring of all of ``g`` or None if ``g`` has an odd cycle."""
    res = two_colour(g.rows, g.vertex_mask)
    if res is None:
        return None
    x, y = res
    return Bipartition(frozenset(iter_bits(x)), frozenset(iter_bits(y)))


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        q = deque([s])
        while q:
            v = q.popleft()
            for u in iter_bits(g.rows[v]):
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    q.append(u)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    reach = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.rows[v]
        frontier = nxt & ~reach
        reach |= frontier
    return reach == g.vertex_mask


def biconnected_blocks(rows: Sequence[int], mask: int) -> list[int]:
    """Vertex masks of the blocks (maximal 2-connected pieces and bridges)
    of the subgraph induced by ``mask``.  Isolated vertices give no block.

    Iterative Hopcroft-Tarjan with a vertex stack.
    """
    n = len(rows)
    disc = [-1] * n
    low = [0] * n
    out: list[int] = []
    clock = 0
    for root in iter_bits(mask):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = clock
        clock += 1
        stack = [root]
        frames = [(root, iter_bits(rows[root] & mask), -1)]
        while frames:
            v, nbrs, parent = frames[-1]
            descended = False
            for w in nbrs:
                if disc[w] < 0:
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append(w)
                    frames.append((w, iter_bits(rows[w] & mask), v))
                    descended = True
                    break
                if w != parent and disc[w] < low[v]:
                    low[v] = disc[w]
            if descended:
                continue
            frames.pop()
            if frames:
                p = frames[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
                if low[v] >= disc[p]:
                    block = 1 << p
                    while True:
                        x = stack.pop()
                        block |= 1 << x
                        if x == v:
                            break
                    out.append(block)
    return out
