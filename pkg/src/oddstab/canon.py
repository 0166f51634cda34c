"""Exact canonical labelling by partition refinement and individualisation.

The search starts from the degree partition, refines to an equitable ordered
partition, and branches on the first non-singleton cell.  Every leaf is a
vertex ordering; the canonical graph is the leaf whose relabelled adjacency
rows are lexicographically smallest.  Two leaves with equal codes give an
automorphism, and children that lie in one orbit of the automorphisms found
so far (restricted to those fixing the current branch prefix) are skipped.

Because every leaf of the pruned tree is compared against the first leaf that
produced the same code, the recorded generators generate the whole
automorphism group, so the root orbits are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import UnsupportedSizeError
from .graph import Graph, iter_bits
from . import graph6

MAX_CANON_N = 12


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """graph6 bytes of the canonically relabelled graph."""

    bytes: bytes

    def __str__(self) -> str:
        return self.bytes.decode("ascii")

    def graph(self) -> Graph:
        return graph6.decode(str(self))


@dataclass(frozen=True)
class Labelling:
    rows: tuple[int, ...]                 # canonical graph
    order: tuple[int, ...]                # order[i] = original vertex at position i
    generators: tuple[tuple[int, ...], ...]
    orbits: tuple[int, ...]               # smallest vertex of each vertex's orbit

    def position(self) -> list[int]:
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return pos

    def generators_canonical(self) -> list[tuple[int, ...]]:
        """Automorphism generators rewritten in canonical labels."""
        pos = self.position()
        order = self.order
        return [tuple(pos[g[order[i]]] for i in range(len(order))) for g in self.generators]


def _refine(rows: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Split cells by neighbour counts into every cell until stable."""
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                r = rows[v]
                key = tuple([(r & m).bit_count() for m in masks])
                g = groups.get(key)
                if g is None:
                    groups[key] = [v]
                else:
                    g.append(v)
            if len(groups) == 1:
                out.append(c)
            else:
                changed = True
                for key in sorted(groups):
                    out.append(groups[key])
        if not changed:
            return out
        cells = out


def _orbit_roots(n: int, gens, fixed: Sequence[int] = ()) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        if any(g[p] != p for p in fixed):
            continue
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(v) for v in range(n)]


class _Search:
    def __init__(self, rows: Sequence[int]):
        self.rows = rows
        self.n = len(rows)
        self.best_code: tuple[int, ...] | None = None
        self.best_order: list[int] | None = None
        self.seen: dict[tuple[int, ...], list[int]] = {}
        self.gens: list[tuple[int, ...]] = []

    def leaf(self, order: list[int]) -> None:
        rows = self.rows
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        code = []
        for v in order:
            m = 0
            for u in iter_bits(rows[v]):
                m |= 1 << pos[u]
            code.append(m)
        code_t = tuple(code)
        first = self.seen.get(code_t)
        if first is None:
            self.seen[code_t] = order
            if self.best_code is None or code_t < self.best_code:
                self.best_code = code_t
                self.best_order = order
        else:
            # first[i] -> order[i] preserves adjacency
            gen = [0] * self.n
            for a, b in zip(first, order):
                gen[a] = b
            self.gens.append(tuple(gen))

    def run(self, cells: list[list[int]], prefix: list[int]) -> None:
        cells = _refine(self.rows, cells)
        if len(cells) == self.n:
            self.leaf([c[0] for c in cells])
            return
        idx = next(i for i, c in enumerate(cells) if len(c) > 1)
        cell = cells[idx]
        head, tail = cells[:idx], cells[idx + 1:]
        explored: list[int] = []
        ngens = -1
        roots: list[int] = []
        for v in cell:
            if explored:
                if ngens != len(self.gens):
                    ngens = len(self.gens)
                    roots = _orbit_roots(self.n, self.gens, prefix)
                rv = roots[v]
                if any(roots[u] == rv for u in explored):
                    continue
            explored.append(v)
            rest = [w for w in cell if w != v]
            self.run(head + [[v], rest] + tail, prefix + [v])


def canonical_labelling(g: Graph) -> Labelling:
    """Full canonical labelling of ``g`` with automorphism generators and orbits."""
    if g.n > MAX_CANON_N:
        raise UnsupportedSizeError("canonical_form", g.n, MAX_CANON_N)
    return _labelling(g.rows)


def _labelling(rows: Sequence[int]) -> Labelling:
    n = len(rows)
    if n == 0:
        return Labelling((), (), (), ())
    s = _Search(rows)
    s.run([list(range(n))], [])
    gens = tuple(s.gens)
    return Labelling(
        tuple(s.best_code), tuple(s.best_order), gens, tuple(_orbit_roots(n, gens))
    )


def canonical_graph(g: Graph) -> Graph:
    return Graph(g.n, canonical_labelling(g).rows)


def canonical_form(g: Graph) -> CanonicalForm:
    """Byte string equal for two graphs iff they are isomorphic (n <= 12)."""
    lab = canonical_labelling(g)
    return CanonicalForm(graph6.encode(Graph(g.n, lab.rows)).encode("ascii"))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.e != h.e or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
