"""Isomorph-free generation of small graphs by canonical vertex augmentation.

A graph G on N vertices is produced from the canonical representative of
``G - m(G)``, where m(G) is a canonically chosen vertex of maximum degree
(ties broken first by the sum of neighbour degrees, then by the largest
canonical position).  A child formed by adding vertex v with neighbourhood S
is kept only if v lies in the automorphism orbit of m(G), and S is only tried
if it is the smallest set in its orbit under the parent's automorphisms.
Together these emit each isomorphism class exactly once.

Forbidden cycle lengths are hereditary, so they are checked on the new
vertex only and prune whole subtrees.  A minimum-degree target d at order N
prunes an ancestor of order m whose minimum degree is below d - (N - m).
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Optional, Sequence

from .canon import _labelling
from .cycles import has_cycle_through
from .graph import iter_bits

# A node is (canonical rows, automorphism generators in canonical labels).
Node = tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]

ROOT: Node = ((), ())


def _is_orbit_min(s: int, perms: Sequence[Sequence[int]]) -> bool:
    seen = {s}
    stack = [s]
    while stack:
        x = stack.pop()
        for p in perms:
            y = 0
            for u in iter_bits(x):
                y |= 1 << p[u]
            if y < s:
                return False
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return True


def children(
    node: Node,
    forbidden: Sequence[int] = (),
    min_degree: int = 0,
    want_gens: bool = True,
) -> list[Node]:
    """Canonical children of ``node`` one vertex larger.

    ``min_degree`` is the minimum degree every child must have (0 = none).
    """
    prow, gens = node
    m = len(prow)
    degs = [r.bit_count() for r in prow]
    dmax = max(degs, default=0)
    by_deg = [0] * (m + 2)
    for u, d in enumerate(degs):
        by_deg[d] |= 1 << u
    newbit = 1 << m
    if min_degree:
        # a vertex below min_degree - 1 can never recover; one at exactly
        # min_degree - 1 must be joined to the new vertex
        if any(by_deg[d] for d in range(min(min_degree - 1, m + 2))):
            return []
        must = by_deg[min_degree - 1] if min_degree - 1 <= m else 0
    out: list[Node] = []
    for s_mask in range(1 << m):
        s = s_mask.bit_count()
        # the new vertex must reach the maximum degree of the child
        if s < dmax or (s == dmax and s_mask & by_deg[dmax]):
            continue
        if min_degree and (s < min_degree or must & ~s_mask):
            continue
        if gens and not _is_orbit_min(s_mask, gens):
            continue
        rows = list(prow)
        for u in iter_bits(s_mask):
            rows[u] |= newbit
        rows.append(s_mask)
        if forbidden and any(has_cycle_through(rows, m, L) for L in forbidden):
            continue
        # other vertices whose child degree equals s
        if s:
            ties = (s_mask & by_deg[s - 1]) | (~s_mask & by_deg[s] & (newbit - 1))
        else:
            ties = by_deg[0]
        rivals: list[int] = []
        if ties:
            cdeg = [r.bit_count() for r in rows]
            key_v = sum(cdeg[u] for u in iter_bits(s_mask))
            beaten = False
            for u in iter_bits(ties):
                k = sum(cdeg[w] for w in iter_bits(rows[u]))
                if k > key_v:
                    beaten = True
                    break
                if k == key_v:
                    rivals.append(u)
            if beaten:
                continue
        lab = _labelling(rows)
        if rivals:
            pos = lab.position()
            top = max(rivals + [m], key=lambda u: pos[u])
            if lab.orbits[top] != lab.orbits[m]:
                continue
        out.append((lab.rows, tuple(lab.generators_canonical()) if want_gens else ()))
    return out


def _expand(node: Node, n: int, forbidden: Sequence[int], min_degree: int) -> list[tuple[int, ...]]:
    """All canonical descendants of ``node`` with exactly ``n`` vertices."""
    m = len(node[0])
    if m == n:
        return [node[0]]
    need = max(0, min_degree - (n - m - 1))
    last = m + 1 == n
    out: list[tuple[int, ...]] = []
    for child in children(node, forbidden, need, want_gens=not last):
        if last:
            out.append(child[0])
        else:
            out.extend(_expand(child, n, forbidden, min_degree))
    return out


def _expand_many(args) -> list[tuple[int, ...]]:
    nodes, n, forbidden, min_degree = args
    out: list[tuple[int, ...]] = []
    for node in nodes:
        out.extend(_expand(node, n, forbidden, min_degree))
    return out


def generate(
    n: int,
    forbidden: Iterable[int] = (),
    min_degree: int = 0,
    threads: Optional[int] = None,
) -> list[tuple[int, ...]]:
    """Canonical adjacency rows of every graph on ``n`` vertices, one per
    isomorphism class, with no cycle of a forbidden length and minimum degree
    at least ``min_degree``.  Order is unspecified; callers sort."""
    forbidden = tuple(sorted(set(forbidden)))
    threads = threads or os.cpu_count() or 1
    if threads <= 1 or n < 7:
        return _expand(ROOT, n, forbidden, min_degree)
    # breadth-first to a split level, then farm out subtrees
    split = n - 2
    frontier = [ROOT]
    for m in range(split):
        need = max(0, min_degree - (n - m - 1))
        frontier = [c for node in frontier for c in children(node, forbidden, need)]
    chunks = [frontier[i::threads * 4] for i in range(threads * 4)]
    jobs = [(c, n, forbidden, min_degree) for c in chunks if c]
    out: list[tuple[int, ...]] = []
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for part in pool.map(_expand_many, jobs):
            out.extend(part)
    return out
