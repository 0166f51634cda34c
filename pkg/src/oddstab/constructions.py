"""Named graph families and the edge counts they attain."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import GraphError
from .graph import Graph, graph_from_edges


def turan_part_sizes(n: int, r: int) -> list[int]:
    """Part sizes of T_r(n), larger parts first."""
    if r < 1:
        raise GraphError("Turan graph needs r >= 1")
    if n < 0:
        raise GraphError("negative vertex count")
    q, extra = divmod(n, r)
    return [q + 1] * extra + [q] * (r - extra)


def turan_edges(n: int, r: int) -> int:
    sizes = turan_part_sizes(n, r)
    return (n * n - sum(s * s for s in sizes)) // 2


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    n = sum(sizes)
    full = (1 << n) - 1
    rows = []
    start = 0
    for s in sizes:
        part = ((1 << s) - 1) << start
        rows.extend([full & ~part] * s)
        start += s
    return Graph(n, tuple(rows))


def turan(n: int, r: int) -> Graph:
    """Complete r-partite graph on n vertices with balanced parts.

    Vertices are numbered part by part, larger parts first.
    """
    return complete_multipartite(turan_part_sizes(n, r))


def f_func(x: int) -> int:
    """C(x,2) - floor(x^2/4) + floor(x/2): the edge-deletion number of K_{x+1}."""
    if x < 0:
        raise ValueError("f is defined for x >= 0")
    return comb(x, 2) - x * x // 4 + x // 2


def edge_bound(n: int, t: int) -> int:
    """floor((n-t-1)^2/4) + C(t+2,2), the edge count of H(n,t)."""
    if t < 1 or n < t + 1:
        raise ValueError(f"edge_bound needs n >= t+1 >= 2, got n={n}, t={t}")
    return (n - t - 1) ** 2 // 4 + comb(t + 2, 2)


def h_graph(n: int, t: int) -> Graph:
    """T_2(n-t-1) and K_{t+2} glued at one vertex.

    Vertex 0 is the shared cut vertex and lies in the larger Turan part;
    the Turan parts are ``0..a-1`` and ``a..n-t-2``; the clique's private
    vertices are the last ``t+1`` labels.
    """
    if t < 1 or n < t + 3:
        raise GraphError(f"h_graph needs t >= 1 and n >= t+3, got n={n}, t={t}")
    m = n - t - 1
    a = (m + 1) // 2
    edges = [(u, v) for u in range(a) for v in range(a, m)]
    clique = [0] + list(range(m, n))
    edges += [(clique[i], clique[j]) for i in range(len(clique)) for j in range(i + 1, len(clique))]
    return graph_from_edges(n, edges)


def h_private_vertices(n: int, t: int) -> list[int]:
    """Labels of the clique vertices of h_graph(n, t) other than the cut vertex."""
    return list(range(n - t - 1, n))


def h0(n: int) -> Graph:
    """T_2(n-1) with the edge between the first vertices of its parts
    replaced by a path through a new vertex ``n-1``."""
    if n < 4:
        raise GraphError(f"h0 needs n >= 4, got {n}")
    m = n - 1
    a = (m + 1) // 2
    edges = [(u, v) for u in range(a) for v in range(a, m) if (u, v) != (0, a)]
    edges += [(0, m), (a, m)]
    return graph_from_edges(n, edges)


def h0_edges(n: int) -> int:
    """Attained edge count floor((n-1)^2/4) + 1."""
    return (n - 1) ** 2 // 4 + 1


def h0_real_bound(n: int) -> Fraction:
    """The unfloored value (n-1)^2/4 + 1."""
    return Fraction((n - 1) ** 2, 4) + 1


def cycle_blowup(length: int, sizes: Sequence[int]) -> Graph:
    """Replace vertex i of C_length by an independent set of ``sizes[i]``
    vertices and each cycle edge by a complete bipartite join."""
    if length < 3 or length % 2 == 0:
        raise GraphError(f"blowup base must be an odd cycle length >= 3, got {length}")
    if len(sizes) != length:
        raise GraphError(f"expected {length} part sizes, got {len(sizes)}")
    if any(s < 1 for s in sizes):
        raise GraphError("every blowup part needs at least one vertex")
    starts = [0]
    for s in sizes:
        starts.append(starts[-1] + s)
    edges = []
    for i in range(length):
        j = (i + 1) % length
        edges += [(u, v) for u in range(starts[i], starts[i + 1]) for v in range(starts[j], starts[j + 1])]
    return graph_from_edges(starts[-1], edges)


@dataclass(frozen=True)
class Block:
    """One block of a block graph.

    ``kind`` is ``"bipartite"`` with ``sizes == (a, b)`` or ``"clique"`` with
    ``sizes == (s,)``.  ``attach`` lists the already-built vertices this block
    shares; the first block shares none, every later block exactly one.
    """

    kind: str
    sizes: tuple[int, ...]
    attach: tuple[int, ...] = ()

    @property
    def order(self) -> int:
        return sum(self.sizes)


def block_graph(blocks: Sequence[Block], k: int | None = None) -> Graph:
    """Glue blocks along single cut vertices into a member of the family with
    one complete bipartite block and clique blocks of order at most ``2k``."""
    if not blocks:
        raise GraphError("block graph needs at least one block")
    bip = [b for b in blocks if b.kind == "bipartite"]
    for b in blocks:
        if b.kind == "clique":
            (s,) = b.sizes
            if s == 2:
                raise GraphError("a K_2 block is complete bipartite; use the bipartite block")
            if s < 2:
                raise GraphError(f"clique block of order {s} is not a block")
            if k is not None and s > 2 * k:
                raise GraphError(f"clique block K_{s} exceeds 2k = {2 * k}")
        elif b.kind == "bipartite":
            a, c = b.sizes
            if min(a, c) < 1:
                raise GraphError(f"K_{{{a},{c}}} needs both sides non-empty")
        else:
            raise GraphError(f"unknown block kind {b.kind!r}")
    if len(bip) != 1:
        raise GraphError(f"need exactly one complete bipartite block, got {len(bip)}")
    edges: list[tuple[int, int]] = []
    n = 0
    for i, b in enumerate(blocks):
        if i == 0:
            if b.attach:
                raise GraphError("the first block cannot attach to anything")
            verts = list(range(b.order))
        else:
            if len(b.attach) != 1:
                raise GraphError(
                    f"block {i} shares {len(b.attach)} vertices; blocks must form a tree"
                )
            (cut,) = b.attach
            if not 0 <= cut < n:
                raise GraphError(f"block {i} attaches to unknown vertex {cut}")
            verts = [cut] + list(range(n, n + b.order - 1))
        if b.kind == "clique":
            edges += [(verts[x], verts[y]) for x in range(len(verts)) for y in range(x + 1, len(verts))]
        else:
            a, c = b.sizes
            edges += [(verts[x], verts[y]) for x in range(a) for y in range(a, a + c)]
        n = max(n, max(verts) + 1)
    return graph_from_edges(n, edges)


# -- textual construction specs ----------------------------------------------


@dataclass(frozen=True)
class ConstructionSpec:
    """A parsed construction such as ``h:n=10,t=1``."""

    variant: str
    params: dict = field(default_factory=dict, compare=False, hash=False)
    text: str = ""

    def build(self) -> Graph:
        p = self.params
        if self.variant == "turan":
            return turan(p["n"], p["r"])
        if self.variant == "h":
            return h_graph(p["n"], p["t"])
        if self.variant == "h0":
            return h0(p["n"])
        if self.variant == "blowup":
            return cycle_blowup(p["L"], p["sizes"])
        if self.variant == "blocks":
            return block_graph(p["blocks"], p.get("k"))
        raise GraphError(f"unknown construction {self.variant!r}")

    def __str__(self) -> str:
        return self.text


def _int_params(body: str, keys: set[str]) -> dict[str, int]:
    out = {}
    for item in body.split(","):
        key, sep, val = item.partition("=")
        if not sep or key.strip() not in keys:
            raise GraphError(f"bad parameter {item!r}; expected {sorted(keys)}")
        out[key.strip()] = int(val)
    if set(out) != keys:
        raise GraphError(f"missing parameters {sorted(keys - set(out))}")
    return out


def parse_construction(text: str) -> ConstructionSpec:
    """Parse ``turan:n=6,r=2``, ``h:n=10,t=1``, ``h0:n=9``,
    ``blowup:L=7,sizes=2,2,2,2,2,2,2`` or ``blocks:bip=3x4;cliques=3,4@cut=0``
    (optionally ``;k=2``)."""
    text = text.strip()
    variant, sep, body = text.partition(":")
    if not sep:
        raise GraphError(f"construction spec {text!r} lacks ':'")
    variant = variant.strip().lower()
    try:
        if variant == "turan":
            params: dict = _int_params(body, {"n", "r"})
        elif variant == "h":
            params = _int_params(body, {"n", "t"})
        elif variant == "h0":
            params = _int_params(body, {"n"})
        elif variant == "blowup":
            m = re.fullmatch(r"\s*L=(\d+)\s*,\s*sizes=([\d,\s]+)", body)
            if not m:
                raise GraphError(f"bad blowup spec {body!r}")
            params = {"L": int(m.group(1)), "sizes": tuple(int(s) for s in m.group(2).split(","))}
        elif variant == "blocks":
            params = {"blocks": _parse_blocks(body)}
            for item in body.split(";"):
                if item.strip().startswith("k="):
                    params["k"] = int(item.strip()[2:])
        else:
            raise GraphError(f"unknown construction {variant!r}")
    except ValueError as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(f"bad construction spec {text!r}: {exc}") from exc
    return ConstructionSpec(variant, params, text)


def _parse_blocks(body: str) -> list[Block]:
    blocks: list[Block] = []
    for item in body.split(";"):
        item = item.strip()
        key, _, val = item.partition("=")
        if key == "bip":
            for part in val.split("+"):
                a, _, b = part.partition("x")
                blocks.append(Block("bipartite", (int(a), int(b))))
        elif key == "cliques":
            sizes, at, where = val.partition("@")
            cuts: tuple[int, ...] = ()
            if at:
                wkey, _, wval = where.partition("=")
                if wkey.strip() != "cut":
                    raise GraphError(f"expected '@cut=', got {where!r}")
                cuts = tuple(int(c) for c in wval.split("+"))
            for s in sizes.split(","):
                attach = cuts if blocks else ()
                blocks.append(Block("clique", (int(s),), attach))
        elif key == "k":
            continue
        else:
            raise GraphError(f"unknown block field {key!r}")
    # with a bipartite block listed first, every later block needs a cut vertex
    for i, b in enumerate(blocks[1:], 1):
        if not b.attach:
            blocks[i] = Block(b.kind, b.sizes, (0,))
    return blocks
