"""Filtered enumeration, extremal numbers, statement checks and the family explorer.

Everything here sits on top of :mod:`oddstab.enumeration`; graphs come out as
canonical representatives sorted by their graph6 string, so results do not
depend on how the work was split across processes.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Optional, Sequence

from . import graph6
from .bipartization import (
    MAX_D2_N,
    MAX_MAXCUT_N,
    d2,
    d2_oracle,
    gamma2,
    gamma2_oracle,
)
from .canon import canonical_form
from .constructions import (
    Block,
    block_graph,
    cycle_blowup,
    edge_bound,
    f_func,
    h0,
    h0_edges,
    h_graph,
    turan,
)
from .cycles import (
    circumference,
    cycle_vertex_sets,
    girth,
    has_cycle_of_length,
    is_weakly_pancyclic,
    longest_path_length,
    odd_girth,
)
from .enumeration import generate
from .errors import GraphError, HypothesisError, UnsupportedSizeError
from .graph import Graph, is_bipartite, is_connected, iter_bits
from .identities import verify_all

MAX_ENUM_N = 10
MAX_ENUM_SLOW_N = 11
MAX_EXPLORE_N = 10

THEOREMS = ("T1.1", "T1.2", "T1.5", "T1.6", "H-witness", "identities", "solvers", "F2.1", "F2.3")

# descriptive aliases accepted alongside the short ids
ALIASES = {
    "odd-cycle-turan": "T1.1",
    "triangle-free-non-bipartite": "T1.2",
    "weak-pancyclicity": "T1.5",
    "erdos-gallai": "T1.6",
    "extremal-witness": "H-witness",
    "solver-oracles": "solvers",
    "shortest-odd-cycle-neighbours": "F2.1",
    "long-odd-cycle-neighbours": "F2.3",
}


# -- filters and enumeration --------------------------------------------------


@dataclass(frozen=True)
class GraphFilter:
    """Constraints on emitted graphs.

    Forbidden cycle lengths and ``min_degree`` are enforced during generation
    (the former is hereditary, the latter prunes by a lookahead bound); the
    rest are checked on each finished graph.
    """

    forbidden_cycles: frozenset[int] = frozenset()
    triangle_free: bool = False
    non_bipartite: bool = False
    min_d2: Optional[int] = None
    min_gamma2: Optional[int] = None
    connected: bool = False
    min_degree: int = 0

    def __post_init__(self):
        object.__setattr__(self, "forbidden_cycles", frozenset(self.forbidden_cycles))
        bad = [L for L in self.forbidden_cycles if L < 3]
        if bad:
            raise GraphError(f"forbidden cycle lengths must be >= 3, got {sorted(bad)}")

    @property
    def cycles(self) -> frozenset[int]:
        return self.forbidden_cycles | ({3} if self.triangle_free else set())

    def accepts_generated(self, g: Graph) -> bool:
        """Emission-time checks for a graph that already passed generation."""
        if g.n and g.min_degree() < self.min_degree:
            return False
        if self.connected and not is_connected(g):
            return False
        if self.non_bipartite and is_bipartite(g) is not None:
            return False
        if self.min_d2 is not None and d2(g)[0] < self.min_d2:
            return False
        if self.min_gamma2 is not None and gamma2(g)[0] < self.min_gamma2:
            return False
        return True

    def accepts(self, g: Graph) -> bool:
        if any(L <= g.n and has_cycle_of_length(g, L) for L in self.cycles):
            return False
        return self.accepts_generated(g)

    def to_dict(self) -> dict:
        return {
            "forbidden_cycles": sorted(self.cycles),
            "non_bipartite": self.non_bipartite,
            "min_d2": self.min_d2,
            "min_gamma2": self.min_gamma2,
            "connected": self.connected,
            "min_degree": self.min_degree,
        }


NO_FILTER = GraphFilter()


def _check_enum_size(n: int, allow_slow: bool) -> None:
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    limit = MAX_ENUM_SLOW_N if allow_slow else MAX_ENUM_N
    if n > limit:
        raise UnsupportedSizeError("enumerate_graphs", n, limit)


def enumerate_graphs(
    n: int,
    filt: GraphFilter = NO_FILTER,
    threads: Optional[int] = None,
    allow_slow: bool = False,
) -> Iterator[Graph]:
    """One canonical representative per isomorphism class passing ``filt``,
    in increasing order of canonical graph6."""
    _check_enum_size(n, allow_slow)
    raw = generate(n, filt.cycles, filt.min_degree, threads)
    coded = sorted(graph6.encode(Graph(n, rows)) for rows in raw)
    for text in coded:
        g = graph6.decode(text)
        if filt.accepts_generated(g):
            yield g


# -- extremal numbers ---------------------------------------------------------


@dataclass(frozen=True)
class ExtremalRecord:
    n: int
    filter: GraphFilter
    max_edges: Optional[int]
    witness_canonical_forms: tuple[str, ...]
    witness_count: int
    graphs_examined: int

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "filter": self.filter.to_dict(),
            "max_edges": self.max_edges,
            "witness_count": self.witness_count,
            "witnesses": list(self.witness_canonical_forms),
            "graphs_examined": self.graphs_examined,
        }


def extremal_search(
    n: int,
    filt: GraphFilter = NO_FILTER,
    threads: Optional[int] = None,
    allow_slow: bool = False,
) -> ExtremalRecord:
    """Largest edge count in the filtered class, with every extremal graph.

    ``max_edges`` is None when the class is empty.  ``graphs_examined`` counts
    the members of the class.
    """
    best = -1
    wits: list[str] = []
    seen = 0
    for g in enumerate_graphs(n, filt, threads, allow_slow):
        seen += 1
        e = g.e
        if e > best:
            best, wits = e, [graph6.encode(g)]
        elif e == best:
            wits.append(graph6.encode(g))
    return ExtremalRecord(n, filt, best if best >= 0 else None, tuple(wits), len(wits), seen)


# -- statement checks ---------------------------------------------------------


@dataclass(frozen=True)
class PointResult:
    """Outcome at one parameter point."""

    params: dict
    passed: bool
    expected: object = None
    observed: object = None
    checked: int = 0
    counterexample: Optional[str] = None
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "params": dict(self.params),
            "passed": self.passed,
            "expected": self.expected,
            "observed": self.observed,
            "checked": self.checked,
            "counterexample": self.counterexample,
            "detail": dict(self.detail),
        }


@dataclass(frozen=True)
class VerificationReport:
    theorem: str
    statement: str
    params: dict
    points: tuple[PointResult, ...]

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.points)

    @property
    def counterexamples(self) -> list[str]:
        return [p.counterexample for p in self.points if p.counterexample]

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "statement": self.statement,
            "params": dict(self.params),
            "points": [p.to_dict() for p in self.points],
            "passed": self.passed,
            "failures": sum(not p.passed for p in self.points),
        }


def _need(value, name: str, theorem: str):
    if value is None:
        raise HypothesisError(f"{theorem} needs --{name}")
    return value


def _check_t11(ns, k, threads, allow_slow):
    k = _need(k, "k", "T1.1")
    if k < 2:
        raise HypothesisError(f"T1.1 needs k >= 2, got k={k}")
    low = [n for n in ns if n < 4 * k - 2]
    if low:
        raise HypothesisError(f"T1.1 needs n >= 4k-2 = {4 * k - 2}; got n={low[0]}")
    points = []
    for n in ns:
        _check_enum_size(n, allow_slow)
        rec = extremal_search(n, GraphFilter(frozenset({2 * k + 1})), threads, allow_slow)
        want = n * n // 4
        bip = graph6.encode(canonical_form(turan(n, 2)).graph())
        has_t2 = bip in rec.witness_canonical_forms
        ok = rec.max_edges == want and has_t2
        bad = None
        if not ok and rec.max_edges is not None and rec.max_edges > want:
            bad = rec.witness_canonical_forms[0]
        points.append(
            PointResult(
                {"n": n, "k": k},
                ok,
                want,
                rec.max_edges,
                rec.graphs_examined,
                bad,
                {"witness_count": rec.witness_count, "turan_graph_is_witness": has_t2},
            )
        )
    return f"ex(n, C_{{2k+1}}) = floor(n^2/4) for n >= 4k-2", {"k": k}, points


def _check_t12(ns, threads, allow_slow):
    low = [n for n in ns if n < 5]
    if low:
        raise HypothesisError(f"T1.2 needs n >= 5; got n={low[0]}")
    points = []
    for n in ns:
        _check_enum_size(n, allow_slow)
        rec = extremal_search(n, GraphFilter(triangle_free=True, non_bipartite=True), threads, allow_slow)
        want = (n - 1) ** 2 // 4 + 1
        h0_code = graph6.encode(canonical_form(h0(n)).graph())
        attained = h0_edges(n) == want and h0_code in rec.witness_canonical_forms
        ok = rec.max_edges == want and attained
        bad = None
        if rec.max_edges is not None and rec.max_edges > want:
            bad = rec.witness_canonical_forms[0]
        points.append(
            PointResult(
                {"n": n},
                ok,
                want,
                rec.max_edges,
                rec.graphs_examined,
                bad,
                {"witness_count": rec.witness_count, "h0_is_witness": attained},
            )
        )
    return "non-bipartite triangle-free graphs have at most floor((n-1)^2/4)+1 edges", {}, points


def _check_t15(ns, threads, allow_slow):
    points = []
    for n in ns:
        if n < 1:
            raise HypothesisError(f"T1.5 needs n >= 1; got n={n}")
        _check_enum_size(n, allow_slow)
        md = -(-(n + 2) // 3)
        filt = GraphFilter(non_bipartite=True, min_degree=md)
        seen = 0
        bad = None
        for g in enumerate_graphs(n, filt, threads, allow_slow):
            seen += 1
            if not (is_weakly_pancyclic(g) and girth(g) in (3, 4)):
                bad = graph6.encode(g)
                break
        points.append(PointResult({"n": n, "min_degree": md}, bad is None, None, None, seen, bad))
    return "non-bipartite with 3*delta >= n+2 implies weakly pancyclic with girth 3 or 4", {}, points


def _check_t16(ns, variant, threads, allow_slow):
    if variant not in ("path", "cycle", "both"):
        raise HypothesisError(f"unknown T1.6 variant {variant!r}")
    points = []
    for n in ns:
        _check_enum_size(n, allow_slow)
        seen = 0
        bad = None
        why = None
        for g in enumerate_graphs(n, NO_FILTER, threads, allow_slow):
            seen += 1
            e2 = 2 * g.e
            if variant in ("path", "both"):
                # P_{l+1}-free for every l > longest path; the smallest such l is tightest
                lp = longest_path_length(g)
                if e2 > lp * n:
                    bad, why = graph6.encode(g), {"variant": "path", "l": lp + 1}
                    break
            if variant in ("cycle", "both"):
                c = circumference(g) or 0
                ell = max(c, 2)
                if e2 > ell * (n - 1):
                    bad, why = graph6.encode(g), {"variant": "cycle", "l": ell}
                    break
        points.append(PointResult({"n": n, "variant": variant}, bad is None, None, None, seen, bad, why or {}))
    statement = "longest path < l implies 2e <= (l-1)n; circumference <= l (l >= 2) implies 2e <= l(n-1)"
    return statement, {"variant": variant}, points


def _check_h_witness(ns, k, t):
    k = _need(k, "k", "H-witness")
    if k < 2:
        raise HypothesisError(f"H-witness needs k >= 2, got k={k}")
    ts = [t] if t is not None else list(range(1, 2 * k - 1))
    for tt in ts:
        if not 1 <= tt <= 2 * k - 2:
            raise HypothesisError(f"H-witness needs 1 <= t <= 2k-2 = {2 * k - 2}, got t={tt}")
    if t is not None:
        low = [n for n in ns if n < t + 3]
        if low:
            raise HypothesisError(f"h_graph needs n >= t+3 = {t + 3}; got n={low[0]}")
    points = []
    for tt in ts:
        for n in ns:
            if n < tt + 3:
                continue
            g = h_graph(n, tt)
            want = {
                "edges": edge_bound(n, tt),
                "cycle_free": True,
                "d2": tt if n <= MAX_D2_N else None,
                "gamma2": f_func(tt + 1) if n <= MAX_MAXCUT_N else None,
            }
            got = {
                "edges": g.e,
                "cycle_free": has_cycle_of_length(g, 2 * k + 1) is None,
                "d2": d2(g)[0] if n <= MAX_D2_N else None,
                "gamma2": gamma2(g)[0] if n <= MAX_MAXCUT_N else None,
            }
            ok = got == want
            points.append(
                PointResult({"n": n, "k": k, "t": tt}, ok, want, got, 1, None if ok else graph6.encode(g))
            )
    return "h_graph(n,t) has edge_bound(n,t) edges, no C_{2k+1}, d2 = t, gamma2 = f(t+1)", {"k": k}, points


def _check_identities(bound):
    bound = bound if bound is not None else 200
    points = []
    for rep in verify_all(bound):
        points.append(
            PointResult(
                {"identity": rep.identity},
                rep.holds,
                None,
                list(rep.counterexample) if rep.counterexample else None,
                rep.cases,
                None,
                {"statement": rep.statement, "range": rep.checked_range},
            )
        )
    return "floor/ceiling relations and f-identities", {"max": bound}, points


def _check_solvers(ns, threads, allow_slow):
    points = []
    for n in ns:
        _check_enum_size(n, allow_slow)
        seen = 0
        bad = None
        for g in enumerate_graphs(n, NO_FILTER, threads, allow_slow):
            seen += 1
            if d2(g)[0] != d2_oracle(g) or gamma2(g)[0] != gamma2_oracle(g):
                bad = graph6.encode(g)
                break
        points.append(PointResult({"n": n}, bad is None, None, None, seen, bad))
    return "d2 and gamma2 agree with brute-force oracles", {}, points


def _check_f21(ns, threads, allow_slow):
    points = []
    for n in ns:
        _check_enum_size(n, allow_slow)
        # odd girth >= 5 forces triangle-freeness, so nothing else can matter
        seen = cycles_checked = 0
        bad = None
        for g in enumerate_graphs(n, GraphFilter(triangle_free=True), threads, allow_slow):
            seen += 1
            og = odd_girth(g)
            if og is None:
                continue
            length = og[0]
            for mask, size in cycle_vertex_sets(g).items():
                if size != length:
                    continue
                cycles_checked += 1
                if any((g.rows[v] & mask).bit_count() > 2 for v in iter_bits(g.vertex_mask & ~mask)):
                    bad = graph6.encode(g)
                    break
            if bad:
                break
        points.append(
            PointResult({"n": n}, bad is None, None, None, seen, bad, {"cycles_checked": cycles_checked})
        )
    return "off-cycle vertices meet a shortest odd cycle of length >= 5 at most twice", {}, points


def _check_f23(ns, k, threads, allow_slow):
    k = _need(k, "k", "F2.3")
    if k < 1:
        raise HypothesisError(f"F2.3 needs k >= 1, got k={k}")
    points = []
    for n in ns:
        _check_enum_size(n, allow_slow)
        seen = cycles_checked = 0
        bad = None
        for g in enumerate_graphs(n, GraphFilter(frozenset({2 * k + 1})), threads, allow_slow):
            seen += 1
            for mask, size in cycle_vertex_sets(g).items():
                ell = size // 2
                if size % 2 == 0 or ell < k + 1:
                    continue
                cycles_checked += 1
                if any((g.rows[v] & mask).bit_count() > ell for v in iter_bits(g.vertex_mask & ~mask)):
                    bad = graph6.encode(g)
                    break
            if bad:
                break
        points.append(
            PointResult({"n": n, "k": k}, bad is None, None, None, seen, bad, {"cycles_checked": cycles_checked})
        )
    return "in a C_{2k+1}-free graph, off-cycle vertices meet an odd (2l+1)-cycle, l >= k+1, at most l times", {"k": k}, points


def canonical_theorem_id(name: str) -> str:
    tid = ALIASES.get(name, name)
    if tid in ("T1.6-path", "T1.6-cycle"):
        return "T1.6"
    if tid not in THEOREMS:
        raise HypothesisError(f"unknown statement id {name!r}; choose from {', '.join(THEOREMS)}")
    return tid


def verify_theorem(
    theorem: str,
    n_values: Sequence[int] = (),
    k: Optional[int] = None,
    t: Optional[int] = None,
    bound: Optional[int] = None,
    variant: Optional[str] = None,
    threads: Optional[int] = None,
    allow_slow: bool = False,
) -> VerificationReport:
    """Check one statement at every point of ``n_values`` (and ``k``/``t``).

    Raises HypothesisError when a parameter lies outside the statement's
    range and UnsupportedSizeError when it exceeds enumeration or solver
    limits; neither is a failed check.
    """
    tid = canonical_theorem_id(theorem)
    if theorem in ("T1.6-path", "T1.6-cycle") and variant is None:
        variant = theorem.split("-")[1]
    ns = sorted(set(n_values))
    if tid != "identities" and not ns:
        raise HypothesisError(f"{tid} needs an --n range")
    if tid == "T1.1":
        statement, params, points = _check_t11(ns, k, threads, allow_slow)
    elif tid == "T1.2":
        statement, params, points = _check_t12(ns, threads, allow_slow)
    elif tid == "T1.5":
        statement, params, points = _check_t15(ns, threads, allow_slow)
    elif tid == "T1.6":
        statement, params, points = _check_t16(ns, variant or "both", threads, allow_slow)
    elif tid == "H-witness":
        statement, params, points = _check_h_witness(ns, k, t)
    elif tid == "identities":
        statement, params, points = _check_identities(bound)
    elif tid == "solvers":
        statement, params, points = _check_solvers(ns, threads, allow_slow)
    elif tid == "F2.1":
        statement, params, points = _check_f21(ns, threads, allow_slow)
    else:
        statement, params, points = _check_f23(ns, k if k is not None else 2, threads, allow_slow)
    if ns:
        params = {**params, "n": ns}
    return VerificationReport(tid, statement, params, tuple(points))


# -- family explorer ----------------------------------------------------------


@dataclass(frozen=True)
class FamilyMember:
    family: str
    spec: str
    e: int
    gamma2: int

    def to_dict(self) -> dict:
        return {"family": self.family, "spec": self.spec, "e": self.e, "gamma2": self.gamma2}


def _dihedral_min(parts: tuple[int, ...]) -> tuple[int, ...]:
    L = len(parts)
    forms = []
    for seq in (parts, parts[::-1]):
        for i in range(L):
            forms.append(seq[i:] + seq[:i])
    return min(forms)


def _compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        if n >= 1:
            yield (n,)
        return
    for first in range(1, n - parts + 2):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


def blowup_family(n: int, k: int) -> list[FamilyMember]:
    """Blowups of C_{2k+3} on n vertices, one per composition up to rotation and reflection."""
    L = 2 * k + 3
    seen = set()
    out = []
    for comp in _compositions(n, L):
        key = _dihedral_min(comp)
        if key in seen:
            continue
        seen.add(key)
        g = cycle_blowup(L, key)
        spec = f"blowup:L={L},sizes={','.join(map(str, key))}"
        out.append(FamilyMember("B", spec, g.e, gamma2(g)[0]))
    return out


def block_family(n: int, k: int) -> list[FamilyMember]:
    """One complete bipartite block K_{a,b} with cliques of order 3..2k all
    hanging off vertex 0 of the a-side."""
    out = []
    sizes = list(range(3, 2 * k + 1))
    for a in range(1, n + 1):
        for b in range(1, n - a + 1):
            extra = n - a - b
            for count in range(extra // 2 + 1):
                for cl in combinations_with_replacement(sizes, count):
                    if sum(s - 1 for s in cl) != extra:
                        continue
                    blocks = [Block("bipartite", (a, b))]
                    blocks += [Block("clique", (s,), (0,)) for s in cl]
                    g = block_graph(blocks, k)
                    spec = f"blocks:bip={a}x{b}"
                    if cl:
                        spec += f";cliques={','.join(map(str, cl))}@cut=0"
                    out.append(FamilyMember("G", spec, g.e, gamma2(g)[0]))
    return out


def pareto_frontier(members: Iterable[FamilyMember]) -> list[FamilyMember]:
    """Members whose (e, gamma2) no other member beats in both coordinates,
    one per distinct pair (first spec in sorted order)."""
    best: dict[tuple[int, int], FamilyMember] = {}
    for m in members:
        key = (m.e, m.gamma2)
        if key not in best or m.spec < best[key].spec:
            best[key] = m
    pairs = sorted(best, reverse=True)
    front = []
    top_gamma = -1
    for e, gm in pairs:
        if gm > top_gamma:
            front.append(best[(e, gm)])
            top_gamma = gm
    return sorted(front, key=lambda m: (m.e, m.gamma2))


def _dominated(e: int, gm: int, front: Sequence[FamilyMember]) -> bool:
    return any(m.e >= e and m.gamma2 >= gm for m in front)


@dataclass(frozen=True)
class ExplorationReport:
    """Observed (e, gamma2) profile of C_{2k+1}-free graphs against the two
    conjectured extremal families.  Evidence only; nothing is asserted."""

    n: int
    k: int
    graphs_examined: int
    observed: tuple[tuple[int, int, int, str], ...]  # (e, gamma2, count, example)
    frontiers: dict
    undominated: dict
    family_sizes: dict

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "graphs_examined": self.graphs_examined,
            "observed": [
                {"e": e, "gamma2": gm, "count": c, "example": ex} for e, gm, c, ex in self.observed
            ],
            "family_sizes": dict(self.family_sizes),
            "frontiers": {key: [m.to_dict() for m in ms] for key, ms in self.frontiers.items()},
            "undominated": {
                key: [{"e": e, "gamma2": gm, "count": c, "example": ex} for e, gm, c, ex in rows]
                for key, rows in self.undominated.items()
            },
        }


def conjecture_explore(n: int, k: int, threads: Optional[int] = None) -> ExplorationReport:
    if k < 2:
        raise HypothesisError(f"explorer needs k >= 2, got k={k}")
    if n > MAX_EXPLORE_N:
        raise UnsupportedSizeError("conjecture_explore", n, MAX_EXPLORE_N)
    if n < 1:
        raise HypothesisError(f"explorer needs n >= 1, got n={n}")
    counts: Counter = Counter()
    example: dict[tuple[int, int], str] = {}
    seen = 0
    for g in enumerate_graphs(n, GraphFilter(frozenset({2 * k + 1})), threads):
        seen += 1
        key = (g.e, gamma2(g)[0])
        counts[key] += 1
        example.setdefault(key, graph6.encode(g))
    observed = tuple((e, gm, counts[(e, gm)], example[(e, gm)]) for e, gm in sorted(counts))
    fam_b = blowup_family(n, k)
    fam_g = block_family(n, k)
    frontiers = {
        "B": pareto_frontier(fam_b),
        "G": pareto_frontier(fam_g),
        "union": pareto_frontier(fam_b + fam_g),
    }
    undominated = {
        key: tuple(row for row in observed if not _dominated(row[0], row[1], frontiers[key]))
        for key in ("B", "union")
    }
    sizes = {"B": len(fam_b), "G": len(fam_g)}
    return ExplorationReport(n, k, seen, observed, frontiers, undominated, sizes)
