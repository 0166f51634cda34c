"""Exhaustive checks of the floor/ceiling relations and the f-identities.

Everything is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from .constructions import f_func

MAX_PARTS = 5


def ceil_half(a: int) -> int:
    return -(-a // 2)


def delta(a: int, b: int) -> int:
    """floor((a+b)/2) - floor(a/2) - floor(b/2)."""
    return (a + b) // 2 - a // 2 - b // 2


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    statement: str
    checked_range: str
    cases: int
    counterexample: Optional[tuple[int, ...]] = None

    @property
    def holds(self) -> bool:
        return self.counterexample is None

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "statement": self.statement,
            "range": self.checked_range,
            "cases": self.cases,
            "counterexample": list(self.counterexample) if self.counterexample else None,
            "holds": self.holds,
        }


def _pairwise(name: str, statement: str, bound: int, pred) -> IdentityReport:
    bad = None
    for a in range(bound + 1):
        for b in range(bound + 1):
            if not pred(a, b):
                bad = (a, b)
                break
        if bad:
            break
    return IdentityReport(name, statement, f"0 <= a,b <= {bound}", (bound + 1) ** 2, bad)


def _ceil_of_sum(bound: int) -> IdentityReport:
    """ceil(sum/2) >= ceil(a1/2) + floor(a2/2) + ... + floor(am/2), m <= 5.

    For each part count m and total s, ``best[s]`` is the largest right-hand
    side over all m-tuples with sum s (max-plus recursion over the last part),
    so comparing it with ceil(s/2) covers every tuple.
    """
    best = [ceil_half(s) for s in range(bound + 1)]
    arg: list[tuple[int, ...]] = [(s,) for s in range(bound + 1)]
    cases = bound + 1
    bad = None
    for m in range(1, MAX_PARTS + 1):
        if m > 1:
            nb = [0] * (bound + 1)
            na: list[tuple[int, ...]] = [()] * (bound + 1)
            for s in range(bound + 1):
                top = -1
                for last in range(s + 1):
                    v = best[s - last] + last // 2
                    if v > top:
                        top, na[s] = v, arg[s - last] + (last,)
                nb[s] = top
            best, arg = nb, na
            cases += comb(bound + m, m)
        for s in range(bound + 1):
            if best[s] > ceil_half(s):
                bad = arg[s]
                break
        if bad:
            break
    return IdentityReport(
        "ceil_of_sum",
        "ceil((a1+...+am)/2) >= ceil(a1/2) + floor(a2/2) + ... + floor(am/2)",
        f"1 <= m <= {MAX_PARTS}, a_i >= 0, sum <= {bound}",
        cases,
        bad,
    )


def verify_floor_ceil(bound: int) -> list[IdentityReport]:
    if bound < 1:
        raise ValueError("bound must be >= 1")
    fl = lambda a: a // 2  # noqa: E731
    cl = ceil_half
    return [
        _pairwise(
            "ceil_floor_cross",
            "ceil(a/2)floor(b/2) + floor(a/2)ceil(b/2) = floor(ab/2)",
            bound,
            lambda a, b: cl(a) * fl(b) + fl(a) * cl(b) == a * b // 2,
        ),
        _pairwise(
            "ceil_ceil_plus_floor_floor",
            "ceil(a/2)ceil(b/2) + floor(a/2)floor(b/2) = ceil(ab/2)",
            bound,
            lambda a, b: cl(a) * cl(b) + fl(a) * fl(b) == cl(a * b),
        ),
        _pairwise(
            "floor_half_times",
            "floor(a/2) b <= floor(ab/2)",
            bound,
            lambda a, b: fl(a) * b <= a * b // 2,
        ),
        _pairwise(
            "ceil_half_times",
            "ceil(a/2) b <= ceil(ab/2) + floor(b/2)",
            bound,
            lambda a, b: cl(a) * b <= cl(a * b) + fl(b),
        ),
        _ceil_of_sum(bound),
    ]


def verify_f_identities(bound: int) -> list[IdentityReport]:
    if bound < 1:
        raise ValueError("bound must be >= 1")
    reports = []
    bad = None
    for t in range(bound + 1):
        if f_func(t + 1) != comb((t + 2) // 2, 2) + comb(ceil_half(t + 2), 2):
            bad = (t,)
            break
    reports.append(
        IdentityReport(
            "f_at_t_plus_1",
            "f(t+1) = C(floor((t+2)/2),2) + C(ceil((t+2)/2),2)",
            f"0 <= t <= {bound}",
            bound + 1,
            bad,
        )
    )
    reports.append(
        _pairwise(
            "f_additive",
            "f(a+b) = f(a) + f(b) + ceil(ab/2)",
            bound,
            lambda a, b: f_func(a + b) == f_func(a) + f_func(b) + ceil_half(a * b),
        )
    )
    reports.append(
        _pairwise(
            "delta_parity",
            "delta(a,b) = floor((a+b)/2) - floor(a/2) - floor(b/2) is 1 iff a,b both odd, else 0",
            bound,
            lambda a, b: delta(a, b) == (a & b & 1),
        )
    )
    bad = next(((x,) for x in range(bound) if f_func(x) > f_func(x + 1)), None)
    reports.append(
        IdentityReport("f_nondecreasing", "f(x) <= f(x+1)", f"0 <= x < {bound}", bound, bad)
    )
    return reports


def verify_all(bound: int) -> list[IdentityReport]:
    return verify_floor_ceil(bound) + verify_f_identities(bound)
