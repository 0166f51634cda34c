"""Exception types shared across the package."""

from __future__ import annotations


class GraphError(ValueError):
    """Malformed graph input (bad endpoint, self-loop, bad graph6 line)."""


class UnsupportedSizeError(RuntimeError):
    """An exact routine was asked to run beyond its supported size.

    Exact solvers never fall back to heuristics; they refuse instead.
    """

    def __init__(self, what: str, n: int, limit: int):
        super().__init__(f"{what}: n={n} exceeds supported limit {limit}")
        self.what = what
        self.n = n
        self.limit = limit


class HypothesisError(ValueError):
    """Parameters fall outside the range where a checked statement applies."""
