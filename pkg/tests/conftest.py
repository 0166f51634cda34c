from __future__ import annotations

import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from oddstab.graph import Graph, graph_from_edges

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

# acceptance results, printed once at the end of the session
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@st.composite
def graphs(draw, min_n=0, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return graph_from_edges(n, [p for p, keep in zip(pairs, mask) if keep])


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return graph_from_edges(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    )


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    def order(key):
        head = key.split()[0]
        return (int(head), key)

    for key in sorted(ACCEPTANCE, key=order):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key:<9s} {'PASS' if ok else 'FAIL'}  {detail}")
