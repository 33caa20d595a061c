from __future__ import annotations

import math

import pytest
from hypothesis import strategies as st

from gtriple._kernel import KERNELS
from gtriple.graph import Triple, graph_from_edges
from gtriple.rng import SplitMix64, random_triple


# filled by the acceptance module, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@pytest.fixture(params=sorted(KERNELS))
def kernel(request):
    return request.param


def mixed_corpus(seed: int, count: int, n_lo: int, n_hi: int) -> list[Triple]:
    """Seeded triples of mixed density, yellow edges included."""
    rng = SplitMix64(seed)
    out = []
    for _ in range(count):
        n = rng.between(n_lo, n_hi)
        full = math.comb(n, 2)
        m1 = rng.between(0, full)
        m2 = rng.between(0, full)
        m3 = rng.between(0, n * n // 2)
        out.append(random_triple(rng, n, m1, m2, m3))
    return out


@st.composite
def triples(draw, min_n: int = 0, max_n: int = 7, yellow: bool = True) -> Triple:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    e1 = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    e2 = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    cells = [(u, w) for u in range(n) for w in range(n)]
    e3 = draw(st.sets(st.sampled_from(cells))) if cells and yellow else set()
    return Triple(graph_from_edges(n, e1), graph_from_edges(n, e2), frozenset(e3))


@st.composite
def permutations(draw, n: int) -> list[int]:
    return draw(st.permutations(list(range(n))))
