from __future__ import annotations

import pytest
from hypothesis import strategies as st

from surfalg import fixtures
from surfalg.weighted import random_weighted_quiver

# criterion number -> (title, passed); filled by test_acceptance
ACCEPTANCE: dict[int, tuple[str, bool]] = {}


def cyclic(seq) -> tuple:
    """Rotate a cyclic sequence so that its smallest entry comes first."""
    seq = tuple(seq)
    i = seq.index(min(seq))
    return seq[i:] + seq[:i]


def cyclic_set(orbits) -> set:
    return {cyclic(o) for o in orbits}


def corpus(n: int = 500, *, with_border: bool = False):
    """Seeded random weighted quivers with 1..6 vertices and weights <= 3."""
    return [
        random_weighted_quiver(1 + seed % 6, seed, max_weight=3, with_border=with_border)
        for seed in range(n)
    ]


@pytest.fixture(scope="session")
def load():
    return fixtures.load


# seeded random weighted quivers, shrinkable by hypothesis
weighted_quivers = st.builds(
    lambda n, seed: random_weighted_quiver(n, seed, max_weight=3),
    st.integers(1, 6),
    st.integers(0, 2**32 - 1),
)

bordered_quivers = st.builds(
    lambda n, seed: random_weighted_quiver(n, seed, max_weight=3, with_border=True),
    st.integers(1, 6),
    st.integers(0, 2**32 - 1),
)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {title}")
