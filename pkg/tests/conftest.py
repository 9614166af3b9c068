import random
import sys
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from knotalg.laurent import LaurentPoly
from knotalg.seifert import CATALOG, block_sum, random_seifert_matrix, torus_2_knot

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def laurent_polys(draw, max_terms=5, lo=-4, hi=4, integral=False):
    n = draw(st.integers(0, max_terms))
    coeff = (
        st.integers(-5, 5)
        if integral
        else st.fractions(min_value=-5, max_value=5, max_denominator=6)
    )
    terms = {draw(st.integers(lo, hi)): draw(coeff) for _ in range(n)}
    return LaurentPoly(terms)


@st.composite
def seifert_matrices(draw, max_genus=3):
    genus = draw(st.integers(0, max_genus))
    seed = draw(st.integers(0, 2**31))
    return random_seifert_matrix(genus, random.Random(seed))


def interesting_seifert(rng: random.Random, max_genus: int = 3):
    """Random Seifert matrix, often summed with a torus knot so that the profile has jumps."""
    g = rng.randint(0, max_genus)
    V = random_seifert_matrix(g, rng)
    if g < max_genus and rng.random() < 0.6:
        q = 2 * rng.randint(1, max_genus - g) + 1
        V = block_sum(V, torus_2_knot(q, left=rng.random() < 0.5))
    return V


@pytest.fixture
def lt():
    return CATALOG["left_trefoil"]


@pytest.fixture
def rt():
    return CATALOG["right_trefoil"]


@pytest.fixture
def fig8():
    return CATALOG["figure_eight"]


@pytest.fixture
def unknot():
    return CATALOG["unknot"]


# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_RESULTS: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_RESULTS):
            terminalreporter.write_line(line)
