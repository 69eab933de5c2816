import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from s7omega import OmegaMatrix, random_valid_omega

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

WORKED = [[1, 0], [0, 1], [1, 2], [3, 1]]


@pytest.fixture
def worked():
    return OmegaMatrix(WORKED).validate()


def int_matrices(max_rows=4, max_cols=4, bound=9, square=False):
    def build(shape):
        m, n = shape
        row = st.lists(st.integers(-bound, bound), min_size=n, max_size=n)
        return st.lists(row, min_size=m, max_size=m)

    if square:
        shapes = st.integers(1, max_rows).map(lambda n: (n, n))
    else:
        shapes = st.tuples(st.integers(1, max_rows), st.integers(1, max_cols))
    return shapes.flatmap(build)


@st.composite
def valid_omegas(draw, ks=(1, 2, 3), bound=5):
    k = draw(st.sampled_from(ks))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_valid_omega(k, bound, random.Random(seed))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
