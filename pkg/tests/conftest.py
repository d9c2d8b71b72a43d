from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from mha.catalog import build_monoid_bialgebra, build_sweedler_h4, hopf_entries, standard_catalog

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

small_rationals = st.builds(
    Fraction,
    st.integers(min_value=-4, max_value=4),
    st.integers(min_value=1, max_value=3),
)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small_rationals, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


@pytest.fixture(scope="session")
def catalog():
    return standard_catalog()


@pytest.fixture(scope="session")
def h4():
    return build_sweedler_h4()


@pytest.fixture(scope="session")
def monoid():
    return build_monoid_bialgebra()


HOPF_NAMES = [e.name for e in hopf_entries()]
ALL_NAMES = [e.name for e in standard_catalog()]


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
