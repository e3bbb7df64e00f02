from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from jjrb.linalg import Matrix

settings.register_profile("jjrb", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("jjrb")

rationals = st.builds(Fraction, st.integers(-4, 4), st.integers(1, 3))
small_ints = st.integers(-3, 3).map(Fraction)


def matrices(rows, cols, elements=rationals):
    return st.lists(st.lists(elements, min_size=cols, max_size=cols),
                    min_size=rows, max_size=rows).map(lambda d: Matrix(d, cols=cols))


@st.composite
def any_matrix(draw, max_dim=5):
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(1, max_dim))
    return draw(matrices(r, c, small_ints))


def vectors(n, elements=rationals):
    return st.lists(elements, min_size=n, max_size=n).map(tuple)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.SUMMARY:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
