import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from matorder.exactlin import ExactMatrix
from matorder.orders import OrderError, validate


def small_fraction():
    return st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


def matrices(min_size=1, max_size=5, square=True, elements=None):
    if elements is None:
        elements = st.integers(-9, 9)

    @st.composite
    def build(draw):
        n = draw(st.integers(min_size, max_size))
        m = n if square else draw(st.integers(n, n + 2))
        rows = draw(st.lists(st.lists(elements, min_size=n, max_size=n), min_size=m, max_size=m))
        return ExactMatrix.from_rows(rows)

    return build()


def random_order(rng: random.Random, n: int, rational: bool = True, max_tries: int = 1000):
    """A random validated order matrix on n variables (square or one extra row)."""
    for _ in range(max_tries):
        m = n + rng.choice((0, 0, 1))
        rows = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3) if rational else 1) for _ in range(n)]
                for _ in range(m)]
        try:
            return validate(ExactMatrix.from_rows(rows))
        except OrderError:
            continue
    raise RuntimeError("could not draw a valid order")


@pytest.fixture
def rng():
    return random.Random(20131017)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(RESULTS):
        ok, elapsed, detail = RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name:<40} {elapsed:7.3f}s  {detail}")
