from fractions import Fraction

import pytest
from hypothesis import strategies as st

from agrec import AgpParams, catalog_get


def small_rats(bound=20, nonzero=False):
    nums = st.integers(-bound, bound)
    if nonzero:
        nums = nums.filter(bool)
    return st.builds(Fraction, nums, st.integers(1, bound))


agp_params = st.builds(AgpParams, small_rats(), small_rats(), small_rats(), small_rats())


@pytest.fixture
def fib():
    return catalog_get("fibonacci").params


@pytest.fixture
def balancing():
    return catalog_get("balancing").params


def _bounded(x, bound=20):
    return abs(x.numerator) <= bound and x.denominator <= bound


def stratified_params(count=200, seed=2015, bound=20):
    """Random AgpParams with fixed shares of the special cases.

    Strata: r = 0, r = 1, d = 0, a = 0, zero discriminant (a^2 + 4dr = 0), generic.
    """
    import random

    rng = random.Random(seed)

    def rat():
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    def zero_disc():
        while True:
            a, r = rat(), rat()
            if r == 0:
                continue
            d = -a * a / (4 * r)
            if _bounded(d, bound):
                return AgpParams(a, d, r, rat())

    makers = [
        lambda: AgpParams(rat(), rat(), 0, rat()),
        lambda: AgpParams(rat(), rat(), 1, rat()),
        lambda: AgpParams(rat(), 0, rat(), rat()),
        lambda: AgpParams(0, rat(), rat(), rat()),
        zero_disc,
        lambda: AgpParams(rat(), rat(), rat(), rat()),
    ]
    return [makers[i % len(makers)]() for i in range(count)]


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        title, ok, elapsed, limit = RESULTS[number]
        terminalreporter.write_line(
            f"[{'PASS' if ok else 'FAIL'}] {number:2d}. {title}  ({elapsed:.2f}s, limit {limit:g}s)"
        )
