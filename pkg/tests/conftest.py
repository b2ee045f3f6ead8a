import random
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from structalg import Element, LinearMap, Tensor2, catalog
from structalg.catalog import CATALOG

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

ALL_ALGEBRAS = tuple(CATALOG)
ASSOCIATIVE = ("complex", "quaternions", "dual", "split_complex", "mat2")

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=4)


def elements(n):
    return st.tuples(*[rationals] * n).map(Element)


def rand_rat(rng: random.Random, span: int = 3) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def rand_element(rng, n):
    return Element(tuple(rand_rat(rng) for _ in range(n)))


def rand_map(rng, n, m=None):
    m = n if m is None else m
    return LinearMap(n, m, tuple(tuple(rand_rat(rng) for _ in range(m)) for _ in range(n)))


def rand_tensor(rng, n):
    return Tensor2(n, tuple(tuple(rand_rat(rng) for _ in range(n)) for _ in range(n)))


def rand_invertible(rng, n, span=2):
    from structalg.linsolve import rank
    while True:
        P = tuple(tuple(Fraction(rng.randint(-span, span)) for _ in range(n)) for _ in range(n))
        if rank(P) == n:
            return P


@pytest.fixture(params=ALL_ALGEBRAS)
def algebra(request):
    return catalog(request.param)


@pytest.fixture
def rng():
    return random.Random(20240601)


# one PASS/FAIL line per acceptance criterion in the terminal summary; a
# criterion may span several parametrized items and passes only if all pass
# and none exceeds the per-item time budget
ITEM_BUDGET = 2.0
_acceptance_results = {}


def pytest_runtest_logreport(report):
    label = getattr(report, "acceptance", None)
    if label is None:
        return
    if report.when == "call" or report.outcome != "passed":
        _acceptance_results.setdefault(label, []).append((report.outcome, report.duration))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    m = item.get_closest_marker("acceptance")
    if m is not None:
        report.acceptance = m.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    total = 0.0
    for label in sorted(_acceptance_results, key=lambda s: int(s.split()[0].lstrip("AC"))):
        runs = _acceptance_results[label]
        slowest = max(d for _, d in runs)
        total += sum(d for _, d in runs)
        ok = all(o == "passed" for o, _ in runs) and slowest < ITEM_BUDGET
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  "
                                    f"[{len(runs)} items, slowest {slowest:.2f}s]")
    terminalreporter.write_line(f"acceptance total {total:.2f}s")
