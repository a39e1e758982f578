from pathlib import Path

import pytest

from survival_complex import VarContext, build_complex, enumerate_survivors, minimalize

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

ACCEPTANCE_LINES = []


def ring_of(names, *gens):
    """Ring from exponent tuples, e.g. ring_of("xy", (3, 0), (0, 3))."""
    ctx = VarContext(tuple(names))
    from survival_complex import Monomial

    return enumerate_survivors(minimalize([Monomial(ctx, g) for g in gens], ctx))


def complex_of(names, *gens):
    return build_complex(ring_of(names, *gens))


@pytest.fixture
def cubes():
    return complex_of("xy", (3, 0), (0, 3))


@pytest.fixture
def split():
    return complex_of(
        "xyzw",
        (3, 0, 0, 0), (0, 3, 0, 0), (0, 0, 2, 0), (0, 0, 0, 4),
        (0, 1, 1, 0), (1, 0, 0, 1), (0, 1, 0, 1), (0, 0, 1, 1),
    )


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
