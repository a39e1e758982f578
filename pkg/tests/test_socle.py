import random

import pytest

from survival_complex import (
    NotArtinian,
    VarContext,
    build_complex,
    enumerate_survivors,
    is_complete_intersection,
    is_gorenstein,
    is_pure_power,
    minimalize,
    socle_dimension,
    socle_generators,
    socle_report,
)
from survival_complex.monomial import Monomial

import oracles
from conftest import complex_of


def strs(vs):
    return [str(v) for v in vs]


def test_socle_fixtures(cubes, split):
    assert strs(socle_generators(cubes)) == ["x^2*y^2"]
    assert set(strs(socle_generators(split))) == {"x^2*y^2", "x^2*z", "w^3"}
    assert socle_dimension(cubes) == 1
    assert socle_dimension(split) == 3


def test_socle_small_mixed():
    c = complex_of("xy", (2, 0), (1, 1), (0, 3))
    assert strs(socle_generators(c)) == ["x", "y^2"]


def test_general_overshoot_ring_has_four():
    c = complex_of("xy", (4, 0), (0, 5), (3, 1), (2, 3), (1, 4))
    assert socle_dimension(c) == 4


def test_pure_power_flag():
    xy = VarContext(("x", "y"))
    x, y = xy.variables()
    assert is_pure_power(minimalize([x**3, y**3]))
    xyz = VarContext(("x", "y", "z"))
    X, Y, Z = xyz.variables()
    assert not is_pure_power(minimalize([X**3, Y**3, Z**2, Y**2 * Z, X * Z]))
    assert is_pure_power(minimalize([VarContext(("x",)).var(0) ** 2]))


def test_gorenstein_examples(cubes):
    assert is_gorenstein(cubes)
    assert not is_gorenstein(complex_of("xy", (4, 0), (0, 5), (3, 1), (1, 3)))
    assert is_gorenstein(complex_of("x", (2,)))


def test_complete_intersection():
    xy = VarContext(("x", "y"))
    x, y = xy.variables()
    assert is_complete_intersection(minimalize([x**3, y**3]))
    assert not is_complete_intersection(minimalize([x**2, y**2, x * y]))
    xyz = VarContext(("x", "y", "z"))
    X, Y, Z = xyz.variables()
    assert not is_complete_intersection(minimalize([X**3, Y**3, Z**2, Y**2 * Z, X * Z]))
    with pytest.raises(NotArtinian):
        is_complete_intersection(minimalize([X**2, Y**2], xyz))


def test_report_consistency_random():
    rng = random.Random(21)
    for _ in range(200):
        n, gens = oracles.random_ideal(rng)
        ctx = VarContext(("x", "y", "z")[:n])
        c = build_complex(enumerate_survivors(minimalize([Monomial(ctx, g) for g in gens], ctx)))
        rep = socle_report(c)
        assert {g.exponents for g in rep.generators} == oracles.socle(gens, n)
        assert rep.dimension == len(rep.generators) >= 1
        assert rep.is_gorenstein == (rep.dimension == 1)
        assert rep.is_gorenstein == rep.is_pure_power == rep.is_complete_intersection
