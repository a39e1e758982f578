import random
from itertools import product

import pytest
from hypothesis import given, strategies as st

from survival_complex import (
    ContextMismatch,
    InvalidGenerator,
    Monomial,
    NotArtinian,
    VarContext,
    contains,
    divides,
    enumerate_survivors,
    ideal_equals,
    is_artinian,
    minimalize,
    multiply,
)
from survival_complex.errors import CapExceeded

import oracles

XY = VarContext(("x", "y"))
XYZ = VarContext(("x", "y", "z"))
x, y = XY.variables()


def m(ctx, *e):
    return Monomial(ctx, e)


def test_context_validation():
    with pytest.raises(ValueError):
        VarContext(("x", "x"))
    with pytest.raises(ValueError):
        VarContext(())
    with pytest.raises(ValueError):
        VarContext(("2x",))
    with pytest.raises(ValueError):
        Monomial(XY, (1, -1))


def test_divides_examples():
    assert divides(x * y**2, x**2 * y**2)
    assert not divides(x**3, x**2 * y**2)
    assert all(divides(XY.one(), mono) for mono in [x, y, x**4 * y])


def test_multiply_examples():
    assert x * (x * y) == x**2 * y
    assert XY.one() * (x * y) == x * y
    assert (x**2 * y) * (x * y**2) == x**3 * y**3


def test_context_mismatch():
    with pytest.raises(ContextMismatch):
        divides(x, XYZ.var("x"))
    with pytest.raises(ContextMismatch):
        multiply(x, XYZ.var("x"))


def test_str_form():
    assert str(x**2 * y) == "x^2*y"
    assert str(XY.one()) == "1"
    assert str(m(XYZ, 1, 0, 3)) == "x*z^3"


def test_minimalize_drops_redundant_generators():
    X, Y, Z = XYZ.variables()
    walk = [X**3, Y**3, Z**2, X**3 * Y**2, X**2 * Y**3, X * Y * Z, Y**2 * Z, Y * Z**2, X * Z]
    assert set(minimalize(walk).gens) == {X**3, Y**3, Z**2, Y**2 * Z, X * Z}


def test_minimalize_small():
    assert minimalize([x**2]).gens == (x**2,)
    assert minimalize([x**2, x**3, x**2 * y]).gens == (x**2,)


def test_minimalize_rejects_low_degree():
    with pytest.raises(InvalidGenerator):
        minimalize([x, y**2])
    with pytest.raises(InvalidGenerator):
        minimalize([XY.one()])


def test_contains_examples():
    cubes = minimalize([x**3, y**3])
    assert contains(cubes, x**2 * y**5)
    assert not contains(cubes, x**2 * y**2)
    assert not contains(cubes, XY.one())
    X, Y, Z = XYZ.variables()
    ex4 = minimalize([X**3, Y**3, Z**2, Y**2 * Z, X * Z])
    assert contains(ex4, X * Y * Z)


def test_is_artinian():
    assert is_artinian(minimalize([x**3, y**3]))
    X, Y, _ = XYZ.variables()
    assert not is_artinian(minimalize([X**3, Y**3], XYZ))
    assert is_artinian(minimalize([x**2, x * y, y**3]))
    with pytest.raises(NotArtinian):
        enumerate_survivors(minimalize([X**3, Y**3], XYZ))


def test_enumerate_examples():
    ring = enumerate_survivors(minimalize([x**3, y**3]))
    assert [str(v) for v in ring.survivors] == ["x", "y", "x^2", "x*y", "y^2", "x^2*y", "x*y^2", "x^2*y^2"]
    X1 = VarContext(("x",))
    assert enumerate_survivors(minimalize([X1.var(0) ** 2])).survivors == (X1.var(0),)
    sq = enumerate_survivors(minimalize([v**2 for v in XYZ.variables()]))
    assert {v.exponents for v in sq.survivors} == {e for e in product((0, 1), repeat=3) if any(e)}


def test_enumerate_cap():
    with pytest.raises(CapExceeded):
        enumerate_survivors(minimalize([x**10, y**10]), max_vertices=50)


def test_ideal_equals():
    assert ideal_equals(minimalize([x**3, y**3]), minimalize([y**3, x**3]))
    assert not ideal_equals(minimalize([x**3, y**3]), minimalize([x**3, y**4]))
    assert ideal_equals(minimalize([x**2, x**3]), minimalize([x**2]))


def test_canonical_generator_order():
    ideal = minimalize([x * y**3, x**3 * y, y**5, x**4])
    assert [str(g) for g in ideal.gens] == ["x^4", "y^5", "x^3*y", "x*y^3"]


def test_divides_is_partial_order():
    mons = [Monomial(XYZ, e) for e in product(range(5), repeat=3) if sum(e) <= 4]
    for a in mons:
        assert divides(a, a)
        for b in mons:
            if divides(a, b) and divides(b, a):
                assert a == b
    rng = random.Random(3)
    for _ in range(3000):
        a, b, c = rng.sample(mons, 3)
        if divides(a, b) and divides(b, c):
            assert divides(a, c)


exps = st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))
gen_exps = exps.filter(lambda e: sum(e) >= 2)


@given(st.lists(gen_exps, min_size=1, max_size=6), exps, exps)
def test_contains_monotone(gens, a, b):
    ideal = minimalize([Monomial(XYZ, g) for g in gens], XYZ)
    ma, mb = Monomial(XYZ, a), Monomial(XYZ, b)
    if contains(ideal, ma):
        assert contains(ideal, ma * mb)


def test_minimalize_preserves_membership():
    rng = random.Random(11)
    box = [Monomial(XYZ, e) for e in product(range(6), repeat=3)]
    for _ in range(500):
        raw = []
        for _ in range(rng.randint(1, 6)):
            e = tuple(rng.randint(0, 4) for _ in range(3))
            if sum(e) >= 2:
                raw.append(e)
        if not raw:
            continue
        ideal = minimalize([Monomial(XYZ, g) for g in raw], XYZ)
        assert minimalize(ideal.gens, XYZ) == ideal
        for mono in box:
            assert contains(ideal, mono) == oracles.in_ideal(raw, mono.exponents)


def test_survivors_match_box_oracle():
    rng = random.Random(5)
    for _ in range(200):
        n, gens = oracles.random_ideal(rng)
        ctx = VarContext(("x", "y", "z")[:n])
        ring = enumerate_survivors(minimalize([Monomial(ctx, g) for g in gens], ctx))
        assert {v.exponents for v in ring.survivors} == oracles.survivors(gens, n)


def test_containment_monotonicity():
    rng = random.Random(7)
    for _ in range(100):
        n, gens = oracles.random_ideal(rng)
        ctx = VarContext(("x", "y", "z")[:n])
        small = minimalize([Monomial(ctx, g) for g in gens], ctx)
        extra = tuple(rng.randint(0, 3) for _ in range(n))
        if sum(extra) < 2:
            continue
        big = minimalize(list(small.gens) + [Monomial(ctx, extra)], ctx)
        s_small = set(enumerate_survivors(small).survivors)
        s_big = set(enumerate_survivors(big).survivors)
        assert s_big <= s_small
        if not ideal_equals(small, big):
            assert s_big < s_small
