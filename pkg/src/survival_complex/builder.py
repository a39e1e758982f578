"""Build an ideal from a prescribed set of socle monomials.

Three constructions:

* :func:`build_general` works in any number of variables and guarantees
  the prescribed monomials are truly isolated, but may add extra ones.
* :func:`build_planar` handles two variables and is exact.
* :func:`build_slab` handles three variables when every prescribed
  monomial carries the same positive power of one variable; also exact.

:func:`uniqueness_search` brute-forces all ideals inside an exponent box
that realize a given socle, to check that at most one exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable

from .complex import build_complex
from .errors import CapExceeded, InvariantViolation, SpecViolation
from .monomial import (
    Monomial,
    MonomialIdeal,
    QuotientRing,
    VarContext,
    divides,
    enumerate_survivors,
    minimalize,
    monomial_key,
)
from .socle import socle_generators

DEFAULT_MAX_BOUND = 6
DEFAULT_MAX_SEARCH_NODES = 2_000_000


@dataclass(frozen=True)
class SocleSpec:
    """Nonempty antichain of nonconstant monomials that uses every context variable."""

    context: VarContext
    monomials: tuple[Monomial, ...]

    def __post_init__(self):
        mons = tuple(sorted(set(self.monomials), key=monomial_key))
        object.__setattr__(self, "monomials", mons)
        problems = validate_spec(self.context, mons)
        if problems:
            raise SpecViolation(problems[0])

    @classmethod
    def of(cls, monomials: Iterable[Monomial]) -> SocleSpec:
        """Socle set over just the variables that occur, in their context order."""
        monomials = list(monomials)
        if not monomials:
            raise SpecViolation("a socle spec needs at least one monomial")
        ctx = monomials[0].context
        used = {i for m in monomials for i in m.support}
        sub = VarContext(tuple(n for i, n in enumerate(ctx.names) if i in used)) if used else ctx
        return cls(sub, tuple(m.embed(sub) for m in monomials))


def validate_spec(context: VarContext, monomials: Iterable[Monomial]) -> list[str]:
    """Return a list of violations; empty means the monomials form a valid socle."""
    mons = list(monomials)
    problems = []
    if not mons:
        problems.append("a socle spec needs at least one monomial")
    for m in mons:
        if m.context != context:
            problems.append(f"{m} is not over {list(context.names)}")
            return problems
        if m.is_constant():
            problems.append("the constant monomial cannot be a socle generator")
    for p, q in combinations(mons, 2):
        if divides(p, q):
            problems.append(f"{p} divides {q}")
        elif divides(q, p):
            problems.append(f"{q} divides {p}")
    used = {i for m in mons for i in m.support}
    for i, name in enumerate(context.names):
        if i not in used:
            problems.append(f"variable {name} does not occur in any monomial")
    return problems


def _max_powers(spec):
    n = len(spec.context)
    return [max(m.exponents[i] for m in spec.monomials) for i in range(n)]


def build_general(spec: SocleSpec) -> QuotientRing:
    """Pure powers one past the largest exponent, x_j*q for every q, and x_j*x_s
    for every pair of variables that never occur together."""
    ctx = spec.context
    xs = ctx.variables()
    gens = [x ** (a + 1) for x, a in zip(xs, _max_powers(spec))]
    gens += [x * q for q in spec.monomials for x in xs]
    for i, j in combinations(range(len(xs)), 2):
        if not any(q.exponents[i] and q.exponents[j] for q in spec.monomials):
            gens.append(xs[i] * xs[j])
    return enumerate_survivors(minimalize(gens, ctx))


def _staircase(ctx, pairs, ix, iy):
    """Generators for a two-variable staircase through ``pairs`` = [(a, b), ...].

    Corners are sorted by decreasing y-degree; each consecutive pair
    (a1, b1), (a2, b2) contributes x^(a1+1) * y^(b2+1).
    """
    pairs = sorted(pairs, key=lambda ab: -ab[1])
    for (a1, b1), (a2, b2) in zip(pairs, pairs[1:]):
        if not (b1 > b2 and a1 < a2):
            raise InvariantViolation(f"antichain corners {(a1, b1)}, {(a2, b2)} are not a staircase")

    def mono(a, b):
        e = [0] * len(ctx)
        e[ix] += a
        e[iy] += b
        return Monomial(ctx, tuple(e))

    t = max(a for a, _ in pairs)
    s = max(b for _, b in pairs)
    gens = [mono(t + 1, 0), mono(0, s + 1)]
    for (a1, _), (_, b2) in zip(pairs, pairs[1:]):
        gens.append(mono(a1 + 1, b2 + 1))
    return gens


def build_planar(spec: SocleSpec) -> QuotientRing:
    ctx = spec.context
    if len(ctx) > 2:
        raise SpecViolation(f"planar construction needs at most 2 variables, got {len(ctx)}")
    if len(ctx) == 1:
        (m,) = spec.monomials  # a one-variable antichain has a single member
        return enumerate_survivors(minimalize([ctx.var(0) ** (m.degree + 1)], ctx))
    pairs = [m.exponents for m in spec.monomials]
    return enumerate_survivors(minimalize(_staircase(ctx, pairs, 0, 1), ctx))


@dataclass(frozen=True)
class SlabAxis:
    index: int
    power: int
    eligible: tuple[int, ...]


def slab_axis(spec: SocleSpec) -> SlabAxis:
    """Pick the variable z with X = z^l * Y, l >= 1; first eligible one in context order."""
    ctx = spec.context
    if len(ctx) != 3:
        raise SpecViolation(f"slab construction needs exactly 3 variables, got {len(ctx)}")
    eligible = []
    for k in range(3):
        powers = {m.exponents[k] for m in spec.monomials}
        if len(powers) == 1 and min(powers) >= 1:
            eligible.append(k)
    if not eligible:
        raise SpecViolation("no variable occurs with the same positive power in every monomial")
    k = eligible[0]
    return SlabAxis(k, spec.monomials[0].exponents[k], tuple(eligible))


def build_slab(spec: SocleSpec) -> QuotientRing:
    ctx = spec.context
    axis = slab_axis(spec)
    ix, iy = (i for i in range(3) if i != axis.index)
    pairs = [(m.exponents[ix], m.exponents[iy]) for m in spec.monomials]
    gens = _staircase(ctx, pairs, ix, iy)
    gens.append(ctx.var(axis.index) ** (axis.power + 1))
    return enumerate_survivors(minimalize(gens, ctx))


def realizes_exactly(ring: QuotientRing, spec: SocleSpec) -> bool:
    """Are the truly isolated vertices of the ring's complex exactly the prescribed set?"""
    ctx = ring.context
    want = {m.embed(ctx) for m in spec.monomials}
    return set(socle_generators(build_complex(ring))) == want


def uniqueness_search(
    spec: SocleSpec,
    bound: int,
    max_bound: int = DEFAULT_MAX_BOUND,
    max_nodes: int | None = DEFAULT_MAX_SEARCH_NODES,
) -> list[MonomialIdeal]:
    """All Artinian ideals with minimal generators in the box [0, bound]^n
    whose complex has exactly the prescribed monomials as its truly isolated set.

    Enumerates every antichain of candidate generators (degree >= 2, not
    dividing any prescribed monomial) containing a pure power of each
    variable. Exponential; guarded by ``max_bound`` and ``max_nodes``.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    if bound > max_bound:
        raise CapExceeded("uniqueness search bound", max_bound)
    ctx = spec.context
    n = len(ctx)
    want = {m.exponents for m in spec.monomials}

    def below(a, b):
        return all(p <= q for p, q in zip(a, b))

    cands = [
        e for e in product(range(bound + 1), repeat=n)
        if sum(e) >= 2 and not any(below(e, q) for q in want)
    ]
    cands.sort(key=lambda e: (sum(e), tuple(-v for v in e)))
    # bit k of free_after[i]: candidate k > i is incomparable with candidate i
    free_after = []
    for i, a in enumerate(cands):
        bits = 0
        for k in range(i + 1, len(cands)):
            b = cands[k]
            if not below(a, b) and not below(b, a):
                bits |= 1 << k
        free_after.append(bits)
    pure_var = [
        (nz[0] if len(nz) == 1 else -1)
        for nz in ([i for i, v in enumerate(e) if v] for e in cands)
    ]
    units = [tuple(int(j == i) for j in range(n)) for i in range(n)]

    found: list[MonomialIdeal] = []
    nodes = 0

    def realizes(chosen):
        gens = [cands[k] for k in chosen]

        def dead(e):
            return any(below(g, e) for g in gens)

        alive = set()
        frontier = [(0,) * n]
        while frontier:
            nxt = []
            for e in frontier:
                for u in units:
                    f = tuple(a + b for a, b in zip(e, u))
                    if f not in alive and not dead(f):
                        alive.add(f)
                        nxt.append(f)
            frontier = nxt
        socle = {e for e in alive if all(tuple(a + b for a, b in zip(e, u)) not in alive for u in units)}
        return socle == want

    def visit(allowed, chosen, covered):
        nonlocal nodes
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            raise CapExceeded("uniqueness search nodes", max_nodes)
        if covered == (1 << n) - 1 and realizes(chosen):
            found.append(MonomialIdeal(ctx, tuple(Monomial(ctx, cands[k]) for k in chosen)))
        while allowed:
            k = (allowed & -allowed).bit_length() - 1
            allowed &= allowed - 1
            v = pure_var[k]
            chosen.append(k)
            visit(allowed & free_after[k], chosen, covered | (1 << v) if v >= 0 else covered)
            chosen.pop()

    visit((1 << len(cands)) - 1, [], 0)
    return sorted(found, key=lambda i: [monomial_key(g) for g in i.gens])
