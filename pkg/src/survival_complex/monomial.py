"""Monomials, monomial ideals and Artinian monomial quotient rings.

Everything here is immutable. A :class:`Monomial` is an exponent vector
tied to a :class:`VarContext`; a :class:`MonomialIdeal` keeps only its
minimal generators; a :class:`QuotientRing` adds the finite set of
nonconstant monomials that survive modulo the ideal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import CapExceeded, ContextMismatch, InvalidGenerator, NotArtinian

DEFAULT_MAX_VERTICES = 200_000

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class VarContext:
    """Ordered list of distinct variable names.

    The order fixes exponent-vector positions and every canonical ordering
    derived from them.
    """

    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValueError("a variable context needs at least one variable")
        for name in names:
            if not isinstance(name, str) or not _IDENT.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            dup = next(n for n in names if names.count(n) > 1)
            raise ValueError(f"duplicate variable {dup!r}")

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def one(self) -> Monomial:
        return Monomial(self, (0,) * len(self.names))

    def var(self, i: int | str) -> Monomial:
        if isinstance(i, str):
            i = self.index(i)
        exps = [0] * len(self.names)
        exps[i] = 1
        return Monomial(self, tuple(exps))

    def variables(self) -> tuple[Monomial, ...]:
        return tuple(self.var(i) for i in range(len(self.names)))

    def monomial(self, powers: dict[str, int] | None = None, **kw: int) -> Monomial:
        """Build a monomial from ``{name: exponent}``, e.g. ``ctx.monomial(x=2, y=1)``."""
        exps = [0] * len(self.names)
        for name, e in {**(powers or {}), **kw}.items():
            exps[self.index(name)] += e
        return Monomial(self, tuple(exps))

    def restrict(self, names: Iterable[str]) -> VarContext:
        """Sub-context on ``names``, keeping this context's relative order."""
        wanted = set(names)
        for n in wanted:
            self.index(n)
        return VarContext(tuple(n for n in self.names if n in wanted))


@dataclass(frozen=True)
class Monomial:
    context: VarContext
    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(self.exponents)
        object.__setattr__(self, "exponents", exps)
        if len(exps) != len(self.context):
            raise ValueError(
                f"exponent vector of length {len(exps)} for {len(self.context)} variables"
            )
        for e in exps:
            if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                raise ValueError(f"exponents must be nonnegative integers, got {e!r}")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> tuple[int, ...]:
        """Indices of the variables that occur."""
        return tuple(i for i, e in enumerate(self.exponents) if e)

    def is_constant(self) -> bool:
        return not any(self.exponents)

    def is_pure_power(self) -> bool:
        return len(self.support) == 1

    def __mul__(self, other: Monomial) -> Monomial:
        return multiply(self, other)

    def __pow__(self, k: int) -> Monomial:
        return Monomial(self.context, tuple(e * k for e in self.exponents))

    def divides(self, other: Monomial) -> bool:
        return divides(self, other)

    def embed(self, context: VarContext) -> Monomial:
        """Re-express over ``context`` (matched by variable name)."""
        if context is self.context or context == self.context:
            return self
        exps = [0] * len(context)
        for name, e in zip(self.context.names, self.exponents):
            if e:
                exps[context.index(name)] = e
        return Monomial(context, tuple(exps))

    def __str__(self):
        parts = []
        for name, e in zip(self.context.names, self.exponents):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return "*".join(parts) or "1"

    def __repr__(self):
        return f"Monomial({self})"


def monomial_key(m: Monomial):
    """Canonical order: total degree, then descending lex on exponents."""
    return (m.degree, tuple(-e for e in m.exponents))


def generator_key(m: Monomial):
    """Canonical generator order: pure powers by variable, then :func:`monomial_key`."""
    supp = m.support
    if len(supp) == 1:
        return (0, supp[0], 0, ())
    return (1, 0) + monomial_key(m)


def _same_context(a, b):
    if a.context is not b.context and a.context != b.context:
        raise ContextMismatch(
            f"variables {list(a.context.names)} vs {list(b.context.names)}"
        )


def divides(a: Monomial, b: Monomial) -> bool:
    _same_context(a, b)
    return all(p <= q for p, q in zip(a.exponents, b.exponents))


def multiply(a: Monomial, b: Monomial) -> Monomial:
    _same_context(a, b)
    return Monomial(a.context, tuple(p + q for p, q in zip(a.exponents, b.exponents)))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal stored by its minimal generators, canonically sorted.

    Use :func:`minimalize` to build one from an arbitrary generating set.
    """

    context: VarContext
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        gens = tuple(sorted(set(self.gens), key=generator_key))
        object.__setattr__(self, "gens", gens)
        if not gens:
            raise InvalidGenerator("an ideal needs at least one generator")
        for g in gens:
            _check_generator(self.context, g)
        for g in gens:
            for h in gens:
                if g is not h and divides(g, h):
                    raise ValueError(f"generator {g} divides {h}; not minimal")

    def __contains__(self, m: Monomial) -> bool:
        return contains(self, m)

    def __str__(self):
        return "(" + ", ".join(map(str, self.gens)) + ")"

    def pure_power_bounds(self) -> dict[int, int]:
        """Map variable index -> a with x^a a minimal generator."""
        return {g.support[0]: g.degree for g in self.gens if g.is_pure_power()}

    def in_context(self, context: VarContext) -> MonomialIdeal:
        """Same ideal re-expressed over another context containing its variables."""
        return MonomialIdeal(context, tuple(g.embed(context) for g in self.gens))


def _check_generator(context, g):
    if g.context is not context and g.context != context:
        raise ContextMismatch(f"generator {g} is not over {list(context.names)}")
    if g.degree == 0:
        raise InvalidGenerator("the constant monomial cannot be a generator")
    if g.degree == 1:
        raise InvalidGenerator(f"degree-1 generator {g} is not allowed")


def minimalize(gens: Iterable[Monomial], context: VarContext | None = None) -> MonomialIdeal:
    """Keep only the generators not divisible by another one.

    >>> ctx = VarContext(("x", "y"))
    >>> x, y = ctx.variables()
    >>> str(minimalize([x**2, x**3, x**2 * y, y**3]))
    '(x^2, y^3)'
    """
    gens = list(gens)
    if not gens:
        raise InvalidGenerator("an ideal needs at least one generator")
    if context is None:
        context = gens[0].context
    for g in gens:
        _check_generator(context, g)
    kept: list[Monomial] = []
    for g in sorted(set(gens), key=lambda m: m.degree):
        if not any(divides(k, g) for k in kept):
            kept.append(g)
    return MonomialIdeal(context, tuple(kept))


def contains(ideal: MonomialIdeal, m: Monomial) -> bool:
    """Ideal membership: some minimal generator divides ``m``."""
    _same_context(ideal, m)
    e = m.exponents
    return any(all(p <= q for p, q in zip(g.exponents, e)) for g in ideal.gens)


def is_artinian(ideal: MonomialIdeal) -> bool:
    return len(ideal.pure_power_bounds()) == len(ideal.context)


def ideal_equals(i: MonomialIdeal, j: MonomialIdeal) -> bool:
    _same_context(i, j)
    return i.gens == j.gens


@dataclass(frozen=True)
class QuotientRing:
    """k[x_1..x_n]/I for an Artinian monomial ideal I, with its surviving monomials."""

    ideal: MonomialIdeal
    survivors: tuple[Monomial, ...]
    bounds: tuple[int, ...]
    _lookup: frozenset = field(repr=False, compare=False, default=frozenset())

    @property
    def context(self) -> VarContext:
        return self.ideal.context

    def survives(self, m: Monomial) -> bool:
        """True for every nonzero monomial of the ring, including the constant 1."""
        return m.is_constant() or m in self._lookup

    def __str__(self):
        return f"k[{', '.join(self.context.names)}]/{self.ideal}"


def enumerate_survivors(
    ideal: MonomialIdeal, max_vertices: int | None = DEFAULT_MAX_VERTICES
) -> QuotientRing:
    """Enumerate the nonconstant monomials outside ``ideal``.

    Walks upward from 1, multiplying by variables, so the cost is
    proportional to the number of survivors rather than the exponent box.
    """
    if not is_artinian(ideal):
        ctx = ideal.context
        missing = [ctx.names[i] for i in range(len(ctx)) if i not in ideal.pure_power_bounds()]
        raise NotArtinian(f"no pure-power generator for {', '.join(missing)}")
    ctx = ideal.context
    n = len(ctx)
    bounds = ideal.pure_power_bounds()
    found = set()
    frontier = [(0,) * n]
    while frontier:
        nxt = []
        for exps in frontier:
            for i in range(n):
                if exps[i] + 1 >= bounds[i]:
                    continue
                cand = exps[:i] + (exps[i] + 1,) + exps[i + 1:]
                if cand in found:
                    continue
                if any(all(p <= q for p, q in zip(g.exponents, cand)) for g in ideal.gens):
                    continue
                found.add(cand)
                if max_vertices is not None and len(found) > max_vertices:
                    raise CapExceeded("survivor count", max_vertices)
                nxt.append(cand)
        frontier = nxt
    survivors = sorted((Monomial(ctx, e) for e in found), key=monomial_key)
    return QuotientRing(
        ideal=ideal,
        survivors=tuple(survivors),
        bounds=tuple(bounds[i] for i in range(n)),
        _lookup=frozenset(survivors),
    )


def quotient(gens: Sequence[Monomial], **caps) -> QuotientRing:
    """Shorthand: minimalize ``gens`` and enumerate the resulting ring."""
    return enumerate_survivors(minimalize(gens), **caps)
