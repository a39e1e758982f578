"""Fibre products of monomial quotient rings and decomposition into factors.

The fibre product of k[x]/I and k[y]/J is k[x, y]/(I, J, x_i*y_j). Going
the other way, a ring splits along the connected components of its
variable graph, where x_i ~ x_j when x_i*x_j survives.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .complex import SurvivalComplex
from .errors import InvariantViolation, SurvivalError
from .monomial import (
    DEFAULT_MAX_VERTICES,
    QuotientRing,
    VarContext,
    enumerate_survivors,
    minimalize,
)
from .socle import is_pure_power, socle_generators


class OverlappingVariables(SurvivalError):
    pass


@dataclass(frozen=True)
class FibreFactorization:
    context: VarContext
    factors: tuple[QuotientRing, ...]
    variable_partition: dict

    def recombine(self, max_vertices: int | None = DEFAULT_MAX_VERTICES) -> QuotientRing:
        """Fibre product of the factors, expressed over the original variable order."""
        if len(self.factors) == 1:
            ring = self.factors[0]
            ideal = ring.ideal.in_context(self.context)
        else:
            ideal = fibre_product(self.factors, max_vertices=max_vertices).ideal.in_context(self.context)
        return enumerate_survivors(ideal, max_vertices=max_vertices)


@dataclass(frozen=True)
class Refusal:
    """The socle generators are not pairwise variable-disjoint."""

    variable: str
    witnesses: tuple

    @property
    def reason(self) -> str:
        p, q = self.witnesses
        return f"socle generators {p} and {q} share the variable {self.variable}"


def fibre_product(rings: Sequence[QuotientRing], max_vertices: int | None = DEFAULT_MAX_VERTICES) -> QuotientRing:
    """Fibre product over the concatenated variable list, in the given order."""
    rings = list(rings)
    if len(rings) < 2:
        raise ValueError("a fibre product needs at least two rings")
    names: list[str] = []
    for r in rings:
        clash = set(names) & set(r.context.names)
        if clash:
            raise OverlappingVariables(f"variables {sorted(clash)} occur in more than one factor")
        names.extend(r.context.names)
    ctx = VarContext(tuple(names))
    gens = [g.embed(ctx) for r in rings for g in r.ideal.gens]
    for r, s in combinations(rings, 2):
        for a in r.context.names:
            for b in s.context.names:
                gens.append(ctx.var(a) * ctx.var(b))
    return enumerate_survivors(minimalize(gens, ctx), max_vertices=max_vertices)


def variable_blocks(c: SurvivalComplex) -> list[list[int]]:
    """Components of the variable graph, as sorted index lists ordered by first index."""
    ring = c.ring
    xs = ring.context.variables()
    n = len(xs)
    block_of = [-1] * n
    blocks: list[list[int]] = []
    for start in range(n):
        if block_of[start] >= 0:
            continue
        block_of[start] = len(blocks)
        block = [start]
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if block_of[j] < 0 and ring.survives(xs[i] * xs[j]):
                    block_of[j] = len(blocks)
                    block.append(j)
                    stack.append(j)
        blocks.append(sorted(block))
    return blocks


def check_pairwise_products(c: SurvivalComplex, partition: Iterable[Iterable[str]]) -> bool:
    """Does the ideal contain x_i*x_j for every pair of variables in different blocks?"""
    ctx = c.ring.context
    blocks = [list(b) for b in partition]
    for a, b in combinations(blocks, 2):
        for u in a:
            for v in b:
                if c.ring.survives(ctx.var(u) * ctx.var(v)):
                    return False
    return True


def decompose(c: SurvivalComplex, max_vertices: int | None = DEFAULT_MAX_VERTICES) -> FibreFactorization:
    ctx = c.ring.context
    blocks = variable_blocks(c)
    block_of = {i: k for k, b in enumerate(blocks) for i in b}
    if not check_pairwise_products(c, [[ctx.names[i] for i in b] for b in blocks]):
        raise InvariantViolation("cross-block variable product survives")

    per_block: list[list] = [[] for _ in blocks]
    for g in c.ideal.gens:
        touched = {block_of[i] for i in g.support}
        if len(touched) == 1:
            per_block[touched.pop()].append(g)
        elif not (g.degree == 2 and len(g.support) == 2):
            raise InvariantViolation(f"generator {g} mixes blocks but is not a cross product")

    factors = []
    for b, gens in zip(blocks, per_block):
        sub = VarContext(tuple(ctx.names[i] for i in b))
        factors.append(enumerate_survivors(minimalize([g.embed(sub) for g in gens], sub), max_vertices=max_vertices))
    return FibreFactorization(
        context=ctx,
        factors=tuple(factors),
        variable_partition={ctx.names[i]: block_of[i] for i in range(len(ctx))},
    )


def pure_power_factorization(c: SurvivalComplex) -> FibreFactorization | Refusal:
    """Split into pure-power factors when the socle generators share no variables.

    Returns a :class:`Refusal` naming a shared variable otherwise; that is an
    expected outcome, not an error.
    """
    socle = socle_generators(c)
    names = c.ring.context.names
    for p, q in combinations(socle, 2):
        shared = set(p.support) & set(q.support)
        if shared:
            return Refusal(names[min(shared)], (p, q))
    fac = decompose(c)
    if len(fac.factors) != len(socle):
        raise InvariantViolation(f"{len(socle)} disjoint socle generators but {len(fac.factors)} factors")
    for f in fac.factors:
        if not is_pure_power(f.ideal):
            raise InvariantViolation(f"factor {f} is not pure power")
    return fac
