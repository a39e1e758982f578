"""Socle of an Artinian monomial ring read off its survival complex.

The socle's monomial basis is exactly the set of truly isolated vertices,
so its dimension is their count. For these rings Gorenstein (socle
dimension one), pure power, and complete intersection all coincide.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complex import SurvivalComplex, VertexKind
from .errors import NotArtinian
from .monomial import Monomial, MonomialIdeal, is_artinian


@dataclass(frozen=True)
class SocleReport:
    generators: tuple[Monomial, ...]
    dimension: int
    is_gorenstein: bool
    is_pure_power: bool
    is_complete_intersection: bool


def socle_generators(c: SurvivalComplex) -> tuple[Monomial, ...]:
    return c.vertices_of_kind(VertexKind.TRULY_ISOLATED)


def socle_dimension(c: SurvivalComplex) -> int:
    return len(socle_generators(c))


def is_pure_power(ideal: MonomialIdeal) -> bool:
    return all(g.is_pure_power() for g in ideal.gens)


def is_gorenstein(c: SurvivalComplex) -> bool:
    return socle_dimension(c) == 1


def is_complete_intersection(ideal: MonomialIdeal) -> bool:
    # an Artinian monomial ideal has height n, so CI means exactly n minimal generators
    if not is_artinian(ideal):
        raise NotArtinian(f"{ideal} is not Artinian")
    return len(ideal.gens) == len(ideal.context)


def socle_report(c: SurvivalComplex) -> SocleReport:
    gens = socle_generators(c)
    return SocleReport(
        generators=gens,
        dimension=len(gens),
        is_gorenstein=len(gens) == 1,
        is_pure_power=is_pure_power(c.ideal),
        is_complete_intersection=is_complete_intersection(c.ideal),
    )
