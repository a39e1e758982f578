"""One-shot analysis of an ideal, and the invariant suite behind ``check``."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .complex import (
    DEFAULT_MAX_EDGES,
    ComponentKind,
    SurvivalComplex,
    VertexKind,
    build_complex,
    facets,
    is_face,
    zero_divisor_graph,
    DEFAULT_MAX_FACETS,
)
from .fibre import FibreFactorization, decompose, fibre_product
from .monomial import (
    DEFAULT_MAX_VERTICES,
    MonomialIdeal,
    divides,
    enumerate_survivors,
    ideal_equals,
)
from .socle import SocleReport, socle_report


@dataclass(frozen=True)
class AnalysisReport:
    complex: SurvivalComplex
    socle: SocleReport
    factorization: FibreFactorization


def analyze(
    ideal: MonomialIdeal,
    max_vertices: int | None = DEFAULT_MAX_VERTICES,
    max_edges: int | None = DEFAULT_MAX_EDGES,
) -> AnalysisReport:
    c = build_complex(enumerate_survivors(ideal, max_vertices=max_vertices), max_edges=max_edges)
    return AnalysisReport(c, socle_report(c), decompose(c, max_vertices=max_vertices))


def report_dict(report: AnalysisReport) -> dict:
    c, soc = report.complex, report.socle
    return {
        "variables": list(c.ring.context.names),
        "minimal_generators": [str(g) for g in c.ideal.gens],
        "vertex_count": len(c.vertices),
        "edge_count": len(c.edges),
        "truly_isolated": [str(v) for v in soc.generators],
        "quasi_isolated": [str(v) for v in c.vertices_of_kind(VertexKind.QUASI_ISOLATED)],
        "socle_dimension": soc.dimension,
        "is_gorenstein": soc.is_gorenstein,
        "is_pure_power": soc.is_pure_power,
        "is_complete_intersection": soc.is_complete_intersection,
        "components": [
            {"kind": comp.kind.value, "vertices": [str(v) for v in comp.vertices]}
            for comp in c.components
        ],
        "fibre_factors": [
            {
                "variables": list(f.context.names),
                "minimal_generators": [str(g) for g in f.ideal.gens],
            }
            for f in report.factorization.factors
        ],
    }


def run_checks(c: SurvivalComplex, max_facets: int | None = DEFAULT_MAX_FACETS) -> list[tuple[str, bool, str]]:
    """Check the structural theorems on one complex.

    Returns ``(name, ok, detail)`` triples. The socle check recomputes
    annihilated monomials straight from ideal membership rather than
    trusting the vertex classification.
    """
    ring, ideal = c.ring, c.ideal
    xs = ring.context.variables()
    kind = c.classification
    isolated = [v for v in c.vertices if kind[v] is not VertexKind.CONNECTED]
    truly = [v for v in c.vertices if kind[v] is VertexKind.TRULY_ISOLATED]
    results = []

    def record(name, ok, detail=""):
        results.append((name, bool(ok), detail))

    record("has an isolated point", isolated, f"{len(isolated)} isolated")

    direct = [m for m in ring.survivors if all(x * m in ideal for x in xs)]
    record("socle equals annihilated monomials", set(direct) == set(truly),
           f"complex {list(map(str, truly))} vs direct {list(map(str, direct))}")

    orphans = [v for v in c.vertices if not any(divides(v, t) for t in truly)]
    record("every vertex divides a socle generator", not orphans,
           ", ".join(map(str, orphans)))

    soc = socle_report(c)
    record("gorenstein iff pure power iff complete intersection",
           soc.is_gorenstein == soc.is_pure_power == soc.is_complete_intersection,
           f"{soc.is_gorenstein}/{soc.is_pure_power}/{soc.is_complete_intersection}")

    if soc.is_pure_power:
        top = ring.context.one()
        for x, a in zip(xs, ring.bounds):
            top = top * x ** (a - 1)
        record("pure power: unique socle generator is the top monomial", list(truly) == [top],
               f"expected {top}")

    bad_quasi = [v for v in c.vertices if kind[v] is VertexKind.QUASI_ISOLATED
                 and (v.degree != 1 or ring.survives(v ** 3) or not ring.survives(v ** 2))]
    record("quasi-isolated points are variables with square alive and cube dead", not bad_quasi,
           ", ".join(map(str, bad_quasi)))

    big = [comp for comp in c.components if comp.kind is not ComponentKind.TRIVIAL]
    clash = []
    for a, b in combinations(big, 2):
        va = {i for v in a.vertices for i in v.support}
        vb = {i for v in b.vertices for i in v.support}
        if va & vb:
            clash.append((a.vertices[0], b.vertices[0]))
    record("non-trivial components share no variables", not clash, str(clash))

    zd = zero_divisor_graph(c)
    sk = set(c.edges)
    n = len(c.vertices)
    record("skeleton and zero-divisor graph partition vertex pairs",
           not (sk & set(zd.edges)) and len(sk) + len(zd.edges) == n * (n - 1) // 2)

    fs = facets(c, max_facets=max_facets)
    covered = set().union(*fs) if fs else set()
    not_closed = []
    for f in fs:
        for drop in f:
            if not is_face(c, f - {drop}):
                not_closed.append(f)
                break
    maximal = all(not is_face(c, f | {v}) for f in fs for v in c.vertices if v not in f)
    record("facets cover vertices, are downward closed and maximal",
           covered == set(c.vertices) and not not_closed and maximal)

    fac = decompose(c)
    back = fac.recombine()
    record("decompose then fibre product is the identity", ideal_equals(back.ideal, ideal),
           f"{back.ideal} vs {ideal}")

    if len(fac.factors) > 1:
        prod = build_complex(fibre_product(fac.factors))
        ctx = prod.ring.context
        union_v = {v.embed(ctx) for f in fac.factors for v in f.survivors}
        union_e = set()
        for f in fac.factors:
            fc = build_complex(f)
            union_e |= {frozenset((p.embed(ctx), q.embed(ctx))) for p, q in fc.edges}
        record("fibre product complex is the disjoint union of factor complexes",
               set(prod.vertices) == union_v and {frozenset(e) for e in prod.edges} == union_e)
    return results
