"""Survival complexes of Artinian monomial quotient rings.

Vertices are the surviving nonconstant monomials. A set of distinct
vertices is a face when its product still survives; in particular two
vertices are joined by an edge exactly when their product is nonzero.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import CapExceeded, InvariantViolation, SurvivalError
from .monomial import Monomial, QuotientRing, monomial_key

DEFAULT_MAX_EDGES = 1_000_000
DEFAULT_MAX_FACETS = 100_000


class VertexKind(str, Enum):
    TRULY_ISOLATED = "TrulyIsolated"
    QUASI_ISOLATED = "QuasiIsolated"
    CONNECTED = "Connected"


class ComponentKind(str, Enum):
    NONTRIVIAL = "Nontrivial"
    TRIVIAL = "TriviallyConnected"
    QUASI_TRIVIAL = "QuasiTriviallyConnected"


@dataclass(frozen=True)
class Component:
    kind: ComponentKind
    vertices: tuple[Monomial, ...]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; edges are canonical pairs ``(p, q)`` with p before q."""

    vertices: tuple[Monomial, ...]
    edges: tuple[tuple[Monomial, Monomial], ...]


@dataclass(frozen=True)
class SurvivalComplex:
    ring: QuotientRing
    vertices: tuple[Monomial, ...]
    edges: tuple[tuple[Monomial, Monomial], ...]
    classification: Mapping[Monomial, VertexKind]
    components: tuple[Component, ...]
    adjacency: Mapping[Monomial, frozenset]

    @property
    def ideal(self):
        return self.ring.ideal

    def skeleton(self) -> Graph:
        return Graph(self.vertices, self.edges)

    def vertices_of_kind(self, kind: VertexKind) -> tuple[Monomial, ...]:
        return tuple(v for v in self.vertices if self.classification[v] is kind)


class NotAVertex(SurvivalError):
    pass


def build_complex(ring: QuotientRing, max_edges: int | None = DEFAULT_MAX_EDGES) -> SurvivalComplex:
    """Build the 1-skeleton, classify vertices and split into components."""
    verts = ring.survivors
    alive = {v.exponents for v in verts}
    adj: dict[Monomial, set] = {v: set() for v in verts}
    edges = []
    for i, p in enumerate(verts):
        pe = p.exponents
        for q in verts[i + 1:]:
            if tuple(a + b for a, b in zip(pe, q.exponents)) in alive:
                edges.append((p, q))
                adj[p].add(q)
                adj[q].add(p)
                if max_edges is not None and len(edges) > max_edges:
                    raise CapExceeded("edge count", max_edges)

    ideal = ring.ideal
    xs = ring.context.variables()
    kinds = {}
    for v in verts:
        if all(not ring.survives(x * v) for x in xs):
            kinds[v] = VertexKind.TRULY_ISOLATED
        elif not adj[v] and ring.survives(v * v):
            # only a bare variable x with x^2 != 0 = x^3 can get here
            if v.degree != 1 or ring.survives(v * v * v):
                raise InvariantViolation(f"quasi-isolated vertex {v} in {ideal} is not a variable with cube zero")
            kinds[v] = VertexKind.QUASI_ISOLATED
        else:
            if not adj[v]:
                raise InvariantViolation(f"vertex {v} has no edges but is not isolated")
            kinds[v] = VertexKind.CONNECTED

    comps = []
    seen = set()
    for v in verts:
        if v in seen:
            continue
        seen.add(v)
        block = [v]
        todo = deque([v])
        while todo:
            u = todo.popleft()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    block.append(w)
                    todo.append(w)
        block.sort(key=monomial_key)
        if len(block) > 1:
            kind = ComponentKind.NONTRIVIAL
        elif kinds[v] is VertexKind.QUASI_ISOLATED:
            kind = ComponentKind.QUASI_TRIVIAL
        else:
            kind = ComponentKind.TRIVIAL
        comps.append(Component(kind, tuple(block)))

    return SurvivalComplex(
        ring=ring,
        vertices=verts,
        edges=tuple(edges),
        classification=MappingProxyType(kinds),
        components=tuple(comps),
        adjacency=MappingProxyType({v: frozenset(s) for v, s in adj.items()}),
    )


def _require_vertex(c, v):
    if v not in c.classification:
        raise NotAVertex(f"{v} is not a vertex of the survival complex of {c.ring}")


def classify_vertex(c: SurvivalComplex, v: Monomial) -> VertexKind:
    _require_vertex(c, v)
    return c.classification[v]


def connected_components(c: SurvivalComplex) -> tuple[Component, ...]:
    return c.components


def is_face(c: SurvivalComplex, members: Iterable[Monomial]) -> bool:
    """True iff the product of the (distinct) members survives. The empty set is a face."""
    members = set(members)
    prod = c.ring.context.one()
    for v in members:
        _require_vertex(c, v)
        prod = prod * v
    return c.ring.survives(prod)


def facets(c: SurvivalComplex, max_facets: int | None = DEFAULT_MAX_FACETS) -> list[frozenset]:
    """All inclusion-maximal faces, sorted canonically.

    Bron-Kerbosch without pivoting, with "u extends R" meaning the product
    of R and u survives instead of pairwise adjacency. That works for any
    downward-closed family, since maximality only needs single-vertex
    extensions to fail.
    """
    order = {v: i for i, v in enumerate(c.vertices)}
    alive = {v.exponents for v in c.vertices}
    out = []

    def mul(e, v):
        return tuple(a + b for a, b in zip(e, v.exponents))

    def grow(current, prod, cands, excluded):
        if not cands and not excluded:
            out.append(frozenset(current))
            if max_facets is not None and len(out) > max_facets:
                raise CapExceeded("facet count", max_facets)
            return
        cands = list(cands)
        while cands:
            v = cands.pop(0)
            p = mul(prod, v)
            grow(
                current + [v],
                p,
                [u for u in cands if mul(p, u) in alive],
                [u for u in excluded if mul(p, u) in alive],
            )
            excluded = excluded + [v]

    grow([], (0,) * len(c.ring.context), list(c.vertices), [])
    return sorted(out, key=lambda f: sorted(order[v] for v in f))


def zero_divisor_graph(c: SurvivalComplex) -> Graph:
    """Complement of the 1-skeleton: p -- q iff p != q and pq = 0."""
    verts = c.vertices
    edges = []
    for i, p in enumerate(verts):
        nbrs = c.adjacency[p]
        for q in verts[i + 1:]:
            if q not in nbrs:
                edges.append((p, q))
    return Graph(verts, tuple(edges))
