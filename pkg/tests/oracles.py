"""Brute-force reference computations on raw exponent tuples.

Nothing here imports the package; these are the independent side of every
cross-check.
"""

from itertools import combinations, product


def divides(a, b):
    return all(p <= q for p, q in zip(a, b))


def in_ideal(gens, m):
    return any(divides(g, m) for g in gens)


def survivors(gens, n):
    """Scan the whole box below the pure powers."""
    bounds = [None] * n
    for g in gens:
        supp = [i for i, e in enumerate(g) if e]
        if len(supp) == 1:
            i = supp[0]
            bounds[i] = g[i] if bounds[i] is None else min(bounds[i], g[i])
    assert None not in bounds, "not Artinian"
    return {e for e in product(*(range(b) for b in bounds)) if any(e) and not in_ideal(gens, e)}


def add(a, b):
    return tuple(p + q for p, q in zip(a, b))


def unit(n, i):
    return tuple(int(j == i) for j in range(n))


def socle(gens, n):
    return {m for m in survivors(gens, n) if all(in_ideal(gens, add(m, unit(n, i))) for i in range(n))}


def edges(gens, n):
    alive = survivors(gens, n)
    return {frozenset((p, q)) for p, q in combinations(sorted(alive), 2) if add(p, q) in alive}


def components(gens, n):
    alive = survivors(gens, n)
    parent = {v: v for v in alive}

    def find(v):
        while parent[v] != v:
            v = parent[v]
        return v

    for e in edges(gens, n):
        p, q = tuple(e)
        parent[find(p)] = find(q)
    groups = {}
    for v in alive:
        groups.setdefault(find(v), set()).add(v)
    return [frozenset(g) for g in groups.values()]


def facets(gens, n):
    """All subsets whose product survives, then keep the maximal ones."""
    alive = sorted(survivors(gens, n))
    faces = []
    for k in range(1, len(alive) + 1):
        for sub in combinations(alive, k):
            prod = (0,) * n
            for v in sub:
                prod = add(prod, v)
            if prod in alive or not any(prod):
                faces.append(frozenset(sub))
    return {f for f in faces if not any(f < g for g in faces)}


def minimal(gens):
    gens = set(gens)
    return {g for g in gens if not any(h != g and divides(h, g) for h in gens)}


def random_ideal(rng, max_vars=3, max_pure=4, max_extra=4, n=None):
    """Random Artinian generating set (degree >= 2 everywhere), as exponent tuples."""
    if n is None:
        n = rng.randint(1, max_vars)
    gens = [unit(n, i) for i in range(n)]
    gens = [tuple(rng.randint(2, max_pure) * e for e in g) for g in gens]
    for _ in range(rng.randint(0, max_extra)):
        while True:
            g = tuple(rng.randint(0, max_pure) for _ in range(n))
            if sum(g) >= 2:
                break
        gens.append(g)
    return n, gens


def random_antichain(rng, n, max_exp=4, max_size=4):
    """Random divisibility antichain of nonconstant monomials that uses all n variables."""
    while True:
        pts = []
        for _ in range(rng.randint(1, max_size)):
            e = tuple(rng.randint(0, max_exp) for _ in range(n))
            if any(e):
                pts.append(e)
        anti = minimal_up(pts)
        if anti and all(any(p[i] for p in anti) for i in range(n)):
            return sorted(anti)


def minimal_up(pts):
    """Keep the divisibility-maximal points."""
    pts = set(pts)
    return {p for p in pts if not any(q != p and divides(p, q) for q in pts)}
