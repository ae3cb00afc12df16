"""Reference objects, random generators and slow oracles shared by the tests."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from lefrees.complex import (
    Graph,
    SimplicialComplex,
    independence_complex,
    is_forest_by_definition,
    whisker,
)
from lefrees.monomial import MonomialIdeal, in_symbolic_power, minimal_vertex_covers

A, B, C, D, E, F, G, H = range(8)


def delta_a() -> SimplicialComplex:
    """Five triangles on a..f whose ×L² map A_1 -> A_3 drops rank."""
    return SimplicialComplex.from_facets(
        [(A, E, F), (A, C, E), (C, D, E), (D, E, F), (B, D, F)], n=6
    )


def p4() -> Graph:
    return Graph.path(4)


def delta_c() -> SimplicialComplex:
    """Independence complex of the whiskered path a-b-c-d (whiskers e..h)."""
    return independence_complex(whisker(p4()))


def delta_b() -> SimplicialComplex:
    """Facet complex of the cover ideal of the whiskered path."""
    return SimplicialComplex.from_facets(
        [
            (A, B, C, D), (A, B, C, H), (A, B, D, G), (A, C, D, F),
            (A, C, F, H), (B, C, D, E), (B, C, E, H), (B, D, E, G),
        ],
        n=8,
    )


def fan() -> SimplicialComplex:
    """Hexagonal fan on 1..7 (stored 0..6) with one facet listed twice."""
    raw = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 4, 5), (1, 5, 6), (1, 6, 7), (1, 2, 7)]
    return SimplicialComplex.from_facets([[v - 1 for v in f] for f in raw], n=7)


def indicator(n: int, support) -> tuple[int, ...]:
    return tuple(1 if k in set(support) else 0 for k in range(n))


# --- random objects ----------------------------------------------------------------


def compact(cx: SimplicialComplex) -> SimplicialComplex:
    """Renumber so that exactly the used vertices remain."""
    used = cx.vertices
    pos = {v: k for k, v in enumerate(used)}
    return SimplicialComplex.from_facets([[pos[v] for v in f] for f in cx.facets], n=len(used))


def random_pure_complex(rng: random.Random, n_max: int, d_min: int, d_max: int) -> SimplicialComplex:
    """Random pure complex using every one of its vertices."""
    d = rng.randint(d_min, d_max)
    n = rng.randint(d + 1, max(d + 1, n_max))
    verts = list(range(n))
    facets = set()
    for _ in range(rng.randint(1, 2 * n)):
        facets.add(tuple(sorted(rng.sample(verts, d + 1))))
    used = {v for f in facets for v in f}
    for v in verts:
        if v not in used:
            others = rng.sample([u for u in verts if u != v], d)
            facets.add(tuple(sorted(others + [v])))
    return compact(SimplicialComplex.from_facets(facets, n=n))


def random_complex(rng: random.Random, n_max: int, d_max: int) -> SimplicialComplex:
    """Random (possibly impure) complex using all of its vertices."""
    n = rng.randint(2, n_max)
    facets = []
    for _ in range(rng.randint(1, 2 * n)):
        k = rng.randint(1, min(d_max + 1, n))
        facets.append(rng.sample(range(n), k))
    return compact(SimplicialComplex.from_facets(facets, n=n))


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    p = rng.random() if p is None else p
    return Graph(n, tuple(e for e in itertools.combinations(range(n), 2) if rng.random() < p))


def random_bipartite_graph(rng: random.Random, n: int) -> Graph:
    left = rng.randint(1, n - 1)
    p = rng.uniform(0.2, 1.0)
    edges = [(u, v) for u in range(left) for v in range(left, n) if rng.random() < p]
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges(n, [(perm[u], perm[v]) for u, v in edges])


def random_2d_tree(rng: random.Random, max_facets: int) -> SimplicialComplex:
    """Connected 2-dimensional simplicial tree built by attaching leaves.

    Each new triangle meets the current complex in a face of one existing
    facet. That alone can close a cycle among three facets, so candidates
    are kept only if every subcollection still has a leaf.
    """
    facets = [(0, 1, 2)]
    nxt = 3
    for _ in range(rng.randint(0, max_facets - 1)):
        host = rng.choice(facets)
        keep = rng.choice([1, 2])
        shared = rng.sample(host, keep)
        new = list(range(nxt, nxt + 3 - keep))
        cand = tuple(sorted(shared + new))
        if is_forest_by_definition(facets + [cand]):
            facets.append(cand)
            nxt += 3 - keep
    return SimplicialComplex.from_facets(facets, n=nxt)


def random_matrix(rng: random.Random, max_dim: int = 12, bound: int = 20) -> list[list[int]]:
    """Random integer matrix, often built as a product to force low rank."""
    r, c = rng.randint(1, max_dim), rng.randint(1, max_dim)
    if rng.random() < 0.5:
        k = rng.randint(0, min(r, c))
        left = [[rng.randint(-bound, bound) for _ in range(k)] for _ in range(r)]
        right = [[rng.randint(-bound, bound) for _ in range(c)] for _ in range(k)]
        return [[sum(left[i][t] * right[t][j] for t in range(k)) for j in range(c)] for i in range(r)]
    return [[rng.randint(-bound, bound) for _ in range(c)] for _ in range(r)]


# --- oracles ---------------------------------------------------------------------------


def fraction_rank(rows) -> int:
    """Gaussian elimination over Fractions."""
    m = [[Fraction(x) for x in r] for r in rows]
    rank, ncols = 0, len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c] / m[rank][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def leibniz_det(rows) -> int:
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = 1
        for i in range(n):
            prod *= rows[i][perm[i]]
        total += -prod if inv % 2 else prod
    return total


def all_minors(rows, k):
    r, c = len(rows), len(rows[0])
    for rs in itertools.combinations(range(r), k):
        for cs in itertools.combinations(range(c), k):
            yield leibniz_det([[rows[i][j] for j in cs] for i in rs])


def monomials_up_to(n: int, max_deg: int):
    for deg in range(max_deg + 1):
        for cut in itertools.combinations(range(deg + n - 1), n - 1):
            prev, u = -1, []
            for c in cut + (deg + n - 1,):
                u.append(c - prev - 1)
                prev = c
            yield tuple(u)


def box_symbolic_power(ideal: MonomialIdeal, m: int) -> set[tuple[int, ...]]:
    """Minimal elements of the cover polyhedron's lattice points with total degree <= n*m.

    No per-coordinate cap is assumed, so this checks the box bound used by
    the library's search.
    """
    covers = minimal_vertex_covers(ideal)
    n = ideal.n
    members = [u for u in monomials_up_to(n, n * m) if in_symbolic_power(covers, u, m)]
    out = set()
    for u in members:
        if not any(
            u[i] > 0 and in_symbolic_power(covers, u[:i] + (u[i] - 1,) + u[i + 1 :], m)
            for i in range(n)
        ):
            out.add(u)
    return out


def literal_sdefect(ideal: MonomialIdeal, m: int) -> int:
    """Monomials in I^(m) that are neither in I^m nor in the maximal ideal times I^(m).

    Their classes form a basis of (I^(m)/I^m) tensored with the residue field.
    Membership in I^(m) is decided by the cover inequalities and membership
    in I^m by an explicit power, so this does not use generator lists of I^(m).
    """
    from lefrees.monomial import contains, power

    covers = minimal_vertex_covers(ideal)
    pw = power(ideal, m)
    n = ideal.n
    count = 0
    for u in monomials_up_to(n, n * m):
        if not in_symbolic_power(covers, u, m) or contains(pw, u):
            continue
        in_mI = any(
            u[i] > 0 and in_symbolic_power(covers, u[:i] + (u[i] - 1,) + u[i + 1 :], m)
            for i in range(n)
        )
        if not in_mI:
            count += 1
    return count
