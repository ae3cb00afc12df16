"""Positivity of mixed multiplicities and the face-indicator polytopes.

For ideals ``I_1..I_s`` generated in single degrees, ``e_a(m | I_1..I_s)``
is positive iff ``sum(a_j for j in J) <= ℓ(prod I_j for j in J) - 1`` for
every nonempty ``J``.  Analytic spreads of products are log-matrix ranks, so
everything here is exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .complex import SimplicialComplex, faces
from .exactla import IncrementalRank
from .lp import maximize
from .monomial import MonomialIdeal, face_ideal

# --- positivity ----------------------------------------------------------------


def compositions(total: int, parts: int):
    """Weak compositions of ``total`` into ``parts`` nonnegative parts, lex order."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def product_spread(ideals: Sequence[MonomialIdeal]) -> int:
    """Analytic spread of the product of equigenerated monomial ideals.

    The product's generators are all sums of one generator from each factor;
    the rank is accumulated incrementally and stops once it reaches ``n``.
    """
    n = ideals[0].n
    inc = IncrementalRank(n)
    seen = set()
    for combo in itertools.product(*(i.gens for i in ideals)):
        v = tuple(map(sum, zip(*combo)))
        if v in seen:
            continue
        seen.add(v)
        inc.add(v)
        if inc.rank == n:
            break
    return inc.rank


def subset_spreads(ideals: Sequence[MonomialIdeal]) -> dict[tuple[int, ...], int]:
    """ℓ of the product over every nonempty J, keyed by 1-based index tuples."""
    s = len(ideals)
    return {
        J: product_spread([ideals[j - 1] for j in J])
        for r in range(1, s + 1)
        for J in itertools.combinations(range(1, s + 1), r)
    }


def _check_ideals(ideals: Sequence[MonomialIdeal]):
    if not ideals:
        raise ValueError("need at least one ideal")
    n = ideals[0].n
    for k, i in enumerate(ideals, 1):
        if i.n != n:
            raise ValueError(f"ideal {k} lives in {i.n} variables, expected {n}")
        if i.is_zero:
            raise ValueError(f"ideal {k} is zero")
        if not i.is_equigenerated:
            raise ValueError(f"ideal {k} is not generated in a single degree")
        if i.degrees == [0]:
            raise ValueError(f"ideal {k} is the unit ideal")


@dataclass(frozen=True)
class MixedPositivityReport:
    a: tuple[int, ...]
    # (J, sum of a_j over J, ℓ of the product over J)
    checks: tuple[tuple[tuple[int, ...], int, int], ...]

    @property
    def positive(self) -> bool:
        return all(sa <= ell - 1 for _, sa, ell in self.checks)

    @property
    def first_violation(self) -> tuple[tuple[int, ...], int, int] | None:
        return next((c for c in self.checks if c[1] > c[2] - 1), None)

    def as_dict(self) -> dict:
        v = self.first_violation
        return {
            "a": list(self.a),
            "positive": self.positive,
            "checks": [{"J": list(J), "sum_a": sa, "spread": ell} for J, sa, ell in self.checks],
            "first_violation": None if v is None else list(v[0]),
        }


def mixed_positivity(
    ideals: Sequence[MonomialIdeal],
    a: Sequence[int],
    spreads: dict[tuple[int, ...], int] | None = None,
) -> MixedPositivityReport:
    """Decide ``e_a(m | I_1..I_s) > 0`` with ``a = (a_0, ..., a_s)``.

    ``spreads`` may carry precomputed :func:`subset_spreads` values when many
    vectors ``a`` are tested against the same ideals.
    """
    _check_ideals(ideals)
    n, s = ideals[0].n, len(ideals)
    a = tuple(int(x) for x in a)
    if len(a) != s + 1:
        raise ValueError(f"composition needs {s + 1} entries, got {len(a)}")
    if any(x < 0 for x in a):
        raise ValueError("composition entries must be nonnegative")
    if sum(a) != n - 1:
        raise ValueError(f"composition sums to {sum(a)}, expected n - 1 = {n - 1}")
    if spreads is None:
        spreads = subset_spreads(ideals)
    checks = tuple((J, sum(a[j] for j in J), spreads[J]) for J in sorted(spreads, key=lambda J: (len(J), J)))
    return MixedPositivityReport(a, checks)


def skeleton_ideals(cx: SimplicialComplex) -> list[MonomialIdeal]:
    """F of the i-skeleton for 1 <= i < d; for pure complexes its facets are the i-faces."""
    return [face_ideal(cx, i) for i in range(1, cx.dim)]


def simplicial_mixed_eulerian_positive(
    cx: SimplicialComplex, a: Sequence[int], spreads=None
) -> MixedPositivityReport:
    """Positivity of ``e_a(m | F(skel_1), ..., F(skel_{d-1}))`` for pure Δ."""
    if not cx.is_pure:
        raise ValueError("simplicial mixed Eulerian numbers need a pure complex")
    if cx.dim < 1:
        raise ValueError("need dimension at least 1")
    if len(a) != cx.dim:
        raise ValueError(f"composition needs d = {cx.dim} entries, got {len(a)}")
    ideals = [MonomialIdeal.maximal(cx.n)] + skeleton_ideals(cx)
    if spreads is None:
        spreads = subset_spreads(ideals[1:]) if len(ideals) > 1 else {}
    a = tuple(int(x) for x in a)
    if sum(a) != cx.n - 1 or any(x < 0 for x in a):
        raise ValueError(f"composition must be nonnegative with sum n - 1 = {cx.n - 1}")
    checks = tuple((J, sum(a[j] for j in J), spreads[J]) for J in sorted(spreads, key=lambda J: (len(J), J)))
    return MixedPositivityReport(a, checks)


def eulerian_number(n: int, k: int) -> int:
    """Permutations of n elements with exactly k descents."""
    if n < 0 or not (0 <= k < max(n, 1)):
        raise ValueError(f"need 0 <= k < n, got n={n}, k={k}")
    row = [1]  # n = 1
    for m in range(2, n + 1):
        row = [
            (k2 + 1) * (row[k2] if k2 < len(row) else 0) + (m - k2) * (row[k2 - 1] if k2 >= 1 else 0)
            for k2 in range(m)
        ]
    return row[k]


# --- polytopes -------------------------------------------------------------------

DEFAULT_VERTEX_CAP = 40


def _separate(target: Sequence[tuple[int, ...]], others: Sequence[tuple[int, ...]], dim: int):
    """Find w in [-1,1]^dim constant on ``target`` and strictly larger there than on ``others``.

    Returns (delta, w): the LP optimum of the margin and its maximizer.
    Variables are w+ (dim), w- (dim), delta.
    """
    u = target[0]
    rows, rhs = [], []

    def diff(p, q):
        return [pi - qi for pi, qi in zip(p, q)]

    for t in target:
        for x in others:
            d = diff(t, x)
            rows.append([-v for v in d] + d + [1])
            rhs.append(0)
    for t in target[1:]:
        d = diff(u, t)
        rows.append(d + [-v for v in d] + [0])
        rhs.append(0)
        rows.append([-v for v in d] + d + [0])
        rhs.append(0)
    for c in range(2 * dim):
        r = [0] * (2 * dim + 1)
        r[c] = 1
        rows.append(r)
        rhs.append(1)
    rows.append([0] * (2 * dim) + [1])
    rhs.append(1)
    obj = [0] * (2 * dim) + [1]
    res = maximize(obj, rows, rhs)
    w = tuple(res.x[c] - res.x[dim + c] for c in range(dim))
    return res.value, w


def _dot(w, x) -> Fraction:
    return sum((wi * xi for wi, xi in zip(w, x)), Fraction(0))


@dataclass(frozen=True)
class LatticePolytope:
    """Convex hull of distinct integer points, all of them vertices."""

    dim: int
    vertices: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertices must be distinct")
        if any(len(v) != self.dim for v in self.vertices):
            raise ValueError("vertex of the wrong dimension")

    @classmethod
    def from_points(cls, dim: int, points, cap: int = DEFAULT_VERTEX_CAP) -> LatticePolytope:
        """Drop duplicates and non-extreme points (one LP per point)."""
        pts = sorted({tuple(int(c) for c in p) for p in points})
        if len(pts) > cap:
            raise ValueError(f"{len(pts)} points exceed the cap of {cap}")
        keep = []
        for k, p in enumerate(pts):
            others = pts[:k] + pts[k + 1 :]
            if not others or _separate([p], others, dim)[0] > 0:
                keep.append(p)
        return cls(dim, tuple(keep))


def face_indicator_polytope(cx: SimplicialComplex, i: int) -> LatticePolytope:
    """Convex hull of the 0/1 indicator vectors of the i-faces.

    Distinct 0/1 points of equal coordinate sum are always in convex
    position, so no reduction is needed.
    """
    if not (0 <= i <= cx.dim):
        raise ValueError(f"need 0 <= i <= {cx.dim}")
    verts = []
    for f in faces(cx, i):
        v = [0] * cx.n
        for x in f:
            v[x] = 1
        verts.append(tuple(v))
    return LatticePolytope(cx.n, tuple(sorted(verts)))


def hypersimplex(n: int, k: int) -> LatticePolytope:
    return face_indicator_polytope(SimplicialComplex.simplex(n), k - 1)


@dataclass(frozen=True)
class Edge:
    u: tuple[int, ...]
    v: tuple[int, ...]
    certificate: tuple[Fraction, ...]  # w maximized exactly on {u, v}

    @property
    def direction(self) -> tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.u, self.v))


def verify_edge_certificate(p: LatticePolytope, e: Edge) -> bool:
    w = e.certificate
    top = _dot(w, e.u)
    if _dot(w, e.v) != top:
        return False
    return all(_dot(w, x) < top for x in p.vertices if x != e.u and x != e.v)


def polytope_edges(p: LatticePolytope, cap: int = DEFAULT_VERTEX_CAP) -> list[Edge]:
    """All edges, each with a re-verified separating functional."""
    vs = p.vertices
    if len(vs) > cap:
        raise ValueError(f"{len(vs)} vertices exceed the cap of {cap}")
    out = []
    for a, b in itertools.combinations(range(len(vs)), 2):
        others = [x for k, x in enumerate(vs) if k not in (a, b)]
        if not others:
            delta, w = Fraction(1), tuple(Fraction(0) for _ in range(p.dim))
        else:
            delta, w = _separate([vs[a], vs[b]], others, p.dim)
        if delta > 0:
            e = Edge(vs[a], vs[b], w)
            if not verify_edge_certificate(p, e):
                raise AssertionError(f"LP certificate failed for {e.u}, {e.v}")
            out.append(e)
    return out


def is_root_direction(d: Sequence[int]) -> bool:
    """True iff ``d`` is a nonzero multiple of some ``e_i - e_j``."""
    nz = [x for x in d if x]
    return len(nz) == 2 and nz[0] == -nz[1]


@dataclass(frozen=True)
class PermutohedronResult:
    is_generalized_permutohedron: bool
    edges: tuple[Edge, ...]
    bad_edges: tuple[Edge, ...]

    @property
    def witness(self) -> Edge | None:
        return self.bad_edges[0] if self.bad_edges else None


def is_generalized_permutohedron(p: LatticePolytope, cap: int = DEFAULT_VERTEX_CAP) -> PermutohedronResult:
    edges = polytope_edges(p, cap)
    bad = tuple(e for e in edges if not is_root_direction(e.direction))
    return PermutohedronResult(not bad, tuple(edges), bad)
