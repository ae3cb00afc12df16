"""Monomial ideals in ``n`` variables, stored as minimal exponent vectors.

Squarefree ideals get the extra machinery: vertex covers, symbolic powers,
symbolic defect and the defect polynomial of a complex.
"""

from __future__ import annotations

import builtins
import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from . import kernels
from .complex import (
    Graph,
    SimplicialComplex,
    faces,
    independent_sets,
    minimal_nonfaces,
    pure_part,
)

Monomial = tuple[int, ...]


def _indicator(n: int, support: Iterable[int]) -> Monomial:
    v = [0] * n
    for i in support:
        v[i] = 1
    return tuple(v)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def degree(a: Monomial) -> int:
    return builtins.sum(a)


def support(a: Monomial) -> tuple[int, ...]:
    return tuple(i for i, x in enumerate(a) if x)


@dataclass(frozen=True)
class MonomialIdeal:
    """Ideal of ``K[x_0..x_{n-1}]`` given by its minimal monomial generators.

    Build with :meth:`from_gens`, which minimalizes.  ``gens`` is sorted in
    descending lexicographic order of exponent vectors, so ``x_0`` leads.
    An empty ``gens`` is the zero ideal.
    """

    n: int
    gens: tuple[Monomial, ...]

    @classmethod
    def from_gens(cls, n: int, gens: Iterable[Sequence[int]]) -> MonomialIdeal:
        vs = []
        for g in gens:
            g = tuple(int(x) for x in g)
            if len(g) != n or any(x < 0 for x in g):
                raise ValueError(f"bad exponent vector {g} for {n} variables")
            vs.append(g)
        return cls(n, tuple(kernels.minimalize(vs)))

    @classmethod
    def from_supports(cls, n: int, supports: Iterable[Iterable[int]]) -> MonomialIdeal:
        return cls.from_gens(n, (_indicator(n, s) for s in supports))

    @classmethod
    def maximal(cls, n: int) -> MonomialIdeal:
        return cls.from_supports(n, ([i] for i in range(n)))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_squarefree(self) -> bool:
        return all(x <= 1 for g in self.gens for x in g)

    @property
    def is_equigenerated(self) -> bool:
        return len({degree(g) for g in self.gens}) <= 1

    @property
    def degrees(self) -> list[int]:
        return sorted({degree(g) for g in self.gens})

    def supports(self) -> list[tuple[int, ...]]:
        return [support(g) for g in self.gens]

    def __contains__(self, u) -> bool:
        return contains(self, tuple(u))

    def __len__(self) -> int:
        return len(self.gens)


def _check_same_ring(i: MonomialIdeal, j: MonomialIdeal):
    if i.n != j.n:
        raise ValueError(f"ideals live in different rings ({i.n} vs {j.n} variables)")


def product(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    _check_same_ring(i, j)
    return MonomialIdeal.from_gens(
        i.n, (tuple(a + b for a, b in zip(g, h)) for g in i.gens for h in j.gens)
    )


def power(i: MonomialIdeal, m: int) -> MonomialIdeal:
    if m < 1:
        raise ValueError(f"power exponent must be >= 1, got {m}")
    out = i
    for _ in range(m - 1):
        out = product(out, i)
    return out


def sum(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:  # noqa: A001
    _check_same_ring(i, j)
    return MonomialIdeal.from_gens(i.n, i.gens + j.gens)


def intersect(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    """Pairwise lcms, minimalized.  Quadratic in the generator counts."""
    _check_same_ring(i, j)
    return MonomialIdeal.from_gens(
        i.n, (tuple(max(a, b) for a, b in zip(g, h)) for g in i.gens for h in j.gens)
    )


def contains(i: MonomialIdeal, u: Monomial) -> bool:
    return any(divides(g, u) for g in i.gens)


def in_power(i: MonomialIdeal, u: Monomial, m: int) -> bool:
    """Whether ``u`` lies in ``I^m``, without forming ``I^m``."""
    gens = [g for g in i.gens if divides(g, u)]

    @lru_cache(maxsize=None)
    def rec(rest: Monomial, k: int, start: int) -> bool:
        if k == 0:
            return True
        for t in range(start, len(gens)):
            g = gens[t]
            if divides(g, rest):
                if rec(tuple(a - b for a, b in zip(rest, g)), k - 1, t):
                    return True
        return False

    return rec(tuple(u), m, 0)


# --- squarefree constructions -----------------------------------------------


def facet_ideal(x: SimplicialComplex | Graph) -> MonomialIdeal:
    if isinstance(x, Graph):
        return MonomialIdeal.from_supports(x.n, x.edges)
    return MonomialIdeal.from_supports(x.n, x.facets)


edge_ideal = facet_ideal


def stanley_reisner_ideal(cx: SimplicialComplex) -> MonomialIdeal:
    return MonomialIdeal.from_supports(cx.n, minimal_nonfaces(cx))


def minimal_transversals(n: int, edges: Iterable[Iterable[int]]) -> list[tuple[int, ...]]:
    """Minimal hitting sets of a set family (Berge's sequential algorithm)."""
    current: set[frozenset[int]] = {frozenset()}
    for e in sorted({tuple(sorted(set(e))) for e in edges}, key=lambda e: (len(e), e)):
        grown = set()
        for t in current:
            if t.intersection(e):
                grown.add(t)
            else:
                grown.update(t | {v} for v in e)
        current = {t for t in grown if not any(s < t for s in grown)}
    return sorted(tuple(sorted(t)) for t in current)


def minimal_vertex_covers(i: MonomialIdeal) -> list[tuple[int, ...]]:
    """Minimal vertex covers of the generator supports, lexicographically sorted."""
    if not i.is_squarefree:
        raise ValueError("vertex covers are defined here for squarefree ideals only")
    return minimal_transversals(i.n, i.supports())


def cover_ideal(x: SimplicialComplex | Graph) -> MonomialIdeal:
    f = facet_ideal(x)
    return MonomialIdeal.from_supports(f.n, minimal_vertex_covers(f))


def squarefree_veronese(n: int, l: int) -> MonomialIdeal:
    """All squarefree monomials of degree ``l`` in ``n`` variables."""
    return MonomialIdeal.from_supports(n, itertools.combinations(range(n), l))


def _require_squarefree(i: MonomialIdeal, m: int):
    if not i.is_squarefree:
        raise ValueError("symbolic powers are only supported for squarefree ideals")
    if m < 1:
        raise ValueError(f"symbolic power index must be >= 1, got {m}")


def symbolic_power(i: MonomialIdeal, m: int) -> MonomialIdeal:
    """Minimal generators of the m-th symbolic power of a squarefree ideal.

    A vector ``a`` lies in it iff ``sum(a[c] for c in C) >= m`` for every
    minimal vertex cover ``C``.  Minimal solutions have entries at most ``m``,
    so the search runs over the box ``[0, m]^n``.
    """
    _require_squarefree(i, m)
    if i.is_zero:
        return i
    covers = minimal_vertex_covers(i)
    return MonomialIdeal(i.n, tuple(kernels.symbolic_power_gens(i.n, covers, m)))


def in_symbolic_power(covers: Sequence[Sequence[int]], u: Monomial, m: int) -> bool:
    return all(builtins.sum(u[c] for c in cv) >= m for cv in covers)


def sdefect(i: MonomialIdeal, m: int) -> int:
    """Number of minimal generators of ``I^(m) / I^m``.

    For monomial ideals these are the minimal generators of ``I^(m)`` that
    are not in ``I^m`` (graded Nakayama).
    """
    sp = symbolic_power(i, m)
    if m == 1:
        return 0
    return builtins.sum(1 for g in sp.gens if not in_power(i, g, m))


def symbolic_gap(i: MonomialIdeal, m: int) -> list[Monomial]:
    """Minimal generators of ``I^(m)`` lying outside ``I^m``."""
    sp = symbolic_power(i, m)
    return [g for g in sp.gens if not in_power(i, g, m)]


@dataclass(frozen=True)
class DefectPolynomial:
    """Sparse polynomial in ``t`` stored as (exponent, coefficient) pairs.

    ``terms`` holds one pair per skeleton, including zero coefficients,
    in increasing exponent order.
    """

    m: int
    terms: tuple[tuple[int, int], ...]

    def coefficient(self, exponent: int) -> int:
        return dict(self.terms).get(exponent, 0)

    def coefficients(self) -> list[int]:
        return [c for _, c in self.terms]

    def theorem_indexed(self) -> dict[int, int]:
        """Coefficients keyed by k where the term is ``c_k t^(k+1)``."""
        return {e - 1: c for e, c in self.terms}

    def __str__(self) -> str:
        parts = [f"{c}t^{e}" for e, c in self.terms if c]
        return " + ".join(parts) if parts else "0"


def defect_polynomial(cx: SimplicialComplex, m: int) -> DefectPolynomial:
    """Sum over 1 <= i <= d-1 of sdefect(F(pure i-part), m) * t^(i+2)."""
    terms = tuple(
        (i + 2, sdefect(facet_ideal(pure_part(cx, i)), m)) for i in range(1, cx.dim)
    )
    return DefectPolynomial(m, terms)


@dataclass(frozen=True)
class NTFProbe:
    # per m: list of generators of I^(m) outside I^m (empty means equal)
    gaps: tuple[tuple[int, tuple[Monomial, ...]], ...]

    @property
    def equal_up_to(self) -> int | None:
        """Largest probed m with equality at every m' <= m (None if m=2 fails)."""
        last = None
        for m, g in self.gaps:
            if g:
                break
            last = m
        return last

    @property
    def gap_found(self) -> bool:
        return any(g for _, g in self.gaps)

    @property
    def first_gap(self) -> tuple[int, tuple[Monomial, ...]] | None:
        return next(((m, g) for m, g in self.gaps if g), None)


def ntf_probe(i: MonomialIdeal, m_max: int = 4) -> NTFProbe:
    """Compare ``I^(m)`` with ``I^m`` for m = 2..m_max.

    A clean probe only means equality up to ``m_max``; it does not certify
    that the ideal is normally torsion-free.
    """
    if m_max < 2:
        raise ValueError("m_max must be at least 2")
    if not i.is_squarefree:
        raise ValueError("the probe needs a squarefree ideal")
    return NTFProbe(tuple((m, tuple(symbolic_gap(i, m))) for m in range(2, m_max + 1)))


def second_power_triangle_form(g: Graph) -> MonomialIdeal:
    """``F(G)^2`` plus one cubic generator per triangle of ``G``."""
    f = edge_ideal(g)
    tris = MonomialIdeal.from_supports(g.n, g.triangles())
    return sum(power(f, 2), tris) if f.gens else f


def _monomials_of_degree(n: int, z: int):
    for cut in itertools.combinations(range(z + n - 1), n - 1):
        prev = -1
        out = []
        for c in cut + (z + n - 1,):
            out.append(c - prev - 1)
            prev = c
        yield tuple(out)


def quotient_hilbert(i: MonomialIdeal, m: int = 2, z_max: int | None = None) -> list[int]:
    """H(z) for z = 0..z_max, counting degree-z monomials in ``I^(m)`` outside ``I^m``.

    Plain enumeration, so only a finite probe of the Hilbert function.
    ``z_max`` defaults to ``n + 3``.
    """
    _require_squarefree(i, m)
    if z_max is None:
        z_max = i.n + 3
    covers = minimal_vertex_covers(i)
    pw = power(i, m) if i.gens else i
    memo: dict[Monomial, bool] = {}

    def counted(u: Monomial) -> bool:
        # both memberships only see min(u, m)
        key = tuple(min(x, m) for x in u)
        if key not in memo:
            memo[key] = in_symbolic_power(covers, key, m) and not contains(pw, key)
        return memo[key]

    if i.is_zero:
        return [0] * (z_max + 1)
    return [
        builtins.sum(1 for u in _monomials_of_degree(i.n, z) if counted(u))
        for z in range(z_max + 1)
    ]


def rhs_hilbert(g: Graph, z_max: int | None = None) -> list[int]:
    """Triangle-sum formula for the Hilbert function of ``F(G)^(2) / F(G)^2``.

    Each triangle ``T`` contributes ``H_T(z - 3)`` where ``H_T(0) = 1`` and,
    for ``k >= 1``, ``H_T(k)`` sums ``C(k-1, |S|-1)`` over the nonempty
    independent sets ``S`` of ``G`` minus the closed neighbourhood of ``T``.
    """
    if z_max is None:
        z_max = g.n + 3
    sizes_per_t = []
    for t in g.triangles():
        rest = [v for v in range(g.n) if v not in g.closed_neighborhood(t)]
        sub = g.induced(rest)
        sizes_per_t.append([len(s) for s in independent_sets(sub) if s])

    def h(sizes: list[int], k: int) -> int:
        if k < 0:
            return 0
        if k == 0:
            return 1
        return builtins.sum(comb(k - 1, s - 1) for s in sizes)

    return [builtins.sum(h(sz, z - 3) for sz in sizes_per_t) for z in range(z_max + 1)]


def log_matrix_rows(i: MonomialIdeal) -> list[list[int]]:
    return [list(g) for g in i.gens]


def face_ideal(cx: SimplicialComplex, k: int) -> MonomialIdeal:
    """Facet ideal of the complex whose facets are the k-faces."""
    return MonomialIdeal.from_supports(cx.n, faces(cx, k))
