"""Multiplication maps of A(Δ) = S / (SR ideal + squares) and Lefschetz tests.

A(Δ) has a monomial basis indexed by faces, with ``A_k`` spanned by the
(k-1)-faces.  Multiplication by ``L^j`` (L the sum of the variables) sends a
face to ``j!`` times the sum of the faces containing it with j more vertices,
so every map is a scaled incidence matrix and WLP/SLP become rank questions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import factorial

from . import exactla
from .complex import (
    SimplicialComplex,
    connected_components,
    f_vector,
    face_index,
    faces,
    find_even_cycle,
    facet_intersection_graph,
    is_simplicial_forest,
    one_skeleton_graph,
)
from .exactla import IntMatrix, Verdict
from .monomial import MonomialIdeal, NTFProbe, facet_ideal, ntf_probe


@dataclass(frozen=True)
class ArtinianAlgebra:
    cx: SimplicialComplex

    @property
    def hilbert(self) -> tuple[int, ...]:
        """dim A_0, dim A_1, ...; equal to the f-vector of the complex."""
        return f_vector(self.cx)

    @property
    def socle_degree(self) -> int:
        return self.cx.dim + 1

    @property
    def is_level(self) -> bool:
        return self.cx.is_pure


def multiplication_matrix(cx: SimplicialComplex, i: int, j: int, p: int = 0) -> IntMatrix:
    """Matrix of ``x L^j : A_i -> A_{i+j}``.

    Rows are the (i+j-1)-faces and columns the (i-1)-faces, both in lex
    order; the entry is ``j!`` when the column face lies in the row face.
    Entries are reduced mod ``p`` when ``p > 0``.
    """
    exactla.check_field(p)
    top = cx.dim + 1
    if i < 0 or j < 1 or i + j > top:
        raise ValueError(f"need 0 <= i, 1 <= j and i + j <= {top}, got i={i}, j={j}")
    scale = factorial(j)
    if p:
        scale %= p
    cols = face_index(cx, i - 1)
    rows = faces(cx, i + j - 1)
    data = []
    for tau in rows:
        r = [0] * len(cols)
        if scale:
            for sigma in combinations(tau, i):
                r[cols[sigma]] = scale
        data.append(tuple(r))
    return IntMatrix(len(rows), len(cols), tuple(data))


@dataclass(frozen=True)
class MapRecord:
    i: int
    j: int
    source_dim: int
    target_dim: int
    rank: int
    # for a failed map: a kernel vector (not injective) or a vector
    # annihilating the image (not surjective), over the working field
    witness: tuple[int, ...] | None = None

    @property
    def injective(self) -> bool:
        return self.rank == self.source_dim

    @property
    def surjective(self) -> bool:
        return self.rank == self.target_dim

    @property
    def full_rank(self) -> bool:
        return self.rank == min(self.source_dim, self.target_dim)

    def as_dict(self) -> dict:
        return {
            "i": self.i,
            "j": self.j,
            "source_dim": self.source_dim,
            "target_dim": self.target_dim,
            "rank": self.rank,
            "full_rank": self.full_rank,
            "injective": self.injective,
            "surjective": self.surjective,
            "witness": list(self.witness) if self.witness is not None else None,
        }


def map_record(cx: SimplicialComplex, i: int, j: int, p: int = 0, witness: bool = True) -> MapRecord:
    m = multiplication_matrix(cx, i, j, p)
    r = exactla.rank(m, p)
    w = None
    if witness and r < min(m.nrows, m.ncols):
        if m.ncols <= m.nrows:
            w = exactla.right_kernel_vector(m, p)
        else:
            w = exactla.left_kernel_vector(m, p)
    return MapRecord(i, j, m.ncols, m.nrows, r, w)


@dataclass(frozen=True)
class LefschetzReport:
    p: int
    kind: str  # "wlp" or "slp"
    maps: tuple[MapRecord, ...]
    complete: bool = True  # False when stopped at the first failure

    @property
    def holds(self) -> bool:
        return all(m.full_rank for m in self.maps)

    @property
    def failures(self) -> list[MapRecord]:
        return [m for m in self.maps if not m.full_rank]

    def as_dict(self) -> dict:
        return {
            "char": self.p,
            "kind": self.kind,
            "holds": self.holds,
            "complete": self.complete,
            "maps": [m.as_dict() for m in self.maps],
        }


def wlp_grid(cx: SimplicialComplex) -> list[tuple[int, int]]:
    return [(i, 1) for i in range(1, cx.dim + 1)]


def slp_grid(cx: SimplicialComplex) -> list[tuple[int, int]]:
    s = cx.dim + 1
    return [(i, j) for i in range(1, s) for j in range(1, s - i + 1)]


def _verdict(cx, p, kind, grid, early_exit, witness) -> LefschetzReport:
    exactla.check_field(p)
    out = []
    for i, j in grid:
        rec = map_record(cx, i, j, p, witness)
        out.append(rec)
        if early_exit and not rec.full_rank:
            return LefschetzReport(p, kind, tuple(out), complete=len(out) == len(grid))
    return LefschetzReport(p, kind, tuple(out))


def wlp_verdict(cx: SimplicialComplex, p: int = 0, early_exit: bool = False, witness: bool = True) -> LefschetzReport:
    """Check every ``x L : A_i -> A_{i+1}``, i >= 1."""
    return _verdict(cx, p, "wlp", wlp_grid(cx), early_exit, witness)


def slp_verdict(
    cx: SimplicialComplex,
    p: int = 0,
    early_exit: bool = False,
    witness: bool = True,
    maps: list[tuple[int, int]] | None = None,
) -> LefschetzReport:
    """Check every ``x L^j : A_i -> A_{i+j}`` with i, j >= 1 inside the socle degree.

    ``maps`` reorders or restricts the grid (a restricted grid yields an
    incomplete report).
    """
    grid = slp_grid(cx)
    if maps is not None:
        bad = [ij for ij in maps if ij not in grid]
        if bad:
            raise ValueError(f"maps outside the grid: {bad}")
        complete = sorted(set(maps)) == sorted(grid)
        rep = _verdict(cx, p, "slp", list(maps), early_exit, witness)
        return LefschetzReport(p, "slp", rep.maps, rep.complete and complete)
    return _verdict(cx, p, "slp", grid, early_exit, witness)


def analytic_spread(i: MonomialIdeal) -> int:
    """Rank over Q of the log-matrix, for an equigenerated monomial ideal."""
    if not i.is_equigenerated:
        raise ValueError("analytic spread via log-rank requires equigenerated generators")
    if i.is_zero:
        return 0
    return exactla.rank(IntMatrix.from_rows([list(g) for g in i.gens]), 0)


@dataclass(frozen=True)
class DaoNairResult:
    p: int
    prediction: bool | None  # None when the complex has fewer edges than vertices
    computed: bool
    record: MapRecord | None

    @property
    def agrees(self) -> bool | None:
        return None if self.prediction is None else self.prediction == self.computed


def daonair_criterion(cx: SimplicialComplex, p: int = 0) -> DaoNairResult:
    """Predicted and computed full rank of ``x L : A_1 -> A_2``.

    The prediction (char != 2 and no bipartite component in the 1-skeleton)
    is made only when there are at least as many edges as vertices.
    """
    exactla.check_field(p)
    if cx.dim < 1:
        return DaoNairResult(p, None, True, None)
    rec = map_record(cx, 1, 1, p, witness=False)
    fv = f_vector(cx)
    if fv[2] < fv[1]:
        return DaoNairResult(p, None, rec.full_rank, rec)
    g = one_skeleton_graph(cx)
    used = set(cx.vertices)
    comps = [c for c in g.components() if c[0] in used]
    pred = p != 2 and not any(g.is_bipartite_component(c) for c in comps)
    return DaoNairResult(p, pred, rec.full_rank, rec)


def hausel_check(cx: SimplicialComplex, ks: list[int] | None = None) -> list[MapRecord]:
    """``x L^(s-2k) : A_k -> A_(s-k)`` in characteristic 0, s the socle degree.

    These maps are injective for every k < s/2 when the algebra is level.
    """
    if not cx.is_pure:
        raise ValueError("hausel_check needs a pure complex (A(Δ) level)")
    s = cx.dim + 1
    if ks is None:
        ks = [k for k in range(s + 1) if 2 * k < s]
    out = []
    for k in ks:
        if not (0 <= k and 2 * k < s):
            raise ValueError(f"k={k} outside 0 <= k < {s}/2")
        out.append(map_record(cx, k, s - 2 * k, 0))
    return out


@dataclass(frozen=True)
class TwoDimSLP:
    spread: int
    f2: int
    by_spread: bool
    direct: LefschetzReport

    @property
    def agrees(self) -> bool:
        return self.by_spread == self.direct.holds


def two_dim_slp_criterion(cx: SimplicialComplex) -> TwoDimSLP:
    """SLP of a pure 2-dimensional complex with f_2 <= f_0 via ℓ(F(Δ)) == f_2."""
    if not cx.is_pure:
        raise ValueError("hypothesis failed: complex is not pure")
    if cx.dim != 2:
        raise ValueError(f"hypothesis failed: dimension is {cx.dim}, not 2")
    fv = f_vector(cx)
    if fv[3] > fv[1]:
        raise ValueError(f"hypothesis failed: f_2 = {fv[3]} exceeds f_0 = {fv[1]}")
    ell = analytic_spread(facet_ideal(cx))
    return TwoDimSLP(ell, fv[3], ell == fv[3], slp_verdict(cx, 0))


@dataclass(frozen=True)
class LinearTypeResult:
    verdict: Verdict  # YES (sufficient condition met) or INCONCLUSIVE
    reason: str
    even_cycle: tuple[int, ...] = ()  # facet indices, when one was found


def linear_type_sufficient(cx: SimplicialComplex, budget: int = 10**7) -> LinearTypeResult:
    """Sufficient test for F(Δ) being of linear type.

    Passes when Δ is a simplicial forest or its facet intersection graph has
    no even cycle.  The forest check comes first because a forest can still
    have even cycles in that graph (four triangles sharing one vertex).
    """
    if is_simplicial_forest(cx).is_forest:
        return LinearTypeResult(Verdict.YES, "simplicial forest")
    search = find_even_cycle(facet_intersection_graph(cx), budget)
    if search.verdict is Verdict.NO:
        return LinearTypeResult(Verdict.YES, "no even cycle in the facet intersection graph")
    if search.verdict is Verdict.YES:
        return LinearTypeResult(Verdict.INCONCLUSIVE, "even cycle found", search.witness)
    return LinearTypeResult(Verdict.INCONCLUSIVE, "cycle search budget exhausted")


def forest_slp_check(cx: SimplicialComplex, primes=(3, 5, 7)) -> dict[int, LefschetzReport]:
    """SLP at characteristic 0 and the given odd primes for a forest of 2-dim trees."""
    for comp in connected_components(cx):
        if comp.dim != 2:
            raise ValueError(f"precondition failed: a component has dimension {comp.dim}, not 2")
        if not is_simplicial_forest(comp).is_forest:
            raise ValueError("precondition failed: a component is not a simplicial tree")
    for p in primes:
        if p == 2 or not exactla.is_prime(p):
            raise ValueError(f"expected odd primes, got {p}")
    return {p: slp_verdict(cx, p) for p in (0, *primes)}


@dataclass(frozen=True)
class NTFSLPReport:
    probe: NTFProbe
    top_map: MapRecord
    slp: LefschetzReport

    @property
    def hypothesis_met(self) -> bool:
        """No symbolic gap up to the probe bound."""
        return not self.probe.gap_found

    @property
    def consistent(self) -> bool:
        return not self.hypothesis_met or not self.slp.holds


def ntf_slp_interplay(cx: SimplicialComplex, m_max: int = 4) -> NTFSLPReport:
    """Probe normal torsion-freeness of F(Δ) next to SLP in characteristic 0.

    The top map ``A_1 -> A_(d+1)`` is j! times the log-matrix of F(Δ); with
    at least as many facets as vertices it fails whenever that ideal is
    normally torsion-free.  The SLP grid is checked with that map first and
    stops at the first failure.
    """
    if not cx.is_pure:
        raise ValueError("precondition failed: complex is not pure")
    fv = f_vector(cx)
    if fv[-1] < fv[1]:
        raise ValueError(f"precondition failed: f_d = {fv[-1]} < f_0 = {fv[1]}")
    d = cx.dim
    probe = ntf_probe(facet_ideal(cx), m_max)
    grid = slp_grid(cx)
    order = [(1, d)] + [ij for ij in grid if ij != (1, d)]
    rep = slp_verdict(cx, 0, early_exit=True, maps=order)
    return NTFSLPReport(probe, rep.maps[0], rep)
