"""Exact linear algebra on integer matrices, over QQ or over a prime field GF(p).

Everything here works on integer matrices with Python's arbitrary-precision
ints; there is no floating point anywhere.  Rank over QQ is computed by
Bareiss fraction-free elimination, rank over GF(p) by the modular kernel in
:mod:`lefrees.kernels`.
"""

from __future__ import annotations

import enum
import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import kernels

# Largest prime below 2**31; used for the modular full-rank shortcut.
_CERT_PRIME = 2147483647


class Verdict(enum.Enum):
    YES = "yes"
    NO = "no"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class IntMatrix:
    """Dense immutable integer matrix, row-major."""

    nrows: int
    ncols: int
    data: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.data) != self.nrows or any(len(r) != self.ncols for r in self.data):
            raise ValueError("matrix dimensions do not match data")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], ncols: int | None = None) -> IntMatrix:
        data = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            if not data:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(data[0])
        return cls(len(data), ncols, data)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> IntMatrix:
        return cls(nrows, ncols, tuple((0,) * ncols for _ in range(nrows)))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.data[i]

    def transpose(self) -> IntMatrix:
        return IntMatrix(self.ncols, self.nrows, tuple(zip(*self.data)) if self.nrows else tuple(() for _ in range(self.ncols)))

    T = property(transpose)

    def scale(self, c: int) -> IntMatrix:
        return IntMatrix(self.nrows, self.ncols, tuple(tuple(c * x for x in r) for r in self.data))

    def reduce_mod(self, p: int) -> IntMatrix:
        return IntMatrix(self.nrows, self.ncols, tuple(tuple(x % p for x in r) for r in self.data))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.data)) if other.nrows else [()] * other.ncols
        return IntMatrix(
            self.nrows,
            other.ncols,
            tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.data),
        )

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> IntMatrix:
        return IntMatrix(len(rows), len(cols), tuple(tuple(self.data[i][j] for j in cols) for i in rows))

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.data]

    def row_sums(self) -> list[int]:
        return [sum(r) for r in self.data]

    def __str__(self):
        if not self.nrows:
            return f"<0x{self.ncols} matrix>"
        w = max(len(str(x)) for r in self.data for x in r) if self.ncols else 1
        return "\n".join(" ".join(str(x).rjust(w) for x in r) for r in self.data)


def as_matrix(M) -> IntMatrix:
    if isinstance(M, IntMatrix):
        return M
    return IntMatrix.from_rows(M)


def check_field(p: int) -> None:
    if p == 0:
        return
    if not (2 <= p < 2**31) or not is_prime(p):
        raise ValueError(f"characteristic must be 0 or a prime below 2**31, got {p}")


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic Miller-Rabin witnesses for p < 3.3e24
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


def random_prime(rng: random.Random, bits: int = 30) -> int:
    while True:
        q = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if is_prime(q):
            return q


# --- rank ---------------------------------------------------------------


def bareiss_rank(M) -> int:
    """Rank over QQ by fraction-free (Bareiss) elimination.

    Zero columns are skipped; every intermediate entry is a minor of ``M``, so
    each division is exact.
    """
    M = as_matrix(M)
    a = M.tolist()
    m, n = M.nrows, M.ncols
    prev = 1
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pr = a[r]
        pv = pr[c]
        for i in range(r + 1, m):
            row = a[i]
            f = row[c]
            for k in range(c + 1, n):
                row[k] = (pv * row[k] - f * pr[k]) // prev
            row[c] = 0
        prev = pv
        r += 1
    return r


def rank(M, p: int = 0) -> int:
    """Rank of ``M`` over QQ (``p == 0``) or GF(p).

    Over QQ a full-rank answer from one large prime is already a certificate
    (reduction mod p can only lower the rank), so Bareiss runs only when that
    shortcut is inconclusive.
    """
    M = as_matrix(M)
    check_field(p)
    if M.nrows == 0 or M.ncols == 0:
        return 0
    if p:
        return kernels.rank_mod_p(M.data, M.ncols, p)
    full = min(M.nrows, M.ncols)
    if kernels.rank_mod_p(M.data, M.ncols, _CERT_PRIME) == full:
        return full
    return bareiss_rank(M)


def rank_mod_p(M, p: int) -> int:
    M = as_matrix(M)
    check_field(p)
    if p == 0:
        raise ValueError("rank_mod_p needs a prime")
    if M.nrows == 0 or M.ncols == 0:
        return 0
    return kernels.rank_mod_p(M.data, M.ncols, p)


def determinant(M) -> int:
    """Determinant of a square integer matrix (Bareiss)."""
    M = as_matrix(M)
    n = M.nrows
    if n != M.ncols:
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    a = M.tolist()
    sign = 1
    prev = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        pr = a[c]
        pv = pr[c]
        for i in range(c + 1, n):
            row = a[i]
            f = row[c]
            for k in range(c + 1, n):
                row[k] = (pv * row[k] - f * pr[k]) // prev
            row[c] = 0
        prev = pv
    return sign * a[n - 1][n - 1]


class IncrementalRank:
    """Integer row echelon basis that grows one vector at a time.

    Rows are kept primitive (content divided out) so entries stay small.
    ``add`` returns True when the vector enlarged the span over QQ.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[list[int]] = []
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def add(self, vec: Sequence[int]) -> bool:
        v = list(vec)
        for row, c in zip(self.rows, self.pivots):
            f = v[c]
            if f:
                pv = row[c]
                v = [pv * x - f * y for x, y in zip(v, row)]
                g = math.gcd(*v)
                if g > 1:
                    v = [x // g for x in v]
        c = next((k for k, x in enumerate(v) if x), None)
        if c is None:
            return False
        g = math.gcd(*v)
        v = [x // g for x in v]
        self.rows.append(v)
        self.pivots.append(c)
        return True


# --- kernels ------------------------------------------------------------


def _normalize(vec: list[int]) -> tuple[int, ...]:
    g = math.gcd(*vec)
    vec = [x // g for x in vec]
    first = next(x for x in vec if x)
    if first < 0:
        vec = [-x for x in vec]
    return tuple(vec)


def _rref_nullvector_q(rows: list[list[int]], ncols: int) -> tuple[int, ...] | None:
    """A nonzero rational x with rows @ x = 0, scaled to a primitive integer vector."""
    a = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pv = a[r][c]
        a[r] = [x / pv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    free = next((c for c in range(ncols) if c not in pivots), None)
    if free is None:
        return None
    x = [Fraction(0)] * ncols
    x[free] = Fraction(1)
    for i, c in enumerate(pivots):
        x[c] = -a[i][free]
    den = math.lcm(*(q.denominator for q in x))
    return _normalize([int(q * den) for q in x])


def _rref_nullvector_p(rows: list[list[int]], ncols: int, p: int) -> tuple[int, ...] | None:
    a = [[x % p for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], p - 2, p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    free = next((c for c in range(ncols) if c not in pivots), None)
    if free is None:
        return None
    x = [0] * ncols
    x[free] = 1
    for i, c in enumerate(pivots):
        x[c] = -a[i][free] % p
    return tuple(x)


def right_kernel_vector(M, p: int = 0) -> tuple[int, ...] | None:
    """Nonzero x with M x = 0, or None when M has full column rank.

    Over QQ the vector is primitive with positive first nonzero entry; over
    GF(p) its entries lie in [0, p) with first nonzero entry 1.
    """
    M = as_matrix(M)
    check_field(p)
    if M.ncols == 0:
        return None
    if p:
        return _rref_nullvector_p(M.tolist(), M.ncols, p)
    return _rref_nullvector_q(M.tolist(), M.ncols)


def left_kernel_vector(M, p: int = 0) -> tuple[int, ...] | None:
    """Nonzero v with v^T M = 0, or None when the rows are independent."""
    return right_kernel_vector(as_matrix(M).transpose(), p)


# --- Smith normal form ----------------------------------------------------


def smith_normal_form(M) -> list[int]:
    """Nonzero invariant factors d_1 | d_2 | ... of an integer matrix.

    Row and column reduction with the smallest-magnitude pivot, then a
    gcd/lcm pass to enforce the divisibility chain.
    """
    M = as_matrix(M)
    a = M.tolist()
    m, n = M.nrows, M.ncols
    diag = []
    t = 0
    while t < min(m, n):
        nz = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n) if a[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            pv = a[t][t]
            done = True
            for i in range(t + 1, m):
                q = a[i][t] // pv
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = a[t][j] // pv
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    done = False
            if done:
                break
            # a remainder smaller than the pivot exists; move it to (t, t)
            _, i, j = min(
                [(abs(a[i][t]), i, t) for i in range(t + 1, m) if a[i][t]]
                + [(abs(a[t][j]), t, j) for j in range(t + 1, n) if a[t][j]]
            )
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    # d_i | d_{i+1}: repeatedly replace (a, b) by (gcd, lcm)
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            x, y = diag[i], diag[i + 1]
            g = math.gcd(x, y)
            if g != x:
                diag[i], diag[i + 1] = g, x * y // g
                changed = True
    return diag


def gcd_maximal_minors(M) -> int:
    """gcd of the maximal minors; 0 when the matrix is not of full rank."""
    M = as_matrix(M)
    if M.nrows > M.ncols:
        M = M.transpose()
    if M.nrows == 0:
        return 1
    d = smith_normal_form(M)
    if len(d) < M.nrows:
        return 0
    return math.prod(d)


def is_unimodular(M, size_cap: int | None = None, budget: int = 10**6) -> Verdict:
    """Whether every square minor (up to ``size_cap``) lies in {-1, 0, 1}.

    Exhaustive, smallest minors first, stopping at the first bad one.
    Returns ``Verdict.INCONCLUSIVE`` if more than ``budget`` minors would be
    needed.
    """
    M = as_matrix(M)
    top = min(M.nrows, M.ncols)
    if size_cap is not None:
        top = min(top, size_cap)
    if any(abs(x) > 1 for r in M.data for x in r):
        return Verdict.NO
    used = 0
    for k in range(2, top + 1):
        for rows in itertools.combinations(range(M.nrows), k):
            for cols in itertools.combinations(range(M.ncols), k):
                used += 1
                if used > budget:
                    return Verdict.INCONCLUSIVE
                if abs(determinant(M.submatrix(rows, cols))) > 1:
                    return Verdict.NO
    return Verdict.YES
