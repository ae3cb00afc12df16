"""Dense tableau simplex over the rationals with Bland's anti-cycling rule.

Only the form needed here is supported: maximize ``c.x`` subject to
``A x <= b``, ``x >= 0`` with ``b >= 0``, so the slack basis is feasible
and no phase one is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" or "unbounded"
    value: Fraction | None
    x: tuple[Fraction, ...]
    pivots: int


def maximize(c: Sequence, a: Sequence[Sequence], b: Sequence, max_pivots: int = 100_000) -> LPResult:
    m, n = len(a), len(c)
    if any(len(row) != n for row in a) or len(b) != m:
        raise ValueError("inconsistent LP dimensions")
    if any(v < 0 for v in b):
        raise ValueError("right-hand side must be nonnegative (origin must be feasible)")
    # columns 0..n-1 structural, n..n+m-1 slack, last = rhs
    t = [
        [Fraction(v) for v in row] + [Fraction(int(k == r)) for k in range(m)] + [Fraction(b[r])]
        for r, row in enumerate(a)
    ]
    obj = [Fraction(v) for v in c] + [Fraction(0)] * (m + 1)  # reduced costs, value = -obj[-1]
    basis = list(range(n, n + m))
    pivots = 0
    while True:
        enter = next((j for j in range(n + m) if obj[j] > 0), None)
        if enter is None:
            break
        leave, best = None, None
        for r in range(m):
            coef = t[r][enter]
            if coef > 0:
                ratio = t[r][-1] / coef
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    leave, best = r, ratio
        if leave is None:
            return LPResult("unbounded", None, (), pivots)
        pivots += 1
        if pivots > max_pivots:
            raise RuntimeError("simplex pivot limit exceeded")
        prow = t[leave]
        pv = prow[enter]
        if pv != 1:
            prow = [v / pv for v in prow]
            t[leave] = prow
        nz = [k for k, v in enumerate(prow) if v]
        for r in range(m):
            if r != leave:
                f = t[r][enter]
                if f:
                    row = t[r]
                    for k in nz:
                        row[k] -= f * prow[k]
        f = obj[enter]
        for k in nz:
            obj[k] -= f * prow[k]
        basis[leave] = enter
    x = [Fraction(0)] * n
    for r, var in enumerate(basis):
        if var < n:
            x[var] = t[r][-1]
    return LPResult("optimal", -obj[-1], tuple(x), pivots)
