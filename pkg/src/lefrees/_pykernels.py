"""Pure-Python reference implementations of the hot kernels.

Every function here has a twin in ``_ckernels.pyx`` with identical inputs,
outputs and ordering.  The compiled twin is preferred when importable; see
:mod:`lefrees.kernels`.
"""


def rank_mod_p(rows, ncols, p):
    """Rank over GF(p) of an integer matrix given as a list of rows."""
    a = [[x % p for x in r] for r in rows]
    nrows = len(a)
    rank = 0
    for c in range(ncols):
        if rank == nrows:
            break
        piv = -1
        for i in range(rank, nrows):
            if a[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        prow = a[rank]
        inv = pow(prow[c], p - 2, p)
        for k in range(c, ncols):
            prow[k] = prow[k] * inv % p
        for i in range(rank + 1, nrows):
            row = a[i]
            f = row[c]
            if f:
                for k in range(c, ncols):
                    if prow[k]:
                        row[k] = (row[k] - f * prow[k]) % p
        rank += 1
    return rank


def minimalize(gens):
    """Drop duplicates and every exponent vector divisible by another one.

    Returns the survivors sorted descending (lex, first variable largest).
    """
    uniq = sorted(set(gens), key=sum)
    kept = []
    for g in uniq:
        dg = sum(g)
        for h in kept:
            if sum(h) < dg and all(x <= y for x, y in zip(h, g)):
                break
        else:
            kept.append(g)
    kept.sort(reverse=True)
    return kept


def symbolic_power_gens(n, covers, m):
    """Minimal elements of {a in N^n : sum(a[i] for i in C) >= m for all C}.

    Depth-first search over the box [0, m]^n, variable by variable.  A cover
    is checked for feasibility as soon as its last variable is fixed, and a
    positive coordinate is rejected once every cover through it is complete
    without one of them being tight (such a coordinate could be decremented).
    """
    covers = [tuple(sorted(c)) for c in covers]
    if not covers:
        return [tuple([0] * n)]
    through = [[] for _ in range(n)]
    for k, c in enumerate(covers):
        for v in c:
            through[v].append(k)
    ends_at = [[] for _ in range(n)]
    for k, c in enumerate(covers):
        ends_at[c[-1]].append(k)
    settle_at = [[] for _ in range(n)]
    for v in range(n):
        if through[v]:
            settle_at[max(covers[k][-1] for k in through[v])].append(v)
    sums = [0] * len(covers)
    a = [0] * n
    out = []

    def rec(pos):
        if pos == n:
            out.append(tuple(a))
            return
        top = m if through[pos] else 0
        for val in range(top + 1):
            a[pos] = val
            for k in through[pos]:
                sums[k] += val
            ok = True
            for k in ends_at[pos]:
                if sums[k] < m:
                    ok = False
                    break
            if ok:
                for v in settle_at[pos]:
                    if a[v] and not any(sums[k] == m for k in through[v]):
                        ok = False
                        break
            if ok:
                rec(pos + 1)
            for k in through[pos]:
                sums[k] -= val
        a[pos] = 0

    rec(0)
    out.sort(reverse=True)
    return out
