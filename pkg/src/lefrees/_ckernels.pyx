# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels``.

Same signatures, same outputs.  Exponent vectors are small nonnegative ints
and primes are below 2**31, so C ``int`` / ``long long`` suffice.
"""

from libc.stdlib cimport malloc, free, calloc


def rank_mod_p(rows, Py_ssize_t ncols, long long p):
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return 0
    cdef long long *a = <long long *> malloc(nrows * ncols * sizeof(long long))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, k, c, piv, rank = 0
    cdef long long f, inv, t
    try:
        for i in range(nrows):
            r = rows[i]
            for k in range(ncols):
                a[i * ncols + k] = r[k] % p
        for c in range(ncols):
            if rank == nrows:
                break
            piv = -1
            for i in range(rank, nrows):
                if a[i * ncols + c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != rank:
                for k in range(c, ncols):
                    t = a[piv * ncols + k]
                    a[piv * ncols + k] = a[rank * ncols + k]
                    a[rank * ncols + k] = t
            inv = _powmod(a[rank * ncols + c], p - 2, p)
            for k in range(c, ncols):
                a[rank * ncols + k] = a[rank * ncols + k] * inv % p
            for i in range(rank + 1, nrows):
                f = a[i * ncols + c]
                if f != 0:
                    for k in range(c, ncols):
                        t = a[rank * ncols + k]
                        if t != 0:
                            a[i * ncols + k] = (a[i * ncols + k] - f * t) % p
                            if a[i * ncols + k] < 0:
                                a[i * ncols + k] += p
            rank += 1
    finally:
        free(a)
    return rank


cdef long long _powmod(long long b, long long e, long long p):
    cdef long long r = 1
    b %= p
    while e > 0:
        if e & 1:
            r = r * b % p
        b = b * b % p
        e >>= 1
    return r


def minimalize(gens):
    uniq = sorted(set(gens), key=sum)
    cdef Py_ssize_t g = len(uniq)
    if g == 0:
        return []
    cdef Py_ssize_t n = len(uniq[0])
    cdef int *e = <int *> malloc(g * n * sizeof(int) + 1)
    cdef int *deg = <int *> malloc(g * sizeof(int) + 1)
    cdef int *kept = <int *> malloc(g * sizeof(int) + 1)
    cdef Py_ssize_t i, j, k, nk = 0
    cdef bint divides
    out = []
    try:
        for i in range(g):
            v = uniq[i]
            deg[i] = 0
            for k in range(n):
                e[i * n + k] = v[k]
                deg[i] += v[k]
        for i in range(g):
            for j in range(nk):
                if deg[kept[j]] >= deg[i]:
                    continue
                divides = True
                for k in range(n):
                    if e[kept[j] * n + k] > e[i * n + k]:
                        divides = False
                        break
                if divides:
                    break
            else:
                kept[nk] = i
                nk += 1
        for j in range(nk):
            out.append(uniq[kept[j]])
    finally:
        free(e)
        free(deg)
        free(kept)
    out.sort(reverse=True)
    return out


cdef struct _Ctx:
    int n
    int m
    int ncov
    int *a
    int *sums
    int *thr_off      # CSR offsets into thr (covers through each variable)
    int *thr
    int *end_off      # covers whose last variable is each position
    int *end
    int *set_off      # variables whose covers all complete at each position
    int *sett


cdef void _dfs(_Ctx *c, int pos, list out):
    cdef int val, t, k, v, top, q
    cdef bint ok, tight
    if pos == c.n:
        out.append(tuple([c.a[q] for q in range(c.n)]))
        return
    top = c.m if c.thr_off[pos + 1] > c.thr_off[pos] else 0
    for val in range(top + 1):
        c.a[pos] = val
        for t in range(c.thr_off[pos], c.thr_off[pos + 1]):
            c.sums[c.thr[t]] += val
        ok = True
        for t in range(c.end_off[pos], c.end_off[pos + 1]):
            if c.sums[c.end[t]] < c.m:
                ok = False
                break
        if ok:
            for t in range(c.set_off[pos], c.set_off[pos + 1]):
                v = c.sett[t]
                if c.a[v] == 0:
                    continue
                tight = False
                for q in range(c.thr_off[v], c.thr_off[v + 1]):
                    if c.sums[c.thr[q]] == c.m:
                        tight = True
                        break
                if not tight:
                    ok = False
                    break
        if ok:
            _dfs(c, pos + 1, out)
        for t in range(c.thr_off[pos], c.thr_off[pos + 1]):
            c.sums[c.thr[t]] -= val
    c.a[pos] = 0


def symbolic_power_gens(int n, covers, int m):
    covers = [tuple(sorted(cv)) for cv in covers]
    if not covers:
        return [tuple([0] * n)]
    cdef int ncov = len(covers)
    through = [[] for _ in range(n)]
    ends_at = [[] for _ in range(n)]
    for k, cv in enumerate(covers):
        for v in cv:
            through[v].append(k)
        ends_at[max(cv)].append(k)
    settle_at = [[] for _ in range(n)]
    for v in range(n):
        if through[v]:
            settle_at[max(max(covers[k]) for k in through[v])].append(v)

    cdef _Ctx c
    c.n = n
    c.m = m
    c.ncov = ncov
    c.a = <int *> calloc(n + 1, sizeof(int))
    c.sums = <int *> calloc(ncov + 1, sizeof(int))
    c.thr_off = _csr(through, n, &c.thr)
    c.end_off = _csr(ends_at, n, &c.end)
    c.set_off = _csr(settle_at, n, &c.sett)
    out = []
    try:
        _dfs(&c, 0, out)
    finally:
        free(c.a)
        free(c.sums)
        free(c.thr_off)
        free(c.thr)
        free(c.end_off)
        free(c.end)
        free(c.set_off)
        free(c.sett)
    out.sort(reverse=True)
    return out


cdef int *_csr(list lists, int n, int **data):
    cdef int total = sum(len(x) for x in lists)
    cdef int *off = <int *> malloc((n + 1) * sizeof(int))
    cdef int *d = <int *> malloc((total + 1) * sizeof(int))
    cdef int i, pos = 0
    for i in range(n):
        off[i] = pos
        for x in lists[i]:
            d[pos] = x
            pos += 1
    off[n] = pos
    data[0] = d
    return off
