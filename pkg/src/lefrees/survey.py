"""Survey of second defect polynomials over small forests.

For every forest ``G`` on 2..N vertices (one per isomorphism class) this
computes the independence complex, its f-vector and ``μ_2``, then checks

* equality: the coefficient of ``t^(i+2)`` equals ``f_(i+1)`` for every i;
* unimodal: the coefficients are unimodal with no internal zeros.

Trees come from ``networkx.nonisomorphic_trees``; each is rewritten in an
AHU canonical form so forest names, vertex numbering and report order do
not depend on the enumeration order.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import networkx as nx

from .complex import Graph, f_vector, independence_complex
from .monomial import defect_polynomial

QUESTIONS = ("equality", "unimodal")


def _rooted_code(adj: dict[int, list[int]], root: int, parent: int | None) -> str:
    kids = sorted(_rooted_code(adj, c, root) for c in adj[root] if c != parent)
    return "(" + "".join(kids) + ")"


def tree_code(edges: list[tuple[int, int]], n: int) -> str:
    """Canonical string of an unlabeled tree, rooted at its center."""
    if n == 1:
        return "()"
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    deg = {v: len(adj[v]) for v in adj}
    layer = [v for v in adj if deg[v] <= 1]
    left = n
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return min(_rooted_code(adj, c, None) for c in layer)


def _decode(code: str, offset: int) -> tuple[int, list[tuple[int, int]]]:
    """Vertices in preorder starting at ``offset``; returns (size, edges)."""
    edges = []
    stack: list[int] = []
    nxt = offset
    for ch in code:
        if ch == "(":
            if stack:
                edges.append((stack[-1], nxt))
            stack.append(nxt)
            nxt += 1
        else:
            stack.pop()
    return nxt - offset, edges


def trees(n: int) -> list[str]:
    """Canonical codes of all unlabeled trees on ``n`` vertices, sorted."""
    if n == 1:
        return ["()"]
    return sorted(tree_code(list(t.edges()), n) for t in nx.nonisomorphic_trees(n))


def _partitions(n: int, max_part: int | None = None):
    max_part = n if max_part is None else max_part
    if n == 0:
        yield ()
        return
    for k in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


@dataclass(frozen=True)
class Forest:
    name: str  # "+"-joined tree codes, larger trees first
    graph: Graph


def forests(n: int) -> list[Forest]:
    """One forest per isomorphism class on exactly ``n`` vertices."""
    by_size = {k: trees(k) for k in range(1, n + 1)}
    out = []
    for parts in _partitions(n):
        groups = [(k, sum(1 for p in parts if p == k)) for k in sorted(set(parts), reverse=True)]
        choices = [list(itertools.combinations_with_replacement(by_size[k], c)) for k, c in groups]
        for pick in itertools.product(*choices):
            codes = [c for grp in pick for c in grp]
            edges, off = [], 0
            for c in codes:
                size, es = _decode(c, off)
                edges.extend(es)
                off += size
            out.append(Forest("+".join(codes), Graph.from_edges(n, edges)))
    return sorted(out, key=lambda f: f.name)


def is_unimodal_no_internal_zeros(seq: list[int]) -> bool:
    if not seq:
        return True
    nz = [k for k, x in enumerate(seq) if x]
    if nz and any(seq[k] == 0 for k in range(nz[0], nz[-1] + 1)):
        return False
    k = 0
    while k + 1 < len(seq) and seq[k] <= seq[k + 1]:
        k += 1
    while k + 1 < len(seq) and seq[k] >= seq[k + 1]:
        k += 1
    return k == len(seq) - 1


def survey_one(forest: Forest) -> dict:
    cx = independence_complex(forest.graph)
    fv = f_vector(cx)
    mu = defect_polynomial(cx, 2)
    coeffs = mu.coefficients()
    # f_(i+1) sits at index i+2 of (f_-1, f_0, ...)
    tail = [fv[e] for e, _ in mu.terms]
    return {
        "forest": forest.name,
        "n": forest.graph.n,
        "edges": [list(e) for e in forest.graph.edges],
        "f_vector": list(fv),
        "mu2": [[e, c] for e, c in mu.terms],
        "equality": coeffs == tail,
        "unimodal": is_unimodal_no_internal_zeros(coeffs),
    }


def survey(max_vertices: int, questions=QUESTIONS, threads: int = 1) -> dict:
    if max_vertices > 11:
        raise ValueError("max_vertices is limited to 11")
    for q in questions:
        if q not in QUESTIONS:
            raise ValueError(f"unknown question {q!r}; expected one of {QUESTIONS}")
    todo = [f for n in range(2, max_vertices + 1) for f in forests(n)]
    if threads > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(survey_one, todo, chunksize=4))
    else:
        rows = [survey_one(f) for f in todo]
    return {
        "max_vertices": max_vertices,
        "forests": len(rows),
        "questions": list(questions),
        "counterexamples": {q: [r for r in rows if not r[q]] for q in questions},
        "results": rows,
    }
