"""Simplicial complexes and the graphs and hypergraphs built from them.

Vertices are 0-based indices.  Every face, facet and edge is a sorted tuple,
and every list of them is sorted lexicographically, so matrices built from
these objects are reproducible entry for entry.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .exactla import IntMatrix, Verdict

Face = tuple[int, ...]


def _antichain(sets: Iterable[Iterable[int]]) -> tuple[list[Face], list[Face]]:
    """Split into (maximal sets, dropped sets); duplicates count as dropped."""
    items = [tuple(sorted(set(s))) for s in sets]
    uniq = sorted(set(items), key=lambda f: (-len(f), f))
    kept: list[Face] = []
    for f in uniq:
        fs = set(f)
        if not any(fs <= set(g) for g in kept):
            kept.append(f)
    dropped = list(items)
    for f in kept:
        dropped.remove(f)
    return sorted(kept), sorted(dropped)


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex given by its facets on vertex set ``range(n)``.

    Use :meth:`from_facets`, which minimalizes the facet list; the sets it had
    to drop are kept in ``dropped`` for reporting.
    """

    n: int
    facets: tuple[Face, ...]
    dropped: tuple[Face, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if not self.facets:
            raise ValueError("a simplicial complex needs at least one facet")
        for f in self.facets:
            if any(v < 0 or v >= self.n for v in f):
                raise ValueError(f"facet {f} uses a vertex outside range({self.n})")
        if list(self.facets) != sorted(self.facets):
            raise ValueError("facets must be sorted; use SimplicialComplex.from_facets")
        if len(self.facets) > 1 and () in self.facets:
            raise ValueError("the empty facet can only appear alone")

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]], n: int | None = None) -> SimplicialComplex:
        kept, dropped = _antichain(facets)
        if not kept:
            raise ValueError("a simplicial complex needs at least one facet")
        if len(kept) > 1 and () in kept:
            kept.remove(())
        if n is None:
            n = 1 + max((max(f) for f in kept if f), default=-1)
        return cls(n, tuple(kept), tuple(dropped))

    @classmethod
    def simplex(cls, n: int) -> SimplicialComplex:
        return cls(n, (tuple(range(n)),))

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    @property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) == 1

    @property
    def vertices(self) -> list[int]:
        return sorted({v for f in self.facets for v in f})

    @cached_property
    def _faces(self) -> dict[int, list[Face]]:
        table: dict[int, set[Face]] = {k: set() for k in range(-1, self.dim + 1)}
        for f in self.facets:
            for k in range(len(f) + 1):
                table[k - 1].update(itertools.combinations(f, k))
        return {k: sorted(v) for k, v in table.items()}

    @cached_property
    def _face_set(self) -> frozenset[Face]:
        return frozenset(f for fs in self._faces.values() for f in fs)

    def __contains__(self, face) -> bool:
        return tuple(sorted(face)) in self._face_set


def faces(cx: SimplicialComplex, i: int) -> list[Face]:
    """The i-dimensional faces, lexicographically sorted ([] if out of range)."""
    return list(cx._faces.get(i, []))


def face_index(cx: SimplicialComplex, i: int) -> dict[Face, int]:
    return {f: k for k, f in enumerate(cx._faces.get(i, []))}


def f_vector(cx: SimplicialComplex) -> tuple[int, ...]:
    """(f_{-1}, f_0, ..., f_d)."""
    return tuple(len(cx._faces[k]) for k in range(-1, cx.dim + 1))


def skeleton(cx: SimplicialComplex, i: int) -> SimplicialComplex:
    """The complex of all faces of dimension at most i."""
    if i >= cx.dim:
        return cx
    small = [f for f in cx.facets if len(f) - 1 <= i]
    return SimplicialComplex.from_facets(small + faces(cx, i), n=cx.n)


def pure_part(cx: SimplicialComplex, i: int) -> SimplicialComplex:
    """The complex whose facets are exactly the i-faces of ``cx``."""
    fs = faces(cx, i)
    if not fs:
        raise ValueError(f"complex has no faces of dimension {i}")
    return SimplicialComplex(cx.n, tuple(fs))


def is_flag(cx: SimplicialComplex) -> bool:
    """True iff every minimal non-face has at most two vertices."""
    return all(len(t) <= 2 for t in minimal_nonfaces(cx))


def minimal_nonfaces(cx: SimplicialComplex) -> list[Face]:
    """Minimal subsets of ``range(n)`` that are not faces, sorted."""
    out = [(v,) for v in range(cx.n) if (v,) not in cx._face_set]
    verts = cx.vertices
    for k in range(1, cx.dim + 2):
        for sigma in cx._faces[k - 1]:
            for v in verts:
                if v <= sigma[-1]:
                    continue
                tau = sigma + (v,)
                if tau in cx._face_set:
                    continue
                if all(tau[:j] + tau[j + 1 :] in cx._face_set for j in range(len(tau))):
                    out.append(tau)
    return sorted(out)


def connected_components(cx: SimplicialComplex) -> list[SimplicialComplex]:
    """Connected components, each on the full vertex range, ordered by first facet."""
    parent = list(range(len(cx.facets)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    owner: dict[int, int] = {}
    for k, f in enumerate(cx.facets):
        for v in f:
            if v in owner:
                parent[find(k)] = find(owner[v])
            else:
                owner[v] = k
    groups: dict[int, list[Face]] = {}
    for k, f in enumerate(cx.facets):
        groups.setdefault(find(k), []).append(f)
    return [SimplicialComplex(cx.n, tuple(g)) for g in sorted(groups.values())]


# --- graphs ---------------------------------------------------------------


@dataclass(frozen=True)
class Graph:
    """Simple graph on ``range(n)`` with sorted edge tuples."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge {(u, v)} for a graph on {self.n} vertices")
        if len(set(self.edges)) != len(self.edges) or list(self.edges) != sorted(self.edges):
            raise ValueError("edges must be distinct and sorted; use Graph.from_edges")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        es = set()
        for e in edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            es.add((min(u, v), max(u, v)))
        return cls(n, tuple(sorted(es)))

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, tuple(itertools.combinations(range(n), 2)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls(n, tuple((i, i + 1) for i in range(n - 1)))

    @classmethod
    def star(cls, leaves: int) -> Graph:
        """Center 0 joined to leaves 1..leaves."""
        return cls(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def complement(self) -> Graph:
        es = set(self.edges)
        return Graph(self.n, tuple(e for e in itertools.combinations(range(self.n), 2) if e not in es))

    def induced(self, keep: Iterable[int]) -> Graph:
        """Induced subgraph, vertices renumbered in increasing order."""
        keep = sorted(set(keep))
        pos = {v: i for i, v in enumerate(keep)}
        return Graph(len(keep), tuple((pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos))

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp, stack = [], [s]
            seen[s] = True
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def is_bipartite_component(self, comp: Sequence[int]) -> bool:
        color = {comp[0]: 0}
        stack = [comp[0]]
        while stack:
            u = stack.pop()
            for w in self.adjacency[u]:
                if w not in color:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return False
        return True

    def is_bipartite(self) -> bool:
        return all(self.is_bipartite_component(c) for c in self.components())

    def triangles(self) -> list[tuple[int, int, int]]:
        adj = self.adjacency
        return [
            (u, v, w)
            for u, v in self.edges
            for w in sorted(adj[u] & adj[v])
            if w > v
        ]

    def closed_neighborhood(self, vs: Iterable[int]) -> set[int]:
        out = set()
        for v in vs:
            out.add(v)
            out |= self.adjacency[v]
        return out

    def as_complex(self) -> SimplicialComplex:
        """The 1-dimensional complex: edges plus isolated vertices as facets."""
        used = {v for e in self.edges for v in e}
        facets = list(self.edges) + [(v,) for v in range(self.n) if v not in used]
        if not facets:
            facets = [()]
        return SimplicialComplex.from_facets(facets, n=self.n)


def one_skeleton_graph(cx: SimplicialComplex) -> Graph:
    return Graph(cx.n, tuple(faces(cx, 1)))


def facet_intersection_graph(cx: SimplicialComplex) -> Graph:
    """One vertex per facet (in facet order); adjacent iff the facets meet."""
    fs = [set(f) for f in cx.facets]
    return Graph(
        len(fs),
        tuple((i, j) for i, j in itertools.combinations(range(len(fs)), 2) if fs[i] & fs[j]),
    )


def whisker(g: Graph) -> Graph:
    """Attach a pendant vertex n + i to every vertex i."""
    return Graph.from_edges(2 * g.n, list(g.edges) + [(i, g.n + i) for i in range(g.n)])


def maximal_cliques(g: Graph) -> list[Face]:
    """All maximal cliques (Bron-Kerbosch with Tomita pivoting), sorted."""
    adj = g.adjacency
    out: list[Face] = []

    def expand(r: list[int], p: set[int], x: set[int]):
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in sorted(p - adj[pivot]):
            expand(r + [v], p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    expand([], set(range(g.n)), set())
    return sorted(out)


def independence_complex(g: Graph) -> SimplicialComplex:
    """Faces are the independent sets of ``g``; facets the maximal ones."""
    if g.n == 0:
        return SimplicialComplex(0, ((),))
    return SimplicialComplex(g.n, tuple(maximal_cliques(g.complement())))


def independent_sets(g: Graph) -> list[Face]:
    """All independent sets including the empty set, sorted by (size, lex)."""
    cx = independence_complex(g)
    return [f for k in range(-1, cx.dim + 1) for f in faces(cx, k)]


# --- hypergraphs ------------------------------------------------------------


@dataclass(frozen=True)
class Hypergraph:
    """Vertices ``range(n)`` and an antichain of edges (sorted tuples).

    Edge order is significant: it is the row order of the incidence matrix.
    """

    n: int
    edges: tuple[Face, ...]

    def __post_init__(self):
        es = [set(e) for e in self.edges]
        for i, e in enumerate(self.edges):
            if not e or list(e) != sorted(set(e)) or e[0] < 0 or e[-1] >= self.n:
                raise ValueError(f"bad hyperedge {e}")
        for i, j in itertools.permutations(range(len(es)), 2):
            if es[i] <= es[j]:
                raise ValueError(f"edges {self.edges[i]} and {self.edges[j]} are not an antichain")

    @property
    def uniformity(self) -> int | None:
        """The common edge size m, or None for an empty or mixed edge list."""
        sizes = {len(e) for e in self.edges}
        return sizes.pop() if len(sizes) == 1 else None

    @classmethod
    def of_complex(cls, cx: SimplicialComplex) -> Hypergraph:
        return cls(cx.n, cx.facets)

    @classmethod
    def of_graph(cls, g: Graph) -> Hypergraph:
        return cls(g.n, g.edges)

    def as_complex(self) -> SimplicialComplex:
        return SimplicialComplex.from_facets(self.edges, n=self.n)


def incidence_hypergraph(cx: SimplicialComplex, i: int, j: int) -> Hypergraph:
    """H(i, j): vertices are the i-faces, one edge per j-face (in lex order)."""
    if not (0 <= i < j <= cx.dim):
        raise ValueError(f"need 0 <= i < j <= dim = {cx.dim}, got ({i}, {j})")
    idx = face_index(cx, i)
    edges = tuple(
        tuple(sorted(idx[s] for s in itertools.combinations(tau, i + 1))) for tau in faces(cx, j)
    )
    return Hypergraph(len(idx), edges)


def incidence_matrix(h: Hypergraph) -> IntMatrix:
    """|E| x |V| zero-one matrix; rows follow the edge order, columns the vertices."""
    return IntMatrix(
        len(h.edges),
        h.n,
        tuple(tuple(1 if v in set(e) else 0 for v in range(h.n)) for e in h.edges),
    )


# --- forests ----------------------------------------------------------------


@dataclass(frozen=True)
class ForestResult:
    is_forest: bool
    order: tuple[Face, ...] = ()          # leaf order when is_forest
    obstruction: tuple[Face, ...] = ()    # a facet subset with no leaf otherwise


def _is_leaf(f: Face, others: Sequence[Face]) -> bool:
    if not others:
        return True
    fs = set(f)
    cuts = [fs & set(g) for g in others]
    return any(all(c <= cg for c in cuts) for cg in cuts)


def _is_good_leaf(f: Face, others: Sequence[Face]) -> bool:
    """The traces F & G over the other facets form a chain under inclusion."""
    fs = set(f)
    cuts = sorted({frozenset(fs & set(g)) for g in others}, key=len)
    return all(a <= b for a, b in zip(cuts, cuts[1:]))


def _good_leaf_order(facets: Sequence[Face]) -> list[Face] | None:
    rest = list(facets)
    order = []
    while rest:
        for k, f in enumerate(rest):
            if _is_good_leaf(f, rest[:k] + rest[k + 1 :]):
                order.append(f)
                del rest[k]
                break
        else:
            return None
        if len(rest) == 1:
            order.append(rest.pop())
    return order


def is_simplicial_forest(cx: SimplicialComplex, debug: bool = False) -> ForestResult:
    """Decide whether every sub-collection of facets has a leaf.

    Uses greedy removal of good leaves (a complex is a forest exactly when it
    admits a good leaf order).  On failure the obstruction is an inclusion-
    minimal non-forest facet subset, which therefore itself has no leaf.
    With ``debug=True`` and at most 12 facets the verdict is cross-checked
    against the all-subsets definition.
    """
    facets = list(cx.facets)
    order = _good_leaf_order(facets)
    if order is not None:
        result = ForestResult(True, order=tuple(order))
    else:
        core = list(facets)
        k = 0
        while k < len(core):
            trial = core[:k] + core[k + 1 :]
            if _good_leaf_order(trial) is None:
                core = trial
            else:
                k += 1
        result = ForestResult(False, obstruction=tuple(core))
    if debug and len(facets) <= 12:
        if result.is_forest != is_forest_by_definition(facets):
            raise AssertionError(f"leaf-order test disagrees with the definition on {facets}")
    return result


def is_forest_by_definition(facets: Sequence[Face]) -> bool:
    """Literal check: every nonempty facet subset has a leaf (exponential)."""
    for r in range(1, len(facets) + 1):
        for sub in itertools.combinations(facets, r):
            if not any(_is_leaf(f, sub[:k] + sub[k + 1 :]) for k, f in enumerate(sub)):
                return False
    return True


def has_leaf(facets: Sequence[Face]) -> bool:
    return any(_is_leaf(f, list(facets[:k]) + list(facets[k + 1 :])) for k, f in enumerate(facets))


# --- cycles -------------------------------------------------------------------


@dataclass(frozen=True)
class CycleSearch:
    verdict: Verdict
    # alternating (x1, E1, x2, E2, ..., xr, Er) for Berge cycles;
    # a vertex sequence for graph cycles
    witness: tuple = ()
    visited: int = 0


def has_odd_berge_cycle(h: Hypergraph, budget: int = 10**7) -> CycleSearch:
    """Search for a Berge cycle of odd length r >= 3.

    A cycle is x1, E1, x2, ..., xr, Er, x1 with distinct vertices, distinct
    edges, x_k and x_{k+1} in E_k and x_r, x_1 in E_r.  The smallest vertex
    of a cycle is taken as x1 to avoid revisiting rotations.
    """
    inc: list[list[int]] = [[] for _ in range(h.n)]
    for k, e in enumerate(h.edges):
        for v in e:
            inc[v].append(k)
    esets = [set(e) for e in h.edges]
    visited = 0

    class _Budget(Exception):
        pass

    def rec(start, path_v, path_e, used_v, used_e):
        nonlocal visited
        visited += 1
        if visited > budget:
            raise _Budget
        cur = path_v[-1]
        r = len(path_v)
        for k in inc[cur]:
            if k in used_e:
                continue
            if r >= 3 and r % 2 == 1 and start in esets[k]:
                return tuple(x for pair in zip(path_v, path_e + [k]) for x in pair)
            for y in h.edges[k]:
                if y <= start or y in used_v:
                    continue
                used_v.add(y)
                used_e.add(k)
                found = rec(start, path_v + [y], path_e + [k], used_v, used_e)
                used_v.discard(y)
                used_e.discard(k)
                if found:
                    return found
        return None

    try:
        for s in range(h.n):
            found = rec(s, [s], [], {s}, set())
            if found:
                return CycleSearch(Verdict.YES, found, visited)
    except _Budget:
        return CycleSearch(Verdict.INCONCLUSIVE, (), visited)
    return CycleSearch(Verdict.NO, (), visited)


def find_even_cycle(g: Graph, budget: int = 10**7) -> CycleSearch:
    """Search for a simple cycle of even length (>= 4) in a graph."""
    adj = [sorted(a) for a in g.adjacency]
    visited = 0

    class _Budget(Exception):
        pass

    def rec(start, path, on_path):
        nonlocal visited
        visited += 1
        if visited > budget:
            raise _Budget
        cur = path[-1]
        for w in adj[cur]:
            if w == start and len(path) >= 4 and len(path) % 2 == 0:
                return tuple(path)
            if w <= start or w in on_path:
                continue
            on_path.add(w)
            path.append(w)
            found = rec(start, path, on_path)
            path.pop()
            on_path.discard(w)
            if found:
                return found
        return None

    try:
        for s in range(g.n):
            found = rec(s, [s], {s})
            if found:
                return CycleSearch(Verdict.YES, found, visited)
    except _Budget:
        return CycleSearch(Verdict.INCONCLUSIVE, (), visited)
    return CycleSearch(Verdict.NO, (), visited)
