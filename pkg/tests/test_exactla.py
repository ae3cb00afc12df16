import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lefrees import exactla
from lefrees.complex import Graph, Hypergraph, incidence_matrix
from lefrees.exactla import IntMatrix, Verdict

import helpers

M35 = IntMatrix.from_rows(
    [  # rows aef, ace, ecd, edf, bdf; columns a..f
        [2, 0, 0, 0, 2, 2],
        [2, 0, 2, 0, 2, 0],
        [0, 0, 2, 2, 2, 0],
        [0, 0, 0, 2, 2, 2],
        [0, 2, 0, 2, 0, 2],
    ]
)

small = st.integers(1, 6).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r
        )
    )
)


def test_rank_of_reference_matrix():
    assert exactla.rank(M35) == 4
    assert exactla.rank(M35, 2) == 0
    assert exactla.rank(M35, 3) == 4


def test_reference_matrix_maximal_minors_vanish():
    assert all(d == 0 for d in helpers.all_minors(M35.tolist(), 5))


def test_left_kernel_contains_reference_vector():
    # the left kernel is one-dimensional, so normalization pins the vector
    assert exactla.left_kernel_vector(M35) == (1, -1, 1, -1, 0)


def test_identity_ranks_and_kernels():
    i3 = IntMatrix.identity(3)
    for p in (0, 2, 3, 7):
        assert exactla.rank(i3, p) == 3
    assert exactla.left_kernel_vector(i3) is None
    assert exactla.right_kernel_vector(i3) is None


def test_zero_row_gives_first_basis_vector():
    z = IntMatrix.from_rows([[0, 0, 0]])
    assert exactla.left_kernel_vector(z) == (1,)
    assert exactla.right_kernel_vector(z) == (1, 0, 0)


def test_check_field():
    exactla.check_field(0)
    exactla.check_field(2147483647)
    for bad in (1, 4, -3, 2**31 + 11):
        with pytest.raises(ValueError):
            exactla.check_field(bad)


def test_is_prime_small():
    assert [p for p in range(50) if exactla.is_prime(p)] == [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
    ]


def test_random_prime_bits():
    rng = random.Random(1)
    for _ in range(5):
        p = exactla.random_prime(rng, 30)
        assert exactla.is_prime(p) and p.bit_length() == 30


@settings(max_examples=200, deadline=None)
@given(rows=small)
def test_rank_agrees_with_fraction_elimination(rows):
    m = IntMatrix.from_rows(rows)
    assert exactla.bareiss_rank(m) == helpers.fraction_rank(rows)
    assert exactla.rank(m) == helpers.fraction_rank(rows)


@settings(max_examples=200, deadline=None)
@given(rows=small, p=st.sampled_from([2, 3, 5]))
def test_modular_rank_bounded_by_rational_rank(rows, p):
    m = IntMatrix.from_rows(rows)
    assert exactla.rank(m, p) <= exactla.rank(m)


@settings(max_examples=150, deadline=None)
@given(rows=small)
def test_kernel_vectors_are_exact_and_normalized(rows):
    m = IntMatrix.from_rows(rows)
    r = exactla.rank(m)
    v = exactla.left_kernel_vector(m)
    assert (v is None) == (r == m.nrows)
    if v is not None:
        assert all(sum(v[i] * m[i, j] for i in range(m.nrows)) == 0 for j in range(m.ncols))
        assert math.gcd(*v) == 1 and next(x for x in v if x) > 0
    u = exactla.right_kernel_vector(m)
    assert (u is None) == (r == m.ncols)
    if u is not None:
        assert all(sum(m[i, j] * u[j] for j in range(m.ncols)) == 0 for i in range(m.nrows))


@settings(max_examples=100, deadline=None)
@given(rows=small, p=st.sampled_from([2, 3, 7]))
def test_modular_kernel_vectors(rows, p):
    m = IntMatrix.from_rows(rows)
    v = exactla.left_kernel_vector(m, p)
    if v is not None:
        assert any(v)
        assert all(sum(v[i] * m[i, j] for i in range(m.nrows)) % p == 0 for j in range(m.ncols))


@settings(max_examples=100, deadline=None)
@given(rows=st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_determinant_matches_leibniz(rows):
    assert exactla.determinant(IntMatrix.from_rows(rows)) == helpers.leibniz_det(rows)


@settings(max_examples=100, deadline=None)
@given(rows=small)
def test_snf_divisibility_and_minor_gcds(rows):
    m = IntMatrix.from_rows(rows)
    d = exactla.smith_normal_form(m)
    assert len(d) == exactla.rank(m)
    assert all(x > 0 for x in d)
    assert all(b % a == 0 for a, b in zip(d, d[1:]))
    for k in range(1, min(m.nrows, m.ncols, 3) + 1):
        g = math.gcd(*helpers.all_minors(rows, k))
        assert g == math.prod(d[:k]) if k <= len(d) else g == 0


def test_snf_examples():
    assert exactla.smith_normal_form(IntMatrix.from_rows([[2, 0], [0, 4]])) == [2, 4]
    assert exactla.smith_normal_form(IntMatrix.from_rows([[2, 0], [0, 0]])) == [2]
    assert exactla.smith_normal_form(IntMatrix.from_rows([[2, 4], [6, 8]])) == [2, 4]


def test_gcd_maximal_minors_examples():
    assert exactla.gcd_maximal_minors(IntMatrix.from_rows([[2, 4]])) == 2
    assert exactla.gcd_maximal_minors(IntMatrix.from_rows([[1, 2], [2, 4]])) == 0
    assert exactla.gcd_maximal_minors(IntMatrix.from_rows([[1], [2]])) == 1


def test_unimodularity_examples():
    tri = incidence_matrix(Hypergraph.of_graph(Graph.complete(3)))
    assert exactla.determinant(tri) in (2, -2)
    assert exactla.is_unimodular(tri) is Verdict.NO
    assert exactla.is_unimodular(IntMatrix.identity(4)) is Verdict.YES
    c4 = incidence_matrix(Hypergraph.of_graph(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])))
    assert exactla.is_unimodular(c4) is Verdict.YES


def test_unimodularity_budget():
    big = IntMatrix.from_rows([[1] * 8 for _ in range(8)])
    assert exactla.is_unimodular(big, budget=10) is Verdict.INCONCLUSIVE


def test_random_bipartite_graphs_are_unimodular():
    rng = random.Random(7)
    for _ in range(25):
        g = helpers.random_bipartite_graph(rng, rng.randint(2, 6))
        if not g.edges:
            continue
        assert exactla.is_unimodular(incidence_matrix(Hypergraph.of_graph(g))) is Verdict.YES


def test_incremental_rank_matches_batch():
    rng = random.Random(3)
    for _ in range(50):
        rows = helpers.random_matrix(rng, 7, 5)
        inc = exactla.IncrementalRank(len(rows[0]))
        for r in rows:
            inc.add(r)
        assert inc.rank == helpers.fraction_rank(rows)


def test_matrix_basics():
    a = IntMatrix.from_rows([[1, 2], [3, 4]])
    assert (a @ IntMatrix.identity(2)) == a
    assert a.T.tolist() == [[1, 3], [2, 4]]
    assert a.scale(2).row_sums() == [6, 14]
    assert a.reduce_mod(3).tolist() == [[1, 2], [0, 1]]
    with pytest.raises(ValueError):
        IntMatrix(2, 2, ((1, 2),))
