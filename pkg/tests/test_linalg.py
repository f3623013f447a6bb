import pytest
from hypothesis import given, strategies as st

from eqhom.linalg import (LinAlgError, SparseMatrix, integer_kernel, is_unimodular, lattice_basis, matvec, smith_form,
                          smith_invariants, solve_integer)
from eqhom.oracles import determinantal_factors, rational_rank


def matrices(max_rows=5, max_cols=5, bound=6):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(st.lists(st.integers(-bound, bound), min_size=n, max_size=n),
                               min_size=m, max_size=m)))


def _mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


@given(matrices())
def test_invariants_match_minors(a):
    inv = smith_invariants(SparseMatrix.from_dense(a))
    assert inv == determinantal_factors(a)
    assert len(inv) == rational_rank(a)
    assert all(inv[i + 1] % inv[i] == 0 for i in range(len(inv) - 1))


@given(matrices())
def test_smith_form_transforms(a):
    D, U, V = smith_form(a)
    assert is_unimodular(U) and is_unimodular(V)
    assert _mul(_mul(U, a), V) == D
    off = [D[i][j] for i in range(len(D)) for j in range(len(D[0])) if i != j]
    assert not any(off)


@given(matrices())
def test_kernel_is_a_basis_of_solutions(a):
    K = integer_kernel(a)
    n = len(a[0])
    assert len(K) == n - rational_rank(a)
    for v in K:
        assert matvec(a, v) == [0] * len(a)
    # saturated: the kernel lattice is a direct summand
    if K:
        assert all(d == 1 for d in smith_invariants(SparseMatrix.from_dense(K)))


@given(matrices(), st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_solve_recovers_a_solution(a, x0):
    x0 = x0[:len(a[0])]
    b = matvec(a, x0)
    x, reason = solve_integer(a, b)
    assert reason is None and matvec(a, x) == b


def test_solve_reports_why_it_fails():
    assert solve_integer([[2]], [1]) == (None, "integral")
    assert solve_integer([[1], [1]], [0, 1]) == (None, "rational")


def test_lattice_basis_spans():
    B = lattice_basis([[2, 0], [0, 2], [2, 2]], 2)
    assert len(B) == 2
    assert sorted(smith_invariants(SparseMatrix.from_dense(B))) == [2, 2]


def test_known_invariants():
    assert smith_invariants(SparseMatrix.from_dense([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])) == [2, 6, 12]
    assert smith_invariants(SparseMatrix.zero(3, 2)) == []


def test_sparse_product_and_shape():
    a = SparseMatrix.from_dense([[1, 2], [3, 4]])
    assert a.matmul(a).to_dense() == [[7, 10], [15, 22]]
    assert a.apply({0: 1, 1: -1}) == {0: -1, 1: -1}
    with pytest.raises(LinAlgError):
        SparseMatrix.from_dense([[1, 2], [3]])
