import pytest
from hypothesis import given, settings, strategies as st

from superorbit.field import rat
from superorbit.linalg import (LinearSolver, Matrix, SpanBuilder, Subspace,
                               kernel, solve_in_span, solve_linear)


def rv(*xs):
    return [rat(x) for x in xs]


def test_kernel_identity_is_zero():
    assert kernel(Matrix.identity(3)).dim == 0


def test_kernel_zero_matrix_is_full():
    assert kernel(Matrix.zero(2, 5)).dim == 5


def test_kernel_vectors_annihilate():
    m = Matrix(2, 4, [rv(1, 2, 0, 1), rv(0, 1, 1, 0)])
    ker = kernel(m)
    assert ker.dim == 2
    for v in ker.rows:
        for row in m.data:
            assert sum(a * b for a, b in zip(row, v)) == 0


def test_rref_idempotent_and_canonical():
    m = Matrix(3, 3, [rv(2, 4, 6), rv(1, 2, 3), rv(0, 1, 1)])
    r = m.rref()
    assert r.rref() == r
    assert r.data[0][0] == 1


def test_member_and_trivial_lattice():
    v = rv(1, 2, 3)
    s = Subspace.span([v], 3)
    assert s.member(v)
    assert s.member(rv(2, 4, 6))
    assert not s.member(rv(1, 0, 0))
    assert s.intersect(s) == s
    assert (s + s) == s


def test_intersection_example():
    s = Subspace.span([rv(1, 0, 0), rv(0, 1, 0)], 3)
    t = Subspace.span([rv(0, 1, 0), rv(0, 0, 1)], 3)
    i = s.intersect(t)
    assert i.dim == 1 and i.member(rv(0, 1, 0))


def test_ambient_mismatch_raises():
    s = Subspace.span([rv(1, 0)], 2)
    t = Subspace.span([rv(1, 0, 0)], 3)
    with pytest.raises(ValueError):
        s + t
    with pytest.raises(ValueError):
        s.intersect(t)


def test_equality_is_mutual_membership():
    s = Subspace.span([rv(1, 1, 0), rv(0, 0, 1)], 3)
    t = Subspace.span([rv(2, 2, 2), rv(0, 0, -1)], 3)
    assert s == t
    assert s.contains(t) and t.contains(s)


small_vecs = st.lists(
    st.lists(st.integers(-4, 4).map(rat), min_size=4, max_size=4),
    min_size=0, max_size=4)


@settings(max_examples=60, deadline=None)
@given(small_vecs)
def test_rank_nullity(vecs):
    rows = len(vecs)
    m = Matrix(rows, 4, vecs) if rows else Matrix.zero(0, 4)
    if rows == 0:
        return
    rank = Subspace.span(vecs, 4).dim
    assert rank + kernel(m).dim == 4


@settings(max_examples=60, deadline=None)
@given(small_vecs, small_vecs)
def test_modular_lattice_law(a, b):
    s = Subspace.span(a, 4)
    t = Subspace.span(b, 4)
    assert s.dim + t.dim == (s + t).dim + s.intersect(t).dim


@settings(max_examples=40, deadline=None)
@given(small_vecs, small_vecs)
def test_subspace_equality_canonical(a, b):
    s = Subspace.span(a, 4)
    t = Subspace.span(b, 4)
    same = s.contains(t) and t.contains(s)
    assert (s == t) == same
    if same:
        assert s.rows == t.rows


def test_span_builder_matches_span():
    vecs = [rv(1, 2, 3, 4), rv(2, 4, 6, 8), rv(0, 1, 0, 1), rv(1, 3, 3, 5)]
    sb = SpanBuilder(4)
    grew = [sb.insert(v) for v in vecs]
    assert grew == [True, False, True, False]
    assert sb.subspace() == Subspace.span(vecs, 4)


def test_solve_in_span_and_linear():
    basis = [rv(1, 0, 1), rv(0, 1, 1)]
    assert solve_in_span(basis, rv(2, 3, 5)) == [rat(2), rat(3)]
    assert solve_in_span(basis, rv(0, 0, 1)) is None
    ls = LinearSolver(basis)
    assert ls.coords(rv(1, 1, 2)) == [rat(1), rat(1)]
    m = Matrix(2, 2, [rv(1, 1), rv(0, 1)])
    assert solve_linear(m, rv(3, 1)) == rv(2, 1)
    assert solve_linear(Matrix(2, 1, [rv(1), rv(1)]), rv(0, 1)) is None
