from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from g3lr.linalg import (Subspace, complement, full_subspace,
                         intersect_subspaces, rref, solve_homogeneous,
                         span, sum_subspaces, unit_vec, vec, zero_subspace,
                         zero_vec, is_zero_vec, vec_add, vec_scale)

_scalars = st.fractions(min_value=-4, max_value=4, max_denominator=3)


def _matrix(n_cols, max_rows=4):
    return st.lists(
        st.lists(_scalars, min_size=n_cols, max_size=n_cols).map(tuple),
        min_size=0, max_size=max_rows)


def test_rref_shape():
    rows = rref([vec((2, 4)), vec((1, 2)), vec((0, 1))])
    assert rows == [vec((1, 0)), vec((0, 1))]


def test_rref_empty():
    assert rref([]) == []
    assert rref([vec((0, 0, 0))]) == []


@settings(max_examples=60)
@given(_matrix(4))
def test_rref_canonical_pivots(rows):
    red = rref(rows)
    pivots = [next(j for j, x in enumerate(r) if x != 0) for r in red]
    assert pivots == sorted(pivots) and len(set(pivots)) == len(pivots)
    for r, p in zip(red, pivots):
        assert r[p] == 1
        # pivot columns cleared everywhere else
        for other in red:
            if other is not r:
                assert other[p] == 0


@settings(max_examples=60)
@given(_matrix(4))
def test_span_invariant_under_shuffle(rows):
    s = Subspace(4, rows)
    t = Subspace(4, list(reversed(rows)) + [zero_vec(4)])
    assert s == t
    for r in rows:
        assert s.contains(r)
        assert s.contains(vec_scale(Fraction(3, 2), r))


def test_contains_ambient_mismatch():
    with pytest.raises(ValueError):
        span([vec((1, 0))], 2).contains(vec((1, 0, 0)))


@settings(max_examples=60)
@given(_matrix(4), _matrix(4))
def test_dimension_formula(rows_s, rows_t):
    s, t = Subspace(4, rows_s), Subspace(4, rows_t)
    u = sum_subspaces(s, t)
    m = intersect_subspaces(s, t)
    assert s.dim + t.dim == u.dim + m.dim
    assert u.contains_subspace(s) and u.contains_subspace(t)
    assert s.contains_subspace(m) and t.contains_subspace(m)


@settings(max_examples=60)
@given(_matrix(5))
def test_complement_is_direct(rows):
    s = Subspace(5, rows)
    c = complement(s)
    assert s.dim + c.dim == 5
    assert sum_subspaces(s, c) == full_subspace(5)
    assert intersect_subspaces(s, c).dim == 0


@settings(max_examples=40)
@given(_matrix(4), _matrix(4))
def test_complement_within(rows_s, rows_w):
    w = Subspace(4, rows_s + rows_w)   # enclosing space contains s
    s = Subspace(4, rows_s)
    c = complement(s, within=w)
    assert s.dim + c.dim == w.dim
    assert sum_subspaces(s, c) == w


def test_complement_outside_rejected():
    s = span([vec((1, 0))], 2)
    w = span([vec((0, 1))], 2)
    with pytest.raises(ValueError):
        complement(s, within=w)


@settings(max_examples=60)
@given(_matrix(4))
def test_solve_homogeneous_is_null_space(rows):
    ns = solve_homogeneous(rows, 4)
    for sol in ns.basis:
        for r in rows:
            assert sum(a * b for a, b in zip(r, sol)) == 0
    # rank-nullity
    assert ns.dim == 4 - Subspace(4, rows).dim


def test_solve_no_constraints():
    assert solve_homogeneous([], 3) == full_subspace(3)


def test_zero_and_unit_vectors():
    assert is_zero_vec(zero_vec(3))
    assert unit_vec(3, 1) == vec((0, 1, 0))
    assert vec_add(unit_vec(2, 0), unit_vec(2, 1)) == vec((1, 1))


def test_subspace_hash_consistency():
    a = span([vec((2, 0)), vec((0, 3))], 2)
    b = full_subspace(2)
    assert a == b and hash(a) == hash(b)
