import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from langclass import lattice

small = st.integers(-3, 3)


def int_matrices(max_rows=3, max_cols=3):
    return st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=0, max_size=max_rows).map(
            lambda rows: (rows, c)
        )
    )


def test_inverse_of_known_matrix():
    m = ((2, 1), (1, 1))
    assert lattice.inverse(m) == ((1, -1), (-1, 2))
    assert lattice.integer_inverse(m) == ((1, -1), (-1, 2))


def test_integer_inverse_rejects_non_unimodular():
    with pytest.raises(ValueError):
        lattice.integer_inverse(((2, 0), (0, 1)))


def test_singular_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        lattice.inverse(((1, 2), (2, 4)))


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_inverse_is_two_sided(rows):
    m = lattice.as_matrix(rows)
    if lattice.rational_rank(m) < 3:
        return
    inv = lattice.inverse(m)
    assert lattice.matmul(m, inv) == lattice.identity(3)
    assert lattice.matmul(inv, m) == lattice.identity(3)


@settings(max_examples=150)
@given(int_matrices())
def test_integer_kernel_is_saturated_and_complete(data):
    rows, ncols = data
    basis = lattice.integer_kernel(rows, ncols)
    for b in basis:
        assert all(lattice.dot(r, b) == 0 for r in rows)
    assert len(basis) == ncols - lattice.rational_rank(rows)
    # every small integer kernel vector has integer coordinates in the basis
    for x in itertools.product(range(-2, 3), repeat=ncols):
        if all(lattice.dot(r, x) == 0 for r in rows):
            assert lattice.coordinates_in(x, basis) is not None


@settings(max_examples=150)
@given(int_matrices())
def test_hermite_basis_spans_the_input(data):
    rows, ncols = data
    basis = lattice.hermite_basis(rows)
    assert len(basis) == lattice.rational_rank(rows)
    for r in rows:
        assert lattice.coordinates_in(r, basis) is not None
    # echelon shape with positive pivots
    last = -1
    for b in basis:
        pivot = next(i for i, x in enumerate(b) if x)
        assert pivot > last and b[pivot] > 0
        last = pivot


def test_coordinates_reject_non_members():
    basis = ((2, 0), (0, 1))
    assert lattice.coordinates_in((1, 0), basis) is None
    assert lattice.coordinates_in((4, -3), basis) == (2, -3)
    assert lattice.rational_coordinates_in((1, 0), basis) == (Fraction(1, 2), 0)
