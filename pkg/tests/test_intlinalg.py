from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kummer3.intlinalg import (
    det,
    det3,
    integer_kernel,
    inverse_unimodular,
    mat_mul,
    primitive,
    smith_normal_form,
    solve_mod,
    solve_rational,
)

from oracles import determinantal_divisors

small = st.integers(min_value=-6, max_value=6)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


def _matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def test_snf_of_diagonal_with_signs():
    assert smith_normal_form([[-2, 0, 0], [0, -2, 0], [0, 0, 0]]).diagonal == (2, 2, 0)


def test_snf_of_order_two_generator_minus_identity():
    # h - I for h = [[-1,0,0],[0,-1,0],[1,1,1]]
    res = smith_normal_form([[-2, 0, 0], [0, -2, 0], [1, 1, 0]])
    assert res.diagonal == (1, 2, 0)
    assert res.invariants == (1, 2)


def test_snf_of_order_three_generator_minus_identity():
    h = ((-1, -1, 0), (1, 0, 0), (0, 0, 1))
    m = [[h[i][j] - (i == j) for j in range(3)] for i in range(3)]
    assert smith_normal_form(m).diagonal == (1, 3, 0)


def test_snf_zero_and_rectangular():
    assert smith_normal_form([[0, 0, 0]] * 3).diagonal == (0, 0, 0)
    res = smith_normal_form([[2, 4, 6], [4, 8, 12]])
    assert res.diagonal == (2, 0)
    assert res.rank == 1


@settings(max_examples=200, deadline=None)
@given(matrices(3, 3))
def test_snf_reconstructs_and_divides(m):
    res = smith_normal_form(m)
    assert _matmul(_matmul([list(r) for r in res.U], m), [list(r) for r in res.V]) == [list(r) for r in res.D]
    d = res.diagonal
    assert all(x >= 0 for x in d)
    for a, b in zip(d, d[1:]):
        assert (b == 0) or (a != 0 and b % a == 0)
    assert abs(det(res.U)) == 1 and abs(det(res.V)) == 1


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_snf_matches_determinantal_divisors(rows, cols, data):
    m = data.draw(matrices(rows, cols))
    assert list(smith_normal_form(m).diagonal) == determinantal_divisors(m)


@settings(max_examples=100, deadline=None)
@given(matrices(3, 3))
def test_det_agrees_with_cofactor_formula(m):
    mm = tuple(tuple(r) for r in m)
    assert det(mm) == det3(mm)


def test_inverse_unimodular():
    m = ((1, 2, 0), (0, 1, 0), (3, 6, 1))
    assert mat_mul(m, inverse_unimodular(m)) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    with pytest.raises(ValueError):
        inverse_unimodular(((2, 0, 0), (0, 1, 0), (0, 0, 1)))


@settings(max_examples=100, deadline=None)
@given(matrices(2, 3))
def test_integer_kernel_is_a_saturated_basis(m):
    basis = integer_kernel(m)
    assert len(basis) == 3 - smith_normal_form(m).rank
    for v in basis:
        assert all(sum(r[j] * v[j] for j in range(3)) == 0 for r in m)
    if basis:
        # a basis of the full kernel lattice has coprime maximal minors
        d = determinantal_divisors([list(v) for v in basis])
        assert all(x == 1 for x in d)


def test_solve_rational():
    assert solve_rational([[2, 0], [0, 4]], [1, 1]) == [Fraction(1, 2), Fraction(1, 4)]
    assert solve_rational([[1, 1], [1, 1]], [1, 2]) is None


@pytest.mark.parametrize("n", [4, 6, 12])
def test_solve_mod_matches_enumeration(n):
    m = [[-2, 0, 0], [0, -2, 0], [1, 1, 0]]
    brute = sorted(
        x for x in product(range(n), repeat=3)
        if all(sum(r[j] * x[j] for j in range(3)) % n == 0 for r in m)
    )
    assert solve_mod(m, n) == brute


def test_primitive():
    assert primitive((0, 0, -3)) == (0, 0, 1)
    assert primitive((2, -4, 6)) == (1, -2, 3)
