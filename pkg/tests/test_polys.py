import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kummer3.polys import CharVector, EquivPoly, IntPoly, character_value, mu0

coeff_lists = st.lists(st.integers(-60, 60), max_size=8)
E = CharVector.from_multiplicities(1, [0, 1])
ONE = CharVector.trivial(1)
ZERO = CharVector.zero(1)


def ep(*chars):
    return EquivPoly.from_chars(1, list(chars))


@settings(max_examples=200, deadline=None)
@given(coeff_lists)
def test_parse_str_roundtrip(c):
    p = IntPoly(c)
    assert IntPoly.parse(str(p)) == p


@settings(max_examples=100, deadline=None)
@given(coeff_lists, coeff_lists, st.integers(-4, 4))
def test_ring_laws_agree_with_evaluation(a, b, t):
    p, q = IntPoly(a), IntPoly(b)
    assert (p * q)(t) == p(t) * q(t)
    assert (p + q)(t) == p(t) + q(t)
    assert (p - q) + q == p


def test_parse_forms():
    assert IntPoly.parse("t^6 + 51t^4 + 8t^3 + 51t^2 + 1").to_list() == [1, 0, 51, 8, 51, 0, 1]
    assert IntPoly.parse("-3 − 2t^2 + t^4") == IntPoly([-3, 0, -2, 0, 1])
    assert IntPoly.parse("-t") == IntPoly([0, -1])
    assert str(IntPoly([-8, 0, 0, 1])) == "t^3 - 8"
    assert str(IntPoly()) == "0"
    for bad in ["", "t^", "2x", "3 ++ t"]:
        with pytest.raises(ValueError):
            IntPoly.parse(bad)


def test_palindromic():
    assert IntPoly.parse("t^6 + 3t^4 + 8t^3 + 3t^2 + 1").is_palindromic(6)
    assert not IntPoly([1, 1]).is_palindromic(6)


def test_character_table_of_klein_group():
    table = [[character_value(c, w) for w in range(4)] for c in range(4)]
    assert table == [[1, 1, 1, 1], [1, -1, 1, -1], [1, 1, -1, -1], [1, -1, -1, 1]]


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2), st.data())
def test_values_roundtrip(rank, data):
    mult = data.draw(st.lists(st.integers(-5, 5), min_size=1 << rank, max_size=1 << rank))
    c = CharVector.from_multiplicities(rank, mult)
    assert CharVector.from_values(rank, c.values()) == c
    assert c.values()[0] == c.dimension


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2), st.data())
def test_tensor_is_pointwise_product(rank, data):
    n = 1 << rank
    a = CharVector.from_multiplicities(rank, data.draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n)))
    b = CharVector.from_multiplicities(rank, data.draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n)))
    assert (a * b).values() == tuple(x * y for x, y in zip(a.values(), b.values()))


def test_canonical_form_enforced():
    with pytest.raises(ValueError):
        CharVector(1, (1, 0), (1, 0))
    with pytest.raises(ValueError):
        CharVector(3, (0,) * 8, (0,) * 8)
    with pytest.raises(ValueError):
        CharVector.from_values(1, [1, 0])
    assert (E - E) == ZERO
    assert str(CharVector.from_multiplicities(1, [3, 2])) == "3 + 2e"


def test_mu0_first_worked_example():
    curve = ep(ONE, E.scale(2), ONE)
    fiber = ep(ONE, ZERO, ONE)
    four = ep(ONE.scale(4))
    assert mu0(curve * fiber) - mu0(four * fiber) == IntPoly.parse("t^4 - 2t^2 - 3")


def test_mu0_second_worked_example():
    curve = ep(ONE, E.scale(2), ONE)
    fiber = ep(ONE, ZERO, CharVector.from_multiplicities(1, [2, 1]))
    four = ep(ONE.scale(4))
    assert mu0(curve * fiber) - mu0(four * fiber) == IntPoly.parse("2t^4 + 2t^3 - 5t^2 - 3")


@settings(max_examples=50, deadline=None)
@given(coeff_lists, st.integers(0, 2))
def test_mu0_of_trivial_polynomial_is_identity(c, rank):
    p = IntPoly(c)
    assert mu0(EquivPoly.trivial(rank, p)) == p
    assert EquivPoly.trivial(rank, p).dimensions() == p
