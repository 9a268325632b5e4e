from functools import lru_cache

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kummer3.catalog import catalog_group, names
from kummer3.cohomology import (
    assemble,
    curve_cohomology,
    fiber_cohomology,
    open_curve_poly,
    orbit_fiber_poly,
    point_fiber_poincare,
    quotient_poincare,
)
from kummer3.errors import UnsupportedCombination
from kummer3.golden import GROUPS, P_Y_A4, P_Y_D4, P_Y_D6
from kummer3.matgroup import IsoType, closure
from kummer3.polys import CharVector, EquivPoly, IntPoly, mu0
from kummer3.strata import WeylActionType, analyze

from oracles import conjugacy_class_count, exterior_power_poincare, orbifold_poincare


@lru_cache(maxsize=None)
def polys(name):
    return assemble(catalog_group(name))


def P(text):
    return IntPoly.parse(text)


def test_quotient_poincare_trivial_group():
    assert quotient_poincare(closure([])) == IntPoly([1, 6, 15, 20, 15, 6, 1])


@pytest.mark.parametrize("name", names())
def test_quotient_poincare_families(name):
    family = {"D4": P_Y_D4, "D6": P_Y_D6, "D8": P_Y_D6, "D1": P_Y_D6, "A4": P_Y_A4, "S4": P_Y_A4}[name[:2]]
    g = catalog_group(name)
    assert quotient_poincare(g) == P(family)
    assert quotient_poincare(g).to_list() == exterior_power_poincare(g.elements)


@pytest.mark.parametrize("name", names())
def test_quotient_poincare_at_one(name):
    g = catalog_group(name)
    total = 0
    for x in g.elements:
        m = [[x[i][j] + (i == j) for j in range(3)] for i in range(3)]
        d = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
             - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
             + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
        total += d * d
    assert quotient_poincare(g)(1) * g.order == total


def test_curve_cohomology_mu0():
    assert mu0(curve_cohomology(WeylActionType.Trivial)) == P("1 + 2t + t^2")
    assert mu0(curve_cohomology(WeylActionType.Involution)) == P("1 + t^2")
    assert mu0(curve_cohomology(WeylActionType.TranslationInvolution)) == P("1 + t^2")
    for a in WeylActionType:
        assert curve_cohomology(a).dimensions() == P("1 + 2t + t^2")


def test_fiber_cohomology_table():
    assert fiber_cohomology(IsoType.Z6, 2).coeff(2) == CharVector.from_multiplicities(1, [3, 2])
    for wk in (1, 2, 4):
        assert mu0(fiber_cohomology(IsoType.Z2, wk)) == P("1 + t^2")
    assert fiber_cohomology(IsoType.Z3, 1) == EquivPoly.trivial(0, P("1 + 2t^2"))


@pytest.mark.parametrize("args", [(IsoType.D4, 1), (IsoType.Z3, 3), (IsoType.Z4, 4)])
def test_fiber_cohomology_unsupported(args):
    with pytest.raises(UnsupportedCombination):
        fiber_cohomology(*args)


def test_point_fiber_table():
    assert point_fiber_poincare(IsoType.D12) == P("1 + 5t^2")
    assert point_fiber_poincare(IsoType.S4) == P("1 + 4t^2")
    assert point_fiber_poincare(IsoType.D4) == P("1 + 3t^2")
    with pytest.raises(UnsupportedCombination):
        point_fiber_poincare(IsoType.Z2)


@pytest.mark.parametrize("name", ["D4(1)", "D6(1)", "D8(1)", "D12", "A4(1)", "S4(1)"])
def test_point_fiber_matches_class_count(name):
    g = catalog_group(name)
    assert point_fiber_poincare(g.iso, g)[2] == conjugacy_class_count(g.elements) - 1


def _translation_involution_orbits():
    out = []
    for n in names():
        for rec in analyze(catalog_group(n)).curves:
            out += [o for o in rec.orbits if o.action is WeylActionType.TranslationInvolution]
    return out


def test_translation_involution_h1_choice_is_invisible_to_mu0():
    orbits = _translation_involution_orbits()
    assert orbits
    one = CharVector.trivial(2)
    for c in (1, 2, 3):
        mult = [0, 0, 0, 0]
        mult[c] = 2
        alt = EquivPoly.from_chars(2, [one, CharVector.from_multiplicities(2, mult), one])
        for o in orbits:
            points = EquivPoly.from_chars(2, [o.points_rep])
            fiber = orbit_fiber_poly(o)
            assert mu0((alt - points) * fiber) == mu0(open_curve_poly(o) * fiber)


def test_assemble_s4_2():
    p = polys("S4(2)")
    assert p.P3 == P("t^6 + t^4 + 4t^3 - 8t^2 + 18")
    assert p.P2 == P("10t^4 + 4t^3 - 33t^2 - 33")
    assert p.P1 == P("52t^2 + 16")
    assert p.P_X == P("t^6 + 11t^4 + 8t^3 + 11t^2 + 1")


def test_assemble_examples():
    assert polys("D4(1)").P_X == P("t^6 + 51t^4 + 8t^3 + 51t^2 + 1")
    assert polys("D6(2)").P_X == P("t^6 + 15t^4 + 32t^3 + 15t^2 + 1")


@pytest.mark.parametrize("name", names())
def test_assemble_matches_reference_values(name):
    gold = GROUPS[name]
    p = polys(name)
    for key in ("P_Y", "P3", "P2", "P1", "P_X"):
        assert getattr(p, key) == gold.poly(key), key


@pytest.mark.parametrize("name", names())
def test_orbifold_formula_agrees(name):
    assert polys(name).P_X.to_list() == orbifold_poincare(catalog_group(name).elements)


@settings(max_examples=16, deadline=None)
@given(st.sampled_from(names()))
def test_structural_properties(name):
    p = polys(name)
    assert p.P_X == p.P1 + p.P2 + p.P3
    b = p.P_X
    assert b.degree == 6 and b.is_palindromic(6)
    assert b[0] == b[6] == 1
    assert b[1] == b[5] == 0
    assert b[3] % 2 == 0
    assert p.P3 + sum((t.in_y for t in p.curve_terms), IntPoly()) + len(analyze(catalog_group(name)).point_orbit_representatives()) == p.P_Y
