"""Virtual Poincare polynomials of the strata of Y and of the resolution X."""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import UnsupportedCombination
from .intlinalg import det3
from .matgroup import FinMatGroup, IsoType
from .polys import CharVector, EquivPoly, IntPoly, mu0
from .strata import CurveClassRecord, CurveOrbit, Stratification, WeylActionType, analyze


def _det_one_plus_tg(g) -> IntPoly:
    """det(I + t g) for a 3x3 integer matrix, as a polynomial in t."""
    # det(I + t g) = 1 + tr(g) t + (sum of principal 2x2 minors) t^2 + det(g) t^3
    tr = g[0][0] + g[1][1] + g[2][2]
    m2 = sum(g[i][i] * g[j][j] - g[i][j] * g[j][i] for i, j in ((0, 1), (0, 2), (1, 2)))
    return IntPoly([1, tr, m2, det3(g)])


def quotient_poincare(g: FinMatGroup) -> IntPoly:
    """P_Y(t) = (1/|G|) sum_g det(I + t g)^2, the G-invariant part of H*(A^3)."""
    total = IntPoly()
    for x in g.elements:
        d = _det_one_plus_tg(x)
        total = total + d * d
    if any(c % g.order for c in total.coeffs):
        raise ArithmeticError("character sum is not divisible by |G|")
    return IntPoly(c // g.order for c in total.coeffs)


# --- per-curve and per-point pieces -----------------------------------------

def curve_cohomology(action: WeylActionType) -> EquivPoly:
    """W_K-equivariant cohomology of A_K.

    H^0 and H^2 are trivial. On H^1 an element acts by its tangent sign,
    so the involution gives 2e; for Z2 x Z2 (generators: translation,
    involution) H^1 is twice the character trivial on the translation.
    """
    if action is WeylActionType.Trivial:
        return EquivPoly.trivial(0, IntPoly([1, 2, 1]))
    if action is WeylActionType.Involution:
        one = CharVector.trivial(1)
        return EquivPoly.from_chars(1, [one, CharVector.from_multiplicities(1, [0, 2]), one])
    one = CharVector.trivial(2)
    return EquivPoly.from_chars(2, [one, CharVector.from_multiplicities(2, [0, 0, 2, 0]), one])


_FIBER_TABLE = {
    IsoType.Z2: (1, 0),
    IsoType.Z3: (1, 1),
    IsoType.Z4: (2, 1),
    IsoType.Z6: (3, 2),
}


def fiber_cohomology(h_type: IsoType, wk_order: int) -> EquivPoly:
    """1 + R t^2 for the A_n fiber, R the W_K-representation on H^2 (McKay)."""
    if h_type not in _FIBER_TABLE:
        raise UnsupportedCombination(f"no A_n fiber for {h_type}")
    rank = {1: 0, 2: 1, 4: 2}.get(wk_order)
    if rank is None:
        raise UnsupportedCombination(f"W_K of order {wk_order}")
    if rank == 2 and h_type is not IsoType.Z2:
        raise UnsupportedCombination("W_K = Z2 x Z2 only occurs over A1 curves")
    triv, sign = _FIBER_TABLE[h_type]
    if rank == 0:
        r = CharVector.trivial(0, triv + sign)
    elif rank == 1:
        r = CharVector.from_multiplicities(1, [triv, sign])
    else:
        r = CharVector.trivial(2, 1)
    return EquivPoly.from_chars(rank, [CharVector.trivial(rank), CharVector.zero(rank), r])


_POINT_FIBER_TABLE = {
    IsoType.D4: IntPoly([1, 0, 3]),
    IsoType.D6: IntPoly([1, 0, 2]),
    IsoType.D8: IntPoly([1, 0, 4]),
    IsoType.D12: IntPoly([1, 0, 5]),
    IsoType.A4: IntPoly([1, 0, 3]),
    IsoType.S4: IntPoly([1, 0, 4]),
}


def point_fiber_poincare(iso: IsoType, group: FinMatGroup | None = None) -> IntPoly:
    """Poincare polynomial of the fiber over a non-cyclic point: 1 + (#classes - 1) t^2.

    When the isotropy group itself is given, the class count is computed and
    checked against the table.
    """
    if iso not in _POINT_FIBER_TABLE:
        raise UnsupportedCombination(f"{iso} is not a non-cyclic isotropy type")
    poly = _POINT_FIBER_TABLE[iso]
    if group is not None:
        computed = IntPoly([1, 0, len(group.conjugacy_classes()) - 1])
        if computed != poly:
            raise AssertionError(f"{iso}: {computed} from conjugacy classes, table says {poly}")
    return poly


# --- assembly ---------------------------------------------------------------

@dataclass
class CurveContribution:
    record: CurveClassRecord
    orbit: CurveOrbit
    in_y: IntPoly  # virtual polynomial of the open curve K in Y
    in_x: IntPoly  # virtual polynomial of the surface over K in X


@dataclass
class StrataPolynomials:
    P_Y: IntPoly
    P3: IntPoly
    P2: IntPoly
    P1: IntPoly
    P_X: IntPoly
    curve_terms: list[CurveContribution] = field(default_factory=list, repr=False)

    def as_dict(self) -> dict[str, list[int]]:
        return {k: getattr(self, k).to_list() for k in ("P_Y", "P3", "P2", "P1", "P_X")}


def open_curve_poly(orbit: CurveOrbit) -> EquivPoly:
    """H*(A_K) minus the permutation character on its special points."""
    points = EquivPoly.from_chars(orbit.weyl.rank, [orbit.points_rep])
    return curve_cohomology(orbit.action) - points


def orbit_fiber_poly(orbit: CurveOrbit) -> EquivPoly:
    rank = orbit.weyl.rank
    return EquivPoly.from_chars(rank, [CharVector.trivial(rank), CharVector.zero(rank), orbit.fiber_rep])


def assemble(g: FinMatGroup | Stratification, level: int | None = None) -> StrataPolynomials:
    st = g if isinstance(g, Stratification) else analyze(g, level)
    p_y = quotient_poincare(st.group)
    y1 = IntPoly()
    p2 = IntPoly()
    terms = []
    for rec in st.curves:
        for orb in rec.orbits:
            if orb.weyl.rank != curve_cohomology(orb.action).rank:
                raise AssertionError("Weyl group and action type disagree")
            open_curve = open_curve_poly(orb)
            fiber = orbit_fiber_poly(orb)
            expected = fiber_cohomology(rec.iso, orb.wk_order)
            if fiber != expected:
                raise AssertionError(
                    f"W_K acts on the {rec.singularity} fiber by {fiber}, table gives {expected}")
            in_y = mu0(open_curve)
            in_x = mu0(open_curve * fiber)
            y1 = y1 + in_y
            p2 = p2 + in_x
            terms.append(CurveContribution(rec, orb, in_y, in_x))
    p1 = IntPoly()
    for p in st.point_orbit_representatives():
        p1 = p1 + point_fiber_poincare(p.iso, p.isotropy)
    p3 = p_y - y1 - st.point_orbits
    return StrataPolynomials(p_y, p3, p2, p1, p3 + p2 + p1, terms)
