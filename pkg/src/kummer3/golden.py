"""Reference values for the sixteen catalog groups.

Polynomials are stored as printed strings and parsed on demand. Curve rows
give, per conjugacy class of cyclic subgroups, a generator as printed, the
number of fixed components, the Weyl group type, and the quotient multiset
as (count, "P1" or "A", W_K type). Weyl and W_K types use IsoType tags, so
Z1 is the trivial group and D4 is Z2 x Z2.
"""
from __future__ import annotations

from dataclasses import dataclass

from .intlinalg import Mat
from .polys import IntPoly

P_Y_D4 = "t^6 + 3t^4 + 8t^3 + 3t^2 + 1"
P_Y_D6 = "t^6 + 2t^4 + 6t^3 + 2t^2 + 1"
P_Y_A4 = "t^6 + t^4 + 4t^3 + t^2 + 1"


@dataclass(frozen=True)
class CurveRow:
    h_type: str
    generator: Mat
    components: int
    weyl: str
    quotient: tuple[tuple[int, str, str], ...]

    def quotient_key(self) -> tuple[tuple[int, str, str], ...]:
        return tuple(sorted(self.quotient))


@dataclass(frozen=True)
class GroupGolden:
    name: str
    P_Y: str
    P3: str
    P2: str
    P1: str
    P_X: str
    census: dict[str, int]

    def poly(self, key: str) -> IntPoly:
        return IntPoly.parse(getattr(self, key))


def _g(name, py, p3, p2, p1, px, census):
    return GroupGolden(name, py, p3, p2, p1, px, census)


GROUPS: dict[str, GroupGolden] = {g.name: g for g in (
    _g("D4(1)", P_Y_D4, "t^6 + 3t^4 + 8t^3 - 45t^2 + 81", "48t^4 - 96t^2 - 144",
       "192t^2 + 64", "t^6 + 51t^4 + 8t^3 + 51t^2 + 1", {"D4": 64}),
    _g("D4(2)", P_Y_D4, "t^6 + 3t^4 + 8t^3 - 15t^2 - 12t + 15", "18t^4 + 12t^3 - 12t^2 + 12t - 30",
       "48t^2 + 16", "t^6 + 21t^4 + 20t^3 + 21t^2 + 1", {"D4": 16}),
    _g("D4(3)", P_Y_D4, "t^6 + 3t^4 + 8t^3 - 9t^2 + 21", "12t^4 - 24t^2 - 36",
       "48t^2 + 16", "t^6 + 15t^4 + 8t^3 + 15t^2 + 1", {"D4": 16}),
    _g("D4(4)", P_Y_D4, "t^6 + 3t^4 + 8t^3 - 9t^2 + 21", "12t^4 - 24t^2 - 36",
       "48t^2 + 16", "t^6 + 15t^4 + 8t^3 + 15t^2 + 1", {"D4": 16}),
    _g("D6(1)", P_Y_D6, "t^6 + 2t^4 + 6t^3 - 7t^2 - 16t - 4", "13t^4 + 26t^3 + 14t^2 + 16t + 1",
       "8t^2 + 4", "t^6 + 15t^4 + 32t^3 + 15t^2 + 1", {"D6": 4}),
    _g("D6(2)", P_Y_D6, "t^6 + 2t^4 + 6t^3 - 11t^2 - 8t + 24", "13t^4 + 26t^3 - 46t^2 + 8t - 59",
       "72t^2 + 36", "t^6 + 15t^4 + 32t^3 + 15t^2 + 1", {"D6": 36}),
    # the cubic term is 6t^3: P_Y has 6t^3 and no curve term here has a t^3 part
    _g("D6(3)", P_Y_D6, "t^6 + 2t^4 + 6t^3 - 3t^2 - 8t", "5t^4 + 10t^3 + 2t^2 + 8t - 3",
       "8t^2 + 4", "t^6 + 7t^4 + 16t^3 + 7t^2 + 1", {"D6": 4}),
    _g("D8(1)", P_Y_D6, "t^6 + 2t^4 + 6t^3 - 28t^2 + 51", "34t^4 + 8t^3 - 72t^2 - 90",
       "136t^2 + 40", "t^6 + 36t^4 + 14t^3 + 36t^2 + 1", {"D4": 24, "D8": 16}),
    _g("D8(2)", P_Y_D6, "t^6 + 2t^4 + 6t^3 - 10t^2 + 21", "13t^4 + 2t^3 - 27t^2 - 36",
       "52t^2 + 16", "t^6 + 15t^4 + 8t^3 + 15t^2 + 1", {"D4": 12, "D8": 4}),
    _g("D12", P_Y_D6, "t^6 + 2t^4 + 6t^3 - 15t^2 - 2t + 32", "19t^4 + 14t^3 - 52t^2 + 2t - 63",
       "88t^2 + 32", "t^6 + 21t^4 + 20t^3 + 21t^2 + 1", {"D4": 12, "D6": 16, "D12": 4}),
    _g("A4(1)", P_Y_A4, "t^6 + t^4 + 4t^3 - 16t^2 - 2t + 28", "18t^4 + 4t^3 - 37t^2 + 2t - 51",
       "72t^2 + 24", "t^6 + 19t^4 + 8t^3 + 19t^2 + 1", {"D4": 20, "A4": 4}),
    _g("A4(2)", P_Y_A4, "t^6 + t^4 + 4t^3 - 4t^2 - 2t + 12", "6t^4 + 4t^3 - 37t^2 + 2t - 27",
       "48t^2 + 16", "t^6 + 7t^4 + 8t^3 + 7t^2 + 1", {"A4": 16}),
    _g("A4(3)", P_Y_A4, "t^6 + t^4 + 4t^3 - 4t^2 - 2t + 7", "6t^4 + 4t^3 - 7t^2 + 2t - 12",
       "18t^2 + 6", "t^6 + 7t^4 + 8t^3 + 7t^2 + 1", {"D4": 5, "A4": 1}),
    _g("S4(1)", P_Y_A4, "t^6 + t^4 + 4t^3 - 14t^2 + 26", "19t^4 + 10t^3 - 42t^2 - 45",
       "76t^2 + 20", "t^6 + 20t^4 + 14t^3 + 20t^2 + 1", {"D4": 4, "D8": 12, "S4": 4}),
    _g("S4(2)", P_Y_A4, "t^6 + t^4 + 4t^3 - 8t^2 + 18", "10t^4 + 4t^3 - 33t^2 - 33",
       "52t^2 + 16", "t^6 + 11t^4 + 8t^3 + 11t^2 + 1", {"D4": 6, "A4": 6, "S4": 4}),
    _g("S4(3)", P_Y_A4, "t^6 + t^4 + 4t^3 - 8t^2 + 17", "10t^4 + 4t^3 - 24t^2 - 30",
       "43t^2 + 14", "t^6 + 11t^4 + 8t^3 + 11t^2 + 1", {"D4": 7, "D6": 3, "D8": 3, "S4": 1}),
)}

CURVE_ROWS: dict[str, tuple[CurveRow, ...]] = {
    "D4(1)": (
        CurveRow("Z2", ((-1, 0, 0), (0, -1, 0), (0, 0, 1)), 16, "Z2", ((16, "P1", "Z2"),)),
        CurveRow("Z2", ((1, 0, 0), (0, -1, 0), (0, 0, -1)), 16, "Z2", ((16, "P1", "Z2"),)),
        CurveRow("Z2", ((-1, 0, 0), (0, 1, 0), (0, 0, -1)), 16, "Z2", ((16, "P1", "Z2"),)),
    ),
    "D4(2)": (
        CurveRow("Z2", ((-1, 0, 0), (0, -1, 0), (0, 0, 1)), 16, "Z2", ((4, "P1", "Z2"), (6, "A", "Z1"))),
        CurveRow("Z2", ((0, 1, 0), (1, 0, 0), (0, 0, -1)), 4, "Z2", ((4, "P1", "Z2"),)),
        CurveRow("Z2", ((0, -1, 0), (-1, 0, 0), (0, 0, -1)), 4, "Z2", ((4, "P1", "Z2"),)),
    ),
    "D4(3)": (
        CurveRow("Z2", ((-1, 0, 0), (0, 0, -1), (0, -1, 0)), 4, "Z2", ((4, "P1", "Z2"),)),
        CurveRow("Z2", ((1, 1, 1), (0, -1, 0), (0, 0, -1)), 4, "Z2", ((4, "P1", "Z2"),)),
        CurveRow("Z2", ((-1, -1, -1), (0, 0, 1), (0, 1, 0)), 4, "Z2", ((4, "P1", "Z2"),)),
    ),
    "D4(4)": (
        CurveRow("Z2", ((-1, -1, -1), (0, 0, 1), (0, 1, 0)), 4, "Z2", ((4, "P1", "Z2"),)),
        CurveRow("Z2", ((0, 0, 1), (-1, -1, -1), (1, 0, 0)), 4, "Z2", ((4, "P1", "Z2"),)),
        CurveRow("Z2", ((0, 1, 0), (1, 0, 0), (-1, -1, -1)), 4, "Z2", ((4, "P1", "Z2"),)),
    ),
    "D6(1)": (
        CurveRow("Z2", ((-1, 0, 0), (1, 1, 0), (0, 0, -1)), 4, "Z1", ((4, "A", "Z1"),)),
        CurveRow("Z3", ((-1, -1, 0), (1, 0, 0), (0, 0, 1)), 9, "Z2", ((4, "A", "Z1"), (1, "P1", "Z2"))),
    ),
    "D6(2)": (
        CurveRow("Z2", ((0, -1, 0), (-1, 0, 0), (0, 0, -1)), 4, "Z1", ((4, "A", "Z1"),)),
        CurveRow("Z3", ((-1, 1, 0), (-1, 0, 0), (0, 0, 1)), 9, "Z2", ((9, "P1", "Z2"),)),
    ),
    "D6(3)": (
        CurveRow("Z2", ((-1, 0, 0), (0, 0, -1), (0, -1, 0)), 4, "Z1", ((4, "A", "Z1"),)),
        CurveRow("Z3", ((0, -1, 0), (0, 0, 1), (-1, 0, 0)), 1, "Z2", ((1, "P1", "Z2"),)),
    ),
    "D8(1)": (
        CurveRow("Z2", ((-1, 0, 0), (0, -1, 0), (0, 0, 1)), 16, "Z2", ((16, "P1", "Z2"),)),
        CurveRow("Z2", ((0, 0, -1), (0, -1, 0), (-1, 0, 0)), 4, "Z2", ((4, "P1", "Z2"),)),
        CurveRow("Z2", ((-1, 0, 0), (0, 1, 0), (0, 0, -1)), 16, "D4", ((6, "P1", "Z2"),)),
        CurveRow("Z4", ((0, 0, -1), (0, 1, 0), (1, 0, 0)), 4, "Z2", ((4, "P1", "Z2"),)),
    ),
    "D8(2)": (
        CurveRow("Z2", ((-1, -1, -1), (0, 0, 1), (0, 1, 0)), 4, "Z2", ((4, "P1", "Z2"),)),
        CurveRow("Z2", ((-1, 0, 0), (1, 1, 1), (0, 0, -1)), 4, "Z2", ((4, "P1", "Z2"),)),
        CurveRow("Z2", ((0, 0, 1), (-1, -1, -1), (1, 0, 0)), 4, "D4", ((3, "P1", "D4"),)),
        CurveRow("Z4", ((0, -1, 0), (0, 0, -1), (1, 1, 1)), 1, "Z2", ((1, "P1", "Z2"),)),
    ),
    "D12": (
        CurveRow("Z2", ((-1, 0, 0), (-1, 1, 0), (0, 0, -1)), 4, "Z2", ((4, "P1", "Z2"),)),
        CurveRow("Z2", ((-1, 1, 0), (0, 1, 0), (0, 0, -1)), 4, "Z2", ((4, "P1", "Z2"),)),
        CurveRow("Z2", ((-1, 0, 0), (0, -1, 0), (0, 0, 1)), 16, "D6", ((3, "P1", "Z2"), (1, "A", "Z1"))),
        CurveRow("Z3", ((-1, 1, 0), (-1, 0, 0), (0, 0, 1)), 9, "D4", ((4, "P1", "Z2"),)),
        CurveRow("Z6", ((0, 1, 0), (-1, 1, 0), (0, 0, 1)), 1, "Z2", ((1, "P1", "Z2"),)),
    ),
    "A4(1)": (
        CurveRow("Z2", ((-1, 0, 0), (0, -1, 0), (0, 0, 1)), 16, "Z2", ((16, "P1", "Z2"),)),
        CurveRow("Z3", ((0, 0, 1), (1, 0, 0), (0, 1, 0)), 1, "Z1", ((1, "A", "Z1"),)),
    ),
    "A4(2)": (
        CurveRow("Z2", ((-1, -1, -1), (0, 0, 1), (0, 1, 0)), 4, "Z2", ((4, "P1", "Z2"),)),
        CurveRow("Z3", ((0, 0, 1), (1, 0, 0), (0, 1, 0)), 1, "Z1", ((1, "A", "Z1"),)),
    ),
    "A4(3)": (
        CurveRow("Z2", ((-1, 0, 0), (-1, 0, 1), (-1, 1, 0)), 4, "Z2", ((4, "P1", "Z2"),)),
        CurveRow("Z3", ((0, 0, 1), (1, 0, 0), (0, 1, 0)), 1, "Z1", ((1, "A", "Z1"),)),
    ),
    "S4(1)": (
        CurveRow("Z2", ((0, 1, 0), (1, 0, 0), (0, 0, -1)), 4, "Z2", ((4, "P1", "Z2"),)),
        CurveRow("Z2", ((-1, 0, 0), (0, -1, 0), (0, 0, 1)), 16, "D4", ((6, "P1", "Z2"),)),
        CurveRow("Z3", ((0, 0, 1), (1, 0, 0), (0, 1, 0)), 1, "Z2", ((1, "P1", "Z2"),)),
        CurveRow("Z4", ((0, -1, 0), (1, 0, 0), (0, 0, 1)), 4, "Z2", ((4, "P1", "Z2"),)),
    ),
    "S4(2)": (
        CurveRow("Z2", ((-1, 0, 0), (0, -1, 0), (1, 1, 1)), 4, "Z2", ((4, "P1", "Z2"),)),
        CurveRow("Z2", ((0, 0, 1), (-1, -1, -1), (1, 0, 0)), 4, "D4", ((3, "P1", "D4"),)),
        CurveRow("Z3", ((0, 0, 1), (1, 0, 0), (0, 1, 0)), 1, "Z2", ((1, "P1", "Z2"),)),
        CurveRow("Z4", ((0, -1, 0), (0, 0, -1), (1, 1, 1)), 1, "Z2", ((1, "P1", "Z2"),)),
    ),
    "S4(3)": (
        CurveRow("Z2", ((-1, 0, 0), (0, 0, -1), (0, -1, 0)), 4, "Z2", ((4, "P1", "Z2"),)),
        CurveRow("Z2", ((-1, 0, 0), (-1, 0, 1), (-1, 1, 0)), 4, "D4", ((3, "P1", "D4"),)),
        CurveRow("Z3", ((-1, 0, 1), (-1, 1, 0), (-1, 0, 0)), 1, "Z2", ((1, "P1", "Z2"),)),
        CurveRow("Z4", ((0, -1, 1), (0, 0, 1), (-1, 0, 1)), 1, "Z2", ((1, "P1", "Z2"),)),
    ),
}

# Groups whose Kummer 3-folds share a Poincare polynomial because one group
# is a subgroup of the other.
EQUAL_P_X_INCLUSIONS = (("D4(2)", "D12"), ("D4(3)", "D8(2)"), ("D4(4)", "D8(2)"))

DUAL_PAIRS = (("D4(3)", "D4(4)"), ("D6(1)", "D6(2)"), ("A4(2)", "A4(3)"), ("S4(2)", "S4(3)"))

# connected components of the union of the 0- and 1-dimensional strata
INCIDENCE_COMPONENTS = {"D4(3)": 1, "D4(4)": 4}

SELF_DUAL = ("D4(1)", "D4(2)", "D6(3)", "D8(1)", "D8(2)", "D12", "A4(1)", "S4(1)")
