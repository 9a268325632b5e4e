"""Torsion model of A^3 = Z^3 (x) A.

G acts on A^3 through the Z^3 factor, so the N-torsion A^3[N] is two
independent copies of (Z/N)^3 with G acting diagonally. A fixed curve of a
cyclic subgroup is a coset `offset + direction (x) A`; it is stored by its
primitive direction and a canonical torsion offset. The elliptic curve
itself never appears, only its torsion and these one-dimensional subtori.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import lcm
from typing import Iterable, Sequence

from .errors import LevelTooSmall, RankDegenerate
from .intlinalg import (
    IDENTITY,
    Mat,
    Vec,
    mat_vec,
    mat_vec_mod,
    minus_identity,
    primitive,
    smith_normal_form,
    solve_mod,
)
from .matgroup import FinMatGroup, IsoType, SubgroupRecord, all_subgroups, group_from_elements

DEFAULT_LEVEL_FLOOR = 12


def rescale(v: Sequence[int], old: int, new: int) -> Vec:
    if new % old:
        raise ValueError(f"cannot rescale level {old} to {new}")
    f = new // old
    return tuple((x * f) % new for x in v)


@dataclass(frozen=True, order=True)
class TorsionPoint:
    """An N-torsion point of A^3: coordinates a, b in (Z/N)^3 for the two copies."""

    level: int
    a: Vec
    b: Vec

    def __post_init__(self) -> None:
        n = self.level
        if any(not 0 <= x < n for x in self.a + self.b):
            object.__setattr__(self, "a", tuple(x % n for x in self.a))
            object.__setattr__(self, "b", tuple(x % n for x in self.b))

    def act(self, g: Mat) -> TorsionPoint:
        n = self.level
        return TorsionPoint(n, mat_vec_mod(g, self.a, n), mat_vec_mod(g, self.b, n))

    def at_level(self, new: int) -> TorsionPoint:
        return TorsionPoint(new, rescale(self.a, self.level, new), rescale(self.b, self.level, new))

    def same_point(self, other: TorsionPoint) -> bool:
        """Equality after moving both points to a common level."""
        m = lcm(self.level, other.level)
        return self.at_level(m) == other.at_level(m)

    def __str__(self) -> str:
        n = self.level
        return "(" + ", ".join(f"{x}/{n}+{y}/{n}i" for x, y in zip(self.a, self.b)) + ")"


def origin(level: int) -> TorsionPoint:
    return TorsionPoint(level, (0, 0, 0), (0, 0, 0))


def _dual_vector(v: Vec) -> Vec:
    """An integer vector u with u . v = 1 (v primitive)."""
    res = smith_normal_form([list(v)])
    sign = res.U[0][0]
    return tuple(sign * res.V[i][0] for i in range(len(v)))


def _canonical_offset(x: Vec, direction: Vec, n: int) -> Vec:
    """Lexicographically least representative of x + direction * (Z/n)."""
    return min(tuple((xi + s * di) % n for xi, di in zip(x, direction)) for s in range(n))


@dataclass(frozen=True)
class FixedCurveComponent:
    """One elliptic curve `offset + direction (x) A` in the fixed locus of <generator>."""

    direction: Vec
    offset: TorsionPoint
    generator: Mat = IDENTITY

    @property
    def level(self) -> int:
        return self.offset.level

    @property
    def key(self) -> tuple[Vec, Vec, Vec]:
        return (self.direction, self.offset.a, self.offset.b)

    @cached_property
    def _dual(self) -> Vec:
        return _dual_vector(self.direction)

    def line_coordinate(self, p: TorsionPoint) -> tuple[int, int] | None:
        """s = (s_a, s_b) with p = offset + direction * s, or None if p is off the curve."""
        n = self.level
        if p.level != n:
            if n % p.level:
                raise LevelTooSmall(f"point level {p.level} does not divide curve level {n}")
            p = p.at_level(n)
        out = []
        for x, off in ((p.a, self.offset.a), (p.b, self.offset.b)):
            diff = tuple((xi - oi) % n for xi, oi in zip(x, off))
            s = sum(ui * di for ui, di in zip(self._dual, diff)) % n
            if tuple((s * vi) % n for vi in self.direction) != diff:
                return None
            out.append(s)
        return out[0], out[1]

    def contains(self, p: TorsionPoint) -> bool:
        return self.line_coordinate(p) is not None

    def point_at(self, s: tuple[int, int]) -> TorsionPoint:
        n = self.level
        a = tuple((o + s[0] * d) % n for o, d in zip(self.offset.a, self.direction))
        b = tuple((o + s[1] * d) % n for o, d in zip(self.offset.b, self.direction))
        return TorsionPoint(n, a, b)

    def act(self, g: Mat) -> FixedCurveComponent:
        """g K, a component of the fixed locus of g h g^-1."""
        from .intlinalg import inverse_unimodular, mat_mul

        n = self.level
        d = primitive(mat_vec(g, self.direction))
        off = self.offset.act(g)
        gen = mat_mul(mat_mul(g, self.generator), inverse_unimodular(g))
        return FixedCurveComponent(
            d,
            TorsionPoint(n, _canonical_offset(off.a, d, n), _canonical_offset(off.b, d, n)),
            gen,
        )

    def pointwise_fixed_by(self, g: Mat) -> bool:
        return mat_vec(g, self.direction) == self.direction and self.offset.act(g) == self.offset


def _rank2_snf(h: Mat):
    m = minus_identity(h)
    res = smith_normal_form(m)
    if res.rank != 2:
        raise RankDegenerate(f"rank(h - I) = {res.rank} for h = {h}; fixed locus is not a union of curves")
    return res


def component_count(h: Mat) -> int:
    """Number of fixed curves of h in A^3: (d1 d2)^2 for the Smith invariants of h - I."""
    d1, d2 = _rank2_snf(h).invariants
    return (d1 * d2) ** 2


def fixed_components(h: Mat, level: int) -> list[FixedCurveComponent]:
    """All elliptic-curve components of the fixed locus of h in A^3, sorted by key."""
    res = _rank2_snf(h)
    d1, d2 = res.invariants
    n = level
    if n % d1 or n % d2:
        raise LevelTooSmall(f"level {n} is not a multiple of the Smith invariants {d1}, {d2}")
    v = res.V
    direction = primitive(tuple(v[i][2] for i in range(3)))
    offsets = sorted({
        _canonical_offset(mat_vec_mod(v, (k1 * (n // d1), k2 * (n // d2), 0), n), direction, n)
        for k1 in range(d1) for k2 in range(d2)
    })
    assert len(offsets) == d1 * d2
    return [
        FixedCurveComponent(direction, TorsionPoint(n, a, b), h)
        for a, b in product(offsets, repeat=2)
    ]


def working_level(g: FinMatGroup) -> int:
    """Default torsion level: lcm of 12 and d1*d2 over all nontrivial elements."""
    n = DEFAULT_LEVEL_FLOOR
    for h in g.elements:
        if h == IDENTITY:
            continue
        d1, d2 = _rank2_snf(h).invariants
        n = lcm(n, d1 * d2)
    return n


def isotropy_group(g: FinMatGroup, p: TorsionPoint) -> FinMatGroup:
    return group_from_elements(x for x in g.elements if p.act(x) == p)


@dataclass(frozen=True)
class IsotropyPoint:
    point: TorsionPoint
    isotropy: FinMatGroup
    iso: IsoType
    orbit_id: int


def fixed_vectors(sub: FinMatGroup, level: int) -> list[Vec]:
    """Fixed points of a non-cyclic subgroup in one copy of (R/Z)^3, at `level`.

    Raises LevelTooSmall when some fixed point is not `level`-torsion.
    """
    gens = [x for x in (sub.generators or sub.elements) if x != IDENTITY]
    rows = [list(r) for x in gens for r in minus_identity(x)]
    res = smith_normal_form(rows)
    if res.rank != 3:
        raise RankDegenerate("a non-cyclic subgroup must have a finite fixed set")
    for d in res.invariants:
        if level % d:
            raise LevelTooSmall(f"fixed points of a subgroup of order {sub.order} need level divisible by {d}")
    return solve_mod(rows, level)


def noncyclic_points(g: FinMatGroup, level: int | None = None,
                     subgroups: Sequence[SubgroupRecord] | None = None) -> list[IsotropyPoint]:
    """All points of A^3 with non-cyclic isotropy, tagged with their G-orbit.

    Orbit ids follow the order of the orbits' least points; the list is sorted
    by (orbit_id, point).
    """
    n = working_level(g) if level is None else level
    if subgroups is None:
        subgroups = all_subgroups(g)
    pairs: set[tuple[Vec, Vec]] = set()
    for rec in subgroups:
        if rec.is_cyclic:
            continue
        fix = fixed_vectors(rec.subgroup, n)
        pairs.update(product(fix, repeat=2))
    if not pairs:
        return []
    vectors = sorted({a for a, _ in pairs} | {b for _, b in pairs})
    stab = {a: frozenset(x for x in g.elements if mat_vec_mod(x, a, n) == a) for a in vectors}
    iso_cache: dict[frozenset, tuple[FinMatGroup, IsoType]] = {}

    def orbit_rep(a: Vec, b: Vec):
        return min((mat_vec_mod(x, a, n), mat_vec_mod(x, b, n)) for x in g.elements)

    reps = {p: orbit_rep(*p) for p in pairs}
    orbit_ids = {r: i for i, r in enumerate(sorted(set(reps.values())))}
    out = []
    for a, b in pairs:
        iso_set = stab[a] & stab[b]
        if iso_set not in iso_cache:
            sub = group_from_elements(iso_set)
            iso_cache[iso_set] = (sub, sub.iso)
        sub, iso = iso_cache[iso_set]
        if iso.is_cyclic:
            raise AssertionError("point fixed by a non-cyclic subgroup has cyclic isotropy")
        out.append(IsotropyPoint(TorsionPoint(n, a, b), sub, iso, orbit_ids[reps[(a, b)]]))
    out.sort(key=lambda p: (p.orbit_id, p.point))
    return out


def orbit_census(points: Iterable[IsotropyPoint]) -> dict[IsoType, int]:
    """Number of G-orbits per isotropy type."""
    seen: dict[int, IsoType] = {}
    for p in points:
        seen[p.orbit_id] = p.iso
    census: dict[IsoType, int] = {}
    for iso in seen.values():
        census[iso] = census.get(iso, 0) + 1
    return {k: census[k] for k in sorted(census, key=list(IsoType).index)}


def incident_points(k: FixedCurveComponent, pts: Sequence[IsotropyPoint]) -> list[IsotropyPoint]:
    return [p for p in pts if k.contains(p.point)]

