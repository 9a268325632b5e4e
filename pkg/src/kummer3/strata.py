"""Stratification of the singular locus of Y = A^3/G.

For each conjugacy class of nontrivial cyclic subgroups H we take the fixed
curves of H whose generic isotropy is exactly H, split them into N(H)-orbits,
and for one curve A_K per orbit realise W_K (the stabiliser of A_K in
W(H) = N(H)/H) as affine maps s -> +-s + tau of A_K. The points of A_K with
non-cyclic isotropy and the permutation characters of W_K on them feed the
cohomology computation.
"""
from __future__ import annotations

import enum
import hashlib
import json
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import NamedTuple, Sequence

from .errors import UnexpectedAction
from .intlinalg import IDENTITY, Mat, inverse_unimodular, mat_mul, mat_vec
from .matgroup import (
    FinMatGroup,
    IsoType,
    SubgroupRecord,
    all_subgroups,
    class_representatives,
    cyclic_generator,
    quotient_iso_type,
)
from .polys import CharVector
from .torus import (
    FixedCurveComponent,
    IsotropyPoint,
    fixed_components,
    incident_points,
    noncyclic_points,
    orbit_census,
    working_level,
)


class WeylActionType(str, enum.Enum):
    Trivial = "Trivial"
    Involution = "Involution"
    TranslationInvolution = "TranslationInvolution"


class QuotientType(str, enum.Enum):
    EllipticCurve = "A"
    ProjectiveLine = "P1"


class AffineMap(NamedTuple):
    """s -> sign * s + shift on A_K, shift given in both torsion copies."""

    sign: int
    shift: tuple[int, int]

    def compose(self, other: AffineMap, level: int) -> AffineMap:
        """self after other."""
        s0, s1 = other.shift
        return AffineMap(
            self.sign * other.sign,
            ((self.sign * s0 + self.shift[0]) % level, (self.sign * s1 + self.shift[1]) % level),
        )

    def apply(self, s: tuple[int, int], level: int) -> tuple[int, int]:
        return ((self.sign * s[0] + self.shift[0]) % level, (self.sign * s[1] + self.shift[1]) % level)

    @property
    def is_identity(self) -> bool:
        return self.sign == 1 and self.shift == (0, 0)


IDENTITY_MAP = AffineMap(1, (0, 0))


@dataclass
class CurveWeylGroup:
    """W_K with elements indexed by bitmask over its generators.

    maps[w] is the affine action of element w on A_K and reps[w] a matrix in
    N(H) inducing it.
    """

    maps: list[AffineMap]
    reps: list[Mat]
    level: int

    @property
    def rank(self) -> int:
        return {1: 0, 2: 1, 4: 2}[len(self.maps)]

    @property
    def order(self) -> int:
        return len(self.maps)

    @property
    def iso(self) -> IsoType:
        return {1: IsoType.Z1, 2: IsoType.Z2, 4: IsoType.D4}[self.order]

    def character(self, values: Sequence[int]) -> CharVector:
        return CharVector.from_values(self.rank, values)


@dataclass
class SpecialPointOnCurve:
    iso: IsoType
    count_on_curve: int
    image_count: int
    wk_orbits: int
    wk_rep: CharVector
    passes_twice: bool


@dataclass
class CurveOrbit:
    """One N(H)-orbit of fixed curves, i.e. one curve of Y([H])."""

    component: FixedCurveComponent
    orbit_size: int
    weyl: CurveWeylGroup
    action: WeylActionType
    points: list[IsotropyPoint]
    special_points: list[SpecialPointOnCurve]
    points_rep: CharVector
    fiber_rep: CharVector

    @property
    def wk_order(self) -> int:
        return self.weyl.order

    @property
    def quotient_type(self) -> QuotientType:
        if self.action is WeylActionType.Trivial:
            return QuotientType.EllipticCurve
        return QuotientType.ProjectiveLine


@dataclass
class CurveClassRecord:
    subgroup: SubgroupRecord
    generator: Mat
    components: int
    orbits: list[CurveOrbit]
    weyl_iso: IsoType
    excluded_components: int = 0  # components whose generic isotropy is larger than H

    @property
    def iso(self) -> IsoType:
        return self.subgroup.iso

    @property
    def singularity(self) -> str:
        return f"A{self.iso.order - 1}"

    @property
    def weyl_order(self) -> int:
        return self.subgroup.weyl_order

    def quotient_multiset(self) -> list[tuple[int, str, str]]:
        """[(count, quotient type, W_K type)] in a canonical order."""
        counts = Counter((o.quotient_type.value, o.weyl.iso.value) for o in self.orbits)
        return sorted(((n, q, w) for (q, w), n in counts.items()), key=lambda x: (x[1] != "P1", x[2], -x[0]))


# --- Weyl action on one curve -----------------------------------------------

def _affine_map(n_elem: Mat, k: FixedCurveComponent) -> AffineMap:
    v = k.direction
    nv = mat_vec(n_elem, v)
    if nv == v:
        sign = 1
    elif nv == tuple(-x for x in v):
        sign = -1
    else:
        raise UnexpectedAction(f"element {n_elem} does not act on the direction of the curve by +-1")
    image = k.offset.act(n_elem)
    s = k.line_coordinate(image)
    if s is None:
        raise UnexpectedAction("element does not stabilise the curve")
    return AffineMap(sign, s)


def classify_weyl_action(k: FixedCurveComponent, maps: Sequence[AffineMap]) -> WeylActionType:
    """Trivial, involution, or Z2 x Z2 generated by a translation and an involution."""
    n = k.level
    distinct = set(maps) | {IDENTITY_MAP}
    for m in distinct:
        if m.sign not in (1, -1):
            raise UnexpectedAction("tangent action is not +-1")
    if len(distinct) == 1:
        return WeylActionType.Trivial
    for a in distinct:
        for b in distinct:
            if a.compose(b, n) not in distinct:
                raise UnexpectedAction("the maps do not form a group")
    others = sorted(distinct - {IDENTITY_MAP})
    if len(distinct) == 2:
        if others[0].sign == -1:
            return WeylActionType.Involution
        raise UnexpectedAction("W_K = Z2 acting by translation")
    if len(distinct) == 4:
        translations = [m for m in others if m.sign == 1]
        if len(translations) != 1:
            raise UnexpectedAction("Z2 x Z2 without exactly one translation")
        # generic torsion points have free orbits: the quotient map is 4-sheeted
        free = any(
            len({m.apply(s, n) for m in distinct}) == 4
            for s in product(range(n), repeat=2)
        )
        if not free:
            raise UnexpectedAction("Z2 x Z2 action has no free orbit")
        return WeylActionType.TranslationInvolution
    raise UnexpectedAction(f"W_K of order {len(distinct)} is not among 1, Z2, Z2 x Z2")


def _curve_weyl_group(k: FixedCurveComponent, stab: Sequence[Mat], h_order: int) -> CurveWeylGroup:
    n = k.level
    by_map: dict[AffineMap, Mat] = {}
    for x in stab:
        m = _affine_map(x, k)
        if m not in by_map or x < by_map[m]:
            by_map[m] = x
    if len(by_map) * h_order != len(stab):
        # a non-identity map with kernel larger than H would mean W(H) is not free
        raise UnexpectedAction("the stabiliser of the curve does not act with kernel H")
    maps = sorted(by_map)
    if len(maps) == 1:
        gens: list[AffineMap] = []
    elif len(maps) == 2:
        gens = [next(m for m in maps if not m.is_identity)]
    elif len(maps) == 4:
        translation = next(m for m in maps if m.sign == 1 and not m.is_identity)
        involution = min(m for m in maps if m.sign == -1)
        gens = [translation, involution]
    else:
        raise UnexpectedAction(f"W_K of order {len(maps)}")
    ordered = []
    for w in range(1 << len(gens)):
        m = IDENTITY_MAP
        for i, g in enumerate(gens):
            if w >> i & 1:
                m = g.compose(m, n)
        ordered.append(m)
    if set(ordered) != set(maps):
        raise UnexpectedAction("W_K is not elementary abelian")
    return CurveWeylGroup(ordered, [by_map[m] for m in ordered], n)


def special_point_analysis(weyl: CurveWeylGroup, pts: Sequence[IsotropyPoint]) -> list[SpecialPointOnCurve]:
    """Per isotropy type: counts, images in Y, W_K character and double points."""
    out = []
    by_iso: dict[IsoType, list[IsotropyPoint]] = {}
    for p in pts:
        by_iso.setdefault(p.iso, []).append(p)
    for iso in sorted(by_iso, key=list(IsoType).index):
        group = by_iso[iso]
        values = [sum(1 for p in group if p.point.act(r) == p.point) for r in weyl.reps]
        wk_orbits = {frozenset(p.point.act(r) for r in weyl.reps) for p in group}
        orbit_of_wk = {q: o for o in wk_orbits for q in o}
        g_orbits: dict[int, set[frozenset]] = {}
        for p in group:
            g_orbits.setdefault(p.orbit_id, set()).add(orbit_of_wk[p.point])
        out.append(SpecialPointOnCurve(
            iso=iso,
            count_on_curve=len(group),
            image_count=len(g_orbits),
            wk_orbits=len(wk_orbits),
            wk_rep=weyl.character(values),
            passes_twice=any(len(s) > 1 for s in g_orbits.values()),
        ))
    return out


# --- the whole stratification -----------------------------------------------

@dataclass
class Stratification:
    group: FinMatGroup
    level: int
    subgroups: list[SubgroupRecord]
    points: list[IsotropyPoint]
    curves: list[CurveClassRecord]

    @cached_property
    def census(self) -> dict[IsoType, int]:
        return orbit_census(self.points)

    @property
    def point_orbits(self) -> int:
        return len({p.orbit_id for p in self.points})

    def point_orbit_representatives(self) -> list[IsotropyPoint]:
        seen: set[int] = set()
        out = []
        for p in self.points:
            if p.orbit_id not in seen:
                seen.add(p.orbit_id)
                out.append(p)
        return out

    @cached_property
    def fingerprint(self) -> Fingerprint:
        return _fingerprint(self)


def analyze(g: FinMatGroup, level: int | None = None) -> Stratification:
    n = working_level(g) if level is None else level
    subs = all_subgroups(g)
    pts = noncyclic_points(g, n, subs)
    curves = [
        _curve_class(g, rec, n, pts)
        for rec in class_representatives(subs)
        if rec.is_cyclic and rec.subgroup.order > 1
    ]
    return Stratification(g, n, subs, pts, curves)


def curve_strata(g: FinMatGroup, level: int | None = None) -> list[CurveClassRecord]:
    return analyze(g, level).curves


def _curve_class(g: FinMatGroup, rec: SubgroupRecord, n: int, pts: Sequence[IsotropyPoint]) -> CurveClassRecord:
    h_group = rec.subgroup
    h = cyclic_generator(h_group)
    comps = fixed_components(h, n)
    normalizer = rec.normalizer.elements

    def generic_isotropy_order(k: FixedCurveComponent) -> int:
        return sum(1 for x in g.elements if k.pointwise_fixed_by(x))

    generic = [k for k in comps if generic_isotropy_order(k) == h_group.order]
    generic_keys = {k.key: k for k in generic}
    seen: set = set()
    orbits = []
    for k in generic:
        if k.key in seen:
            continue
        images = {}
        for x in normalizer:
            img = k.act(x)
            images.setdefault(img.key, img)
        seen.update(images)
        assert set(images) <= set(generic_keys)
        rep = generic_keys[min(images)]
        stab = [x for x in normalizer if rep.act(x).key == rep.key]
        weyl = _curve_weyl_group(rep, stab, h_group.order)
        action = classify_weyl_action(rep, weyl.maps)
        on_curve = incident_points(rep, pts)
        special = special_point_analysis(weyl, on_curve)
        points_rep = weyl.character(
            [sum(1 for p in on_curve if p.point.act(r) == p.point) for r in weyl.reps])
        fiber_rep = _fiber_character(h_group, weyl)
        orbits.append(CurveOrbit(rep, len(images), weyl, action, on_curve, special, points_rep, fiber_rep))
    orbits.sort(key=lambda o: o.component.key)
    return CurveClassRecord(
        subgroup=rec,
        generator=h,
        components=len(comps),
        orbits=orbits,
        weyl_iso=quotient_iso_type(rec.normalizer, h_group),
        excluded_components=len(comps) - len(generic),
    )


def _fiber_character(h_group: FinMatGroup, weyl: CurveWeylGroup) -> CharVector:
    """W_K on H^2 of the A_n fiber: permutation action on nontrivial elements of H."""
    nontrivial = [x for x in h_group.elements if x != IDENTITY]
    values = []
    for r in weyl.reps:
        ri = inverse_unimodular(r)
        values.append(sum(1 for x in nontrivial if mat_mul(mat_mul(r, x), ri) == x))
    return weyl.character(values)


# --- fingerprint ------------------------------------------------------------

@dataclass(frozen=True)
class Fingerprint:
    """Conjugation-invariant summary of the singular locus of A^3/G."""

    order: int
    iso: str
    census: tuple[tuple[str, int], ...]
    curve_classes: tuple
    curve_vertices: tuple
    incidence_components: int

    def as_dict(self) -> dict:
        return {
            "order": self.order,
            "iso": self.iso,
            "census": [list(x) for x in self.census],
            "curve_classes": _jsonable(self.curve_classes),
            "curve_vertices": _jsonable(self.curve_vertices),
            "incidence_components": self.incidence_components,
        }

    def digest(self) -> str:
        blob = json.dumps(self.as_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()[:16]


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(y) for y in x]
    return x


def _fingerprint(st: Stratification) -> Fingerprint:
    classes = []
    vertices = []
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for oid in {p.orbit_id for p in st.points}:
        parent[("p", oid)] = ("p", oid)
    for ci, rec in enumerate(st.curves):
        classes.append((
            rec.iso.value, rec.components, rec.weyl_order, rec.weyl_iso.value,
            tuple(tuple(q) for q in rec.quotient_multiset()),
        ))
        for oi, orb in enumerate(rec.orbits):
            node = ("c", ci, oi)
            parent[node] = node
            incident = Counter(p.iso.value for p in orb.points)
            for p in orb.points:
                union(node, ("p", p.orbit_id))
            vertices.append((
                rec.iso.value, orb.quotient_type.value, orb.wk_order,
                tuple(sorted(incident.items())),
                tuple((sp.iso.value, sp.image_count, sp.wk_orbits) for sp in orb.special_points),
            ))
    components = len({find(x) for x in parent})
    return Fingerprint(
        order=st.group.order,
        iso=st.group.iso.value,
        census=tuple((k.value, v) for k, v in st.census.items()),
        curve_classes=tuple(sorted(classes)),
        curve_vertices=tuple(sorted(vertices)),
        incidence_components=components,
    )


def fingerprint(g: FinMatGroup, level: int | None = None) -> Fingerprint:
    return analyze(g, level).fingerprint
