"""Finite subgroups of SL(3, Z) as explicit element sets.

Groups here have at most a few dozen elements, so everything is done by
brute force over the element list: closure by breadth-first products,
subgroups as closures of all one- and two-element subsets, conjugacy by
direct conjugation.
"""
from __future__ import annotations

import enum
import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Hashable, Iterable, Sequence

from .errors import (
    InfiniteOrder,
    NotSpecialLinear,
    OrderBoundExceeded,
    UnclassifiableGroup,
)
from .intlinalg import (
    IDENTITY,
    Mat,
    as_mat,
    det3,
    flat,
    integer_kernel,
    inverse_unimodular,
    mat_mul,
    solve_rational,
    transpose,
    unflat,
)

logger = logging.getLogger(__name__)

# |GL(3, Z/3)|: by Minkowski every finite subgroup of GL(3, Z) has order dividing it
MINKOWSKI_BOUND = 11232
MAX_ELEMENT_ORDER = 12


class IsoType(str, enum.Enum):
    Z1 = "Z1"
    Z2 = "Z2"
    Z3 = "Z3"
    Z4 = "Z4"
    Z6 = "Z6"
    D4 = "D4"
    D6 = "D6"
    D8 = "D8"
    D12 = "D12"
    A4 = "A4"
    S4 = "S4"

    @property
    def is_cyclic(self) -> bool:
        return self.value.startswith("Z")

    @property
    def order(self) -> int:
        return _ISO_ORDER[self]

    def __str__(self) -> str:
        return self.value


_ISO_ORDER = {
    IsoType.Z1: 1, IsoType.Z2: 2, IsoType.Z3: 3, IsoType.Z4: 4, IsoType.Z6: 6,
    IsoType.D4: 4, IsoType.D6: 6, IsoType.D8: 8, IsoType.D12: 12,
    IsoType.A4: 12, IsoType.S4: 24,
}

# canonical order used whenever records are listed by type
ISO_ORDER = list(IsoType)


def element_order(m: Mat) -> int:
    """Smallest k >= 1 with m^k = I."""
    if abs(det3(m)) != 1:
        raise InfiniteOrder(f"det = {det3(m)}, not invertible over Z")
    p = m
    for k in range(1, MAX_ELEMENT_ORDER + 1):
        if p == IDENTITY:
            return k
        p = mat_mul(p, m)
    raise InfiniteOrder(f"no power up to {MAX_ELEMENT_ORDER} is the identity: {m}")


@dataclass(frozen=True, eq=False)
class FinMatGroup:
    """A finite matrix group; `elements` is sorted lexicographically."""

    elements: tuple[Mat, ...]
    generators: tuple[Mat, ...] = ()

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, m: object) -> bool:
        return m in self.element_set

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FinMatGroup) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"FinMatGroup(order={self.order}, generators={list(self.generators)})"

    @cached_property
    def element_set(self) -> frozenset[Mat]:
        return frozenset(self.elements)

    @cached_property
    def index(self) -> dict[Mat, int]:
        return {g: i for i, g in enumerate(self.elements)}

    @cached_property
    def inverses(self) -> dict[Mat, Mat]:
        return {g: inverse_unimodular(g) for g in self.elements}

    @cached_property
    def orders(self) -> dict[Mat, int]:
        return {g: element_order(g) for g in self.elements}

    @cached_property
    def is_abelian(self) -> bool:
        return all(mat_mul(a, b) == mat_mul(b, a) for a, b in itertools.combinations(self.elements, 2))

    @cached_property
    def is_cyclic(self) -> bool:
        return any(o == self.order for o in self.orders.values())

    @cached_property
    def iso(self) -> IsoType:
        return iso_type(self)

    def conjugate(self, g: Mat) -> frozenset[Mat]:
        """The element set of g H g^-1."""
        gi = inverse_unimodular(g)
        return frozenset(mat_mul(mat_mul(g, h), gi) for h in self.elements)

    def transposed(self) -> FinMatGroup:
        return closure([transpose(g) for g in self.generators] or [IDENTITY])

    def conjugacy_classes(self) -> list[tuple[Mat, ...]]:
        seen: set[Mat] = set()
        classes = []
        for g in self.elements:
            if g in seen:
                continue
            cls = sorted({mat_mul(mat_mul(x, g), self.inverses[x]) for x in self.elements})
            seen.update(cls)
            classes.append(tuple(cls))
        return classes


def group_from_elements(elements: Iterable[Mat], generators: Sequence[Mat] = ()) -> FinMatGroup:
    return FinMatGroup(tuple(sorted(set(elements))), tuple(generators))


def closure(generators: Sequence[Sequence[Sequence[int]]]) -> FinMatGroup:
    """The smallest group containing `generators` (which must lie in SL(3, Z))."""
    gens = [as_mat(g) for g in generators]
    for g in gens:
        if len(g) != 3 or any(len(r) != 3 for r in g):
            raise ValueError(f"generator is not 3x3: {g}")
        if det3(g) != 1:
            raise NotSpecialLinear(f"generator {g} has det {det3(g)}")
    elements = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mat_mul(x, g)
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
                    if len(elements) > MINKOWSKI_BOUND:
                        raise OrderBoundExceeded(
                            f"closure exceeds {MINKOWSKI_BOUND} elements; some generator has infinite order"
                        )
        frontier = nxt
    # in a finite monoid generated by invertible elements the closure under
    # products is already a group
    return FinMatGroup(tuple(sorted(elements)), tuple(gens))


# --- isomorphism typing -----------------------------------------------------

def abstract_iso_type(elements: Sequence[Hashable], mul: Callable[[Hashable, Hashable], Hashable],
                      one: Hashable) -> IsoType:
    """Classify an abstract group given by its elements and multiplication.

    (order, abelian?, cyclic?, element-order multiset) separates the eleven
    isomorphism types of finite subgroups of SL(3, Z).
    """
    n = len(elements)

    def order_of(x):
        k, p = 1, x
        while p != one:
            p = mul(p, x)
            k += 1
            if k > n:
                raise UnclassifiableGroup("element order exceeds group order")
        return k

    orders = Counter(order_of(x) for x in elements)
    abelian = all(mul(a, b) == mul(b, a) for a, b in itertools.combinations(elements, 2))
    cyclic = orders.get(n, 0) > 0
    if cyclic and n in (1, 2, 3, 4, 6):
        return IsoType(f"Z{n}")
    key = (n, abelian, dict(sorted(orders.items())))
    expected = {
        IsoType.D4: (4, True, {1: 1, 2: 3}),
        IsoType.D6: (6, False, {1: 1, 2: 3, 3: 2}),
        IsoType.D8: (8, False, {1: 1, 2: 5, 4: 2}),
        IsoType.D12: (12, False, {1: 1, 2: 7, 3: 2, 6: 2}),
        IsoType.A4: (12, False, {1: 1, 2: 3, 3: 8}),
        IsoType.S4: (24, False, {1: 1, 2: 9, 3: 8, 4: 6}),
    }
    for tag, sig in expected.items():
        if key == sig:
            return tag
    raise UnclassifiableGroup(f"no isomorphism type matches order={n}, abelian={abelian}, orders={dict(orders)}")


def iso_type(h: FinMatGroup) -> IsoType:
    return abstract_iso_type(h.elements, mat_mul, IDENTITY)


def quotient_iso_type(n: FinMatGroup, h: FinMatGroup) -> IsoType:
    """Isomorphism type of N/H for H normal in N."""
    cosets = sorted({frozenset(mat_mul(g, x) for x in h.elements) for g in n.elements}, key=sorted)
    rep = {c: min(c) for c in cosets}
    lookup = {g: c for c in cosets for g in c}

    def mul(a, b):
        return lookup[mat_mul(rep[a], rep[b])]

    return abstract_iso_type(cosets, mul, lookup[IDENTITY])


# --- subgroup lattice -------------------------------------------------------

@dataclass(eq=False)
class SubgroupRecord:
    subgroup: FinMatGroup
    iso: IsoType
    normalizer: FinMatGroup
    weyl_order: int
    conjugacy_class_id: int
    parent_order: int
    witness: Mat = IDENTITY  # g with g (class representative) g^-1 = subgroup

    @property
    def is_cyclic(self) -> bool:
        return self.iso.is_cyclic

    @property
    def is_normal(self) -> bool:
        return self.normalizer.order == self.parent_order


def _subgroup_sort_key(h: FinMatGroup):
    return (h.order, ISO_ORDER.index(h.iso), h.elements)


def all_subgroups(g: FinMatGroup) -> list[SubgroupRecord]:
    """Every subgroup of g exactly once, with normalizer, Weyl order and class id.

    Every group on the list of possible isomorphism types is generated by at
    most two elements, so closures of pairs find all subgroups.
    """
    if g.order > 48:
        raise ValueError("subgroup enumeration is meant for groups of order <= 48")
    found: dict[frozenset[Mat], FinMatGroup] = {}
    elems = g.elements
    for x in elems:
        sub = closure([x])
        found.setdefault(sub.element_set, sub)
    for x, y in itertools.combinations(elems, 2):
        sub = closure([x, y])
        found.setdefault(sub.element_set, sub)
    subs = sorted(found.values(), key=_subgroup_sort_key)

    records: list[SubgroupRecord] = []
    class_of: dict[frozenset[Mat], tuple[int, Mat]] = {}
    next_id = 0
    for sub in subs:
        key = sub.element_set
        if key not in class_of:
            for x in elems:
                conj = sub.conjugate(x)
                class_of.setdefault(conj, (next_id, x))
            next_id += 1
        cid, witness = class_of[key]
        norm = group_from_elements(x for x in elems if sub.conjugate(x) == key)
        records.append(SubgroupRecord(
            subgroup=sub,
            iso=sub.iso,
            normalizer=norm,
            weyl_order=norm.order // sub.order,
            conjugacy_class_id=cid,
            parent_order=g.order,
            witness=witness,
        ))
    return records


def class_representatives(records: Sequence[SubgroupRecord]) -> list[SubgroupRecord]:
    seen: set[int] = set()
    out = []
    for r in records:
        if r.conjugacy_class_id not in seen:
            seen.add(r.conjugacy_class_id)
            out.append(r)
    return out


def cyclic_generator(h: FinMatGroup) -> Mat:
    """Lexicographically smallest generator of a cyclic group."""
    return min(x for x, o in h.orders.items() if o == h.order)


# --- bounded conjugacy search -----------------------------------------------

def _intertwiner_equations(pairs: Sequence[tuple[Mat, Mat]]) -> list[list[int]]:
    """Linear equations on the 9 entries of P for P a = b P, for each (a, b)."""
    rows = []
    for a, b in pairs:
        for i in range(3):
            for j in range(3):
                # (P a)_ij - (b P)_ij = sum_k P_ik a_kj - sum_k b_ik P_kj
                coeff = [0] * 9
                for k in range(3):
                    coeff[3 * i + k] += a[k][j]
                    coeff[3 * k + j] -= b[i][k]
                rows.append(coeff)
    return rows


def _bounded_lattice_points(basis: Sequence[Sequence[int]], bound: int):
    """Integer combinations of `basis` with every coordinate in [-bound, bound].

    Yields points in a deterministic order. Exhaustive: the coordinates on a
    set of pivot positions determine the combination, and those coordinates
    range over a finite box.
    """
    r = len(basis)
    if r == 0:
        return
    dim = len(basis[0])
    # choose r coordinates where the basis restricted is invertible
    pivots: list[int] = []
    for c in range(dim):
        trial = pivots + [c]
        sub = [[basis[k][p] for k in range(r)] for p in trial]
        if _rank(sub) == len(trial):
            pivots = trial
            if len(pivots) == r:
                break
    sq = [[basis[k][p] for k in range(r)] for p in pivots]
    for target in itertools.product(range(-bound, bound + 1), repeat=r):
        coeffs = solve_rational(sq, target)
        if coeffs is None or any(c.denominator != 1 for c in coeffs):
            continue
        point = tuple(sum(int(coeffs[k]) * basis[k][i] for k in range(r)) for i in range(dim))
        if all(-bound <= x <= bound for x in point):
            yield point


def _rank(rows: Sequence[Sequence[int]]) -> int:
    from .intlinalg import smith_normal_form

    return smith_normal_form(rows).rank if rows and rows[0] else 0


def bounded_conjugacy_search(g1: FinMatGroup, g2: FinMatGroup, bound: int = 3) -> Mat | None:
    """A unimodular P with entries in [-bound, bound] and P g1 P^-1 = g2, or None.

    None means no such P exists within the bound; it is not a proof that the
    groups are not conjugate in GL(3, Z).
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if g1.order != g2.order:
        return None
    if g1 == g2:
        return IDENTITY
    gens = list(g1.generators) or [IDENTITY]
    gens = [x for x in gens if x != IDENTITY] or [IDENTITY]

    def invariants(m: Mat):
        return (element_order(m), m[0][0] + m[1][1] + m[2][2])

    candidates = [[y for y in g2.elements if invariants(y) == invariants(x)] for x in gens]
    for images in itertools.product(*candidates):
        eqs = _intertwiner_equations(list(zip(gens, images)))
        basis = integer_kernel(eqs)
        for point in _bounded_lattice_points(basis, bound):
            p = unflat(point)
            if abs(det3(p)) != 1:
                continue
            if g1.conjugate(p) == g2.element_set:
                return p
    return None
