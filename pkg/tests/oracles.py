"""Slow, independent reference computations used to cross-check the library.

Nothing here calls into the code it checks beyond plain data types: group
elements come in as tuples of tuples and answers go out as ints, lists or
coefficient lists.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from math import gcd

# --- integer linear algebra -------------------------------------------------


def _mul(a, b):
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)) for i in range(3))


def _det(m):
    m = [list(r) for r in m]
    n = len(m)
    if n == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * _det([r[:j] + r[j + 1:] for r in m[1:]]) for j in range(n))


def determinantal_divisors(m) -> list[int]:
    """Invariant factors from gcds of k x k minors: d_k = D_k / D_(k-1)."""
    rows, cols = len(m), len(m[0])
    out = []
    prev = 1
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for r in combinations(range(rows), k):
            for c in combinations(range(cols), k):
                g = gcd(g, _det([[m[i][j] for j in c] for i in r]))
        if g == 0:
            out.extend([0] * (min(rows, cols) - k + 1))
            break
        out.append(g // prev)
        prev = g
    return out


def torsion_solutions(h, n: int) -> list[tuple[int, int, int]]:
    """All x in (Z/n)^3 with h x = x, by exhaustive search."""
    sols = []
    for x in product(range(n), repeat=3):
        hx = tuple(sum(h[i][j] * x[j] for j in range(3)) % n for i in range(3))
        if hx == x:
            sols.append(x)
    return sols


def brute_force_component_count(h, n: int) -> int:
    """Fixed curves of h in A^3: |Fix in A[n]^3| / |A[n]|, where |Fix| is the square of one copy."""
    per_copy = len(torsion_solutions(h, n))
    assert (per_copy * per_copy) % (n * n) == 0
    return per_copy * per_copy // (n * n)


# --- groups -----------------------------------------------------------------


def all_subsets_subgroups(elements) -> list[frozenset]:
    """Every subset closed under multiplication (hence a subgroup); only for tiny groups."""
    elements = list(elements)
    ident = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    others = [e for e in elements if e != ident]
    found = []
    for mask in range(1 << len(others)):
        s = {ident} | {others[i] for i in range(len(others)) if mask >> i & 1}
        if all(_mul(a, b) in s for a in s for b in s):
            found.append(frozenset(s))
    return found


def conjugacy_class_count(elements) -> int:
    elements = list(elements)
    inv = {a: next(b for b in elements if _mul(a, b) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))) for a in elements}
    seen = set()
    count = 0
    for x in elements:
        if x in seen:
            continue
        count += 1
        seen.update(_mul(_mul(g, x), inv[g]) for g in elements)
    return count


# --- cohomology -------------------------------------------------------------


def _trace(m) -> int:
    return sum(m[i][i] for i in range(len(m)))


def exterior_power_poincare(elements) -> list[int]:
    """dim of G-invariants in the exterior algebra of C^2 (x) C^3, via Newton's identities.

    For each g the power sums of the eigenvalues of I_2 (x) g are 2 tr(g^j); the
    elementary symmetric functions e_k are the traces on the k-th exterior power.
    """
    elements = list(elements)
    total = [Fraction(0)] * 7
    for g in elements:
        powers = [None, g]
        for _ in range(2, 7):
            powers.append(_mul(powers[-1], g))
        p = [None] + [2 * _trace(powers[j]) for j in range(1, 7)]
        e = [Fraction(1)]
        for k in range(1, 7):
            e.append(sum((-1) ** (i - 1) * e[k - i] * p[i] for i in range(1, k + 1)) / k)
        for k in range(7):
            total[k] += e[k]
    out = [x / len(elements) for x in total]
    assert all(x.denominator == 1 for x in out)
    coeffs = [int(x) for x in out]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _fixed_curve_classes(g, n):
    """Fixed points of g in one (Z/n)^3 copy, grouped into translates of the fixed line."""
    sols = torsion_solutions(g, n)
    # primitive integer generator of ker(g - I), found by search in a small box
    v = next(
        x for x in sorted(product(range(-3, 4), repeat=3), key=lambda x: (sum(map(abs, x)), x))
        if any(x) and gcd(gcd(x[0], x[1]), x[2]) == 1
        and all(sum(g[i][j] * x[j] for j in range(3)) == x[i] for i in range(3))
    )
    classes = {}
    for x in sols:
        key = min(tuple((x[i] + s * v[i]) % n for i in range(3)) for s in range(n))
        classes.setdefault(key, []).append(x)
    return v, sorted(classes)


def orbifold_poincare(elements, n: int = 12) -> list[int]:
    """P_X from the orbifold formula: sum over classes [g] of P(Fix(g)/C(g)) t^(2 age(g)).

    Every nontrivial g in SL(3, Z) of finite order has eigenvalues 1, l, 1/l and
    age 1, and Fix(g) is a disjoint union of elliptic curves. On Fix(g)/C(g)
    each C(g)-orbit of curves contributes the invariant part of H*(curve):
    1 + t^2, plus 2t when the stabiliser acts on the curve without reflections.
    """
    elements = list(elements)
    ident = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    py = exterior_power_poincare(elements)
    total = py + [0] * (7 - len(py))
    inv = {a: next(b for b in elements if _mul(a, b) == ident) for a in elements}
    seen = set()
    for g in elements:
        if g == ident or g in seen:
            continue
        seen.update(_mul(_mul(x, g), inv[x]) for x in elements)
        cent = [x for x in elements if _mul(x, g) == _mul(g, x)]
        v, classes = _fixed_curve_classes(g, n)
        cls_index = {}
        for c in classes:
            for s in range(n):
                cls_index[tuple((c[i] + s * v[i]) % n for i in range(3))] = c

        def act(x, c):
            y = tuple(sum(x[i][j] * c[j] for j in range(3)) % n for i in range(3))
            return cls_index[y]

        comps = list(product(classes, repeat=2))
        done = set()
        for k in comps:
            if k in done:
                continue
            orbit = {(act(x, k[0]), act(x, k[1])) for x in cent}
            done |= orbit
            stab = [x for x in cent if (act(x, k[0]), act(x, k[1])) == k]
            keeps_orientation = all(
                tuple(sum(x[i][j] * v[j] for j in range(3)) for i in range(3)) == v for x in stab)
            total[2] += 1
            total[4] += 1
            if keeps_orientation:
                total[3] += 2
    while total and total[-1] == 0:
        total.pop()
    return total
