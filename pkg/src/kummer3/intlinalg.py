"""Exact integer linear algebra on small matrices stored as tuples of tuples.

Everything here works with Python ints, so there is no overflow and no
floating point anywhere in the pipeline.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Mat = tuple[tuple[int, ...], ...]
Vec = tuple[int, ...]

IDENTITY: Mat = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def as_mat(rows: Sequence[Sequence[int]]) -> Mat:
    return tuple(tuple(int(x) for x in row) for row in rows)


def identity(n: int) -> Mat:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_vec(a: Mat, v: Sequence[int]) -> Vec:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def mat_vec_mod(a: Mat, v: Sequence[int], n: int) -> Vec:
    return tuple(sum(x * y for x, y in zip(row, v)) % n for row in a)


def transpose(a: Mat) -> Mat:
    return tuple(zip(*a))


def mat_sub(a: Mat, b: Mat) -> Mat:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def minus_identity(a: Mat) -> Mat:
    return mat_sub(a, identity(len(a)))


def det3(m: Mat) -> int:
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def det(m: Mat) -> int:
    """Determinant by fraction-free Bareiss elimination (any square size)."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def inverse_unimodular(m: Mat) -> Mat:
    """Inverse of a 3x3 integer matrix with determinant +-1, via the adjugate."""
    d = det3(m)
    if d not in (1, -1):
        raise ValueError(f"matrix is not unimodular (det={d})")
    (a, b, c), (e, f, g), (h, i, j) = m
    adj = (
        (f * j - g * i, c * i - b * j, b * g - c * f),
        (g * h - e * j, a * j - c * h, c * e - a * g),
        (e * i - f * h, b * h - a * i, a * f - b * e),
    )
    return tuple(tuple(x * d for x in row) for row in adj)


def flat(m: Mat) -> Vec:
    return tuple(x for row in m for x in row)


def unflat(v: Sequence[int], ncols: int = 3) -> Mat:
    return tuple(tuple(v[i:i + ncols]) for i in range(0, len(v), ncols))


def primitive(v: Sequence[int]) -> Vec:
    """Divide by the gcd and make the first nonzero entry positive."""
    from math import gcd

    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    w = [x // g for x in v]
    for x in w:
        if x != 0:
            if x < 0:
                w = [-y for y in w]
            break
    return tuple(w)


@dataclass(frozen=True)
class SNFResult:
    """U @ M @ V == D with U, V unimodular and d1 | d2 | ... on the diagonal."""

    U: Mat
    D: Mat
    V: Mat

    @property
    def diagonal(self) -> Vec:
        return tuple(self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)

    @property
    def invariants(self) -> Vec:
        """The nonzero diagonal entries."""
        return tuple(d for d in self.diagonal if d != 0)


def smith_normal_form(m: Sequence[Sequence[int]]) -> SNFResult:
    """Smith normal form of an arbitrary integer matrix, with transforms.

    The pivot is always the entry of smallest nonzero absolute value in the
    remaining block, ties broken row-major, so the output is deterministic.
    """
    a = [list(row) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i: int, k: int) -> None:
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j: int, k: int) -> None:
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]

    def add_row(dst: int, src: int, q: int) -> None:
        # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst: int, src: int, q: int) -> None:
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    for t in range(min(rows, cols)):
        while True:
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    x = abs(a[i][j])
                    if x and (best is None or x < best[0]):
                        best = (x, i, j)
            if best is None:
                break
            _, pi, pj = best
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = a[t][t]
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
            if any(a[i][t] for i in range(t + 1, rows)) or any(a[t][j] for j in range(t + 1, cols)):
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    res = SNFResult(as_mat(u), as_mat(a), as_mat(v))
    _check_snf(m, res)
    return res


def _check_snf(m: Sequence[Sequence[int]], res: SNFResult) -> None:
    mm = as_mat(m)
    if not mm:
        return
    assert mat_mul(mat_mul(res.U, mm), res.V) == res.D, "U M V != D"
    diag = res.diagonal
    for i, row in enumerate(res.D):
        for j, x in enumerate(row):
            assert i == j or x == 0, "D is not diagonal"
    assert all(d >= 0 for d in diag)
    for x, y in zip(diag, diag[1:]):
        assert (x == 0 and y == 0) or (x != 0 and y % x == 0), "divisibility chain broken"
    assert abs(det(res.U)) == 1 and abs(det(res.V)) == 1


def integer_kernel(m: Sequence[Sequence[int]]) -> list[Vec]:
    """A basis of the lattice {x in Z^n : M x = 0} (saturated)."""
    res = smith_normal_form(m)
    ncols = len(res.V)
    r = res.rank
    return [tuple(res.V[i][j] for i in range(ncols)) for j in range(r, ncols)]


def solve_rational(a: Sequence[Sequence[int]], b: Sequence[int]) -> list[Fraction] | None:
    """Solve the square system a x = b over Q; None if singular."""
    n = len(a)
    rows = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    for c in range(n):
        piv = next((r for r in range(c, n) if rows[r][c] != 0), None)
        if piv is None:
            return None
        rows[c], rows[piv] = rows[piv], rows[c]
        pv = rows[c][c]
        rows[c] = [x / pv for x in rows[c]]
        for r in range(n):
            if r != c and rows[r][c] != 0:
                f = rows[r][c]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
    return [row[n] for row in rows]


def solve_mod(m: Sequence[Sequence[int]], n: int) -> list[Vec]:
    """All x in (Z/n)^k with M x = 0 mod n, in lexicographic order."""
    from itertools import product
    from math import gcd

    res = smith_normal_form(m)
    k = len(res.V)
    diag = list(res.diagonal) + [0] * (k - len(res.diagonal))
    # D y = 0 mod n: y_i ranges over multiples of n / gcd(d_i, n)
    ranges = []
    for d in diag:
        g = gcd(d, n) if d else n
        step = n // g
        ranges.append(range(0, n, step))
    out = {mat_vec_mod(res.V, y, n) for y in product(*ranges)}
    return sorted(out)
