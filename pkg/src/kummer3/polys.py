"""Integer polynomials in t and character-valued polynomials over small Weyl groups.

The Weyl groups acting on a fixed curve are elementary abelian of order 1, 2
or 4. An element is written as a bitmask over a fixed list of generators,
and the irreducible characters are indexed by bitmasks too:
chi_c(w) = (-1)^popcount(c & w). Bit 0 of W_K = Z2 is the involution, so
index 1 is the sign character usually written epsilon.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class IntPoly:
    """Polynomial in t with integer coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPoly:
        return cls([0] * degree + [coeff])

    @classmethod
    def parse(cls, text: str) -> IntPoly:
        """Parse strings such as 't^6 + 51t^4 - 3t + 1' or '-3 - 2t^2 + t^4'."""
        s = text.replace(" ", "").replace("−", "-").replace("*", "")
        if not s:
            raise ValueError("empty polynomial")
        if s[0] not in "+-":
            s = "+" + s
        terms = re.findall(r"[+-][^+-]+", s)
        if "".join(terms) != s:
            raise ValueError(f"cannot parse polynomial {text!r}")
        out: dict[int, int] = {}
        for term in terms:
            m = re.fullmatch(r"([+-])(\d*)(t(?:\^(\d+))?)?", term)
            if not m or (not m.group(2) and not m.group(3)):
                raise ValueError(f"cannot parse term {term!r} in {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            coeff = int(m.group(2)) if m.group(2) else 1
            deg = 0 if not m.group(3) else int(m.group(4) or 1)
            out[deg] = out.get(deg, 0) + sign * coeff
        top = max(out)
        return cls(out.get(i, 0) for i in range(top + 1))

    def __getitem__(self, degree: int) -> int:
        return self.coeffs[degree] if 0 <= degree < len(self.coeffs) else 0

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPoly([other])
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: IntPoly | int) -> IntPoly:
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(-x for x in self.coeffs)

    def __sub__(self, other: IntPoly | int) -> IntPoly:
        return self + (-_as_poly(other))

    def __rsub__(self, other: IntPoly | int) -> IntPoly:
        return _as_poly(other) - self

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        other = _as_poly(other)
        out = [0] * max(len(self.coeffs) + len(other.coeffs) - 1, 0)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __call__(self, t: int) -> int:
        return sum(c * t ** i for i, c in enumerate(self.coeffs))

    def is_palindromic(self, degree: int) -> bool:
        return all(self[i] == self[degree - i] for i in range(degree + 1))

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for deg in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[deg]
            if c == 0:
                continue
            mag = abs(c)
            if deg == 0:
                body = str(mag)
            else:
                var = "t" if deg == 1 else f"t^{deg}"
                body = var if mag == 1 else f"{mag}{var}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def _as_poly(x: IntPoly | int) -> IntPoly:
    return x if isinstance(x, IntPoly) else IntPoly([x])


# --- characters -------------------------------------------------------------

def _popcount(x: int) -> int:
    return bin(x).count("1")


def character_value(c: int, w: int) -> int:
    return -1 if _popcount(c & w) % 2 else 1


@dataclass(frozen=True)
class CharVector:
    """A virtual character of (Z2)^rank, as plus/minus multiplicity vectors.

    The two parts never share mass on the same irreducible (canonical form),
    so `plus` and `minus` are the positive and negative parts of the
    multiplicities.
    """

    rank: int
    plus: tuple[int, ...]
    minus: tuple[int, ...]

    def __post_init__(self) -> None:
        size = 1 << self.rank
        if self.rank not in (0, 1, 2):
            raise ValueError("Weyl groups on curves have order 1, 2 or 4")
        if len(self.plus) != size or len(self.minus) != size:
            raise ValueError("multiplicity vector has the wrong length")
        if any(x < 0 for x in self.plus + self.minus):
            raise ValueError("plus/minus parts must be non-negative")
        if any(p and m for p, m in zip(self.plus, self.minus)):
            raise ValueError("plus and minus parts share an irreducible; not canonical")

    @classmethod
    def from_multiplicities(cls, rank: int, mult: Sequence[int]) -> CharVector:
        return cls(rank, tuple(max(m, 0) for m in mult), tuple(max(-m, 0) for m in mult))

    @classmethod
    def from_values(cls, rank: int, values: Sequence[int]) -> CharVector:
        """Decompose a class function given by its values on the 2^rank elements."""
        size = 1 << rank
        if len(values) != size:
            raise ValueError("need one value per group element")
        mult = []
        for c in range(size):
            total = sum(character_value(c, w) * v for w, v in enumerate(values))
            m = Fraction(total, size)
            if m.denominator != 1:
                raise ValueError(f"values {list(values)} are not a virtual character")
            mult.append(int(m))
        return cls.from_multiplicities(rank, mult)

    @classmethod
    def trivial(cls, rank: int, dim: int = 1) -> CharVector:
        return cls.from_multiplicities(rank, [dim] + [0] * ((1 << rank) - 1))

    @classmethod
    def zero(cls, rank: int) -> CharVector:
        return cls.from_multiplicities(rank, [0] * (1 << rank))

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(p - m for p, m in zip(self.plus, self.minus))

    @property
    def dimension(self) -> int:
        return sum(self.multiplicities)

    def values(self) -> tuple[int, ...]:
        size = 1 << self.rank
        mult = self.multiplicities
        return tuple(sum(m * character_value(c, w) for c, m in enumerate(mult)) for w in range(size))

    def trivial_part(self) -> int:
        return self.multiplicities[0]

    def _check(self, other: CharVector) -> None:
        if other.rank != self.rank:
            raise ValueError("characters of different groups")

    def __add__(self, other: CharVector) -> CharVector:
        self._check(other)
        return CharVector.from_multiplicities(
            self.rank, [a + b for a, b in zip(self.multiplicities, other.multiplicities)])

    def __neg__(self) -> CharVector:
        return CharVector(self.rank, self.minus, self.plus)

    def __sub__(self, other: CharVector) -> CharVector:
        return self + (-other)

    def scale(self, k: int) -> CharVector:
        return CharVector.from_multiplicities(self.rank, [k * m for m in self.multiplicities])

    def __mul__(self, other: CharVector) -> CharVector:
        """Tensor product: chi_c (x) chi_d = chi_(c xor d)."""
        self._check(other)
        out = [0] * (1 << self.rank)
        for c, x in enumerate(self.multiplicities):
            if x:
                for d, y in enumerate(other.multiplicities):
                    out[c ^ d] += x * y
        return CharVector.from_multiplicities(self.rank, out)

    def __str__(self) -> str:
        names = _char_names(self.rank)
        parts = []
        for name, m in zip(names, self.multiplicities):
            if m:
                parts.append(f"{m}{'' if name == '1' else name}" if (m != 1 or name == "1") else name)
        return " + ".join(parts).replace("+ -", "- ") or "0"


def _char_names(rank: int) -> list[str]:
    if rank == 0:
        return ["1"]
    if rank == 1:
        return ["1", "e"]
    return ["1", "x1", "x2", "x12"]


@dataclass(frozen=True)
class EquivPoly:
    """Polynomial in t whose coefficients are virtual characters of one Weyl group."""

    rank: int
    coeffs: tuple[CharVector, ...]

    @classmethod
    def from_chars(cls, rank: int, chars: Sequence[CharVector]) -> EquivPoly:
        c = list(chars)
        while c and c[-1].multiplicities == (0,) * (1 << rank):
            c.pop()
        return cls(rank, tuple(c))

    @classmethod
    def trivial(cls, rank: int, poly: IntPoly) -> EquivPoly:
        return cls.from_chars(rank, [CharVector.from_multiplicities(rank, [x] + [0] * ((1 << rank) - 1))
                                     for x in poly.coeffs])

    def coeff(self, degree: int) -> CharVector:
        if 0 <= degree < len(self.coeffs):
            return self.coeffs[degree]
        return CharVector.zero(self.rank)

    def __add__(self, other: EquivPoly) -> EquivPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return EquivPoly.from_chars(self.rank, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __neg__(self) -> EquivPoly:
        return EquivPoly(self.rank, tuple(-c for c in self.coeffs))

    def __sub__(self, other: EquivPoly) -> EquivPoly:
        return self + (-other)

    def __mul__(self, other: EquivPoly) -> EquivPoly:
        if not self.coeffs or not other.coeffs:
            return EquivPoly(self.rank, ())
        out = [CharVector.zero(self.rank) for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] = out[i + j] + x * y
        return EquivPoly.from_chars(self.rank, out)

    def dimensions(self) -> IntPoly:
        return IntPoly(c.dimension for c in self.coeffs)

    def __str__(self) -> str:
        parts = []
        for deg, c in enumerate(self.coeffs):
            if any(c.multiplicities):
                var = "" if deg == 0 else ("t" if deg == 1 else f"t^{deg}")
                parts.append(f"({c}){var}")
        return " + ".join(parts) or "0"


def mu0(p: EquivPoly) -> IntPoly:
    """Per-degree multiplicity of the trivial character."""
    return IntPoly(c.trivial_part() for c in p.coeffs)
