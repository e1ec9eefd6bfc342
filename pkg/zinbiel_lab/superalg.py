"""
Z2-graded algebras given by structure constants.

Basis order is e1..en (even) followed by f1..fm (odd). Positions used
internally are 0-based over that order; labels are 1-based ("e1", "f2").
Products that are not stored are zero.
"""

import re
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from itertools import product as cartesian
from typing import Iterator, Mapping, Optional, Sequence

from .errors import DimensionMismatch, InputError, NotHomogeneous
from .exactla import Matrix, Vector, format_rational, parse_rational, unit_vector, zero_vector


class Parity(IntEnum):
    EVEN = 0
    ODD = 1

    def combine(self, other: "Parity") -> "Parity":
        """Parity of a product."""
        return Parity((int(self) + int(other)) % 2)


def koszul_sign(p: Parity, q: Parity) -> int:
    """(-1)^(|p||q|)"""
    return -1 if (p and q) else 1


_LABEL_RE = re.compile(r"^([ef])(\d+)$")


@dataclass(frozen=True, order=True)
class BasisLabel:
    parity: Parity
    index: int

    def __str__(self) -> str:
        return f"{'e' if self.parity == Parity.EVEN else 'f'}{self.index}"

    @classmethod
    def parse(cls, text: str, n: int, m: int) -> "BasisLabel":
        match = _LABEL_RE.match(text.strip()) if isinstance(text, str) else None
        if not match:
            raise InputError(f"Malformed basis label: {text!r}")
        parity = Parity.EVEN if match.group(1) == "e" else Parity.ODD
        index = int(match.group(2))
        bound = n if parity == Parity.EVEN else m
        if not 1 <= index <= bound:
            raise InputError(f"Basis label {text} out of range for dimensions ({n}, {m})")
        return cls(parity, index)

    def position(self, n: int) -> int:
        return self.index - 1 if self.parity == Parity.EVEN else n + self.index - 1


@dataclass(frozen=True)
class SuperElement:
    """An element given by its even and odd coordinates."""

    even: Vector
    odd: Vector

    @classmethod
    def zero(cls, n: int, m: int) -> "SuperElement":
        return cls(zero_vector(n), zero_vector(m))

    @classmethod
    def from_coords(cls, coords: Sequence, n: int) -> "SuperElement":
        values = tuple(Fraction(c) for c in coords)
        return cls(values[:n], values[n:])

    @classmethod
    def basis(cls, n: int, m: int, position: int) -> "SuperElement":
        return cls.from_coords(unit_vector(n + m, position), n)

    @property
    def coords(self) -> Vector:
        return self.even + self.odd

    @property
    def n(self) -> int:
        return len(self.even)

    @property
    def m(self) -> int:
        return len(self.odd)

    def is_zero(self) -> bool:
        return not any(self.even) and not any(self.odd)

    def is_homogeneous(self) -> bool:
        return not any(self.even) or not any(self.odd)

    def parity(self) -> Parity:
        """Parity of a homogeneous element; the zero element reports EVEN."""
        if not self.is_homogeneous():
            raise NotHomogeneous(f"{self} has both even and odd components")
        return Parity.ODD if any(self.odd) else Parity.EVEN

    def __add__(self, other: "SuperElement") -> "SuperElement":
        _check_same_shape(self, other)
        return SuperElement(
            tuple(a + b for a, b in zip(self.even, other.even)),
            tuple(a + b for a, b in zip(self.odd, other.odd)),
        )

    def __neg__(self) -> "SuperElement":
        return self.scale(Fraction(-1))

    def __sub__(self, other: "SuperElement") -> "SuperElement":
        return self + (-other)

    def scale(self, factor) -> "SuperElement":
        factor = Fraction(factor)
        return SuperElement(tuple(factor * a for a in self.even), tuple(factor * a for a in self.odd))

    def __str__(self) -> str:
        terms = []
        for symbol, coords in (("e", self.even), ("f", self.odd)):
            for i, c in enumerate(coords, start=1):
                if c == 0:
                    continue
                if c == 1:
                    coef = "+"
                elif c == -1:
                    coef = "-"
                else:
                    coef = ("+" if c > 0 else "") + format_rational(c)
                terms.append(f"{coef}{symbol}{i}")
        if not terms:
            return "0"
        text = "".join(terms)
        return text[1:] if text.startswith("+") else text


def _check_same_shape(x: SuperElement, y: SuperElement) -> None:
    if (x.n, x.m) != (y.n, y.m):
        raise DimensionMismatch(f"Elements of shapes ({x.n},{x.m}) and ({y.n},{y.m})")


_TERM_RE = re.compile(r"([+-]?)(\d+(?:/\d+)?)?\*?([ef]\d+)")


def parse_element(text: str, n: int, m: int) -> SuperElement:
    """Parse a rational combination such as "e1+1/2e3" or "2*f1-f2"."""
    compact = re.sub(r"\s+", "", text or "")
    if not compact:
        raise InputError("Empty element expression")
    coords = [Fraction(0)] * (n + m)
    pos = 0
    for match in _TERM_RE.finditer(compact):
        if match.start() != pos or (pos > 0 and not match.group(1)):
            raise InputError(f"Malformed element expression: {text!r}")
        sign, coef, label = match.groups()
        value = parse_rational(coef) if coef else Fraction(1)
        if sign == "-":
            value = -value
        coords[BasisLabel.parse(label, n, m).position(n)] += value
        pos = match.end()
    if pos != len(compact):
        raise InputError(f"Malformed element expression: {text!r}")
    return SuperElement.from_coords(coords, n)


class SuperAlgebra:
    """Finite-dimensional superalgebra with even part of dim n and odd part of dim m."""

    def __init__(self, n: int, m: int, products: Optional[Mapping[tuple, Sequence]] = None, name: str = ""):
        if n < 0 or m < 0:
            raise InputError(f"Negative dimensions ({n}, {m})")
        self.n = n
        self.m = m
        self.name = name
        self._table: dict = {}
        self._sparse: dict = {}
        for (i, j), coords in (products or {}).items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise DimensionMismatch(f"Product position ({i}, {j}) outside dimension {self.dim}")
            values = tuple(Fraction(c) for c in coords)
            if len(values) != self.dim:
                raise DimensionMismatch(f"Product result of length {len(values)} in dimension {self.dim}")
            if not any(values):
                continue
            target = self.parity(i).combine(self.parity(j))
            for k, v in enumerate(values):
                if v and self.parity(k) != target:
                    raise InputError(
                        f"Product {self.label(i)}{self.label(j)} has a component on {self.label(k)} "
                        f"of the wrong parity"
                    )
            self._table[(i, j)] = values
            self._sparse[(i, j)] = tuple((k, v) for k, v in enumerate(values) if v)

    @classmethod
    def from_rules(cls, n: int, m: int, rules: Mapping[tuple, Mapping[str, object]], name: str = "") -> "SuperAlgebra":
        """Build from label rules like {("e1", "f1"): {"f2": 1}}; repeated targets accumulate."""
        table: dict = {}
        for (left, right), result in rules.items():
            i = BasisLabel.parse(left, n, m).position(n)
            j = BasisLabel.parse(right, n, m).position(n)
            coords = list(table.get((i, j), zero_vector(n + m)))
            for label, value in result.items():
                coords[BasisLabel.parse(label, n, m).position(n)] += Fraction(value)
            table[(i, j)] = tuple(coords)
        return cls(n, m, table, name=name)

    @property
    def dim(self) -> int:
        return self.n + self.m

    def parity(self, position: int) -> Parity:
        return Parity.EVEN if position < self.n else Parity.ODD

    def label(self, position: int) -> BasisLabel:
        if position < self.n:
            return BasisLabel(Parity.EVEN, position + 1)
        return BasisLabel(Parity.ODD, position - self.n + 1)

    def labels(self) -> list:
        return [self.label(i) for i in range(self.dim)]

    def even_positions(self) -> range:
        return range(self.n)

    def odd_positions(self) -> range:
        return range(self.n, self.dim)

    def basis_element(self, position: int) -> SuperElement:
        return SuperElement.basis(self.n, self.m, position)

    def element(self, coords: Sequence) -> SuperElement:
        if len(coords) != self.dim:
            raise DimensionMismatch(f"Coordinates of length {len(coords)} in dimension {self.dim}")
        return SuperElement.from_coords(coords, self.n)

    def product(self, i: int, j: int) -> Vector:
        return self._table.get((i, j), zero_vector(self.dim))

    def products(self) -> list:
        """Nonzero basis products as ((i, j), coords), sorted by position pair."""
        return sorted(self._table.items())

    def is_zero_product(self) -> bool:
        return not self._table

    def multiply_coords(self, x: Sequence, y: Sequence) -> Vector:
        result = [Fraction(0)] * self.dim
        y_terms = [(j, b) for j, b in enumerate(y) if b]
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in y_terms:
                entry = self._sparse.get((i, j))
                if entry:
                    coef = a * b
                    for k, v in entry:
                        result[k] += coef * v
        return tuple(result)

    def check_element(self, element: SuperElement) -> None:
        if (element.n, element.m) != (self.n, self.m):
            raise DimensionMismatch(
                f"Element of shape ({element.n},{element.m}) in an algebra of shape ({self.n},{self.m})"
            )

    def multiply(self, x: SuperElement, y: SuperElement) -> SuperElement:
        self.check_element(x)
        self.check_element(y)
        return SuperElement.from_coords(self.multiply_coords(x.coords, y.coords), self.n)

    def left_matrix(self, x: Sequence) -> Matrix:
        """Matrix of y -> x*y on the full space (column j is x*b_j)."""
        return Matrix.from_columns([self.multiply_coords(x, unit_vector(self.dim, j)) for j in range(self.dim)], self.dim)

    def right_matrix(self, y: Sequence) -> Matrix:
        """Matrix of x -> x*y on the full space (column i is b_i*y)."""
        return Matrix.from_columns([self.multiply_coords(unit_vector(self.dim, i), y) for i in range(self.dim)], self.dim)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SuperAlgebra):
            return NotImplemented
        return (self.n, self.m, self._table) == (other.n, other.m, other._table)

    def __hash__(self) -> int:
        return hash((self.n, self.m, frozenset(self._table.items())))

    def __repr__(self) -> str:
        name = f" {self.name}" if self.name else ""
        return f"<SuperAlgebra{name} ({self.n}|{self.m}), {len(self._table)} nonzero products>"


def multiply(algebra: SuperAlgebra, x: SuperElement, y: SuperElement) -> SuperElement:
    return algebra.multiply(x, y)


def residual_coords(algebra: SuperAlgebra, a: Vector, b: Vector, c: Vector, sign: int) -> Vector:
    for coords in (a, b, c):
        if len(coords) != algebra.dim:
            raise DimensionMismatch(f"Coordinate vector of length {len(coords)} in an algebra of dimension {algebra.dim}")
    mul = algebra.multiply_coords
    left = mul(mul(a, b), c)
    inner = tuple(u + sign * v for u, v in zip(mul(b, c), mul(c, b)))
    right = mul(a, inner)
    return tuple(u - v for u, v in zip(left, right))


def superidentity_residual(algebra: SuperAlgebra, a: SuperElement, b: SuperElement, c: SuperElement) -> SuperElement:
    """(ab)c - a(bc + (-1)^(|b||c|) cb) for homogeneous a, b, c."""
    for element in (a, b, c):
        algebra.check_element(element)
    a.parity()
    sign = koszul_sign(b.parity(), c.parity())
    return algebra.element(residual_coords(algebra, a.coords, b.coords, c.coords, sign))


def right_supercommutativity_residual(
    algebra: SuperAlgebra, x: SuperElement, y: SuperElement, z: SuperElement
) -> SuperElement:
    """(xy)z - (-1)^(|y||z|) (xz)y for homogeneous x, y, z."""
    x.parity()
    sign = koszul_sign(y.parity(), z.parity())
    left = algebra.multiply(algebra.multiply(x, y), z)
    right = algebra.multiply(algebra.multiply(x, z), y)
    return left - right.scale(sign)


def basis_triples(algebra: SuperAlgebra) -> Iterator[tuple]:
    """All ordered triples of basis positions in lexicographic order."""
    return cartesian(range(algebra.dim), repeat=3)


@dataclass(frozen=True)
class ZinbielVerdict:
    ok: bool
    triple: Optional[tuple] = None
    residual: Optional[SuperElement] = None

    def to_dict(self) -> dict:
        data: dict = {"zinbiel": self.ok}
        if not self.ok:
            data["triple"] = [str(label) for label in self.triple]
            data["residual"] = str(self.residual)
        return data


def is_zinbiel(algebra: SuperAlgebra) -> ZinbielVerdict:
    """Check the superidentity on every basis triple; report the first failure."""
    units = [unit_vector(algebra.dim, i) for i in range(algebra.dim)]
    for i, j, k in basis_triples(algebra):
        sign = koszul_sign(algebra.parity(j), algebra.parity(k))
        residual = residual_coords(algebra, units[i], units[j], units[k], sign)
        if any(residual):
            labels = (algebra.label(i), algebra.label(j), algebra.label(k))
            return ZinbielVerdict(False, labels, algebra.element(residual))
    return ZinbielVerdict(True)


def is_right_supercommutative(algebra: SuperAlgebra) -> ZinbielVerdict:
    """Same report shape as is_zinbiel, for the identity (xy)z = (-1)^(|y||z|)(xz)y."""
    for i, j, k in basis_triples(algebra):
        elements = [algebra.basis_element(p) for p in (i, j, k)]
        residual = right_supercommutativity_residual(algebra, *elements)
        if not residual.is_zero():
            return ZinbielVerdict(False, (algebra.label(i), algebra.label(j), algebra.label(k)), residual)
    return ZinbielVerdict(True)
