"""
Exact linear algebra over the rationals.

Scalars are fractions.Fraction values (always in lowest terms with a positive
denominator). Subspaces are stored by their reduced row-echelon basis, so two
subspaces are equal exactly when their stored bases are equal.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import DimensionMismatch, InputError, SingularMap

Rational = Fraction
Vector = tuple

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(value: Union[str, int, Fraction]) -> Fraction:
    """Parse "p/q" or "p" into a Fraction. Floats are rejected."""
    if isinstance(value, bool):
        raise InputError(f"Expected a rational, got {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise InputError(f"Expected a rational string, got {value!r}")
    match = _RATIONAL_RE.match(value)
    if not match:
        raise InputError(f"Malformed rational: {value!r}")
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise InputError(f"Zero denominator in rational: {value!r}")
    return Fraction(int(numerator), int(denominator) if denominator else 1)


def format_rational(value: Fraction) -> str:
    """Serialize as "p/q", or "p" when the denominator is 1."""
    return str(Fraction(value))


def zero_vector(size: int) -> Vector:
    return (Fraction(0),) * size


def unit_vector(size: int, index: int) -> Vector:
    coords = [Fraction(0)] * size
    coords[index] = Fraction(1)
    return tuple(coords)


def _as_vector(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class Matrix:
    """Dense rational matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"Matrix of shape {self.rows}x{self.cols} needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None) -> "Matrix":
        data = [_as_vector(r) for r in rows]
        if cols is None:
            cols = len(data[0]) if data else 0
        for r in data:
            if len(r) != cols:
                raise DimensionMismatch(f"Row of length {len(r)} in a matrix with {cols} columns")
        return cls(len(data), cols, tuple(x for r in data for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: Optional[int] = None) -> "Matrix":
        if not columns:
            return cls(rows or 0, 0, ())
        return cls.from_rows(columns, rows).transpose()

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, size: int) -> "Matrix":
        return cls.from_rows([unit_vector(size, i) for i in range(size)], size)

    def __getitem__(self, key: tuple) -> Fraction:
        i, j = key
        return self.entries[i * self.cols + j]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def apply(self, vector: Sequence) -> Vector:
        """Matrix times column vector."""
        if len(vector) != self.cols:
            raise DimensionMismatch(f"Cannot apply a {self.rows}x{self.cols} matrix to a vector of length {len(vector)}")
        return tuple(
            sum((a * b for a, b in zip(self.row(i), vector) if a and b), Fraction(0)) for i in range(self.rows)
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        other_cols = [other.column(j) for j in range(other.cols)]
        entries = []
        for i in range(self.rows):
            row = self.row(i)
            for col in other_cols:
                entries.append(sum((a * b for a, b in zip(row, col) if a and b), Fraction(0)))
        return Matrix(self.rows, other.cols, tuple(entries))

    def scale(self, factor: Fraction) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(factor * x for x in self.entries))

    def power(self, exponent: int) -> "Matrix":
        if not self.is_square:
            raise DimensionMismatch("Only square matrices have powers")
        result = Matrix.identity(self.rows)
        for _ in range(exponent):
            result = result @ self
        return result

    def is_zero(self) -> bool:
        return not any(self.entries)


def _echelon(rows: Sequence[Sequence[Fraction]], cols: int) -> tuple:
    """Gauss-Jordan elimination. Returns (nonzero reduced rows, pivot columns)."""
    work = [list(r) for r in rows]
    pivots = []
    lead_row = 0
    for col in range(cols):
        if lead_row == len(work):
            break
        found = next((r for r in range(lead_row, len(work)) if work[r][col] != 0), None)
        if found is None:
            continue
        work[lead_row], work[found] = work[found], work[lead_row]
        lead = work[lead_row][col]
        if lead != 1:
            work[lead_row] = [x / lead for x in work[lead_row]]
        pivot = work[lead_row]
        for r in range(len(work)):
            if r != lead_row:
                factor = work[r][col]
                if factor != 0:
                    work[r] = [a - factor * b for a, b in zip(work[r], pivot)]
        pivots.append(col)
        lead_row += 1
    return [tuple(r) for r in work[:lead_row]], pivots


def rref(matrix: Matrix) -> Matrix:
    """Reduced row-echelon form, same shape as the input (zero rows last)."""
    reduced, _ = _echelon(matrix.to_rows(), matrix.cols)
    padding = [zero_vector(matrix.cols)] * (matrix.rows - len(reduced))
    return Matrix.from_rows(reduced + padding, matrix.cols)


def rank(matrix: Matrix) -> int:
    return len(_echelon(matrix.to_rows(), matrix.cols)[1])


def nullspace(matrix: Matrix) -> list:
    """Basis of {x : M x = 0}, one vector per free column in increasing order."""
    reduced, pivots = _echelon(matrix.to_rows(), matrix.cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(matrix.cols):
        if free in pivot_set:
            continue
        coords = [Fraction(0)] * matrix.cols
        coords[free] = Fraction(1)
        for row, pivot in zip(reduced, pivots):
            coords[pivot] = -row[free]
        basis.append(tuple(coords))
    return basis


def determinant(matrix: Matrix) -> Fraction:
    if not matrix.is_square:
        raise DimensionMismatch("Determinant of a non-square matrix")
    work = [list(r) for r in matrix.to_rows()]
    size = matrix.rows
    det = Fraction(1)
    for col in range(size):
        found = next((r for r in range(col, size) if work[r][col] != 0), None)
        if found is None:
            return Fraction(0)
        if found != col:
            work[col], work[found] = work[found], work[col]
            det = -det
        lead = work[col][col]
        det *= lead
        for r in range(col + 1, size):
            factor = work[r][col] / lead
            if factor != 0:
                work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
    return det


def inverse(matrix: Matrix) -> Matrix:
    if not matrix.is_square:
        raise DimensionMismatch("Only square matrices can be inverted")
    size = matrix.rows
    augmented = [row + unit_vector(size, i) for i, row in enumerate(matrix.to_rows())]
    reduced, pivots = _echelon(augmented, 2 * size)
    if pivots[:size] != list(range(size)) or len(reduced) < size:
        raise SingularMap(f"Singular {size}x{size} matrix")
    return Matrix.from_rows([row[size:] for row in reduced], size)


def solve_coordinates(rows: Sequence[Sequence], vector: Sequence) -> Optional[Vector]:
    """Coefficients c with sum(c_i * rows_i) == vector, or None when vector is outside the span.

    The rows are expected to be linearly independent.
    """
    size = len(vector)
    if not rows:
        return () if not any(vector) else None
    system = [tuple(r[k] for r in rows) + (vector[k],) for k in range(size)]
    reduced, pivots = _echelon(system, len(rows) + 1)
    if len(rows) in pivots:
        return None
    coords = [Fraction(0)] * len(rows)
    for row, pivot in zip(reduced, pivots):
        coords[pivot] = row[-1]
    return tuple(coords)


@dataclass(frozen=True)
class Subspace:
    """Subspace of Q^ambient_dim stored by its canonical (rref, no zero rows) basis."""

    ambient_dim: int
    basis: Matrix

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        data = []
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatch(f"Vector of length {len(v)} in an ambient space of dimension {ambient_dim}")
            data.append(_as_vector(v))
        reduced, _ = _echelon(data, ambient_dim)
        return cls(ambient_dim, Matrix.from_rows(reduced, ambient_dim))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix(0, ambient_dim, ()))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def is_zero(self) -> bool:
        return self.dim == 0

    def vectors(self) -> list:
        return self.basis.to_rows()

    def contains(self, vector: Sequence) -> bool:
        if len(vector) != self.ambient_dim:
            raise DimensionMismatch(f"Vector of length {len(vector)} tested against dimension {self.ambient_dim}")
        residue = list(_as_vector(vector))
        for row in self.vectors():
            pivot = next(k for k, x in enumerate(row) if x != 0)
            factor = residue[pivot]
            if factor != 0:
                residue = [a - factor * b for a, b in zip(residue, row)]
        return not any(residue)

    def is_subspace_of(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        return all(other.contains(v) for v in self.vectors())

    def __add__(self, other: "Subspace") -> "Subspace":
        _check_ambient(self, other)
        return Subspace.span(self.vectors() + other.vectors(), self.ambient_dim)

    def orthogonal(self) -> "Subspace":
        """Annihilator under the standard pairing."""
        return Subspace.span(nullspace(self.basis), self.ambient_dim)

    def intersection(self, other: "Subspace") -> "Subspace":
        _check_ambient(self, other)
        return (self.orthogonal() + other.orthogonal()).orthogonal()


def _check_ambient(u: Subspace, v: Subspace) -> None:
    if u.ambient_dim != v.ambient_dim:
        raise DimensionMismatch(f"Ambient dimensions differ: {u.ambient_dim} vs {v.ambient_dim}")


def span(vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
    return Subspace.span(vectors, ambient_dim)


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    return u + v


def intersection(u: Subspace, v: Subspace) -> Subspace:
    return u.intersection(v)


def contains(u: Subspace, vector: Sequence) -> bool:
    return u.contains(vector)


def dim(u: Subspace) -> int:
    return u.dim
