"""Exact linear algebra over the rationals.

Vectors and matrices store `fractions.Fraction` entries and every
operation is exact; there is no floating point anywhere in the package.
Kernel bases come out in a fixed canonical form so results reproduce
bit-for-bit across runs: free columns of the reduced row-echelon form are
taken in increasing order and each basis vector is rescaled to integer
entries with content 1 and a positive leading entry.

Degenerate shapes (0xk, kx0 and 0x0) are first-class values; they arise
naturally when a diagram covers a whole word.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import DimensionMismatch, SingularMatrix


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class RationalVector:
    """Immutable dense vector of exact rationals."""

    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(_frac(c) for c in self.coords))

    @classmethod
    def zero(cls, dim: int) -> RationalVector:
        return cls((Fraction(0),) * dim)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def __add__(self, other: RationalVector) -> RationalVector:
        self._check_dim(other)
        return RationalVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: RationalVector) -> RationalVector:
        self._check_dim(other)
        return RationalVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> RationalVector:
        return RationalVector(tuple(-a for a in self.coords))

    def scaled(self, factor) -> RationalVector:
        f = _frac(factor)
        return RationalVector(tuple(f * a for a in self.coords))

    def _check_dim(self, other: RationalVector) -> None:
        if self.dim != other.dim:
            raise DimensionMismatch(f"vector dimensions {self.dim} and {other.dim}")


@dataclass(frozen=True)
class RationalMatrix:
    """Immutable dense matrix, entries stored row-major."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatch("negative matrix dimensions")
        entries = tuple(_frac(e) for e in self.entries)
        if len(entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(entries)}"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], *, cols: int | None = None) -> RationalMatrix:
        """Build from an iterable of equal-length rows.

        `cols` disambiguates the 0xk case, where no row is available to
        measure the width.
        """
        rows = [list(r) for r in rows]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise DimensionMismatch("ragged rows")
            if cols is not None and cols != width:
                raise DimensionMismatch(f"rows have width {width}, expected {cols}")
        else:
            width = 0 if cols is None else cols
        return cls(len(rows), width, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls(n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RationalMatrix:
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> RationalMatrix:
        return RationalMatrix(
            self.cols, self.rows, tuple(self.entry(i, j) for j in range(self.cols) for i in range(self.rows))
        )

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_skew_symmetric(self) -> bool:
        if not self.is_square():
            return False
        return all(
            self.entry(i, j) == -self.entry(j, i)
            for i in range(self.rows)
            for j in range(i, self.cols)
        )

    def hstack(self, other: RationalMatrix) -> RationalMatrix:
        if self.rows != other.rows:
            raise DimensionMismatch(f"hstack rows {self.rows} and {other.rows}")
        entries = tuple(
            x for i in range(self.rows) for x in self.row(i) + other.row(i)
        )
        return RationalMatrix(self.rows, self.cols + other.cols, entries)

    def __add__(self, other: RationalMatrix) -> RationalMatrix:
        self._check_same_shape(other)
        return RationalMatrix(
            self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries))
        )

    def __sub__(self, other: RationalMatrix) -> RationalMatrix:
        self._check_same_shape(other)
        return RationalMatrix(
            self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries))
        )

    def __neg__(self) -> RationalMatrix:
        return RationalMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scaled(self, factor) -> RationalMatrix:
        f = _frac(factor)
        return RationalMatrix(self.rows, self.cols, tuple(f * a for a in self.entries))

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                out.append(sum((ri[k] * other.entry(k, j) for k in range(self.cols)), Fraction(0)))
        return RationalMatrix(self.rows, other.cols, tuple(out))

    def _check_same_shape(self, other: RationalMatrix) -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch(
                f"shapes {self.rows}x{self.cols} and {other.rows}x{other.cols}"
            )


def mat_apply(matrix: RationalMatrix, vector: RationalVector) -> RationalVector:
    """Exact matrix-vector product."""
    if matrix.cols != vector.dim:
        raise DimensionMismatch(f"matrix has {matrix.cols} columns, vector dim {vector.dim}")
    return RationalVector(
        tuple(
            sum((a * b for a, b in zip(matrix.row(i), vector.coords)), Fraction(0))
            for i in range(matrix.rows)
        )
    )


def _echelon(matrix: RationalMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row-echelon form; returns the row list and pivot columns."""
    m = matrix.to_rows()
    pivots: list[int] = []
    r = 0
    for c in range(matrix.cols):
        pivot_row = next((i for i in range(r, matrix.rows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = 1 / m[r][c]
        m[r] = [inv * x for x in m[r]]
        for i in range(matrix.rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == matrix.rows:
            break
    return m, pivots


def rref(matrix: RationalMatrix) -> tuple[RationalMatrix, tuple[int, ...]]:
    """Reduced row-echelon form together with the pivot column indices."""
    m, pivots = _echelon(matrix)
    return RationalMatrix.from_rows(m, cols=matrix.cols), tuple(pivots)


def rank(matrix: RationalMatrix) -> int:
    """Rank over the rationals; 0 for empty matrices."""
    return len(_echelon(matrix)[1])


def _canonical_integer(coords: list[Fraction]) -> tuple[Fraction, ...]:
    # Rescale to integer entries, content 1, first nonzero entry positive.
    den = lcm(*(c.denominator for c in coords)) if coords else 1
    ints = [int(c * den) for c in coords]
    g = gcd(*ints) if any(ints) else 1
    ints = [x // g for x in ints]
    first = next((x for x in ints if x != 0), 1)
    if first < 0:
        ints = [-x for x in ints]
    return tuple(Fraction(x) for x in ints)


def kernel_basis(matrix: RationalMatrix) -> list[RationalVector]:
    """Canonical basis of the right null space.

    One basis vector per free column of the reduced row-echelon form, in
    increasing column order, each rescaled to integer entries with content
    1 and positive leading entry.  The empty list means a trivial kernel.

    >>> m = RationalMatrix.from_rows([[0, 1, -1], [-1, 0, 1], [1, -1, 0]])
    >>> [tuple(int(c) for c in v) for v in kernel_basis(m)]
    [(1, 1, 1)]
    """
    m, pivots = _echelon(matrix)
    pivot_set = set(pivots)
    basis = []
    for free in range(matrix.cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * matrix.cols
        v[free] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -m[r][free]
        basis.append(RationalVector(_canonical_integer(v)))
    return basis


def invert(matrix: RationalMatrix) -> RationalMatrix:
    """Exact inverse of a square nonsingular matrix."""
    if not matrix.is_square():
        raise DimensionMismatch(f"cannot invert {matrix.rows}x{matrix.cols} matrix")
    n = matrix.rows
    m = [list(matrix.row(i)) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot_row is None:
            raise SingularMatrix(f"rank deficient at column {c}")
        m[c], m[pivot_row] = m[pivot_row], m[c]
        inv = 1 / m[c][c]
        m[c] = [inv * x for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return RationalMatrix.from_rows([row[n:] for row in m], cols=n)


def determinant(matrix: RationalMatrix) -> Fraction:
    """Exact determinant by fraction-free-ish rational elimination."""
    if not matrix.is_square():
        raise DimensionMismatch(f"determinant of {matrix.rows}x{matrix.cols} matrix")
    n = matrix.rows
    m = matrix.to_rows()
    det = Fraction(1)
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != c:
            m[c], m[pivot_row] = m[pivot_row], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det
