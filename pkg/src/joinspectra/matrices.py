"""Exact dense rational matrices and determinant/characteristic-polynomial ops.

The characteristic polynomial and adjugate come from a single
Faddeev-LeVerrier pass run on a denominator-cleared integer copy (see
`_backend`), so both are exact.  Determinants of polynomial and
rational-function matrices use fraction-free Bareiss elimination after
clearing each row's denominators.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from ._backend import charpoly_adjugate_int, charpoly_int
from .errors import DomainError, ShapeError
from .polynomials import Polynomial, RationalFunction, as_fraction, poly_lcm

Vector = tuple[Fraction, ...]


def as_vector(items: Iterable) -> Vector:
    return tuple(as_fraction(x) for x in items)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise ShapeError(f"dot of length {len(u)} with length {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


class RationalMatrix:
    """Immutable row-major matrix of Fractions."""

    __slots__ = ("rows", "cols", "entries")

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __init__(self, rows: int, cols: int, entries: Iterable):
        es = tuple(as_fraction(x) for x in entries)
        if rows < 0 or cols < 0 or len(es) != rows * cols:
            raise ShapeError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(es)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", es)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RationalMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise ShapeError("ragged rows")
        return cls(r, c, [x for row in rows for x in row])

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(key)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_lists(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("matrix addition shape mismatch")
        return RationalMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("matrix subtraction shape mismatch")
        return RationalMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __mul__(self, scalar) -> "RationalMatrix":
        s = as_fraction(scalar)
        return RationalMatrix(self.rows, self.cols, [s * x for x in self.entries])

    __rmul__ = __mul__

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix(self.rows, self.cols, [-x for x in self.entries])

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ShapeError("matrix product shape mismatch")
        n, m, p = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = [Fraction(0)] * (n * p)
        for i in range(n):
            for l in range(m):
                ail = a[i * m + l]
                if ail:
                    for j in range(p):
                        out[i * p + j] += ail * b[l * p + j]
        return RationalMatrix(n, p, out)

    def mat_vec(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.cols:
            raise ShapeError("matrix-vector shape mismatch")
        return tuple(dot(self.row(i), v) for i in range(self.rows))

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(self.cols, self.rows, [self[j, i] for i in range(self.cols) for j in range(self.rows)])

    def trace(self) -> Fraction:
        if not self.is_square:
            raise ShapeError("trace of a non-square matrix")
        return sum((self[i, i] for i in range(self.rows)), Fraction(0))

    def is_symmetric(self) -> bool:
        if not self.is_square:
            return False
        return all(self[i, j] == self[j, i] for i in range(self.rows) for j in range(i + 1, self.cols))

    def to_floats(self) -> list[list[float]]:
        return [[float(x) for x in self.row(i)] for i in range(self.rows)]

    def __repr__(self):
        return f"RationalMatrix.from_rows({[[str(x) for x in self.row(i)] for i in range(self.rows)]})"


def _cleared_int_entries(m: RationalMatrix) -> tuple[list[int], int]:
    d = 1
    for e in m.entries:
        d = d * e.denominator // math.gcd(d, e.denominator)
    return [int(e * d) for e in m.entries], d


def charpoly_and_adjugate(m: RationalMatrix) -> tuple[Polynomial, tuple[RationalMatrix, ...]]:
    """Exact det(xI - M) plus the adjugate coefficient matrices.

    The second return B satisfies, as a polynomial identity,
    (xI - M) @ sum_j x^j B[j] == det(xI - M) * I, with len(B) == M.rows.
    """
    if not m.is_square:
        raise ShapeError("characteristic polynomial of a non-square matrix")
    n = m.rows
    ints, d = _cleared_int_entries(m)
    coeffs, mats = charpoly_adjugate_int(ints, n)
    phi = Polynomial(Fraction(coeffs[j], d ** (n - j)) for j in range(n + 1))
    adj = tuple(
        RationalMatrix(n, n, [Fraction(e, d ** (n - 1 - j)) for e in mats[j]])
        for j in range(n)
    )
    return phi, adj


def charpoly(m: RationalMatrix) -> Polynomial:
    """Exact det(xI - M) without materializing the adjugate."""
    if not m.is_square:
        raise ShapeError("characteristic polynomial of a non-square matrix")
    n = m.rows
    ints, d = _cleared_int_entries(m)
    coeffs = charpoly_int(ints, n)
    return Polynomial(Fraction(coeffs[j], d ** (n - j)) for j in range(n + 1))


def determinant(m: RationalMatrix) -> Fraction:
    """det(M), read off the constant coefficient of det(xI - M)."""
    phi = charpoly(m)
    return phi[0] if m.rows % 2 == 0 else -phi[0]


def inverse(m: RationalMatrix) -> RationalMatrix:
    """Exact inverse via the adjugate at x = 0: M^-1 = -B0 / phi(0)."""
    phi, adj = charpoly_and_adjugate(m)
    c0 = phi[0]
    if c0 == 0:
        raise DomainError("matrix is singular")
    return adj[0] * (Fraction(-1) / c0) if adj else RationalMatrix.identity(0)


def poly_det(rows: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Determinant of a square polynomial matrix by fraction-free Bareiss."""
    k = len(rows)
    if any(len(r) != k for r in rows):
        raise ShapeError("polynomial matrix must be square")
    if k == 0:
        return Polynomial.one()
    m = [list(r) for r in rows]
    sign = 1
    prev = Polynomial.one()
    for col in range(k - 1):
        piv = next((r for r in range(col, k) if not m[r][col].is_zero), None)
        if piv is None:
            return Polynomial()
        if piv != col:
            m[piv], m[col] = m[col], m[piv]
            sign = -sign
        for i in range(col + 1, k):
            for j in range(col + 1, k):
                m[i][j] = (m[col][col] * m[i][j] - m[i][col] * m[col][j]).exact_div(prev)
            m[i][col] = Polynomial()
        prev = m[col][col]
    return m[k - 1][k - 1] if sign == 1 else -m[k - 1][k - 1]


def ratfun_det(rows: Sequence[Sequence[RationalFunction]]) -> RationalFunction:
    """Determinant of a square rational-function matrix.

    Each row's denominators are cleared to reach a polynomial matrix, Bareiss
    runs there, and the cleared factors divide back out of the result.
    """
    k = len(rows)
    if any(len(r) != k for r in rows):
        raise ShapeError("rational-function matrix must be square")
    if k == 0:
        return RationalFunction.one()
    cleared: list[list[Polynomial]] = []
    scale = Polynomial.one()
    for r in rows:
        lcm = Polynomial.one()
        for entry in r:
            lcm = poly_lcm(lcm, entry.den)
        cleared.append([entry.num * lcm.exact_div(entry.den) for entry in r])
        scale = scale * lcm
    return RationalFunction(poly_det(cleared), scale)
