"""Exact dense linear algebra over Z, Z[t,t^-1] and Q(t).

Determinants over the two rings use fraction-free (Bareiss) elimination;
inverses and solves live over the field Q(t).  Matrices are immutable
and 0x0 matrices are legal (the Seifert matrix of the unknot).
"""

from __future__ import annotations

import dataclasses
from typing import Callable, Sequence

from .laurent import LaurentPoly
from .ratfunc import RationalFunction


class SingularMatrixError(ArithmeticError):
    """Raised when an inverse or solve meets a singular matrix."""


@dataclasses.dataclass(frozen=True)
class Ring:
    """The little interface the matrix algorithms need from a ring."""
    name: str
    zero: object
    one: object
    from_int: Callable
    exact_div: Callable
    is_field: bool = False


def _int_exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError("integer division is not exact")
    return q


ZZ = Ring("Z", 0, 1, int, _int_exact_div)
LAURENT = Ring("Z[t,t^-1]", LaurentPoly.zero(), LaurentPoly.one(),
               LaurentPoly.const, lambda a, b: a.exact_div(b))
QT = Ring("Q(t)", RationalFunction.zero(), RationalFunction.one(),
          RationalFunction, lambda a, b: a / b, is_field=True)


@dataclasses.dataclass(frozen=True)
class Matrix:
    """An immutable dense matrix over one of the rings above."""

    ring: Ring
    entries: tuple[tuple, ...]
    rows: int
    cols: int

    def __init__(self, ring: Ring, rows: Sequence[Sequence], cols: int | None = None):
        grid = tuple(tuple(row) for row in rows)
        ncols = len(grid[0]) if grid else (0 if cols is None else cols)
        if any(len(r) != ncols for r in grid):
            raise ValueError("ragged rows in matrix")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "entries", grid)
        object.__setattr__(self, "rows", len(grid))
        object.__setattr__(self, "cols", ncols)

    @classmethod
    def identity(cls, ring: Ring, n: int) -> Matrix:
        return cls(ring, [[ring.one if i == j else ring.zero for j in range(n)]
                          for i in range(n)], cols=n)

    @classmethod
    def zero(cls, ring: Ring, rows: int, cols: int) -> Matrix:
        return cls(ring, [[ring.zero] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def from_int_rows(cls, ring: Ring, rows: Sequence[Sequence[int]]) -> Matrix:
        return cls(ring, [[ring.from_int(int(x)) for x in row] for row in rows])

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, idx: tuple[int, int]):
        i, j = idx
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    def map_entries(self, fn: Callable, ring: Ring | None = None) -> Matrix:
        return Matrix(ring or self.ring,
                      [[fn(e) for e in row] for row in self.entries],
                      cols=self.cols)

    def to_ring(self, ring: Ring) -> Matrix:
        """Coerce entrywise via the target ring constructor."""
        return self.map_entries(ring.from_int, ring)

    def transpose(self) -> Matrix:
        return Matrix(self.ring,
                      [self.column(j) for j in range(self.cols)],
                      cols=self.rows)

    def conjugate(self) -> Matrix:
        """Entrywise involution t -> t^-1 (Laurent or Q(t) entries)."""
        return self.map_entries(lambda e: e.conjugate())

    def conjugate_transpose(self) -> Matrix:
        return self.conjugate().transpose()

    def __add__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        return Matrix(self.ring,
                      [[a + b for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.entries, other.entries)],
                      cols=self.cols)

    def __sub__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        return Matrix(self.ring,
                      [[a - b for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.entries, other.entries)],
                      cols=self.cols)

    def __neg__(self) -> Matrix:
        return self.map_entries(lambda e: -e)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError(
                    f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
            cols = [other.column(j) for j in range(other.cols)]
            out = [[_dot(row, col, self.ring) for col in cols] for row in self.entries]
            return Matrix(self.ring, out, cols=other.cols)
        return self.map_entries(lambda e: e * other)

    def __rmul__(self, other):
        return self.map_entries(lambda e: other * e)

    def mul_vec(self, v: Sequence) -> tuple:
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} against {self.rows}x{self.cols}")
        return tuple(_dot(row, v, self.ring) for row in self.entries)

    def _same_shape(self, other: Matrix) -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("matrix shapes differ")

    def det(self):
        """Exact determinant; Bareiss over Z or Z[t,t^-1], Gauss over Q(t)."""
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return self.ring.one
        if self.ring.is_field:
            return self._field_det()
        return self._bareiss_det()

    def _bareiss_det(self):
        n = self.rows
        m = [list(row) for row in self.entries]
        sign = 1
        prev = self.ring.one
        div = self.ring.exact_div
        for k in range(n - 1):
            piv = next((i for i in range(k, n) if m[i][k]), None)
            if piv is None:
                return self.ring.zero
            if piv != k:
                m[k], m[piv] = m[piv], m[k]
                sign = -sign
            pivot = m[k][k]
            for i in range(k + 1, n):
                row_i = m[i]
                row_k = m[k]
                lead = row_i[k]
                for j in range(k + 1, n):
                    row_i[j] = div(pivot * row_i[j] - lead * row_k[j], prev)
                row_i[k] = self.ring.zero
            prev = pivot
        d = m[n - 1][n - 1]
        return d if sign > 0 else -d

    def _field_det(self):
        n = self.rows
        m = [list(row) for row in self.entries]
        det = self.ring.one
        for k in range(n):
            piv = next((i for i in range(k, n) if m[i][k]), None)
            if piv is None:
                return self.ring.zero
            if piv != k:
                m[k], m[piv] = m[piv], m[k]
                det = -det
            pivot = m[k][k]
            det = det * pivot
            for i in range(k + 1, n):
                factor = m[i][k] / pivot
                if factor:
                    m[i] = [a - factor * b for a, b in zip(m[i], m[k])]
        return det

    def inverse(self) -> Matrix:
        """Exact inverse over Q(t); raises SingularMatrixError if singular."""
        sol = self._gauss_jordan([list(Matrix.identity(self.ring, self.rows).row(i))
                                  for i in range(self.rows)])
        return Matrix(self.ring, sol, cols=self.rows)

    def solve(self, v: Sequence) -> tuple:
        """The unique x with self @ x = v, over Q(t)."""
        if len(v) != self.rows:
            raise ValueError("right-hand side has wrong length")
        sol = self._gauss_jordan([[e] for e in v])
        return tuple(row[0] for row in sol)

    def _gauss_jordan(self, aug: list[list]) -> list[list]:
        if not self.ring.is_field:
            raise ValueError(f"inverse/solve requires a field, not {self.ring.name}")
        if not self.is_square():
            raise ValueError("inverse/solve requires a square matrix")
        n = self.rows
        m = [list(row) for row in self.entries]
        for k in range(n):
            piv = next((i for i in range(k, n) if m[i][k]), None)
            if piv is None:
                raise SingularMatrixError("matrix is singular over Q(t)")
            if piv != k:
                m[k], m[piv] = m[piv], m[k]
                aug[k], aug[piv] = aug[piv], aug[k]
            inv_p = self.ring.one / m[k][k]
            m[k] = [e * inv_p for e in m[k]]
            aug[k] = [e * inv_p for e in aug[k]]
            for i in range(n):
                if i == k:
                    continue
                f = m[i][k]
                if f:
                    m[i] = [a - f * b for a, b in zip(m[i], m[k])]
                    aug[i] = [a - f * b for a, b in zip(aug[i], aug[k])]
        return aug

    def __str__(self) -> str:
        if self.rows == 0 or self.cols == 0:
            return "[]"
        body = ", ".join("[" + ", ".join(str(e) for e in row) + "]"
                         for row in self.entries)
        return f"[{body}]"


def _dot(a: Sequence, b: Sequence, ring: Ring):
    total = ring.zero
    for x, y in zip(a, b):
        total = total + x * y
    return total
