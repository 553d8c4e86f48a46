"""Dense exact matrices over rationals, cyclotomic numbers and quadratic surds.

Entries of one matrix share a scalar domain (Fraction, CycNum of a fixed root
order, or QuadNum); int and Fraction scalars promote into the entry domain
through the entry classes' own operators.  Sizes here are small (a few
hundred at most), so the cubic algorithms below are written for clarity, with
exact zero tests everywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


class ExactMatrix:
    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        rs = tuple(tuple(row) for row in rows)
        if not rs or not rs[0]:
            raise ValueError("matrix must be non-empty")
        w = len(rs[0])
        if any(len(row) != w for row in rs):
            raise ValueError("ragged rows")
        self.rows = rs

    @classmethod
    def identity(cls, n: int, one=Fraction(1)) -> "ExactMatrix":
        zero = one - one
        return cls(
            tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))
        )

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")
        return ExactMatrix(
            tuple(
                tuple(a + b for a, b in zip(r1, r2))
                for r1, r2 in zip(self.rows, other.rows)
            )
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")
        return ExactMatrix(
            tuple(
                tuple(a - b for a, b in zip(r1, r2))
                for r1, r2 in zip(self.rows, other.rows)
            )
        )

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(tuple(tuple(-a for a in row) for row in self.rows))

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.ncols != other.nrows:
                raise ValueError(f"shape mismatch: {self.shape} * {other.shape}")
            cols = tuple(zip(*other.rows))
            return ExactMatrix(
                tuple(
                    tuple(_dot(row, col) for col in cols) for row in self.rows
                )
            )
        return ExactMatrix(tuple(tuple(a * other for a in row) for row in self.rows))

    def __rmul__(self, other):
        # other is a scalar (matrix*matrix is handled by __mul__)
        return ExactMatrix(tuple(tuple(other * a for a in row) for row in self.rows))

    def plus_scalar_diag(self, c) -> "ExactMatrix":
        """self + c*I, promoting c into the entry domain."""
        if not self.is_square():
            raise ValueError("diagonal shift needs a square matrix")
        return ExactMatrix(
            tuple(
                tuple(a + c if i == j else a for j, a in enumerate(row))
                for i, row in enumerate(self.rows)
            )
        )

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(tuple(zip(*self.rows)))

    def conj_transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            tuple(tuple(a.conjugate() for a in col) for col in zip(*self.rows))
        )

    def trace(self):
        if not self.is_square():
            raise ValueError("trace needs a square matrix")
        t = self.rows[0][0]
        for i in range(1, self.nrows):
            t = t + self.rows[i][i]
        return t

    def is_zero(self) -> bool:
        return all(a == 0 for row in self.rows for a in row)

    def is_hermitian(self) -> bool:
        return self.is_square() and self == self.conj_transpose()

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b
            for r1, r2 in zip(self.rows, other.rows)
            for a, b in zip(r1, r2)
        )

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols})"


def _dot(row, col):
    acc = None
    for a, b in zip(row, col):
        term = a * b
        acc = term if acc is None else acc + term
    return acc


def mat_poly_check(m: ExactMatrix, coeffs: Sequence) -> bool:
    """Whether sum(coeffs[i] * m^i) is exactly the zero matrix.

    ``coeffs`` is low degree first; rational coefficients promote into the
    entry domain.  Evaluation is by Horner's scheme, so a degree-k polynomial
    costs k-1 matrix products.
    """
    if not m.is_square():
        raise ValueError("polynomial check needs a square matrix")
    cs = list(coeffs)
    if not cs:
        return True
    acc = None
    for c in reversed(cs):
        acc = (acc * m).plus_scalar_diag(c) if acc is not None else _const_diag(m, c)
    return acc.is_zero()


def _const_diag(m: ExactMatrix, c) -> ExactMatrix:
    zero = m.rows[0][0] - m.rows[0][0]
    return ExactMatrix(
        tuple(
            tuple(zero + c if i == j else zero for j in range(m.ncols))
            for i in range(m.nrows)
        )
    )


def mat_rank_exact(m: ExactMatrix) -> int:
    """Rank by Gaussian elimination with exact field arithmetic."""
    rows = [list(row) for row in m.rows]
    nr, nc = m.shape
    rank = 0
    for col in range(nc):
        pivot_row = None
        for i in range(rank, nr):
            if rows[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pivot = rows[rank][col]
        pinv = _field_inverse(pivot)
        for i in range(rank + 1, nr):
            if rows[i][col] == 0:
                continue
            factor = rows[i][col] * pinv
            rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == nr:
            break
    return rank


def _field_inverse(x):
    if isinstance(x, Fraction):
        return Fraction(1) / x
    if isinstance(x, int):
        return Fraction(1, x)
    return x.inverse()
