"""Exact dense linear algebra over the rational numbers.

Every other module reduces its questions (dimensions of graded pieces,
kernels of differentials, membership in submodules) to rank / kernel /
solve problems over Q.  Scalars are ``fractions.Fraction``; there is no
floating point anywhere, so every result is exact and no tolerances
appear in any test built on top of this module.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def _coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


class ExactMatrix:
    """A dense matrix of Fractions with row-major storage.

    Instances are immutable by convention: no public method mutates
    ``self``, so matrices can be shared freely between threads.
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, entries: Iterable[Sequence]):
        data = [[_coerce(x) for x in row] for row in entries]
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError(f"expected {rows}x{cols} entries")
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def from_rows(cls, entries: Sequence[Sequence]) -> "ExactMatrix":
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        return cls(rows, cols, entries)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, [[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, [[ZERO] * cols for _ in range(rows)])

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.data) == (other.rows, other.cols, other.data)

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols})"

    def entry(self, i: int, j: int) -> Fraction:
        return self.data[i][j]

    def row(self, i: int) -> list[Fraction]:
        return list(self.data[i])

    def column(self, j: int) -> list[Fraction]:
        return [r[j] for r in self.data]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows,
                           [[self.data[i][j] for i in range(self.rows)]
                            for j in range(self.cols)])

    def mat_mul(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        ot = other.transpose().data
        out = []
        for r in self.data:
            out.append([
                sum((r[k] * c[k] for k in range(self.cols) if r[k]), ZERO)
                for c in ot
            ])
        return ExactMatrix(self.rows, other.cols, out)

    def vec_mul(self, v: Sequence) -> list[Fraction]:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch in matrix-vector product")
        vv = [_coerce(x) for x in v]
        return [sum((r[k] * vv[k] for k in range(self.cols) if r[k]), ZERO)
                for r in self.data]

    # -- elimination ----------------------------------------------------

    def _echelon(self, carry: list[list[Fraction]] | None = None):
        """Reduced row echelon form of a working copy.

        Returns ``(rref_rows, pivot_cols)``.  When ``carry`` is given the
        same row operations are applied to it (used for multi-RHS solve).
        The inner loops skip zero multipliers; the matrices showing up in
        the graded computations are extremely sparse and this is what
        keeps the per-degree scans fast.
        """
        m = [row[:] for row in self.data]
        nrows, ncols = self.rows, self.cols
        pivots: list[int] = []
        pr = 0
        for pc in range(ncols):
            pivot_row = None
            for i in range(pr, nrows):
                if m[i][pc]:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            if pivot_row != pr:
                m[pr], m[pivot_row] = m[pivot_row], m[pr]
                if carry is not None:
                    carry[pr], carry[pivot_row] = carry[pivot_row], carry[pr]
            inv = ONE / m[pr][pc]
            if inv != ONE:
                row = m[pr]
                for j in range(pc, ncols):
                    if row[j]:
                        row[j] *= inv
                if carry is not None:
                    crow = carry[pr]
                    for j in range(len(crow)):
                        if crow[j]:
                            crow[j] *= inv
            prow = m[pr]
            for i in range(nrows):
                if i == pr:
                    continue
                factor = m[i][pc]
                if not factor:
                    continue
                row = m[i]
                for j in range(pc, ncols):
                    if prow[j]:
                        row[j] -= factor * prow[j]
                if carry is not None:
                    crow, cprow = carry[i], carry[pr]
                    for j in range(len(crow)):
                        if cprow[j]:
                            crow[j] -= factor * cprow[j]
            pivots.append(pc)
            pr += 1
            if pr == nrows:
                break
        return m, pivots

    def rref(self) -> tuple["ExactMatrix", list[int]]:
        """The unique reduced row echelon form and its pivot columns."""
        m, pivots = self._echelon()
        return ExactMatrix(self.rows, self.cols, m), pivots

    def rank(self) -> int:
        return len(self._echelon()[1])

    def kernel_basis(self) -> list[list[Fraction]]:
        """A basis of the right kernel ``{v : self @ v = 0}``.

        One basis vector per free column, with the free variable set
        to 1 and pivot variables solved for.
        """
        m, pivots = self._echelon()
        pivot_set = set(pivots)
        basis = []
        for free in range(self.cols):
            if free in pivot_set:
                continue
            v = [ZERO] * self.cols
            v[free] = ONE
            for r, pc in enumerate(pivots):
                if m[r][free]:
                    v[pc] = -m[r][free]
            basis.append(v)
        return basis

    def solve(self, b: Sequence) -> list[Fraction] | None:
        """A particular solution of ``self @ x = b`` (free variables 0).

        Returns ``None`` when the system is inconsistent.
        """
        sols = self.solve_columns([[_coerce(x)] for x in b])
        return None if sols is None else [row[0] for row in sols]

    def solve_columns(self, b_rows: Sequence[Sequence]) -> list[list[Fraction]] | None:
        """Solve ``self @ X = B`` for many right-hand sides at once.

        ``b_rows`` holds B row by row (``self.rows`` rows).  Returns the
        solution X as rows, or ``None`` if any column is inconsistent.
        Sharing one elimination across right-hand sides matters: the
        complex-property checks solve the same spanning system for every
        basis element of a graded piece.
        """
        if len(b_rows) != self.rows:
            raise ValueError("right-hand side has wrong number of rows")
        carry = [[_coerce(x) for x in row] for row in b_rows]
        width = len(carry[0]) if carry else 0
        if any(len(r) != width for r in carry):
            raise ValueError("ragged right-hand side")
        m, pivots = self._echelon(carry)
        # consistency: zero rows of the echelon form must have zero carry
        for i in range(len(pivots), self.rows):
            if any(carry[i]):
                return None
        xs = [[ZERO] * width for _ in range(self.cols)]
        for r, pc in enumerate(pivots):
            xs[pc] = carry[r][:]
        return xs


def matrix_from_columns(columns: Sequence[Sequence]) -> ExactMatrix:
    """Assemble a matrix whose j-th column is ``columns[j]``."""
    cols = len(columns)
    rows = len(columns[0]) if cols else 0
    return ExactMatrix(rows, cols, [[_coerce(columns[j][i]) for j in range(cols)]
                                    for i in range(rows)])
