"""Exact Gaussian elimination over F_q and over F_{q^m}.

Matrices are small (desk scale), so everything is dense row-major with
first-nonzero pivoting; there are no numerical concerns in finite fields.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .field import ContextMismatchError, FieldCtx, FieldElement


class MatrixFq:
    """Dense matrix over the prime field F_q (entries: ints in [0, q))."""

    def __init__(self, q: int, data: Sequence[Sequence[int]]):
        self.q = q
        self.data = [[int(x) % q for x in row] for row in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.rows else 0
        for row in self.data:
            if len(row) != self.cols:
                raise ValueError("ragged matrix data")

    @classmethod
    def zeros(cls, q: int, rows: int, cols: int) -> "MatrixFq":
        return cls(q, [[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, q: int, n: int) -> "MatrixFq":
        return cls(q, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, q: int, columns: Sequence[Sequence[int]]) -> "MatrixFq":
        return cls(q, [list(row) for row in zip(*columns)] if columns else [])

    def _rref(self, augmented: Optional[Sequence[Sequence[int]]] = None):
        """Row-reduce; returns (rows, pivot column list, augmented rows)."""
        q = self.q
        a = [row[:] for row in self.data]
        b = [row[:] for row in augmented] if augmented is not None else None
        pivots = []
        r = 0
        for col in range(self.cols):
            piv = None
            for i in range(r, self.rows):
                if a[i][col]:
                    piv = i
                    break
            if piv is None:
                continue
            a[r], a[piv] = a[piv], a[r]
            if b is not None:
                b[r], b[piv] = b[piv], b[r]
            inv = pow(a[r][col], -1, q)
            a[r] = [(inv * x) % q for x in a[r]]
            if b is not None:
                b[r] = [(inv * x) % q for x in b[r]]
            for i in range(self.rows):
                if i != r and a[i][col]:
                    c = a[i][col]
                    a[i] = [(x - c * y) % q for x, y in zip(a[i], a[r])]
                    if b is not None:
                        b[i] = [(x - c * y) % q for x, y in zip(b[i], b[r])]
            pivots.append(col)
            r += 1
            if r == self.rows:
                break
        return a, pivots, b

    def rank(self) -> int:
        return len(self._rref()[1])

    def kernel_basis(self) -> list[list[int]]:
        """Basis of the right kernel {x : A x = 0}."""
        a, pivots, _ = self._rref()
        q = self.q
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            v = [0] * self.cols
            v[fc] = 1
            for r, pc in enumerate(pivots):
                v[pc] = (-a[r][fc]) % q
            basis.append(v)
        return basis

    def solve(self, b: Sequence[int]) -> Optional[list[int]]:
        """One solution of A x = b, or None if the system is inconsistent.

        Free variables are set to zero, so the result is deterministic.
        """
        if len(b) != self.rows:
            raise ValueError("right-hand side length mismatch")
        a, pivots, aug = self._rref([[int(x) % self.q] for x in b])
        nr = len(pivots)
        for i in range(nr, self.rows):
            if aug[i][0]:
                return None
        x = [0] * self.cols
        for r, pc in enumerate(pivots):
            x[pc] = aug[r][0]
        return x


class MatrixFqm:
    """Dense matrix over the extension field F_{q^m}."""

    def __init__(self, ctx: FieldCtx, data: Sequence[Sequence[FieldElement]]):
        self.ctx = ctx
        self.data = [list(row) for row in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.rows else 0
        for row in self.data:
            if len(row) != self.cols:
                raise ValueError("ragged matrix data")
            for x in row:
                if x.ctx is not ctx:
                    raise ContextMismatchError("matrix entry from a different field context")

    @classmethod
    def zeros(cls, ctx: FieldCtx, rows: int, cols: int) -> "MatrixFqm":
        return cls(ctx, [[ctx.zero] * cols for _ in range(rows)])

    def _rref(self):
        a = [row[:] for row in self.data]
        pivots = []
        r = 0
        for col in range(self.cols):
            piv = None
            for i in range(r, self.rows):
                if a[i][col]:
                    piv = i
                    break
            if piv is None:
                continue
            a[r], a[piv] = a[piv], a[r]
            inv = a[r][col].inv()
            a[r] = [inv * x for x in a[r]]
            for i in range(self.rows):
                if i != r and a[i][col]:
                    c = a[i][col]
                    a[i] = [x - c * y for x, y in zip(a[i], a[r])]
            pivots.append(col)
            r += 1
            if r == self.rows:
                break
        return a, pivots

    def rank(self) -> int:
        return len(self._rref()[1])

    def right_kernel_basis(self) -> list[list[FieldElement]]:
        """Basis of {x in F_{q^m}^cols : A x = 0}."""
        a, pivots = self._rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            v = [self.ctx.zero] * self.cols
            v[fc] = self.ctx.one
            for r, pc in enumerate(pivots):
                v[pc] = -a[r][fc]
            basis.append(v)
        return basis

    def mul_vec(self, v: Sequence[FieldElement]) -> list[FieldElement]:
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        out = []
        for row in self.data:
            acc = self.ctx.zero
            for x, y in zip(row, v):
                acc = acc + x * y
            out.append(acc)
        return out

    def matmul(self, other: "MatrixFqm") -> "MatrixFqm":
        if other.rows != self.cols:
            raise ValueError("inner dimension mismatch")
        data = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = self.ctx.zero
                for k in range(self.cols):
                    acc = acc + self.data[i][k] * other.data[k][j]
                row.append(acc)
            data.append(row)
        return MatrixFqm(self.ctx, data)

    def transpose(self) -> "MatrixFqm":
        return MatrixFqm(self.ctx, [list(col) for col in zip(*self.data)] if self.rows else [])

    def is_zero(self) -> bool:
        return all(not x for row in self.data for x in row)


def kernel_fqm(matrix: MatrixFqm) -> list[list[FieldElement]]:
    return matrix.right_kernel_basis()


def solve_fq(matrix: MatrixFq, b: Sequence[int]) -> Optional[list[int]]:
    return matrix.solve(b)
