"""Exact integer linear algebra.

Everything here works over Python ints, so entries never overflow no matter
how large the twist powers get.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionError
from .polynomial import IntPolynomial


class IntMatrix:
    """Immutable integer matrix stored row-major."""

    __slots__ = ("_rows", "_cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[int]):
        entries = tuple(int(x) for x in entries)
        if rows < 1 or cols < 1:
            raise DimensionError(f"matrix dimensions must be positive, got {rows}x{cols}")
        if len(entries) != rows * cols:
            raise DimensionError(f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(entries)}")
        self._rows = rows
        self._cols = cols
        self._entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise DimensionError("matrix must have at least one row and one column")
        width = len(rows[0])
        for i, r in enumerate(rows):
            if len(r) != width:
                raise DimensionError(f"row {i} has length {len(r)}, expected {width}")
        for r in rows:
            for x in r:
                if isinstance(x, bool) or not isinstance(x, int):
                    raise TypeError(f"matrix entries must be integers, got {x!r}")
        return cls(len(rows), width, (x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, (int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def block_diagonal(cls, *blocks: "IntMatrix") -> "IntMatrix":
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        out = [[0] * m for _ in range(n)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[r0 + i][c0 + j] = b[i, j]
            r0 += b.rows
            c0 += b.cols
        return cls.from_rows(out)

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def entries(self) -> tuple[int, ...]:
        return self._entries

    @property
    def shape(self) -> tuple[int, int]:
        return self._rows, self._cols

    @property
    def is_square(self) -> bool:
        return self._rows == self._cols

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        if not (0 <= i < self._rows and 0 <= j < self._cols):
            raise IndexError(f"index {index} out of range for {self._rows}x{self._cols} matrix")
        return self._entries[i * self._cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._entries[i * self._cols:(i + 1) * self._cols]

    def column(self, j: int) -> tuple[int, ...]:
        return self._entries[j::self._cols]

    def tolist(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self._rows)]

    def submatrix(self, row_indices: Sequence[int], col_indices: Sequence[int]) -> "IntMatrix":
        return IntMatrix(len(row_indices), len(col_indices),
                         (self[i, j] for i in row_indices for j in col_indices))

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(self._cols, self._rows,
                         (self[i, j] for j in range(self._cols) for i in range(self._rows)))

    def trace(self) -> int:
        _require_square(self)
        return sum(self[i, i] for i in range(self._rows))

    def is_zero(self) -> bool:
        return not any(self._entries)

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        if len(vector) != self._cols:
            raise DimensionError(f"vector of length {len(vector)} cannot multiply a {self._rows}x{self._cols} matrix")
        return tuple(sum(a * b for a, b in zip(self.row(i), vector)) for i in range(self._rows))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self._cols != other._rows:
            raise DimensionError(f"cannot multiply {self._rows}x{self._cols} by {other._rows}x{other._cols}")
        cols = [other.column(j) for j in range(other._cols)]
        return IntMatrix(self._rows, other._cols,
                         (sum(a * b for a, b in zip(self.row(i), c)) for i in range(self._rows) for c in cols))

    def _elementwise(self, other: "IntMatrix", op) -> "IntMatrix":
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch: {self.shape} vs {other.shape}")
        return IntMatrix(self._rows, self._cols, (op(a, b) for a, b in zip(self._entries, other._entries)))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self._elementwise(other, lambda a, b: a + b)

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self._elementwise(other, lambda a, b: a - b)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self._rows, self._cols, (-x for x in self._entries))

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix(self._rows, self._cols, (c * x for x in self._entries))

    def __pow__(self, n: int) -> "IntMatrix":
        _require_square(self)
        if n < 0:
            raise ValueError("negative powers need an inverse; use a unimodular inverse explicitly")
        result = IntMatrix.identity(self._rows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self._rows, self._cols, self._entries))

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()})"


def _require_square(m: IntMatrix) -> None:
    if not m.is_square:
        raise DimensionError(f"expected a square matrix, got {m.rows}x{m.cols}")


def determinant(m: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    _require_square(m)
    n = m.rows
    a = m.tolist()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def rational_rank(m: IntMatrix) -> int:
    """Rank over Q using fraction-free row reduction."""
    a = m.tolist()
    rows, cols = m.shape
    rank = 0
    for c in range(cols):
        pivot_row = next((i for i in range(rank, rows) if a[i][c] != 0), None)
        if pivot_row is None:
            continue
        a[rank], a[pivot_row] = a[pivot_row], a[rank]
        p = a[rank]
        for i in range(rank + 1, rows):
            f = a[i][c]
            if f:
                a[i] = [p[c] * x - f * y for x, y in zip(a[i], p)]
        rank += 1
        if rank == rows:
            break
    return rank


@dataclass(frozen=True)
class SmithForm:
    """Smith normal form ``left @ original @ right == diag(diagonal)``.

    ``diagonal`` holds only the nonzero invariant factors, so its length is
    the rank of the original matrix.
    """

    diagonal: tuple[int, ...]
    left: IntMatrix
    right: IntMatrix
    shape: tuple[int, int]

    def diagonal_matrix(self) -> IntMatrix:
        rows, cols = self.shape
        d = [[0] * cols for _ in range(rows)]
        for i, x in enumerate(self.diagonal):
            d[i][i] = x
        return IntMatrix.from_rows(d)

    @property
    def rank(self) -> int:
        return len(self.diagonal)


def smith_normal_form(m: IntMatrix) -> SmithForm:
    """Smith normal form with unimodular witnesses.

    The pivot is always the nonzero entry of least absolute value in the
    active block, found by a row-then-column scan, so the witnesses are
    reproducible.
    """
    rows, cols = m.shape
    a = m.tolist()
    left = IntMatrix.identity(rows).tolist()
    right = IntMatrix.identity(cols).tolist()

    def swap_rows(i, j):
        if i != j:
            a[i], a[j] = a[j], a[i]
            left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        if i != j:
            for r in a:
                r[i], r[j] = r[j], r[i]
            for r in right:
                r[i], r[j] = r[j], r[i]

    def add_row(src, dst, q):
        # row[dst] += q * row[src]
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        left[dst] = [x + q * y for x, y in zip(left[dst], left[src])]

    def add_col(src, dst, q):
        for r in a:
            r[dst] += q * r[src]
        for r in right:
            r[dst] += q * r[src]

    def smallest(t, cells):
        best = None
        for i, j in cells:
            x = a[i][j]
            if x and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                best = (i, j)
        return best

    diagonal = []
    for t in range(min(rows, cols)):
        block = [(i, j) for i in range(t, rows) for j in range(t, cols)]
        pos = smallest(t, block)
        if pos is None:
            break
        swap_rows(t, pos[0])
        swap_cols(t, pos[1])
        while True:
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(t, i, -(a[i][t] // a[t][t]))
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(t, j, -(a[t][j] // a[t][t]))
            cross = [(i, t) for i in range(t + 1, rows)] + [(t, j) for j in range(t + 1, cols)]
            pos = smallest(t, cross)
            if pos is not None:
                # a remainder is now smaller than the pivot
                swap_rows(t, pos[0])
                swap_cols(t, pos[1])
                continue
            p = a[t][t]
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            left[t] = [-x for x in left[t]]
        diagonal.append(a[t][t])

    return SmithForm(tuple(diagonal), IntMatrix.from_rows(left), IntMatrix.from_rows(right), (rows, cols))


def characteristic_polynomial(m: IntMatrix) -> IntPolynomial:
    """det(tI - m) via Faddeev-LeVerrier; every division is exact over Z."""
    _require_square(m)
    n = m.rows
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    ident = IntMatrix.identity(n)
    aux = IntMatrix.zeros(n, n)
    for k in range(1, n + 1):
        aux = m @ aux + ident.scale(coeffs[n - k + 1])
        tr = (m @ aux).trace()
        if tr % k:
            raise ArithmeticError("Faddeev-LeVerrier produced an inexact division")
        coeffs[n - k] = -tr // k
    return IntPolynomial(coeffs)


def symplectic_inverse(m: IntMatrix, form: IntMatrix) -> IntMatrix:
    """Inverse of a matrix preserving ``form`` (with form^2 = -I): -J m^T J."""
    return -(form @ m.T @ form)
