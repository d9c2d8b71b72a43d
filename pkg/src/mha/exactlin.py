"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction`; matrices are immutable dense grids of
them. Elimination pivots on the first nonzero entry in row order, so every
result is reproducible bit for bit.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, InconsistentSystem

Scalar = Fraction
Vector = tuple  # tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def as_scalar(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing non-exact scalar {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def parse_rational(text: str) -> Fraction:
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"malformed rational {text!r}")
    if "/" in s and int(s.split("/")[1]) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(s)


def format_rational(q: Fraction) -> str:
    """``"p/q"`` in lowest terms, or ``"p"`` for integers."""
    return str(as_scalar(q))


def vector(values: Iterable) -> tuple:
    return tuple(as_scalar(v) for v in values)


def zero_vector(n: int) -> tuple:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> tuple:
    return tuple(ONE if k == i else ZERO for k in range(n))


def is_zero(v: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in v)


def add(u, v) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v) -> tuple:
    c = as_scalar(c)
    return tuple(c * a for a in v)


def dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v) if a and b), ZERO)


def max_abs(v: Iterable[Fraction]) -> Fraction:
    return max((abs(x) for x in v), default=ZERO)


class Matrix:
    """Immutable dense matrix over the rationals."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: Iterable[Iterable], cols: int | None = None):
        data = tuple(vector(r) for r in rows)
        if cols is None:
            if not data:
                raise ValueError("cannot infer column count of an empty matrix")
            cols = len(data[0])
        if any(len(r) != cols for r in data):
            raise ValueError("ragged rows")
        object.__setattr__(self, "_data", data)
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", cols)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([zero_vector(cols)] * rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([unit_vector(n, i) for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        if rows is None:
            rows = len(columns[0]) if columns else 0
        return cls([[c[i] for c in columns] for i in range(rows)], len(columns))

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def to_rows(self) -> tuple:
        return self._data

    def columns(self) -> list:
        return [self.column(j) for j in range(self.cols)]

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    @property
    def T(self) -> "Matrix":
        return Matrix(self.columns(), self.rows)

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} against {self.shape} matrix")
        nz = [(j, x) for j, x in enumerate(v) if x]
        return tuple(sum((r[j] * x for j, x in nz), ZERO) for r in self._data)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionMismatch(f"{self.shape} @ {other.shape}")
            cols = other.columns()
            return Matrix([[dot(r, c) for c in cols] for r in self._data], other.cols)
        return self.apply(other)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return Matrix([add(a, b) for a, b in zip(self._data, other._data)], self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} - {other.shape}")
        return Matrix([sub(a, b) for a, b in zip(self._data, other._data)], self.cols)

    def __mul__(self, c) -> "Matrix":
        return Matrix([scale(c, r) for r in self._data], self.cols)

    __rmul__ = __mul__

    def __neg__(self) -> "Matrix":
        return self * -1

    def __pow__(self, n: int) -> "Matrix":
        if self.rows != self.cols or n < 0:
            raise ValueError("integer powers need a square matrix and n >= 0")
        out = Matrix.identity(self.rows)
        for _ in range(n):
            out = out @ self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.cols == other.cols and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.cols, self._data))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self._data)
        return f"Matrix([{body}])"

    def to_strings(self) -> list:
        return [[format_rational(x) for x in r] for r in self._data]


def _as_rows(m) -> list:
    if isinstance(m, Matrix):
        return [list(r) for r in m.to_rows()]
    return [list(vector(r)) for r in m]


def _eliminate(rows: list, ncols: int) -> list:
    """Reduce ``rows`` in place to reduced row echelon form over the first
    ``ncols`` columns (trailing columns ride along). Returns pivot columns."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        pr = rows[r]
        inv = 1 / pr[c]
        if inv != 1:
            pr = rows[r] = [x * inv for x in pr]
        nz = [(j, x) for j, x in enumerate(pr) if x]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f == 0:
                continue
            ri = rows[i]
            for j, x in nz:
                ri[j] -= f * x
        pivots.append(c)
        r += 1
    return pivots


def rref(m) -> tuple:
    """Reduced row echelon form: ``(nonzero rows, pivot columns)``."""
    rows = _as_rows(m)
    ncols = m.cols if isinstance(m, Matrix) else (len(rows[0]) if rows else 0)
    pivots = _eliminate(rows, ncols)
    return tuple(tuple(r) for r in rows[: len(pivots)]), tuple(pivots)


def rank(m) -> int:
    return len(rref(m)[1])


def kernel(m) -> list:
    """Basis of the right null space. One vector per free column, with a 1 in
    that column; an empty list means ``m`` is injective."""
    ncols = m.cols if isinstance(m, Matrix) else len(m[0])
    reduced, pivots = rref(m)
    pivot_of = {c: i for i, c in enumerate(pivots)}
    basis = []
    for f in range(ncols):
        if f in pivot_of:
            continue
        v = [ZERO] * ncols
        v[f] = ONE
        for c, i in pivot_of.items():
            v[c] = -reduced[i][f]
        basis.append(tuple(v))
    return basis


def row_space(vectors: Iterable[Sequence], n: int) -> tuple:
    """Canonical (row reduced) basis of the span of ``vectors`` in Q^n.

    Two subspaces are equal iff their canonical bases are equal.
    """
    rows = [list(vector(v)) for v in vectors]
    if not rows:
        return ()
    return rref(Matrix(rows, n))[0]


def solve_many(m, rhs_columns: Sequence[Sequence]) -> list:
    """Solve ``m x = b`` for each ``b`` in ``rhs_columns`` with one elimination.

    Free variables are set to zero. Raises :class:`InconsistentSystem` on the
    first unsolvable right-hand side; its ``witness`` is a row combination
    ``y`` with ``y m = 0`` and ``y b != 0``.
    """
    rows = _as_rows(m)
    nrows = len(rows)
    ncols = m.cols if isinstance(m, Matrix) else len(rows[0])
    k = len(rhs_columns)
    for b in rhs_columns:
        if len(b) != nrows:
            raise DimensionMismatch(f"rhs of length {len(b)} for {nrows} equations")
    aug = []
    for i, r in enumerate(rows):
        tail = [as_scalar(b[i]) for b in rhs_columns]
        eye = [ONE if j == i else ZERO for j in range(nrows)]
        aug.append(r + tail + eye)
    pivots = _eliminate(aug, ncols)
    rk = len(pivots)
    for t in range(k):
        for i in range(rk, nrows):
            if aug[i][ncols + t] != 0:
                witness = tuple(aug[i][ncols + k:])
                raise InconsistentSystem(
                    f"right-hand side {t} is not in the column span", witness=witness
                )
    sols = []
    for t in range(k):
        x = [ZERO] * ncols
        for i, c in enumerate(pivots):
            x[c] = aug[i][ncols + t]
        sols.append(tuple(x))
    return sols


def solve(m, rhs: Sequence) -> tuple:
    """Exact solution of ``m x = rhs`` (free variables zero)."""
    return solve_many(m, [vector(rhs)])[0]


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; row ``(i, k)`` of the result is index ``i * b.rows + k``."""
    out = []
    for i in range(a.rows):
        for k in range(b.rows):
            brow = b.row(k)
            out.append([a[i, j] * y for j in range(a.cols) for y in brow])
    return Matrix(out, a.cols * b.cols)


def is_invertible(m: Matrix) -> bool:
    return m.rows == m.cols and rank(m) == m.rows
