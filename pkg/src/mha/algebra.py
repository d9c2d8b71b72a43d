"""Finite-dimensional algebras given by structure constants.

``m[i][j][k]`` is the coefficient of basis element ``k`` in ``b_i * b_j``.
Elements are coordinate tuples of :class:`~fractions.Fraction`.
"""
from __future__ import annotations

from typing import Mapping, Sequence

from .errors import (
    BadUnit,
    DegenerateProduct,
    DimensionMismatch,
    InconsistentSystem,
    InvalidInput,
    NonAssociative,
)
from .exactlin import ZERO, Matrix, as_scalar, kernel, solve, unit_vector, vector, zero_vector

DEFAULT_MAX_DIM = 64

Element = tuple


class FinDimAlgebra:
    """An algebra over Q with a fixed basis.

    Construction only stores the data; :func:`validate_algebra` is the checked
    entry point.
    """

    def __init__(self, labels: Sequence[str], constants, unit: Sequence | None = None):
        self.labels = tuple(str(x) for x in labels)
        d = self.dim = len(self.labels)
        cube = [[[ZERO] * d for _ in range(d)] for _ in range(d)]
        if isinstance(constants, Mapping):
            for (i, j, k), c in constants.items():
                for idx in (i, j, k):
                    if not 0 <= idx < d:
                        raise DimensionMismatch(f"structure-constant index {idx} out of range for dim {d}")
                cube[i][j][k] = as_scalar(c)
        else:
            if len(constants) != d or any(
                len(row) != d or any(len(cell) != d for cell in row) for row in constants
            ):
                raise DimensionMismatch(f"structure constants are not a {d}x{d}x{d} cube")
            for i in range(d):
                for j in range(d):
                    cube[i][j] = list(vector(constants[i][j]))
        self.constants = tuple(tuple(tuple(cell) for cell in row) for row in cube)
        # sparse products: table[i][j] = ((k, c), ...) with c != 0
        self.table = tuple(
            tuple(tuple((k, c) for k, c in enumerate(cell) if c) for cell in row)
            for row in self.constants
        )
        self.unit = vector(unit) if unit is not None else None
        if self.unit is not None and len(self.unit) != d:
            raise DimensionMismatch("unit has the wrong length")

    def __repr__(self) -> str:
        return f"FinDimAlgebra(dim={self.dim}, basis={list(self.labels)})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FinDimAlgebra)
            and self.labels == other.labels
            and self.constants == other.constants
            and self.unit == other.unit
        )

    def __hash__(self) -> int:
        return hash((self.labels, self.constants, self.unit))

    def basis(self, i: int) -> Element:
        return unit_vector(self.dim, i)

    def zero(self) -> Element:
        return zero_vector(self.dim)

    def element(self, coords) -> Element:
        v = vector(coords)
        if len(v) != self.dim:
            raise DimensionMismatch(f"element of length {len(v)} in an algebra of dim {self.dim}")
        return v

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def multiply(self, x: Sequence, y: Sequence) -> Element:
        out = [ZERO] * self.dim
        ys = [(j, b) for j, b in enumerate(y) if b]
        for i, a in enumerate(x):
            if not a:
                continue
            row = self.table[i]
            for j, b in ys:
                ab = a * b
                for k, c in row[j]:
                    out[k] += ab * c
        return tuple(out)

    def basis_product(self, i: int, j: int) -> Element:
        out = [ZERO] * self.dim
        for k, c in self.table[i][j]:
            out[k] = c
        return tuple(out)

    def format(self, x: Sequence) -> str:
        """Human-readable linear combination, e.g. ``x - gx``."""
        terms = []
        for c, name in zip(x, self.labels):
            if not c:
                continue
            if c == 1:
                t = name
            elif c == -1:
                t = "-" + name
            else:
                t = f"{c}*{name}"
            terms.append(t)
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


def associativity_witness(alg: FinDimAlgebra):
    """First basis triple with ``(b_i b_j) b_k != b_i (b_j b_k)``, or None."""
    d = alg.dim
    for i in range(d):
        for j in range(d):
            ij = alg.basis_product(i, j)
            for k in range(d):
                jk = alg.basis_product(j, k)
                if alg.multiply(ij, alg.basis(k)) != alg.multiply(alg.basis(i), jk):
                    return (i, j, k)
    return None


def find_unit(alg: FinDimAlgebra):
    """Solve ``u b_i = b_i = b_i u`` for all i; the unique solution or None."""
    d = alg.dim
    rows, rhs = [], []
    for i in range(d):
        for k in range(d):
            # coefficient of b_k in u * b_i and in b_i * u, as linear forms in u
            rows.append([alg.constants[p][i][k] for p in range(d)])
            rhs.append(1 if k == i else 0)
            rows.append([alg.constants[i][p][k] for p in range(d)])
            rhs.append(1 if k == i else 0)
    m = Matrix(rows, d)
    try:
        return solve(m, rhs)
    except InconsistentSystem:
        return None


def product_nondegenerate(alg: FinDimAlgebra) -> tuple:
    """``(True, None)`` if no nonzero x has ``xA = 0`` or ``Ax = 0``;
    otherwise ``(False, (side, witness))``."""
    d = alg.dim
    left = Matrix(
        [[alg.constants[p][j][k] for p in range(d)] for j in range(d) for k in range(d)], d
    )
    ker = kernel(left)
    if ker:
        return False, ("x*A = 0", ker[0])
    right = Matrix(
        [[alg.constants[j][p][k] for p in range(d)] for j in range(d) for k in range(d)], d
    )
    ker = kernel(right)
    if ker:
        return False, ("A*x = 0", ker[0])
    return True, None


def is_unit(alg: FinDimAlgebra, u: Sequence) -> bool:
    return all(
        alg.multiply(u, alg.basis(i)) == alg.basis(i) == alg.multiply(alg.basis(i), u)
        for i in range(alg.dim)
    )


def validate_algebra(
    labels: Sequence[str],
    constants,
    unit: Sequence | None = None,
    max_dim: int = DEFAULT_MAX_DIM,
) -> FinDimAlgebra:
    """Build and check an algebra.

    Raises NonAssociative (with the basis triple), DegenerateProduct (with an
    annihilated element) or BadUnit when a declared unit is wrong.
    """
    if len(labels) == 0:
        raise InvalidInput("dimension 0 algebras are rejected", definition="dim >= 1")
    if len(labels) > max_dim:
        raise InvalidInput(f"dimension {len(labels)} exceeds the cap of {max_dim}", definition="dimension cap")
    if len(set(labels)) != len(labels):
        raise InvalidInput("basis labels must be distinct", definition="basis labels")
    raw = FinDimAlgebra(labels, constants)
    w = associativity_witness(raw)
    if w is not None:
        i, j, k = w
        lbl = raw.labels
        raise NonAssociative(
            f"associativity fails: ({lbl[i]}*{lbl[j]})*{lbl[k]} != {lbl[i]}*({lbl[j]}*{lbl[k]})",
            witness=w,
        )
    found = find_unit(raw)
    if unit is not None:
        u = vector(unit)
        if len(u) != raw.dim:
            raise BadUnit("declared unit has the wrong length")
        if not is_unit(raw, u):
            if found is None:
                raise BadUnit("declared unit is not a two-sided unit and the algebra has none")
            raise BadUnit(
                f"declared unit {raw.format(u)} differs from the actual unit {raw.format(found)}",
                witness=found,
            )
        found = u
    ok, witness = product_nondegenerate(raw)
    if not ok:
        side, x = witness
        raise DegenerateProduct(f"product is degenerate: {raw.format(x)} satisfies {side}", witness=x, side=side)
    return FinDimAlgebra(raw.labels, raw.constants, found)
