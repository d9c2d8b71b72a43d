"""Invariant functionals and faithfulness.

A functional is a coordinate covector: ``f(x) = sum(f[k] * x[k])``.
"""
from __future__ import annotations

import itertools
from typing import Callable, Iterator, Sequence

from .algebra import FinDimAlgebra
from .comult import Comultiplication, require_unital_algebra, tensor_terms
from .exactlin import Matrix, dot, kernel, rank

LinearFunctional = tuple

DEFAULT_COEFFICIENT_BOUND = 3
DEFAULT_MAX_CANDIDATES = 5000


def invariance_system(cm: Comultiplication, side: str) -> Matrix:
    """Rows ``(i, k)``: coordinate k of ``(id(x)f)Delta(b_i) - f(b_i) 1`` (left)
    or ``(f(x)id)Delta(b_i) - f(b_i) 1`` (right), as linear forms in f."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    require_unital_algebra(cm)
    d = cm.dim
    unit = cm.algebra.unit
    rows = []
    for i in range(d):
        block = [[0] * d for _ in range(d)]
        for p, q, c in tensor_terms(cm.of_basis(i), d):
            if side == "left":
                block[p][q] += c
            else:
                block[q][p] += c
        for k in range(d):
            if unit[k]:
                block[k][i] -= unit[k]
        rows.extend(block)
    return Matrix(rows, d)


def invariant_space(cm: Comultiplication, side: str) -> list:
    """Basis of the left (or right) invariant functionals."""
    return kernel(invariance_system(cm, side))


def is_invariant(cm: Comultiplication, f: Sequence, side: str) -> bool:
    return not any(invariance_system(cm, side).apply(tuple(f)))


def gram_matrix(alg: FinDimAlgebra, f: Sequence) -> Matrix:
    """``G[i][j] = f(b_i b_j)``."""
    d = alg.dim
    return Matrix(
        [[sum((f[k] * c for k, c in alg.table[i][j]), 0) for j in range(d)] for i in range(d)], d
    )


def is_faithful(alg: FinDimAlgebra, f: Sequence) -> bool:
    # in finite dimensions injectivity on one side forces it on the other
    return rank(gram_matrix(alg, f)) == alg.dim


def evaluate(f: Sequence, x: Sequence):
    return dot(f, x)


def candidate_combinations(
    basis: Sequence[Sequence],
    bound: int = DEFAULT_COEFFICIENT_BOUND,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
) -> Iterator[tuple]:
    """The basis vectors, then small-integer combinations with at least two
    nonzero coefficients in ``-bound..bound``, in a fixed order."""
    yield from (tuple(v) for v in basis)
    if len(basis) < 2:
        return
    n = len(basis[0])
    emitted = 0
    for coeffs in itertools.product(range(-bound, bound + 1), repeat=len(basis)):
        if sum(1 for c in coeffs if c) < 2:
            continue
        if emitted >= max_candidates:
            return
        emitted += 1
        yield tuple(sum((c * v[k] for c, v in zip(coeffs, basis) if c), 0) for k in range(n))


def first_satisfying(
    basis: Sequence[Sequence],
    predicate: Callable[[tuple], bool],
    bound: int = DEFAULT_COEFFICIENT_BOUND,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
):
    """Bounded deterministic search through :func:`candidate_combinations`.

    Returns ``(vector, tried)``; ``vector`` is None when nothing qualified.
    """
    tried = 0
    for v in candidate_combinations(basis, bound, max_candidates):
        tried += 1
        if predicate(v):
            return v, tried
    return None, tried


def find_faithful_integral(cm: Comultiplication, side: str = "left", bound: int = DEFAULT_COEFFICIENT_BOUND):
    """Return ``(space, faithful_or_None, tried)``."""
    space = invariant_space(cm, side)
    if not space:
        return space, None, 0
    f, tried = first_satisfying(space, lambda v: is_faithful(cm.algebra, v), bound)
    return space, f, tried
