"""Independent solves used to cross-check the constructed counit and antipode.

Neither function touches integrals or cointegrals: the counit is solved
directly from (eps(x)id)Delta(a) = a, the antipode as the convolution inverse
m(R(x)id)Delta(a) = eps(a)1 with R's d*d entries as unknowns.
"""
from __future__ import annotations

from typing import Sequence

from .comult import Comultiplication, require_unital_algebra, tensor_terms
from .exactlin import Matrix, kernel, solve


def counit_identity_system(cm: Comultiplication, side: str = "left") -> tuple:
    """``(M, rhs)`` for (eps(x)id)Delta(b_i) = b_i (``side="left"``) or
    (id(x)eps)Delta(b_i) = b_i, unknown eps."""
    d = cm.dim
    rows, rhs = [], []
    for i in range(d):
        block = [[0] * d for _ in range(d)]
        for p, q, c in tensor_terms(cm.of_basis(i), d):
            if side == "left":
                block[q][p] += c
            else:
                block[p][q] += c
        rows.extend(block)
        rhs.extend(1 if k == i else 0 for k in range(d))
    return Matrix(rows, d), rhs


def counit_by_identity(cm: Comultiplication) -> tuple:
    """The unique eps with both counit identities; raises if there is none."""
    left, lrhs = counit_identity_system(cm, "left")
    right, rrhs = counit_identity_system(cm, "right")
    stacked = Matrix(list(left.to_rows()) + list(right.to_rows()), cm.dim)
    return solve(stacked, lrhs + rrhs)


def antipode_system(cm: Comultiplication, eps: Sequence, side: str = "left") -> tuple:
    """``(M, rhs)`` for m(R(x)id)Delta(b_i) = eps(b_i)1 (``side="left"``) or
    m(id(x)R)Delta(b_i) = eps(b_i)1.

    Unknown ``r[q * d + p]`` is the coefficient of b_q in R(b_p).
    """
    require_unital_algebra(cm)
    alg = cm.algebra
    d = cm.dim
    unit = alg.unit
    rows, rhs = [], []
    for i in range(d):
        block = [[0] * (d * d) for _ in range(d)]
        for p, l, c in tensor_terms(cm.of_basis(i), d):
            for q in range(d):
                # R(b_p) b_l contributes r[q, p] * b_q b_l (or b_p R(b_l))
                prods = alg.table[q][l] if side == "left" else alg.table[p][q]
                col = q * d + p if side == "left" else q * d + l
                for k, e in prods:
                    block[k][col] += c * e
        rows.extend(block)
        rhs.extend(eps[i] * unit[k] for k in range(d))
    return Matrix(rows, d * d), rhs


def convolution_inverse(cm: Comultiplication, eps: Sequence) -> Matrix:
    """R solving m(R(x)id)Delta(a) = eps(a)1, as a coordinate matrix
    (column p is R(b_p))."""
    d = cm.dim
    m, rhs = antipode_system(cm, eps, "left")
    r = solve(m, rhs)
    return Matrix([[r[q * d + p] for p in range(d)] for q in range(d)], d)


def uniqueness_report(cm: Comultiplication, eps: Sequence) -> dict:
    """Kernel dimensions of the homogeneous counit and one-sided antipode
    systems; zero means the solution is unique."""
    return {
        "counit_left": len(kernel(counit_identity_system(cm, "left")[0])),
        "counit_right": len(kernel(counit_identity_system(cm, "right")[0])),
        "antipode_left": len(kernel(antipode_system(cm, eps, "left")[0])),
        "antipode_right": len(kernel(antipode_system(cm, eps, "right")[0])),
    }

