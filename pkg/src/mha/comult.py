"""Comultiplications as exact linear maps A -> A (x) A.

Tensors in A (x) A are flat coordinate tuples with ``b_p (x) b_q`` at index
``p * dim + q``. Column ``i`` of the delta matrix is the tensor Delta(b_i).
"""
from __future__ import annotations

import enum
from typing import Mapping, Sequence

from .algebra import FinDimAlgebra
from .errors import DimensionMismatch, NonUnitalInput, NotCoassociative, NotHomomorphism
from .exactlin import ZERO, Matrix, as_scalar, row_space, unit_vector


class GaloisKind(str, enum.Enum):
    """The four maps A(x)A -> A(x)A built from the comultiplication."""

    T1 = "T1"    # a (x) b -> Delta(a)(1 (x) b)
    T2 = "T2"    # a (x) b -> (a (x) 1)Delta(b)
    T1P = "T1'"  # a (x) b -> Delta(a)(b (x) 1)
    T2P = "T2'"  # a (x) b -> (1 (x) a)Delta(b)


# --- tensor helpers -------------------------------------------------------


def tensor_terms(t: Sequence, d: int) -> list:
    """Nonzero entries of a flat tensor as ``(p, q, c)``."""
    return [(idx // d, idx % d, c) for idx, c in enumerate(t) if c]


def simple_tensor(x: Sequence, y: Sequence) -> tuple:
    return tuple(a * b for a in x for b in y)


def flip(t: Sequence, d: int) -> tuple:
    out = [ZERO] * (d * d)
    for p, q, c in tensor_terms(t, d):
        out[q * d + p] = c
    return tuple(out)


def act(alg: FinDimAlgebra, t: Sequence, x: Sequence, leg: int, from_left: bool) -> tuple:
    """Multiply leg ``leg`` (0 or 1) of the tensor ``t`` by ``x``.

    ``act(alg, t, b, 1, False)`` is ``t (1 (x) b)`` and
    ``act(alg, t, a, 0, True)`` is ``(a (x) 1) t``.
    """
    d = alg.dim
    out = [ZERO] * (d * d)
    xs = [(j, a) for j, a in enumerate(x) if a]
    table = alg.table
    for p, q, c in tensor_terms(t, d):
        moving = p if leg == 0 else q
        for j, a in xs:
            ca = c * a
            prods = table[j][moving] if from_left else table[moving][j]
            for k, e in prods:
                if leg == 0:
                    out[k * d + q] += ca * e
                else:
                    out[p * d + k] += ca * e
    return tuple(out)


def tensor_multiply(alg: FinDimAlgebra, s: Sequence, t: Sequence) -> tuple:
    """Product in the algebra A (x) A."""
    d = alg.dim
    out = [ZERO] * (d * d)
    tt = tensor_terms(t, d)
    table = alg.table
    for p, q, c in tensor_terms(s, d):
        for r, u, e in tt:
            ce = c * e
            for k, f in table[p][r]:
                for l, g in table[q][u]:
                    out[k * d + l] += ce * f * g
    return tuple(out)


def slice_left(t: Sequence, d: int, omega: Sequence) -> tuple:
    """``(id (x) omega)(t)``."""
    out = [ZERO] * d
    for p, q, c in tensor_terms(t, d):
        if omega[q]:
            out[p] += c * omega[q]
    return tuple(out)


def slice_right(t: Sequence, d: int, omega: Sequence) -> tuple:
    """``(omega (x) id)(t)``."""
    out = [ZERO] * d
    for p, q, c in tensor_terms(t, d):
        if omega[p]:
            out[q] += c * omega[p]
    return tuple(out)


def multiply_legs(alg: FinDimAlgebra, t: Sequence) -> tuple:
    """The multiplication map m(a (x) b) = ab applied to a tensor."""
    d = alg.dim
    out = [ZERO] * d
    for p, q, c in tensor_terms(t, d):
        for k, e in alg.table[p][q]:
            out[k] += c * e
    return tuple(out)


def apply_tensor_map(t: Sequence, d: int, left: Matrix, right: Matrix) -> tuple:
    """``(L (x) R)(t)`` for d x d coordinate matrices L and R."""
    out = [ZERO] * (d * d)
    lcols = [left.column(p) for p in range(d)]
    rcols = [right.column(q) for q in range(d)]
    for p, q, c in tensor_terms(t, d):
        lp, rq = lcols[p], rcols[q]
        for k in range(d):
            if lp[k]:
                ck = c * lp[k]
                for l in range(d):
                    if rq[l]:
                        out[k * d + l] += ck * rq[l]
    return tuple(out)


# --- the comultiplication -------------------------------------------------


class Comultiplication:
    """A linear map Delta: A -> A (x) A, stored as a d^2 x d matrix.

    Use :func:`validate_comultiplication` to obtain a checked instance.
    """

    def __init__(self, alg: FinDimAlgebra, delta):
        d = alg.dim
        self.algebra = alg
        if isinstance(delta, Matrix):
            if delta.shape != (d * d, d):
                raise DimensionMismatch(f"delta must be {d * d} x {d}, got {delta.rows} x {delta.cols}")
            self.delta = delta
        elif isinstance(delta, Mapping):
            cols = [[ZERO] * (d * d) for _ in range(d)]
            for (i, j, k), c in delta.items():
                for idx in (i, j, k):
                    if not 0 <= idx < d:
                        raise DimensionMismatch(f"comultiplication index {idx} out of range for dim {d}")
                cols[i][j * d + k] = as_scalar(c)
            self.delta = Matrix.from_columns(cols, d * d)
        else:
            raise TypeError("delta must be a Matrix or a {(i, j, k): coeff} mapping")
        self._images = tuple(self.delta.column(i) for i in range(d))

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Comultiplication)
            and self.algebra == other.algebra
            and self.delta == other.delta
        )

    def __hash__(self) -> int:
        return hash((self.algebra, self.delta))

    def __repr__(self) -> str:
        return f"Comultiplication({self.algebra!r})"

    def of_basis(self, i: int) -> tuple:
        return self._images[i]

    def __call__(self, x: Sequence) -> tuple:
        d = self.dim
        out = [ZERO] * (d * d)
        for i, a in enumerate(x):
            if a:
                for idx, c in enumerate(self._images[i]):
                    if c:
                        out[idx] += a * c
        return tuple(out)

    def triple_left(self, t: Sequence) -> dict:
        """``(Delta (x) id)(t)`` as a sparse triple tensor ``{(p, q, r): c}``."""
        d = self.dim
        out: dict = {}
        for p, r, c in tensor_terms(t, d):
            for u, v, e in tensor_terms(self._images[p], d):
                key = (u, v, r)
                out[key] = out.get(key, ZERO) + c * e
        return out

    def triple_right(self, t: Sequence) -> dict:
        """``(id (x) Delta)(t)`` as a sparse triple tensor."""
        d = self.dim
        out: dict = {}
        for p, q, c in tensor_terms(t, d):
            for u, v, e in tensor_terms(self._images[q], d):
                key = (p, u, v)
                out[key] = out.get(key, ZERO) + c * e
        return out

    def format(self, t: Sequence) -> str:
        lbl = self.algebra.labels
        d = self.dim
        parts = []
        for p, q, c in tensor_terms(t, d):
            coeff = "" if c == 1 else ("-" if c == -1 else f"{c}*")
            parts.append(f"{coeff}{lbl[p]}(x){lbl[q]}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def _triple_act(alg: FinDimAlgebra, trip: dict, x: Sequence, leg: int, from_left: bool) -> dict:
    out: dict = {}
    xs = [(j, a) for j, a in enumerate(x) if a]
    for key, c in trip.items():
        for j, a in xs:
            m = key[leg]
            prods = alg.table[j][m] if from_left else alg.table[m][j]
            for k, e in prods:
                nk = key[:leg] + (k,) + key[leg + 1:]
                out[nk] = out.get(nk, ZERO) + c * a * e
    return {k: v for k, v in out.items() if v}


def coassociativity_witness(cm: Comultiplication):
    """First basis triple (a, b, c) violating

    (a(x)1(x)1) (Delta(x)id)(Delta(b)(1(x)c)) = (id(x)Delta)((a(x)1)Delta(b)) (1(x)1(x)c)

    or None.
    """
    alg = cm.algebra
    d = alg.dim
    for b in range(d):
        db = cm.of_basis(b)
        for c in range(d):
            lhs_inner = cm.triple_left(act(alg, db, alg.basis(c), 1, False))
            for a in range(d):
                ea = alg.basis(a)
                lhs = _triple_act(alg, lhs_inner, ea, 0, True)
                rhs = _triple_act(alg, cm.triple_right(act(alg, db, ea, 0, True)), alg.basis(c), 2, False)
                if lhs != rhs:
                    return (a, b, c)
    return None


def homomorphism_witness(cm: Comultiplication):
    """First basis pair with Delta(b_i b_j) != Delta(b_i) Delta(b_j), or None."""
    alg = cm.algebra
    d = alg.dim
    for i in range(d):
        for j in range(d):
            lhs = cm(alg.basis_product(i, j))
            rhs = tensor_multiply(alg, cm.of_basis(i), cm.of_basis(j))
            if lhs != rhs:
                return (i, j)
    return None


def is_unital(cm: Comultiplication) -> bool:
    u = cm.algebra.unit
    return u is not None and cm(u) == simple_tensor(u, u)


def validate_comultiplication(
    alg: FinDimAlgebra, delta, require_homomorphism: bool = True
) -> Comultiplication:
    """Check coassociativity on every basis triple and, if requested,
    multiplicativity on every basis pair."""
    cm = delta if isinstance(delta, Comultiplication) else Comultiplication(alg, delta)
    lbl = alg.labels
    w = coassociativity_witness(cm)
    if w is not None:
        a, b, c = (lbl[i] for i in w)
        raise NotCoassociative(
            f"coassociativity fails for (a, b, c) = ({a}, {b}, {c})", witness=w
        )
    if require_homomorphism:
        w = homomorphism_witness(cm)
        if w is not None:
            x, y = (lbl[i] for i in w)
            raise NotHomomorphism(
                f"Delta({x}*{y}) != Delta({x})Delta({y})", witness=w
            )
    return cm


# --- derived maps ---------------------------------------------------------


def galois_image(cm: Comultiplication, kind: GaloisKind, i: int, j: int) -> tuple:
    """Image of b_i (x) b_j under the chosen Galois map."""
    alg = cm.algebra
    kind = GaloisKind(kind)
    if kind is GaloisKind.T1:
        return act(alg, cm.of_basis(i), alg.basis(j), 1, False)
    if kind is GaloisKind.T2:
        return act(alg, cm.of_basis(j), alg.basis(i), 0, True)
    if kind is GaloisKind.T1P:
        return act(alg, cm.of_basis(i), alg.basis(j), 0, False)
    return act(alg, cm.of_basis(j), alg.basis(i), 1, True)


def galois_matrix(cm: Comultiplication, kind: GaloisKind) -> Matrix:
    d = cm.dim
    cols = [galois_image(cm, kind, i, j) for i in range(d) for j in range(d)]
    return Matrix.from_columns(cols, d * d)


def _leg_slices(cm: Comultiplication, tensors, side: str, via: str) -> list:
    alg = cm.algebra
    d = alg.dim
    vectors = []
    for t in tensors:
        for b in range(d):
            eb = alg.basis(b)
            if side == "left":
                # Delta(a)(1 (x) b), or (1 (x) b)Delta(a) for the regular variant
                s = act(alg, t, eb, 1, via == "regular")
                vectors.extend(slice_left(s, d, unit_vector(d, q)) for q in range(d))
            else:
                # (b (x) 1)Delta(a), or Delta(a)(b (x) 1) for the regular variant
                s = act(alg, t, eb, 0, via != "regular")
                vectors.extend(slice_right(s, d, unit_vector(d, p)) for p in range(d))
    return [v for v in vectors if any(v)]


def leg(cm: Comultiplication, side: str, element: Sequence | None = None, via: str = "standard") -> tuple:
    """Row-reduced basis of the left or right leg of Delta (``element=None``)
    or of Delta(element).

    The leg is spanned by the slices of ``Delta(a)(1(x)b)`` (left) or
    ``(b(x)1)Delta(a)`` (right) by coordinate functionals. ``via="regular"``
    multiplies on the other side instead; both give the same subspace for a
    regular comultiplication.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    if via not in ("standard", "regular"):
        raise ValueError(f"via must be 'standard' or 'regular', not {via!r}")
    d = cm.dim
    if element is None:
        tensors = [cm.of_basis(i) for i in range(d)]
    else:
        tensors = [cm(element)]
    return row_space(_leg_slices(cm, tensors, side, via), d)


def is_full(cm: Comultiplication) -> bool:
    return len(leg(cm, "left")) == cm.dim and len(leg(cm, "right")) == cm.dim


def opposite(cm: Comultiplication) -> Comultiplication:
    """sigma o Delta, re-validated."""
    d = cm.dim
    cols = [flip(cm.of_basis(i), d) for i in range(d)]
    flipped = Comultiplication(cm.algebra, Matrix.from_columns(cols, d * d))
    return validate_comultiplication(cm.algebra, flipped, require_homomorphism=True)


def regularity_note(cm: Comultiplication) -> str:
    if cm.algebra.unit is not None:
        return "regular: automatic (unital)"
    return "regular: automatic (finite-dimensional, Delta maps into A(x)A)"


def require_unital_algebra(cm: Comultiplication) -> None:
    if cm.algebra.unit is None:
        raise NonUnitalInput(
            "the finite-dimensional pipeline needs a unital algebra; "
            "a finite-dimensional multiplier Hopf algebra always has a unit"
        )

