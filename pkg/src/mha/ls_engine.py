"""Hopf structure from a faithful left integral.

Given a unital finite-dimensional algebra with a comultiplication whose left
leg is all of A, a faithful left integral ``phi`` forces the Galois maps to be
bijective. The counit and antipode are then the unique linear maps with

    eps((id(x)phi)(Delta(a)(1(x)b)))  = phi(ab)
    S((id(x)phi)(Delta(a)(1(x)b)))    = (id(x)phi)((1(x)a)Delta(b))

which this module solves for globally over all basis pairs and then checks
against every Hopf identity.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .comult import (
    Comultiplication,
    GaloisKind,
    act,
    apply_tensor_map,
    flip,
    galois_matrix,
    is_unital,
    leg,
    multiply_legs,
    regularity_note,
    require_unital_algebra,
    simple_tensor,
    slice_left,
    slice_right,
    tensor_terms,
)
from .errors import (
    InconsistentSystem,
    InternalInconsistency,
    UnderdeterminedSystem,
    VerificationFailed,
)
from .exactlin import ZERO, Matrix, dot, is_invertible, max_abs, rank, scale, solve_many, sub
from .integrals import (
    DEFAULT_COEFFICIENT_BOUND,
    first_satisfying,
    gram_matrix,
    invariant_space,
    is_faithful,
)


@dataclass(frozen=True)
class AntipodeMap:
    """S as a coordinate matrix: column i is S(b_i)."""

    matrix: Matrix

    def __call__(self, x: Sequence) -> tuple:
        return self.matrix.apply(tuple(x))

    def of_basis(self, i: int) -> tuple:
        return self.matrix.column(i)

    def is_invertible(self) -> bool:
        return is_invertible(self.matrix)

    def compose(self, other: "AntipodeMap") -> "AntipodeMap":
        return AntipodeMap(self.matrix @ other.matrix)


@dataclass
class Verdict:
    kind: str                               # "hopf" | "not_hopf" | "inconclusive"
    route: str = "integral"
    reason: str | None = None
    definition: str | None = None
    witness: dict | None = None
    epsilon: tuple | None = None
    antipode: AntipodeMap | None = None
    stages: list = field(default_factory=list)

    @property
    def is_hopf(self) -> bool:
        return self.kind == "hopf"


@dataclass
class StructureReport:
    """Maximal residual and first failing witness for each identity."""

    residuals: dict
    witnesses: dict
    descriptions: dict

    @property
    def ok(self) -> bool:
        return all(r == 0 for r in self.residuals.values())

    def failures(self) -> list:
        return [name for name, r in self.residuals.items() if r != 0]


IDENTITIES = {
    "counit_multiplicative": "eps(ab) = eps(a) eps(b)",
    "counit_left": "(eps(x)id)Delta(a) = a",
    "counit_right": "(id(x)eps)Delta(a) = a",
    "antipode_antimultiplicative": "S(ab) = S(b) S(a)",
    "antipode_anticomultiplicative": "(S(x)S)Delta(a) = flip(Delta(S(a)))",
    "antipode_convolution_right": "m(id(x)S)Delta(a) = eps(a) 1",
    "antipode_convolution_left": "m(S(x)id)Delta(a) = eps(a) 1",
}


# --- sliced integral values --------------------------------------------------


def sliced_value(cm: Comultiplication, phi: Sequence, a: Sequence, b: Sequence) -> tuple:
    """x = (id(x)phi)(Delta(a)(1(x)b))."""
    return slice_left(act(cm.algebra, cm(a), b, 1, False), cm.dim, phi)


def sliced_antipode_value(cm: Comultiplication, phi: Sequence, a: Sequence, b: Sequence) -> tuple:
    """(id(x)phi)((1(x)a)Delta(b))."""
    return slice_left(act(cm.algebra, cm(b), a, 1, True), cm.dim, phi)


def _sliced_columns(cm: Comultiplication, phi: Sequence) -> list:
    alg = cm.algebra
    d = cm.dim
    return [sliced_value(cm, phi, alg.basis(i), alg.basis(j)) for i in range(d) for j in range(d)]


# --- Galois maps ------------------------------------------------------------


def galois_bijectivity_report(cm: Comultiplication, phi: Sequence | None, psi: Sequence | None) -> dict:
    """Ranks of the four Galois maps, cross-checked against what faithful
    integrals imply.

    - faithful right integral => T1 and T2' injective
    - faithful left integral  => T2 and T1' injective
    - faithful left integral and full left leg => T1 surjective
    - faithful left and right integrals and full legs => all four surjective
    """
    alg = cm.algebra
    n = cm.dim * cm.dim
    ranks = {k.value: rank(galois_matrix(cm, k)) for k in GaloisKind}
    bij = {k: r == n for k, r in ranks.items()}
    phi_faithful = phi is not None and any(phi) and is_faithful(alg, phi)
    psi_faithful = psi is not None and any(psi) and is_faithful(alg, psi)
    left_full = len(leg(cm, "left")) == cm.dim
    right_full = len(leg(cm, "right")) == cm.dim
    implications = []

    def imply(premise: str, holds_premise: bool, maps: Sequence[str], property_: str):
        if holds_premise:
            implications.append(
                {
                    "premise": premise,
                    "conclusion": f"{', '.join(maps)} {property_}",
                    "holds": all(bij[m] for m in maps),
                }
            )

    imply("faithful right integral", psi_faithful, ["T1", "T2'"], "injective")
    imply("faithful left integral", phi_faithful, ["T2", "T1'"], "injective")
    imply("faithful left integral and full left leg", phi_faithful and left_full, ["T1"], "surjective")
    imply(
        "faithful left and right integrals and full comultiplication",
        phi_faithful and psi_faithful and left_full and right_full,
        ["T1", "T2", "T1'", "T2'"],
        "surjective",
    )
    return {
        "dim_tensor": n,
        "ranks": ranks,
        "bijective": bij,
        "left_faithful": phi_faithful,
        "right_faithful": psi_faithful,
        "left_leg_full": left_full,
        "right_leg_full": right_full,
        "implications": implications,
        "implications_hold": all(i["holds"] for i in implications),
    }


def t1_preimage(cm: Comultiplication, phi: Sequence, a: Sequence, b: Sequence, c: Sequence) -> tuple:
    """y in A(x)A with T1(y) = x (x) c, x = (id(x)phi)(Delta(a)(1(x)b)).

    y = (id(x)id(x)phi)(Delta13(a) Delta23(b) (1(x)c(x)1)) = sum of
    a1 (x) b1 c * phi(a2 b2). The identity is checked before returning.
    """
    alg = cm.algebra
    d = cm.dim
    gram = gram_matrix(alg, phi)
    y = [ZERO] * (d * d)
    da, db = tensor_terms(cm(a), d), tensor_terms(cm(b), d)
    for r, s, beta in db:
        b1c = alg.multiply(alg.basis(r), c)
        if not any(b1c):
            continue
        for p, q, alpha in da:
            w = alpha * beta * gram[q, s]
            if not w:
                continue
            for k, v in enumerate(b1c):
                if v:
                    y[p * d + k] += w * v
    y = tuple(y)
    image = [ZERO] * (d * d)
    for u, v, coeff in tensor_terms(y, d):
        for idx, e in enumerate(act(alg, cm.of_basis(u), alg.basis(v), 1, False)):
            if e:
                image[idx] += coeff * e
    target = simple_tensor(sliced_value(cm, phi, a, b), c)
    if tuple(image) != target:
        raise VerificationFailed(
            "T1(y) != x (x) c: the functional is not left invariant",
            definition="left invariance",
        )
    return y


# --- counit and antipode ----------------------------------------------------


def construct_counit(cm: Comultiplication, phi: Sequence) -> tuple:
    """Solve eps(x_ij) = phi(b_i b_j) over all basis pairs (i, j)."""
    d = cm.dim
    cols = _sliced_columns(cm, phi)
    system = Matrix(cols, d)  # row (i, j) is x_ij
    gram = gram_matrix(cm.algebra, phi)
    rhs = [gram[i, j] for i in range(d) for j in range(d)]
    try:
        (eps,) = solve_many(system, [rhs])
    except InconsistentSystem as exc:
        raise InconsistentSystem(
            "counit system is inconsistent: a relation among the sliced values "
            "is not respected by phi(ab); phi is not an invariant faithful functional",
            witness=exc.witness,
            definition="well-definedness of the counit (needs a faithful left integral)",
        ) from None
    if rank(system) < d:
        raise UnderdeterminedSystem(
            f"sliced values span only a {rank(system)}-dimensional subspace of A; "
            "the left leg is not full or phi is not faithful",
            span=rank(system),
        )
    return eps


def construct_antipode(cm: Comultiplication, phi: Sequence) -> AntipodeMap:
    """Solve S X = Y where column (i, j) of X is x_ij and of Y is
    (id(x)phi)((1(x)b_i)Delta(b_j))."""
    alg = cm.algebra
    d = cm.dim
    xs = _sliced_columns(cm, phi)
    ys = [sliced_antipode_value(cm, phi, alg.basis(i), alg.basis(j)) for i in range(d) for j in range(d)]
    system = Matrix(xs, d)  # X^T
    rhs = [[y[k] for y in ys] for k in range(d)]  # rows of Y
    try:
        rows = solve_many(system, rhs)
    except InconsistentSystem as exc:
        raise InconsistentSystem(
            "antipode system is inconsistent: a relation among the sliced values "
            "is not carried to the twisted sliced values",
            witness=exc.witness,
            definition="well-definedness of the antipode (needs a faithful left integral)",
        ) from None
    if rank(system) < d:
        raise UnderdeterminedSystem(
            f"sliced values span only a {rank(system)}-dimensional subspace of A",
            span=rank(system),
        )
    return AntipodeMap(Matrix(rows, d))


def _as_matrix(S) -> Matrix:
    return S.matrix if isinstance(S, AntipodeMap) else S


def verify_structure(cm: Comultiplication, eps: Sequence, S) -> StructureReport:
    """Check every counit and antipode identity on all basis elements/pairs."""
    require_unital_algebra(cm)
    alg = cm.algebra
    d = cm.dim
    smat = _as_matrix(S)
    ident = Matrix.identity(d)
    unit = alg.unit
    residuals = {name: ZERO for name in IDENTITIES}
    witnesses = {name: None for name in IDENTITIES}

    def record(name: str, diff, where):
        r = max_abs(diff) if isinstance(diff, tuple) else abs(diff)
        if r > residuals[name]:
            if witnesses[name] is None:
                witnesses[name] = where
            residuals[name] = r

    sb = [smat.column(i) for i in range(d)]
    for i in range(d):
        for j in range(d):
            bij = alg.basis_product(i, j)
            record("counit_multiplicative", dot(eps, bij) - eps[i] * eps[j], (i, j))
            record("antipode_antimultiplicative", sub(smat.apply(bij), alg.multiply(sb[j], sb[i])), (i, j))
    for i in range(d):
        di = cm.of_basis(i)
        bi = alg.basis(i)
        record("counit_left", sub(slice_right(di, d, eps), bi), (i,))
        record("counit_right", sub(slice_left(di, d, eps), bi), (i,))
        record(
            "antipode_anticomultiplicative",
            sub(apply_tensor_map(di, d, smat, smat), flip(cm(sb[i]), d)),
            (i,),
        )
        target = scale(eps[i], unit)
        record("antipode_convolution_right", sub(multiply_legs(alg, apply_tensor_map(di, d, ident, smat)), target), (i,))
        record("antipode_convolution_left", sub(multiply_legs(alg, apply_tensor_map(di, d, smat, ident)), target), (i,))
    return StructureReport(residuals, witnesses, dict(IDENTITIES))


# --- classification ---------------------------------------------------------


def _stage(name: str, concept: str, **result) -> dict:
    return {"stage": name, "concept": concept, **result}


def classify(cm: Comultiplication, coefficient_bound: int = DEFAULT_COEFFICIENT_BOUND) -> Verdict:
    """Decide whether (A, Delta) is a Hopf algebra via a faithful left integral.

    Hypotheses are checked in logical order (unital Delta, full left leg,
    existence of a left integral, faithfulness); the first failure yields a
    ``not_hopf`` verdict. Once they hold, every downstream step is guaranteed,
    so a failure there raises :class:`InternalInconsistency`.
    """
    require_unital_algebra(cm)
    alg = cm.algebra
    d = cm.dim
    stages = []
    verdict = Verdict("not_hopf", route="integral", stages=stages)

    def fail(reason: str, definition: str, **witness) -> Verdict:
        verdict.reason, verdict.definition, verdict.witness = reason, definition, witness
        return verdict

    stages.append(_stage("regularity", "regular comultiplication", note=regularity_note(cm)))
    unital = is_unital(cm)
    stages.append(_stage("unital", "Delta(1) = 1(x)1", holds=unital))
    if not unital:
        return fail("comultiplication is not unital", "unital comultiplication", delta_of_unit=cm(alg.unit))

    left_leg = leg(cm, "left")
    right_leg = leg(cm, "right")
    stages.append(
        _stage(
            "fullness",
            "legs of the comultiplication",
            left_leg_dim=len(left_leg),
            right_leg_dim=len(right_leg),
            full=len(left_leg) == d == len(right_leg),
        )
    )
    if len(left_leg) < d:
        return fail("left leg of the comultiplication is not all of A", "full left leg", left_leg=list(left_leg))

    left_space = invariant_space(cm, "left")
    right_space = invariant_space(cm, "right")
    stages.append(
        _stage(
            "integrals",
            "left and right invariant functionals",
            left_space=left_space,
            right_space=right_space,
        )
    )
    if not left_space:
        return fail("no left integral", "left invariant functional")

    phi, tried = first_satisfying(left_space, lambda v: is_faithful(alg, v), coefficient_bound)
    left_ranks = [rank(gram_matrix(alg, v)) for v in left_space]
    stages.append(
        _stage(
            "faithfulness",
            "faithful functional: (a, b) -> phi(ab) non-degenerate",
            gram_ranks=left_ranks,
            candidates_tried=tried,
            faithful_integral=phi,
        )
    )
    if phi is None:
        if len(left_space) == 1:
            return fail(
                "no faithful left integral",
                "faithful functional",
                integral=left_space[0],
                gram_rank=left_ranks[0],
            )
        verdict.kind = "inconclusive"
        verdict.reason = (
            f"left integral space has dimension {len(left_space)} and no faithful "
            f"combination was found with coefficients in -{coefficient_bound}..{coefficient_bound}"
        )
        verdict.definition = "faithful functional"
        return verdict

    psi, _ = first_satisfying(right_space, lambda v: is_faithful(alg, v), 0) if right_space else (None, 0)
    galois = galois_bijectivity_report(cm, phi, psi)
    stages.append(_stage("galois", "bijectivity of T1, T2, T1', T2'", right_integral=psi, **galois))
    if not galois["implications_hold"]:
        raise InternalInconsistency("a faithful-integral implication failed on the Galois ranks", stage="galois")
    if not (galois["bijective"]["T1"] and galois["bijective"]["T2"]):
        raise InternalInconsistency("T1/T2 not bijective despite a faithful left integral and full left leg", stage="galois")

    try:
        eps = construct_counit(cm, phi)
        S = construct_antipode(cm, phi)
    except (InconsistentSystem, UnderdeterminedSystem) as exc:
        raise InternalInconsistency(str(exc), stage="construction") from exc
    stages.append(_stage("construction", "counit and antipode from the left integral", epsilon=eps, antipode=S.matrix))

    report = verify_structure(cm, eps, S)
    stages.append(
        _stage("identities", "Hopf algebra identities", residuals=report.residuals, all_zero=report.ok)
    )
    if not report.ok:
        raise InternalInconsistency(f"identities failed: {report.failures()}", stage="identities")
    bijective = S.is_invertible()
    stages.append(_stage("antipode_bijective", "antipode bijective in finite dimensions", holds=bijective))
    if not bijective:
        raise InternalInconsistency("constructed antipode is not invertible", stage="antipode_bijective")

    verdict.kind = "hopf"
    verdict.epsilon = eps
    verdict.antipode = S
    return verdict
