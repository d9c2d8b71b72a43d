"""Cointegrals and the dual route to the Hopf structure.

A left cointegral is a nonzero h with Delta(a)(1(x)h) = a(x)h for all a;
a right cointegral satisfies (h(x)1)Delta(a) = h(x)a. A faithful left
cointegral (both legs of Delta(h) are all of A) yields the counit through
a h = eps(a) h and the antipode through (1(x)a)Delta(h) = (S(a)(x)1)Delta(h).
"""
from __future__ import annotations

from typing import Sequence

from .comult import (
    Comultiplication,
    GaloisKind,
    act,
    galois_matrix,
    is_unital,
    leg,
    regularity_note,
    require_unital_algebra,
    simple_tensor,
    slice_left,
    slice_right,
)
from .errors import (
    InconsistentSystem,
    InternalInconsistency,
    LegDeficient,
    NotProportional,
    RightLegNotFull,
    VerificationFailed,
)
from .exactlin import ZERO, Matrix, kernel, rank, solve_many, sub
from .integrals import DEFAULT_COEFFICIENT_BOUND, first_satisfying
from .ls_engine import AntipodeMap, Verdict, verify_structure

NOTE_FOUR_MAPS = (
    "bijectivity of T1 and T2 is checked under faithful cointegral hypotheses; "
    "no integral is used on this route"
)


def cointegral_system(cm: Comultiplication, side: str) -> Matrix:
    """Rows indexed by (a, tensor coordinate): the defining identity as a
    linear form in the coordinates of h."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    alg = cm.algebra
    d = cm.dim
    cols = []
    for hk in range(d):
        eh = alg.basis(hk)
        col = []
        for a in range(d):
            ea = alg.basis(a)
            if side == "left":
                diff = sub(act(alg, cm.of_basis(a), eh, 1, False), simple_tensor(ea, eh))
            else:
                diff = sub(act(alg, cm.of_basis(a), eh, 0, True), simple_tensor(eh, ea))
            col.extend(diff)
        cols.append(col)
    return Matrix.from_columns(cols, d * d * d)


def cointegral_space(cm: Comultiplication, side: str) -> list:
    """Basis of the solution space; every nonzero member is a cointegral."""
    return kernel(cointegral_system(cm, side))


def is_cointegral(cm: Comultiplication, h: Sequence, side: str) -> bool:
    return any(h) and not any(cointegral_system(cm, side).apply(tuple(h)))


def cointegral_legs(cm: Comultiplication, h: Sequence) -> tuple:
    """``(left leg of Delta(h), right leg of Delta(h))`` as row-reduced bases."""
    return leg(cm, "left", h), leg(cm, "right", h)


def cointegral_faithful(cm: Comultiplication, h: Sequence) -> bool:
    left, right = cointegral_legs(cm, h)
    return len(left) == cm.dim and len(right) == cm.dim


def counit_from_cointegral(cm: Comultiplication, h: Sequence) -> tuple:
    """eps from a h = eps(a) h, then checked: eps multiplicative, both counit
    identities, and Delta(a)(h(x)1) = h(x)a."""
    alg = cm.algebra
    d = cm.dim
    h = tuple(h)
    if len(leg(cm, "right")) < d:
        raise RightLegNotFull("right leg of the comultiplication is not all of A")
    pivot = next(k for k, c in enumerate(h) if c)
    eps = []
    for a in range(d):
        ah = alg.multiply(alg.basis(a), h)
        ratio = ah[pivot] / h[pivot]
        if any(x != ratio * y for x, y in zip(ah, h)):
            raise NotProportional(f"{alg.labels[a]} * h is not a multiple of h", witness=a)
        eps.append(ratio)
    eps = tuple(eps)
    for i in range(d):
        for j in range(d):
            lhs = sum((eps[k] * c for k, c in alg.table[i][j]), ZERO)
            if lhs != eps[i] * eps[j]:
                raise VerificationFailed("eps is not multiplicative", definition="counit is a homomorphism", witness=(i, j))
    for i in range(d):
        di, bi = cm.of_basis(i), alg.basis(i)
        if slice_left(di, d, eps) != bi:
            raise VerificationFailed("(id(x)eps)Delta(a) != a", definition="counit identity", witness=i)
        if slice_right(di, d, eps) != bi:
            raise VerificationFailed("(eps(x)id)Delta(a) != a", definition="counit identity", witness=i)
        if act(alg, di, h, 0, False) != simple_tensor(h, bi):
            raise VerificationFailed("Delta(a)(h(x)1) != h(x)a", definition="cointegral symmetry", witness=i)
    return eps


def antipode_from_cointegral(cm: Comultiplication, h: Sequence, eps: Sequence | None = None) -> AntipodeMap:
    """Solve (1(x)a)Delta(h) = (S(a)(x)1)Delta(h) for S(a), each basis a."""
    alg = cm.algebra
    d = cm.dim
    dh = cm(tuple(h))
    # column s of the system: (b_s (x) 1)Delta(h); unknowns are coordinates of S(a)
    system = Matrix.from_columns([act(alg, dh, alg.basis(s), 0, True) for s in range(d)], d * d)
    if rank(system) < d:
        raise LegDeficient("left leg of Delta(h) does not span A; S(a) is not determined")
    rhs = [act(alg, dh, alg.basis(a), 1, True) for a in range(d)]
    try:
        cols = solve_many(system, rhs)
    except InconsistentSystem as exc:
        raise VerificationFailed(
            "(1(x)a)Delta(h) is not of the form (s(x)1)Delta(h)",
            definition="antipode relation for a left cointegral",
            witness=exc.witness,
        ) from None
    S = AntipodeMap(Matrix.from_columns(cols, d))
    if eps is None:
        eps = counit_from_cointegral(cm, h)
    report = verify_structure(cm, eps, S)
    for name in ("antipode_convolution_right", "antipode_convolution_left"):
        if report.residuals[name] != 0:
            raise VerificationFailed(
                f"{report.descriptions[name]} fails", definition="antipode identity", witness=report.witnesses[name]
            )
    return S


def classify_discrete(cm: Comultiplication, coefficient_bound: int = DEFAULT_COEFFICIENT_BOUND) -> Verdict:
    """Decide Hopf-ness from a faithful left cointegral."""
    require_unital_algebra(cm)
    alg = cm.algebra
    d = cm.dim
    stages = []
    verdict = Verdict("not_hopf", route="cointegral", stages=stages)

    def fail(reason: str, definition: str, **witness) -> Verdict:
        verdict.reason, verdict.definition, verdict.witness = reason, definition, witness
        return verdict

    stages.append({"stage": "regularity", "concept": "regular comultiplication", "note": regularity_note(cm)})
    unital = is_unital(cm)
    stages.append({"stage": "unital", "concept": "Delta(1) = 1(x)1", "holds": unital})
    if not unital:
        return fail("comultiplication is not unital", "unital comultiplication", delta_of_unit=cm(alg.unit))

    left_space = cointegral_space(cm, "left")
    right_space = cointegral_space(cm, "right")
    stages.append(
        {
            "stage": "cointegrals",
            "concept": "left and right cointegrals",
            "left_space": left_space,
            "right_space": right_space,
        }
    )
    if not left_space:
        return fail("no left cointegral", "left cointegral")

    h, tried = first_satisfying(left_space, lambda v: cointegral_faithful(cm, v), coefficient_bound)
    leg_dims = [tuple(len(x) for x in cointegral_legs(cm, v)) for v in left_space]
    stages.append(
        {
            "stage": "faithfulness",
            "concept": "faithful cointegral: both legs of Delta(h) are all of A",
            "leg_dims": leg_dims,
            "candidates_tried": tried,
            "faithful_cointegral": h,
        }
    )
    if h is None:
        if len(left_space) == 1:
            left, right = cointegral_legs(cm, left_space[0])
            return fail(
                "left cointegral exists but is not faithful",
                "faithful cointegral",
                cointegral=left_space[0],
                left_leg=list(left),
                right_leg=list(right),
            )
        verdict.kind = "inconclusive"
        verdict.reason = (
            f"left cointegral space has dimension {len(left_space)} and no faithful "
            f"combination was found with coefficients in -{coefficient_bound}..{coefficient_bound}"
        )
        verdict.definition = "faithful cointegral"
        return verdict

    n = d * d
    ranks = {k.value: rank(galois_matrix(cm, k)) for k in GaloisKind}
    stages.append(
        {
            "stage": "galois",
            "concept": "T2 injective and T1 surjective from a faithful left cointegral",
            "ranks": ranks,
            "note": NOTE_FOUR_MAPS,
        }
    )
    if ranks["T2"] != n or ranks["T1"] != n:
        raise InternalInconsistency("T1/T2 not bijective despite a faithful left cointegral", stage="galois")

    try:
        eps = counit_from_cointegral(cm, h)
        S = antipode_from_cointegral(cm, h, eps)
    except (RightLegNotFull, NotProportional, LegDeficient, VerificationFailed) as exc:
        raise InternalInconsistency(str(exc), stage="construction") from exc
    stages.append(
        {
            "stage": "construction",
            "concept": "counit and antipode from the left cointegral",
            "epsilon": eps,
            "antipode": S.matrix,
        }
    )
    report = verify_structure(cm, eps, S)
    stages.append(
        {"stage": "identities", "concept": "Hopf algebra identities", "residuals": report.residuals, "all_zero": report.ok}
    )
    if not report.ok:
        raise InternalInconsistency(f"identities failed: {report.failures()}", stage="identities")
    injective = not kernel(S.matrix)
    stages.append({"stage": "antipode_injective", "concept": "S injective when the right leg of Delta(h) is full", "holds": injective})
    if not injective:
        raise InternalInconsistency("antipode has a kernel", stage="antipode_injective")

    verdict.kind = "hopf"
    verdict.epsilon = eps
    verdict.antipode = S
    return verdict
