"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

All comparisons are exact rational equality; tolerances are zero.
"""
from fractions import Fraction
import itertools
import time

from mha.algebra import validate_algebra
from mha.catalog import build_monoid_bialgebra, build_sweedler_h4, group_algebra_cyclic, hopf_entries, standard_catalog
from mha.cointegrals import (
    antipode_from_cointegral,
    classify_discrete,
    cointegral_faithful,
    cointegral_legs,
    cointegral_space,
    counit_from_cointegral,
)
from mha.comult import GaloisKind, act, galois_matrix, simple_tensor, tensor_terms, validate_comultiplication
from mha.errors import NonAssociative, NotCoassociative
from mha.exactlin import Matrix, rank
from mha.integrals import gram_matrix, invariant_space, is_invariant
from mha.kg_backend import InfiniteDihedralGroup, IntegerGroup, run_suite
from mha.ls_engine import (
    classify,
    construct_antipode,
    construct_counit,
    sliced_value,
    t1_preimage,
    verify_structure,
)
from mha.oracles import convolution_inverse
from mha.specfile import export_spec, load_spec

RESULTS = []


def record(number, ok, detail):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def left_integral(cm):
    (phi,) = invariant_space(cm, "left")
    return phi


def test_criterion_1_classification():
    start = time.perf_counter()
    problems = []
    for entry in standard_catalog():
        a = classify(entry.comult)
        b = classify_discrete(entry.comult)
        if a.kind != entry.expected.verdict:
            problems.append(f"{entry.name}: classify gave {a.kind}")
        if b.kind != a.kind:
            problems.append(f"{entry.name}: routes disagree ({a.kind} vs {b.kind})")
        if entry.expected.verdict == "not_hopf" and a.reason != "no faithful left integral":
            problems.append(f"{entry.name}: reason {a.reason!r}")
    elapsed = time.perf_counter() - start
    if elapsed >= 5:
        problems.append(f"runtime {elapsed:.2f}s")
    record(1, not problems, "; ".join(problems) or f"7 entries classified, routes agree, {elapsed:.2f}s")


def test_criterion_2_hypothesis_ablation():
    m = build_monoid_bialgebra()
    cm = m.comult
    r1 = rank(galois_matrix(cm, GaloisKind.T1))
    r2 = rank(galois_matrix(cm, GaloisKind.T2))
    space = invariant_space(cm, "left")
    gram = rank(gram_matrix(m.algebra, space[0])) if len(space) == 1 else None
    h = (0, 1)  # s
    faithful = cointegral_faithful(cm, h)
    legs = tuple(len(x) for x in cointegral_legs(cm, h))
    ok = r1 == 3 and r2 == 3 and len(space) == 1 and gram == 1 and cointegral_space(cm, "left") == [h] and not faithful
    record(2, ok, f"T1 rank {r1}, T2 rank {r2} of 4; left integral Gram rank {gram}; cointegral s legs {legs}, faithful={faithful}")


def test_criterion_3_preimage_identity():
    checked = 0
    failures = []
    for entry in hopf_entries():
        cm = entry.comult
        alg = entry.algebra
        d = alg.dim
        phi = left_integral(cm)
        for i, j, k in itertools.product(range(d), repeat=3):
            a, b, c = alg.basis(i), alg.basis(j), alg.basis(k)
            y = t1_preimage(cm, phi, a, b, c)
            # recompute T1(y) independently of the check inside t1_preimage
            image = [Fraction(0)] * (d * d)
            for u, v, coeff in tensor_terms(y, d):
                for idx, e in enumerate(act(alg, cm.of_basis(u), alg.basis(v), 1, False)):
                    image[idx] += coeff * e
            if tuple(image) != simple_tensor(sliced_value(cm, phi, a, b), c):
                failures.append((entry.name, i, j, k))
            checked += 1
    record(3, not failures, f"{checked} basis triples checked, {len(failures)} failures")


def test_criterion_4_identity_suite():
    problems = []
    for entry in hopf_entries():
        v = classify(entry.comult)
        report = verify_structure(entry.comult, v.epsilon, v.antipode)
        if not report.ok:
            problems.append(f"{entry.name}: {report.failures()}")
    h4 = classify(build_sweedler_h4().comult).antipode.matrix
    s2_not_id = h4 ** 2 != Matrix.identity(4)
    s4_id = h4 ** 4 == Matrix.identity(4)
    ok = not problems and s2_not_id and s4_id
    record(4, ok, f"all residuals zero on {len(hopf_entries())} entries; H4 S^2 != I: {s2_not_id}, S^4 = I: {s4_id}" + (f"; {problems}" if problems else ""))


def test_criterion_5_oracle_equivalence():
    problems = []
    for entry in hopf_entries():
        cm = entry.comult
        phi = left_integral(cm)
        eps_i = construct_counit(cm, phi)
        s_i = construct_antipode(cm, phi).matrix
        (stage,) = [st for st in classify_discrete(cm).stages if st["stage"] == "faithfulness"]
        h = stage["faithful_cointegral"]
        eps_c = counit_from_cointegral(cm, h)
        s_c = antipode_from_cointegral(cm, h, eps_c).matrix
        s_o = convolution_inverse(cm, eps_i)
        if not (s_i == s_c == s_o):
            problems.append(f"{entry.name}: antipodes differ")
        if eps_i != eps_c:
            problems.append(f"{entry.name}: counits differ")
    record(5, not problems, "; ".join(problems) or f"integral, cointegral and convolution-inverse S agree on {len(hopf_entries())} entries")


def test_criterion_6_scaling_independence():
    problems = []
    for entry in hopf_entries():
        cm = entry.comult
        phi = left_integral(cm)
        eps, S = construct_counit(cm, phi), construct_antipode(cm, phi)
        for lam in (2, -1, Fraction(7, 3)):
            scaled = tuple(lam * c for c in phi)
            if construct_counit(cm, scaled) != eps or construct_antipode(cm, scaled) != S:
                problems.append(f"{entry.name} at {lam}")
    record(6, not problems, "; ".join(problems) or "eps and S unchanged for 2, -1, 7/3 on every Hopf entry")


def test_criterion_7_non_unimodularity():
    cm = build_sweedler_h4().comult
    phi = left_integral(cm)
    left_not_right = not is_invariant(cm, phi, "right")
    (hl,) = cointegral_space(cm, "left")
    (hr,) = cointegral_space(cm, "right")
    differ = rank([hl, hr]) == 2
    ok = phi == (0, 0, 0, 1) and left_not_right and differ
    record(7, ok, f"left integral {tuple(map(str, phi))} right invariant: {not left_not_right}; "
                  f"left cointegral {cm.algebra.format(hl)} vs right {cm.algebra.format(hr)}")


def test_criterion_8_multiplier_backend():
    start = time.perf_counter()
    reports = [run_suite(IntegerGroup(), seed=0, samples=50), run_suite(InfiniteDihedralGroup(), seed=0, samples=50)]
    elapsed = time.perf_counter() - start
    ok = all(r["all_zero"] and r["slices_finite"] and r["samples"] >= 50 for r in reports) and elapsed < 2
    record(8, ok, f"K(Z) and K(D_inf), 50 pairs each (seed 0): residuals zero={[r['all_zero'] for r in reports]}, {elapsed:.2f}s")


def test_criterion_9_robustness():
    caught = []
    c2 = group_algebra_cyclic(2)
    try:
        validate_algebra(["e", "s"], {(0, 0, 0): 1, (1, 0, 1): 1, (1, 1, 0): 1})
    except NonAssociative as exc:
        if exc.witness is not None and exc.definition:
            caught.append(exc.definition)
    try:
        validate_comultiplication(c2.algebra, {(0, 0, 0): 1, (1, 1, 0): 1, (1, 1, 1): 1})
    except NotCoassociative as exc:
        if exc.witness is not None and exc.definition:
            caught.append(exc.definition)
    h4 = build_sweedler_h4()
    wrong = Matrix.from_columns([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 1, 0)], 4)
    report = verify_structure(h4.comult, (1, 1, 0, 0), wrong)
    name = "antipode_convolution_left"
    if report.residuals[name] != 0 and report.witnesses[name] is not None:
        caught.append(report.descriptions[name])
    round_trip = all(
        load_spec(export_spec(e.algebra, e.comult)) == (e.algebra, e.comult) for e in standard_catalog()
    )
    ok = len(caught) == 3 and round_trip
    record(9, ok, f"detected: {caught}; round trip identity on catalog: {round_trip}")
