from fractions import Fraction
import itertools

import pytest
from hypothesis import given, strategies as st

from mha.algebra import FinDimAlgebra
from mha.catalog import build_sweedler_h4, by_name, group_algebra_cyclic, group_algebra_s3, s3_group
from mha.comult import Comultiplication, validate_comultiplication
from mha.errors import InconsistentSystem, NonUnitalInput, UnderdeterminedSystem, VerificationFailed
from mha.exactlin import Matrix
from mha.integrals import invariant_space
from mha.ls_engine import (
    AntipodeMap,
    classify,
    construct_antipode,
    construct_counit,
    galois_bijectivity_report,
    t1_preimage,
    verify_structure,
)

from conftest import HOPF_NAMES
from helpers import TWO_DIM_INTEGRALS, semigroup_function_algebra


def left_integral(entry):
    (phi,) = invariant_space(entry.comult, "left")
    return phi


def right_integral(entry):
    (psi,) = invariant_space(entry.comult, "right")
    return psi


@pytest.mark.parametrize("name", HOPF_NAMES)
def test_galois_report_for_hopf_entries(name):
    entry = by_name(name)
    report = galois_bijectivity_report(entry.comult, left_integral(entry), right_integral(entry))
    assert all(report["bijective"].values())
    assert report["implications_hold"] and len(report["implications"]) == 4


def test_galois_report_for_monoid(monoid):
    report = galois_bijectivity_report(monoid.comult, (1, 0), (1, 0))
    assert report["ranks"] == {"T1": 3, "T2": 3, "T1'": 3, "T2'": 3}
    assert not report["left_faithful"] and report["implications"] == []


def test_t1_preimage_c2():
    cm = group_algebra_cyclic(2).comult
    e, s = (1, 0), (0, 1)
    y = t1_preimage(cm, (1, 0), s, s, e)
    assert y == (0, 0, 0, 1)  # s (x) s


def test_t1_preimage_unit_and_h4(h4):
    cm = h4.comult
    phi = (0, 0, 0, 1)
    one = h4.algebra.unit
    for k in range(4):
        c = h4.algebra.basis(k)
        y = t1_preimage(cm, phi, one, one, c)
        assert y == tuple(Fraction(phi[0]) * a * b for a in one for b in c)
    t1_preimage(cm, phi, (0, 1, 0, 0), (0, 0, 0, 1), one)


def test_t1_preimage_rejects_non_invariant_functional(h4):
    with pytest.raises(VerificationFailed):
        for a, b, c in itertools.product(range(4), repeat=3):
            alg = h4.algebra
            t1_preimage(h4.comult, (0, 0, 1, 0), alg.basis(a), alg.basis(b), alg.basis(c))


coords = st.lists(st.integers(-2, 2), min_size=4, max_size=4)


@given(coords, coords, coords)
def test_t1_preimage_on_random_h4_elements(a, b, c):
    h4 = build_sweedler_h4()
    y = t1_preimage(h4.comult, (0, 0, 0, 1), a, b, c)
    assert len(y) == 16


def test_counit_examples(h4, monoid):
    assert construct_counit(group_algebra_cyclic(2).comult, (1, 0)) == (1, 1)
    assert construct_counit(h4.comult, (0, 0, 0, 1)) == (1, 1, 0, 0)
    with pytest.raises((UnderdeterminedSystem, InconsistentSystem)):
        construct_counit(monoid.comult, (1, 0))


def test_antipode_examples(h4):
    assert construct_antipode(group_algebra_cyclic(2).comult, (1, 0)).matrix == Matrix.identity(2)
    S = construct_antipode(h4.comult, (0, 0, 0, 1))
    assert S.of_basis(1) == (0, 1, 0, 0)
    assert S.of_basis(2) == (0, 0, 0, -1)
    assert S.of_basis(3) == (0, 0, 1, 0)
    c3 = group_algebra_cyclic(3)
    S3 = construct_antipode(c3.comult, left_integral(c3))
    assert S3.of_basis(1) == c3.algebra.basis(2) and S3.of_basis(2) == c3.algebra.basis(1)


@pytest.mark.parametrize("name", HOPF_NAMES)
def test_constructed_structure_matches_closed_form(name):
    entry = by_name(name)
    phi = left_integral(entry)
    eps = construct_counit(entry.comult, phi)
    S = construct_antipode(entry.comult, phi)
    assert eps == entry.expected.epsilon
    assert S.matrix == entry.expected.antipode
    report = verify_structure(entry.comult, eps, S)
    assert report.ok, report.failures()


@pytest.mark.parametrize("name", HOPF_NAMES)
@pytest.mark.parametrize("factor", [2, -1, Fraction(7, 3)])
def test_scaling_the_integral_changes_nothing(name, factor):
    entry = by_name(name)
    phi = left_integral(entry)
    scaled = tuple(factor * c for c in phi)
    assert construct_counit(entry.comult, scaled) == construct_counit(entry.comult, phi)
    assert construct_antipode(entry.comult, scaled) == construct_antipode(entry.comult, phi)


def test_planted_wrong_antipode_is_caught(h4):
    wrong = Matrix.from_columns([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 1, 0)], 4)
    report = verify_structure(h4.comult, (1, 1, 0, 0), wrong)
    assert report.residuals["antipode_convolution_right"] != 0
    assert report.residuals["antipode_convolution_left"] != 0
    assert report.witnesses["antipode_convolution_left"] == (2,)  # at x


def test_h4_antipode_order_four(h4):
    S = construct_antipode(h4.comult, (0, 0, 0, 1)).matrix
    assert S ** 2 != Matrix.identity(4)
    assert (S ** 2).column(2) == (0, 0, -1, 0)
    assert S ** 4 == Matrix.identity(4)


def test_classify_examples(h4, monoid):
    v = classify(h4.comult)
    assert v.is_hopf and v.route == "integral"
    assert [s["stage"] for s in v.stages] == [
        "regularity", "unital", "fullness", "integrals", "faithfulness",
        "galois", "construction", "identities", "antipode_bijective",
    ]
    m = classify(monoid.comult)
    assert m.kind == "not_hopf" and m.reason == "no faithful left integral"
    assert m.witness["gram_rank"] == 1
    s3 = group_algebra_s3()
    table, _ = s3_group()
    S = classify(s3.comult).antipode
    for g in range(6):
        inv = next(h for h in range(6) if table[g][h] == 0)
        assert S.of_basis(g) == s3.algebra.basis(inv)


def test_classify_rejects_comultiplication_without_counit():
    alg = group_algebra_cyclic(2).algebra
    v = classify(validate_comultiplication(alg, {(0, 0, 0): 1, (1, 1, 0): 1}))
    assert v.kind == "not_hopf" and v.reason == "no left integral"


def test_two_dimensional_integral_space_is_inconclusive():
    v = classify(semigroup_function_algebra(TWO_DIM_INTEGRALS))
    assert v.kind == "inconclusive"
    assert "dimension 2" in v.reason


def test_non_unital_input_is_rejected():
    alg = FinDimAlgebra(["a"], {(0, 0, 0): 1})  # unit not recorded
    with pytest.raises(NonUnitalInput):
        classify(Comultiplication(alg, {(0, 0, 0): 1}))


def test_antipode_map_helpers():
    S = AntipodeMap(Matrix([[0, 1], [1, 0]]))
    assert S((1, 2)) == (2, 1)
    assert S.compose(S).matrix == Matrix.identity(2)
    assert S.is_invertible()
