from fractions import Fraction

import pytest

import sweeps
from hombench import (Bialgebra, LinearMap, NotAnSMatrix, Pro1Violation,
                      SearchSpec, Tensor2, TwistMismatch, check_P_condition,
                      check_equivalence_theorem, check_one_cocycle, check_pro1,
                      check_pro3, coboundary_cocycle, coboundary_rep,
                      dual_product_from_r, dualize_product, hom_s_bracket,
                      is_hom_s_matrix, r_sharp, run_search, sub_adjacent,
                      triangular_bialgebra, validate_bialgebra)
from hombench import fixtures

COEFFS = (Fraction(-1), Fraction(0), Fraction(1))


def symmetric_tensors(dim=2, coeffs=COEFFS):
    """All symmetric 2x2 tables with entries drawn from the coefficient set."""
    out = []
    for ca in coeffs:
        for cb in coeffs:
            for cd in coeffs:
                items = {}
                if ca:
                    items[(0, 0)] = ca
                if cb:
                    items[(0, 1)] = cb
                    items[(1, 0)] = cb
                if cd:
                    items[(1, 1)] = cd
                out.append(Tensor2.from_entries(dim, dim, items))
    return out


def test_r_sharp_is_the_transpose_map():
    r = Tensor2.from_entries(2, 2, {(0, 1): 2, (1, 0): 3})
    m = r_sharp(r)
    assert m.apply((1, 0)) == (0, 2)
    assert m.apply((0, 1)) == (3, 0)


def test_pro1_verdicts():
    r11 = Tensor2.from_entries(2, 2, {(0, 0): 1})
    r22 = Tensor2.from_entries(2, 2, {(1, 1): 1})
    assert check_pro1(fixtures.nilpotent_algebra(), r11)
    assert not check_pro1(fixtures.scaling_algebra(), r22)
    assert not check_pro1(fixtures.scaled_nilpotent_algebra(), r11)


def test_dual_product_table():
    a = fixtures.nilpotent_algebra()
    r11 = Tensor2.from_entries(2, 2, {(0, 0): 1})
    d = dual_product_from_r(a, r11)
    # the only nonzero product of dual covectors: e2* acting on e1* gives e1*
    assert dict(d.product.nonzero_items()) == {(1, 0, 0): Fraction(1)}
    assert d.twist == LinearMap.identity(2)


def test_dual_product_needs_pro1():
    with pytest.raises(Pro1Violation):
        dual_product_from_r(fixtures.scaling_algebra(),
                            Tensor2.from_entries(2, 2, {(1, 1): 1}))


def test_coboundary_cocycle_columns():
    a = fixtures.nilpotent_algebra()
    r11 = Tensor2.from_entries(2, 2, {(0, 0): 1})
    cc = coboundary_cocycle(a, r11)
    assert cc.column(0) == (0, 0, 1, 0)
    assert cc.column(1) == (0, 0, 0, 0)
    report = check_one_cocycle(sub_adjacent(a), coboundary_rep(a), cc)
    assert report.valid


def test_hom_s_bracket_items():
    a = fixtures.nilpotent_algebra()
    r11 = Tensor2.from_entries(2, 2, {(0, 0): 1})
    br = hom_s_bracket(a, r11)
    assert dict(br.nonzero_items()) == {(0, 0, 1): Fraction(1), (1, 0, 0): Fraction(-1)}
    assert not br.is_zero()
    assert hom_s_bracket(a, fixtures.nilpotent_smatrix()).is_zero()


def test_pro3_holds_for_all_pro1_tensors():
    a = fixtures.nilpotent_algebra()
    checked = 0
    for r in symmetric_tensors():
        if not check_pro1(a, r):
            continue
        report = check_pro3(a, r)
        assert report.valid, dict(r.nonzero_items())
        checked += 1
    assert checked == 27


def test_s_matrix_census():
    a = fixtures.nilpotent_algebra()
    verdicts = [is_hom_s_matrix(a, r) for r in symmetric_tensors()]
    assert sum(verdicts) == 9
    assert is_hom_s_matrix(a, fixtures.nilpotent_smatrix())
    assert not is_hom_s_matrix(a, Tensor2.from_entries(2, 2, {(0, 0): 1}))


def test_p_condition_matches_cocycle_condition():
    a = fixtures.nilpotent_algebra()
    agreements = 0
    for r in symmetric_tensors():
        if not check_pro1(a, r):
            continue
        adual = dual_product_from_r(a, r)
        direct = check_P_condition(a, r).valid
        via_cocycle = check_one_cocycle(sub_adjacent(adual), coboundary_rep(adual),
                                        dualize_product(a)).valid
        assert direct == via_cocycle, dict(r.nonzero_items())
        agreements += 1
    assert agreements == 27


def test_dualize_product_columns():
    assert dualize_product(fixtures.nilpotent_algebra()).column(1) == (1, 0, 0, 0)
    assert dualize_product(fixtures.scaling_algebra()).column(1) == (0, 1, 0, 0)


def test_bialgebra_constructor_enforces_dual_twist():
    a = fixtures.nilpotent_algebra()
    with pytest.raises(TwistMismatch):
        Bialgebra(a, fixtures.scaling_algebra())


def test_triangular_bialgebra_instance():
    a = fixtures.nilpotent_algebra()
    b = triangular_bialgebra(a, fixtures.nilpotent_smatrix())
    assert validate_bialgebra(b).valid
    assert b.phi_star == coboundary_cocycle(a, fixtures.nilpotent_smatrix())
    assert b.dual.product.is_zero()


def test_triangular_rejects_non_solutions():
    with pytest.raises(NotAnSMatrix):
        triangular_bialgebra(fixtures.nilpotent_algebra(),
                             Tensor2.from_entries(2, 2, {(0, 0): 1}))


def test_equivalence_theorem_valid_case():
    a = fixtures.nilpotent_algebra()
    b = triangular_bialgebra(a, fixtures.nilpotent_smatrix())
    report = check_equivalence_theorem(a, b.dual)
    assert report.valid
    assert report.details["agree"]
    assert report.details["bialgebra"].valid
    assert report.details["matched_pair"].valid
    assert report.details["manin_triple"].valid


def test_equivalence_theorem_mini_sweep():
    a = fixtures.nilpotent_algebra()
    spec = SearchSpec(target="s_matrix", dim=2, coefficients=COEFFS,
                      mode="exhaustive", limit=30, base=a)
    smats = [doc.value for doc in run_search(spec)]
    seen_valid = seen_invalid = 0
    for adual in sweeps.dual_algebra_candidates(21, 40, a, smats):
        report = check_equivalence_theorem(a, adual)
        assert report.details["agree"]
        if report.details["bialgebra"].valid:
            seen_valid += 1
        else:
            seen_invalid += 1
    assert seen_valid and seen_invalid
