import pytest

import sweeps
from hombench import (BilinearForm, DimensionMismatch, HomPreLieAlgebra,
                      LinearMap, ManinTriple, Tensor3, TwistMismatch,
                      check_pre_lie_matched_equiv, coadjoint_lie_matched_pair,
                      coadjoint_matched_pair, double_lie, double_pre_lie,
                      standard_manin_triple, standardize_manin_triple,
                      validate_hom_lie, validate_hom_pre_lie,
                      validate_manin_triple, validate_matched_pair_lie,
                      validate_matched_pair_pre_lie)
from hombench import fixtures


def test_coadjoint_pair_with_zero_dual_is_matched():
    a = fixtures.nilpotent_algebra()
    pair = coadjoint_matched_pair(a, fixtures.zero_dual_partner(a))
    assert validate_matched_pair_pre_lie(pair).valid
    assert validate_hom_pre_lie(double_pre_lie(pair)).valid


def test_coadjoint_lie_pair_with_zero_dual_is_matched():
    a = fixtures.nilpotent_algebra()
    pair = coadjoint_lie_matched_pair(a, fixtures.zero_dual_partner(a))
    assert validate_matched_pair_lie(pair).valid
    assert validate_hom_lie(double_lie(pair)).valid


def test_matched_equiv_agrees_on_fixture():
    a = fixtures.nilpotent_algebra()
    report = check_pre_lie_matched_equiv(a, fixtures.zero_dual_partner(a))
    assert report.valid
    assert report.details["agree"]
    assert report.details["lie"].valid
    assert report.details["pre_lie"].valid


def test_matched_equiv_requires_dual_twists():
    a = fixtures.nilpotent_algebra()
    with pytest.raises(TwistMismatch):
        check_pre_lie_matched_equiv(a, fixtures.scaling_algebra())
    with pytest.raises(DimensionMismatch):
        coadjoint_matched_pair(a, HomPreLieAlgebra(
            Tensor3.from_entries((1, 1, 1), {}), LinearMap.identity(1)))


def test_standard_manin_product_oracle():
    a = fixtures.nilpotent_algebra()
    mt = standard_manin_triple(a, fixtures.zero_dual_partner(a))
    # the second covector multiplied onto the first base vector lands on the first covector
    assert mt.total.basis_product(3, 0) == (0, 0, 1, 0)
    assert mt.form.matrix.entries[0][2] == -1
    assert mt.form.matrix.entries[2][0] == 1
    assert validate_manin_triple(mt).valid


def test_double_lie_equivalence_sweep():
    hits = 0
    for pair in sweeps.lie_pair_candidates(7, 60):
        mv = validate_matched_pair_lie(pair).valid
        dv = validate_hom_lie(double_lie(pair)).valid
        assert mv == dv
        hits += mv
    assert 0 < hits < 60


def test_double_pre_lie_equivalence_sweep():
    pool = sweeps.pre_lie_pool(limit=80)
    pairs = sweeps.smatrix_dual_pairs(pool, max_bases=12, per_base=6)
    hits = 0
    for pair in sweeps.pre_lie_pair_candidates(13, 60, pool, pairs):
        mv = validate_matched_pair_pre_lie(pair).valid
        dv = validate_hom_pre_lie(double_pre_lie(pair)).valid
        assert mv == dv
        hits += mv
    assert 0 < hits < 60


def test_standardize_standard_triple_gives_identity():
    a = fixtures.nilpotent_algebra()
    mt = standard_manin_triple(a, fixtures.zero_dual_partner(a))
    st = standardize_manin_triple(mt)
    assert st.iso == LinearMap.identity(4)
    assert st.standard == mt


def _conjugate_triple(mt, s):
    """Pull the triple back along an invertible block map fixing the split."""
    dim = mt.total.dim
    s_inv = s.inverse()
    items = {}
    for i in range(dim):
        for j in range(dim):
            vec = s_inv.apply(mt.total.product_of(s.column(i), s.column(j)))
            for k, c in enumerate(vec):
                if c != 0:
                    items[(i, j, k)] = c
    product = Tensor3.from_entries((dim, dim, dim), items)
    twist = s_inv @ mt.total.twist @ s
    rows = tuple(tuple(mt.form.apply(s.column(i), s.column(j)) for j in range(dim))
                 for i in range(dim))
    form = BilinearForm(rows, mt.form.symmetry)
    return ManinTriple(HomPreLieAlgebra(product, twist), form, mt.first_dim, mt.second_dim)


def test_standardize_scrambled_triple():
    a = fixtures.nilpotent_algebra()
    mt = standard_manin_triple(a, fixtures.zero_dual_partner(a))
    q = LinearMap(((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 1), (0, 0, 0, 1)))
    scrambled = _conjugate_triple(mt, q)
    assert validate_manin_triple(scrambled).valid
    st = standardize_manin_triple(scrambled)
    assert st.iso != LinearMap.identity(4)
    assert validate_manin_triple(st.standard).valid
    total = scrambled.total
    for i in range(4):
        ei = tuple(1 if k == i else 0 for k in range(4))
        for j in range(4):
            ej = tuple(1 if k == j else 0 for k in range(4))
            left = st.iso.apply(total.product_of(ei, ej))
            right = st.standard.total.product_of(st.iso.apply(ei), st.iso.apply(ej))
            assert left == right
            assert scrambled.form.apply(ei, ej) == st.standard.form.apply(
                st.iso.apply(ei), st.iso.apply(ej))


def test_manin_validator_flags_non_isotropic_form():
    a = fixtures.nilpotent_algebra()
    mt = standard_manin_triple(a, fixtures.zero_dual_partner(a))
    rows = [list(row) for row in mt.form.matrix.entries]
    rows[0][1] += 1
    rows[1][0] -= 1
    bad = ManinTriple(mt.total, BilinearForm(tuple(tuple(r) for r in rows), "skew"), 2, 2)
    report = validate_manin_triple(bad)
    assert not report.valid
    idents = {f.identity for f in report.failures}
    assert "first-isotropic" in idents


def test_fixture_manin_triple_is_valid():
    docs = dict(fixtures.fixture_documents())
    assert validate_manin_triple(docs["nilpotent_manin"].value).valid
