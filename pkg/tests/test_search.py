from fractions import Fraction

import pytest

from hombench import (BudgetExceeded, InvalidInput, LinearMap, SearchSpec,
                      Stream, Tensor2, run_search, serialize_documents,
                      substream, validate_hom_pre_lie)
from hombench import fixtures

COEFFS = (Fraction(-1), Fraction(0), Fraction(1))


def test_stream_is_deterministic_and_bounded():
    a = Stream(99)
    b = Stream(99)
    draws = [a.below(10) for _ in range(50)]
    assert draws == [b.below(10) for _ in range(50)]
    assert all(0 <= x < 10 for x in draws)
    assert len(set(draws)) > 1
    assert substream(5, 1).below(100) != substream(5, 2).below(100)
    assert Stream(3).pick("abc") in "abc"


def test_smatrix_census_over_nilpotent_base():
    spec = SearchSpec(target="s_matrix", dim=2, coefficients=COEFFS,
                      mode="exhaustive", limit=30, base=fixtures.nilpotent_algebra())
    found = [doc.value for doc in run_search(spec)]
    assert len(found) == 9
    assert fixtures.nilpotent_smatrix() in found
    assert Tensor2.from_entries(2, 2, {(0, 0): 1}) not in found


def test_worker_counts_agree():
    spec = SearchSpec(target="hom_pre_lie", dim=2, coefficients=COEFFS,
                      mode="exhaustive", limit=40, budget=7000)
    texts = [serialize_documents(run_search(spec, workers=w)) for w in (1, 2, 4)]
    assert texts[0] == texts[1] == texts[2]


def test_seeded_mode_is_deterministic_and_deduplicated():
    spec = SearchSpec(target="s_matrix", dim=2, coefficients=COEFFS,
                      mode="seeded", seed=11, limit=50, attempts=400,
                      budget=1000, base=fixtures.nilpotent_algebra())
    first = run_search(spec)
    second = run_search(spec)
    assert serialize_documents(first) == serialize_documents(second)
    texts = [serialize_documents([doc]) for doc in first]
    assert len(set(texts)) == len(texts)
    assert 0 < len(first) <= 9


def test_exhaustive_enumeration_finds_fixture_members():
    spec = SearchSpec(target="hom_pre_lie", dim=2, coefficients=COEFFS,
                      mode="exhaustive", limit=300, budget=7000)
    found = [doc.value for doc in run_search(spec)]
    assert len(found) == 173
    assert fixtures.nilpotent_algebra() in found
    assert all(validate_hom_pre_lie(a).valid for a in found[:10])


def test_hessian_target_finds_fixture_form():
    spec = SearchSpec(target="hessian", dim=2, coefficients=COEFFS,
                      mode="exhaustive", limit=30, base=fixtures.nilpotent_algebra())
    found = run_search(spec)
    assert len(found) == 6
    assert all(doc.kind == "bilinear_form" for doc in found)
    assert any(doc.value == fixtures.nilpotent_hessian_form() for doc in found)


def test_o_operator_target_over_fixture_rep():
    d = fixtures.nilpotent_dendriform()
    rep = fixtures.mixed_action_operator(d).rep
    spec = SearchSpec(target="o_operator", dim=2, coefficients=COEFFS,
                      mode="exhaustive", limit=200, base=rep)
    found = run_search(spec)
    assert found
    assert all(doc.kind == "o_operator" for doc in found)
    assert any(doc.value.matrix == LinearMap.identity(2) for doc in found)


def test_limit_zero_returns_nothing():
    spec = SearchSpec(target="hom_pre_lie", dim=2, coefficients=COEFFS,
                      mode="exhaustive", limit=0, budget=7000)
    assert run_search(spec) == []


def test_budget_guard():
    with pytest.raises(BudgetExceeded):
        run_search(SearchSpec(target="dendriform", dim=2, coefficients=COEFFS,
                              mode="exhaustive", limit=5))
    with pytest.raises(BudgetExceeded):
        run_search(SearchSpec(target="hom_pre_lie", dim=2, coefficients=COEFFS,
                              mode="seeded", limit=5, attempts=500, budget=100))


def test_base_preconditions():
    with pytest.raises(InvalidInput):
        run_search(SearchSpec(target="s_matrix", dim=2, coefficients=COEFFS,
                              mode="exhaustive", limit=5))
    with pytest.raises(InvalidInput):
        run_search(SearchSpec(target="s_matrix", dim=3, coefficients=COEFFS,
                              mode="exhaustive", limit=5,
                              base=fixtures.nilpotent_algebra()))
    with pytest.raises(InvalidInput):
        SearchSpec(target="galaxy", dim=2, coefficients=COEFFS)
    with pytest.raises(InvalidInput):
        SearchSpec(target="hom_pre_lie", dim=0, coefficients=COEFFS)
    with pytest.raises(InvalidInput):
        SearchSpec(target="hom_pre_lie", dim=2, coefficients=())
