import numpy as np
import pytest
from hypothesis import given, strategies as st

from frobsplit import flagsplit
from frobsplit.flagsplit import DegreeError, monomial


def split_form(f, p):
    """Keep x^a y^b with p | a and p | b, divide the exponents by p."""
    n = len(f) - 1
    out = np.zeros(n // p + 1, dtype=np.int64)
    for a, c in enumerate(f):
        if a % p == 0 and (n - a) % p == 0:
            out[a // p] = c
    return out


def forms(p, degree):
    return st.lists(st.integers(0, p - 1), min_size=degree + 1, max_size=degree + 1).map(np.array)


@pytest.mark.parametrize("p", [2, 3])
def test_abstract_splitting_is_the_monomial_one(p):
    for m in range(3 * p // p + 2):
        split = flagsplit.psi_A(p, p * m)
        for k in range(p * m + 1):
            assert np.array_equal(split @ monomial(k, p * m) % p, split_form(monomial(k, p * m), p))


def test_xy_dies_at_two():
    assert not (flagsplit.psi_A(2, 2) @ monomial(1, 2)).any()
    assert np.array_equal(flagsplit.psi_A(2, 0) @ monomial(0, 0), monomial(0, 0))


@pytest.mark.parametrize("p", [2, 3])
@given(data=st.data())
def test_frobenius_linear(p, data):
    j = data.draw(st.integers(0, 2))
    kb = p * data.draw(st.integers(0, 1))
    a, b = data.draw(forms(p, j)), data.draw(forms(p, kb))
    prod = flagsplit.form_mul(flagsplit.form_power(a, p, p), b, p)
    lhs = flagsplit.psi_A(p, p * j + kb) @ prod % p
    rhs = flagsplit.form_mul(a, flagsplit.psi_A(p, kb) @ b % p, p)
    assert np.array_equal(lhs, rhs)


@pytest.mark.parametrize("p", [2, 3])
def test_models_and_identification(p):
    assert flagsplit.identification_check(p, 2 * p)
    assert flagsplit.cup_agreement(p, p + 1)
    assert flagsplit.model_agreement(p, 3 * p)
    assert flagsplit.phi_is_pth_power(p, 3 * p)


def test_rank_two_agreement():
    assert flagsplit.model_agreement(2, 2, rank=2)


@pytest.mark.parametrize("p,degree", [(2, 6), (3, 9)])
def test_semi_invariance(p, degree):
    assert flagsplit.semi_invariance(p, degree, "E")
    assert flagsplit.semi_invariance(p, degree, "F")
    assert flagsplit.t_linearity(p, 4 if p == 2 else degree)


def test_theta_examples():
    for p in (2, 3):
        assert all(flagsplit.theta_examples(p).values())
        assert flagsplit.theta_glue(p, 3 * p)
        assert flagsplit.theta_splits(p, 3 * p)
        assert flagsplit.theta_weight_independence(p, 3 * p)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_theta_equivariance_witness(p):
    w = flagsplit.theta_equivariance_witness(p)
    assert not w["equivariant"]
    assert w["psi_of_moved"] == [1, 0]     # y = x^0 y^1
    assert w["moved_psi"] == [0, 0]


@pytest.mark.parametrize("p", [2, 3])
def test_schubert_points(p):
    d = 3 * p
    assert flagsplit.schubert_models_agree(p, d)
    assert flagsplit.combined_models_agree(p, d)
    assert all(flagsplit.compatibility(p, d, lambda m: flagsplit.psi_A(p, p * m)).values())


def test_schubert_ideals_by_hand():
    # degree-1 pieces: X(e) is cut out by x, X+(s) by y, X(s) and X+(e) by nothing
    p = 3
    assert np.array_equal(flagsplit.schubert_ideal(p, 1, "e").ravel() % p != 0, [False, True])
    assert flagsplit.schubert_ideal(p, 1, "s").shape[1] == 0
    assert flagsplit.schubert_ideal(p, 1, "e", plus=True).shape[1] == 0
    assert np.array_equal(flagsplit.schubert_ideal(p, 1, "s", plus=True).ravel() % p != 0, [True, False])


@pytest.mark.parametrize("p", [2, 3])
def test_f0_splitting(p):
    assert np.array_equal(flagsplit.f0_form(p), flagsplit.xy_power(p, p - 1))
    assert flagsplit.f0_splitting(p, 3 * p)["ok"]


@pytest.mark.parametrize("p", [2, 3, 5])
def test_sigma_closed_form(p):
    for m in range(3):
        expected = np.zeros((m + 1, p - 1 + p * m + 1), dtype=np.int64)
        for a in range(p - 1 + p * m + 1):
            if a % p == p - 1:
                expected[(a - p + 1) // p, a] = 1
        assert np.array_equal(flagsplit.sigma_degree(p, m), expected)
        # v- is x^(p-1): sigma o F_* v- is the monomial splitting, not the (xy)^(p-1) one
        assert np.array_equal(flagsplit.sigma_v_minus(p, m), flagsplit.monomial_splitting(p, p * m))


@pytest.mark.parametrize("p", [2, 3])
def test_sigma_checks(p):
    rep = flagsplit.sigma_checks(p, 3 * p)
    assert rep.pop("ok"), rep


def test_degree_bound():
    flagsplit.check_degree_bound(3, 24)
    with pytest.raises(DegreeError):
        flagsplit.check_degree_bound(3, 25)
