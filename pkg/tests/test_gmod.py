import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from frobsplit import gmod
from frobsplit.fparith import DensePoly
from frobsplit.gmod import (ModuleError, composition_factors, contract, direct_sum, dual, dual_weyl,
                            frobenius_twist, hom_space, is_isomorphic, line, simple, steinberg, tensor,
                            trivial, weyl_module)
from frobsplit.hyperalg import Hyperalgebra, phi


def form_operator(n, kind, r, p):
    """E^(r) = (y d/dx)^r / r! and F^(r) = (x d/dy)^r / r! on x^k y^(n-k), basis index k."""
    out = np.zeros((n + 1, n + 1), dtype=np.int64)
    for k in range(n + 1):
        if kind == "E" and k - r >= 0:
            out[k - r, k] = math.comb(k, r) % p
        if kind == "F" and k + r <= n:
            out[k + r, k] = math.comb(n - k, r) % p
    return out


def weyl_operator(n, kind, r, p):
    out = np.zeros((n + 1, n + 1), dtype=np.int64)
    for j in range(n + 1):
        if kind == "F" and j + r <= n:
            out[j + r, j] = math.comb(j + r, r) % p
        if kind == "E" and j - r >= 0:
            out[j - r, j] = math.comb(n - j + r, r) % p
    return out


@pytest.mark.parametrize("p", [2, 3, 5])
def test_standard_modules_match_integral_formulas(p):
    for n in range(3 * p + 1):
        nab, delta = dual_weyl(n, p), weyl_module(n, p)
        assert nab.weights == [(n - 2 * k,) for k in range(n + 1)]
        for r in range(n + 2):
            for kind in "EF":
                assert np.array_equal(nab.divided_power(kind, 0, r), form_operator(n, kind, r, p))
                assert np.array_equal(delta.divided_power(kind, 0, r), weyl_operator(n, kind, r, p))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_simple_dimensions(p):
    # the image of Delta(n) -> nabla(n) is spanned by F^(j) y^n = C(n, j) x^j y^(n-j)
    for n in range(4 * p):
        expected = sum(1 for j in range(n + 1) if math.comb(n, j) % p)
        assert simple(n, p).dim == expected
        assert sum(gmod.simple_character(n, p).values()) == expected


def test_frozen_modules():
    assert simple(2, 2).dim == 2
    assert is_isomorphic(steinberg(3), dual_weyl(2, 3))
    assert composition_factors(dual_weyl(3, 3)) == {(3,): 1, (1,): 1}
    assert composition_factors(dual_weyl(2, 2)) == {(2,): 1, (0,): 1}
    assert composition_factors(simple(6, 5)) == {(6,): 1}
    assert trivial(3).dim == 1 and line((4,), 3).borel


def test_negative_weights_rejected():
    with pytest.raises(ModuleError):
        dual_weyl(-1, 3)


@pytest.mark.parametrize("p", [2, 3])
def test_relations_on_modules(p):
    for n in range(2 * p + 2):
        for m in (dual_weyl(n, p), weyl_module(n, p), simple(n, p)):
            assert m.validate(p * p)
    assert dual_weyl((1, 2), p).validate(p + 1)


def test_hom_dimensions():
    p = 3
    assert len(hom_space(weyl_module(4, p), dual_weyl(4, p))) == 1
    assert len(hom_space(dual_weyl(4, p), weyl_module(4, p))) == 1
    assert len(hom_space(dual_weyl(1, p), dual_weyl(3, p))) == 0  # the socle of nabla(3) is L(3)
    assert len(hom_space(simple(3, p), dual_weyl(3, p))) == 1
    assert len(hom_space(simple(1, p), dual_weyl(3, p))) == 0


@pytest.mark.parametrize("p", [2, 3])
def test_dual_and_tensor_characters(p):
    for a in range(p + 2):
        for b in range(p + 2):
            t = tensor(dual_weyl(a, p), weyl_module(b, p))
            expected = {}
            for wa in dual_weyl(a, p).weights:
                for wb in weyl_module(b, p).weights:
                    w = (wa[0] + wb[0],)
                    expected[w] = expected.get(w, 0) + 1
            assert t.character() == expected
            assert t.validate(p + 1)
        assert is_isomorphic(dual(dual(dual_weyl(a, p))), dual_weyl(a, p))
        assert is_isomorphic(dual(weyl_module(a, p)), dual_weyl(a, p))


@pytest.mark.parametrize("p", [2, 3, 5])
@given(data=st.data())
def test_contraction_is_action_through_phi(p, data):
    alg = Hyperalgebra(p)
    n = data.draw(st.integers(0, 4 * p))
    top = n // p + 1
    e = st.integers(0, top)
    x = alg.monomial(data.draw(e), data.draw(e), data.draw(e))
    m = dual_weyl(n, p)
    idx = gmod.contraction_indices(m)
    big = m.act(phi(x))
    rest = [j for j in range(m.dim) if j not in idx]
    assert not big[:, rest].any()
    assert np.array_equal(big[np.ix_(idx, idx)], contract(m).act(x))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_twist_then_contract(p):
    for n in range(2 * p + 1):
        m = dual_weyl(n, p)
        tw = frobenius_twist(m)
        assert tw.character() == {(p * w[0],): c for w, c in m.character().items()}
        assert is_isomorphic(contract(tw), m)


def test_contraction_table_rows():
    iso = is_isomorphic
    assert iso(contract(dual_weyl(2, 2)), direct_sum(simple(1, 2), simple(0, 2)))
    assert iso(frobenius_twist(contract(dual_weyl(2, 2))), direct_sum(simple(2, 2), simple(0, 2)))
    assert iso(contract(weyl_module(3, 3)), simple(1, 3))
    assert (1,) not in composition_factors(dual_weyl(5, 5))
    assert iso(contract(dual_weyl(5, 5)), simple(1, 5))
    assert contract(tensor(steinberg(2), frobenius_twist(dual_weyl(1, 2)))).dim == 0
    assert iso(contract(tensor(steinberg(5), frobenius_twist(simple(2, 5)))), simple(2, 5))


def test_group_words():
    p = 3
    m = dual_weyl(4, p)
    assert np.array_equal(gmod.group_word_action(m, []), np.eye(5, dtype=np.int64))
    s = gmod.group_word_action(m, [("s", 0)])
    for j, w in enumerate(m.weights):
        for r in np.nonzero(s[:, j])[0]:
            assert m.weights[r] == (-w[0],)
    # x(a) x(b) = x(a + b), checked with a polynomial parameter
    t = DensePoly.variable(p)
    lhs = gmod.group_word_action(m, [("x", 0, 1, t), ("x", 0, 1, 2)])
    rhs = gmod.group_word_action(m, [("x", 0, 1, t + DensePoly.constant(2, p))])
    assert np.array_equal(lhs, rhs)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_weyl_element_on_contracted_blocks(p):
    for n in range(4 * p + 1):
        c = contract(dual_weyl(n, p))
        if not c.dim:
            continue
        s = gmod.group_word_action(c, [("s", 0)])
        assert gmod.linalg.rank(s, p) == c.dim
        for j, w in enumerate(c.weights):
            assert all(c.weights[r] == (-w[0],) for r in np.nonzero(s[:, j])[0])


def test_module_maps():
    p = 2
    maps = hom_space(weyl_module(2, p), dual_weyl(2, p))
    f = maps[0]
    assert f.is_equivariant() and f.rank() == simple(2, p).dim
    assert f.compose(gmod.ModuleMap(f.source, f.source, np.eye(3, dtype=np.int64))).rank() == f.rank()
