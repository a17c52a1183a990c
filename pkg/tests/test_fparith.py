import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from frobsplit.fparith import DensePoly, ModulusError, PrimeModulus, Scalar, binom_int, inverse

PRIMES = st.sampled_from([2, 3, 5, 7, 11, 13])


def generalized_binomial(n, k):
    """n (n-1) ... (n-k+1) / k! over the rationals."""
    out = Fraction(1)
    for j in range(k):
        out *= Fraction(n - j, j + 1)
    assert out.denominator == 1
    return int(out)


def test_frozen_values():
    assert binom_int(6, 3, 3) == 2
    assert binom_int(4, 2, 3) == 0
    assert binom_int(17, 0, 5) == 1
    assert binom_int(-1, 3, 5) == 4


@given(st.integers(-60, 60), st.integers(0, 30), PRIMES)
def test_matches_rational_binomial(n, k, p):
    assert binom_int(n, k, p) == generalized_binomial(n, k) % p


@pytest.mark.parametrize("p", [2, 3, 5])
def test_lucas_on_multiples(p):
    for a in range(5):
        for b in range(5):
            assert binom_int(p * a, p * b, p) == binom_int(a, b, p) == math.comb(a, b) % p


@pytest.mark.parametrize("bad", [0, 1, 4, 9, 17])
def test_modulus_validation(bad):
    with pytest.raises(ModulusError):
        PrimeModulus(bad)


@given(st.integers(1, 10_000), PRIMES)
def test_inverse(a, p):
    if a % p == 0:
        with pytest.raises(ZeroDivisionError):
            inverse(a, p)
    else:
        assert a * inverse(a, p) % p == 1


def test_scalar_field_ops():
    a, b = Scalar(2, 5), Scalar(4, 5)
    assert a + b == Scalar(1, 5)
    assert a * b == Scalar(3, 5)
    assert (a / b) * b == a
    assert -a == Scalar(3, 5)


def test_poly_freshman_dream():
    xi = DensePoly.variable(2)
    one = DensePoly.constant(1, 2)
    assert (one + xi) * (one + xi) == one + xi ** 2
    assert (one + xi) * DensePoly.constant(0, 2) == DensePoly.constant(0, 2)


def test_poly_eval():
    f = DensePoly([1, 2], 3)
    assert f.eval(1) == 0
    assert f.degree == 1
    assert DensePoly([0], 3).degree is None


@given(st.lists(st.integers(0, 6), max_size=5), st.lists(st.integers(0, 6), max_size=5), st.integers(0, 6))
def test_poly_eval_is_ring_map(f, g, t):
    p = 7
    f, g = DensePoly(f, p), DensePoly(g, p)
    assert (f * g).eval(t) == f.eval(t) * g.eval(t) % p
    assert (f + g).eval(t) == (f.eval(t) + g.eval(t)) % p
    assert f.compose(g).eval(t) == f.eval(g.eval(t))
