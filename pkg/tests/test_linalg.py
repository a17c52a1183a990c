import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from frobsplit import linalg


def brute_rank(a, p):
    """Rank as log_p of the number of distinct images of all vectors."""
    rows, cols = a.shape
    images = {tuple(a @ np.array(v) % p) for v in itertools.product(range(p), repeat=cols)}
    return round(np.log(len(images)) / np.log(p))


def matrices(p, max_side=4):
    return st.integers(1, max_side).flatmap(lambda r: st.integers(1, max_side).flatmap(
        lambda c: st.lists(st.integers(0, p - 1), min_size=r * c, max_size=r * c).map(
            lambda xs: np.array(xs, dtype=np.int64).reshape(r, c))))


@pytest.mark.parametrize("p", [2, 3])
@given(data=st.data())
def test_rank_matches_brute_force(p, data):
    a = data.draw(matrices(p))
    assert linalg.rank(a, p) == brute_rank(a, p)


@given(matrices(5))
def test_nullspace(a):
    p = 5
    ns = linalg.nullspace(a, p)
    assert not (a @ ns % p).any()
    assert ns.shape[1] == a.shape[1] - linalg.rank(a, p)


@given(matrices(3), st.data())
def test_solve_consistent(a, data):
    p = 3
    x = np.array(data.draw(st.lists(st.integers(0, 2), min_size=a.shape[1], max_size=a.shape[1])))
    b = a @ x % p
    y = linalg.solve(a, b, p)
    assert np.array_equal(a @ y % p, b)


def test_solve_inconsistent():
    with pytest.raises(linalg.InconsistentSystem):
        linalg.solve(np.array([[1, 0], [1, 0]]), np.array([0, 1]), 3)


@given(matrices(7))
def test_intersection_lies_in_both(a):
    p = 7
    b = np.roll(a, 1, axis=0)
    both = linalg.intersect(a, b, p)
    for j in range(both.shape[1]):
        assert linalg.in_span(a, both[:, j], p) and linalg.in_span(b, both[:, j], p)


def test_inverse_round_trip():
    a = np.array([[1, 2], [3, 4]])
    inv = linalg.inverse(a, 5)
    assert np.array_equal(a @ inv % 5, np.eye(2, dtype=np.int64))
