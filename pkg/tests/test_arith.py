import itertools

import pytest
from hypothesis import given, strategies as st

from triforge.arith import (
    Quaternion,
    Residue,
    enumerate_S,
    four_square_tuples,
    is_prime,
    legendre,
    r4_count,
    sqrt_minus_one,
)
from triforge.errors import ModulusMismatch, ParameterError


def brute_r4(n):
    r = int(n**0.5) + 1
    return sum(
        1 for t in itertools.product(range(-r, r + 1), repeat=4) if sum(x * x for x in t) == n
    )


@pytest.mark.parametrize("n, expected", [(1, 8), (2, 24), (3, 32), (4, 24), (5, 48), (10, 144)])
def test_r4_small_values(n, expected):
    assert r4_count(n) == expected
    assert brute_r4(n) == expected


def test_four_square_tuples_matches_r4():
    for n in range(1, 80):
        tuples = four_square_tuples(n)
        assert len(tuples) == r4_count(n)
        assert all(sum(x * x for x in t) == n for t in tuples)
        assert len(set(tuples)) == len(tuples)


@pytest.mark.parametrize("p", [5, 13, 17, 29, 37, 41])
def test_S_has_p_plus_one_members(p):
    s = enumerate_S(p)
    assert len(s) == p + 1
    for x in s:
        assert x.norm() == p
        assert x.x0 > 0 and x.x0 % 2 == 1


def test_S_for_five_explicit():
    expected = {
        Quaternion(1, 2, 0, 0), Quaternion(1, -2, 0, 0),
        Quaternion(1, 0, 2, 0), Quaternion(1, 0, -2, 0),
        Quaternion(1, 0, 0, 2), Quaternion(1, 0, 0, -2),
    }
    assert set(enumerate_S(5)) == expected


def test_S_closed_under_conjugation():
    s = enumerate_S(17)
    assert all(x.conjugate() in s for x in s)


@pytest.mark.parametrize("p", [3, 7, 9, 15, 2])
def test_S_rejects_bad_p(p):
    with pytest.raises(ParameterError):
        enumerate_S(p)


quats = st.builds(Quaternion, *(st.integers(-20, 20) for _ in range(4)))


@given(quats, quats)
def test_norm_is_multiplicative(x, y):
    assert (x * y).norm() == x.norm() * y.norm()


@given(quats)
def test_conjugate_product_is_norm(x):
    assert x * x.conjugate() == Quaternion(x.norm(), 0, 0, 0)


@pytest.mark.parametrize(
    "a, q, expected",
    [(2, 7, 1), (3, 7, -1), (17, 5, -1), (5, 13, -1), (17, 13, 1), (17, 269, -1), (0, 13, 0), (26, 13, 0)],
)
def test_legendre_examples(a, q, expected):
    assert legendre(a, q) == expected


@given(st.sampled_from([5, 13, 17, 29, 101]), st.integers(1, 1000))
def test_legendre_matches_square_search(q, a):
    squares = {x * x % q for x in range(1, q)}
    expected = 0 if a % q == 0 else (1 if a % q in squares else -1)
    assert legendre(a, q) == expected


@pytest.mark.parametrize("q, eps", [(5, 2), (13, 5), (17, 4), (29, 12), (269, 82)])
def test_sqrt_minus_one_is_min_root(q, eps):
    r = sqrt_minus_one(q)
    assert int(r) == eps
    assert (r * r + 1).value == 0
    assert eps == min(x for x in range(q) if (x * x + 1) % q == 0)


@pytest.mark.parametrize("q", [3, 7, 11, 2, 15])
def test_sqrt_minus_one_rejects(q):
    with pytest.raises(ParameterError):
        sqrt_minus_one(q)


def test_residue_arithmetic():
    a, b = Residue(3, 7), Residue(5, 7)
    assert (a + b).value == 1
    assert (a - b).value == 5
    assert (a * b).value == 1
    assert a.inverse().value == 5
    assert (-a).value == 4
    assert (a**6).value == 1
    with pytest.raises(ModulusMismatch):
        a + Residue(1, 11)
    with pytest.raises(ZeroDivisionError):
        Residue(0, 7).inverse()


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
