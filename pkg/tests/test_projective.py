import numpy as np
import pytest
from hypothesis import given, strategies as st

from triforge.errors import CapExceeded, ModulusMismatch, ParameterError, SingularMatrix
from triforge.projective import (
    PslClass,
    ProjMat,
    canonicalize,
    compose,
    decode,
    decode_array,
    encode,
    identity,
    inverse_table,
    mul_codes,
    pgl2_elements,
    pgl2_order,
    psl2_class,
)

Q = 13


ELEMENTS = pgl2_elements(Q)


@st.composite
def matrices(draw):
    """Raw nonsingular matrices: a random group element times a random scalar."""
    m = draw(st.sampled_from(ELEMENTS))
    s = draw(st.integers(1, Q - 1))
    return [[s * m.a, s * m.b], [s * m.c, s * m.d]]


def test_canonicalize_examples():
    assert canonicalize([[2, 4], [0, 2]], 5) == ProjMat(1, 2, 0, 1, 5)
    assert canonicalize([[0, 3], [2, 1]], 5) == ProjMat(0, 1, 4, 2, 5)
    assert canonicalize([[-1, 0], [0, -1]], 7) == identity(7)


def test_canonicalize_errors():
    with pytest.raises(SingularMatrix):
        canonicalize([[1, 2], [2, 4]], 5)
    with pytest.raises(ParameterError):
        canonicalize([[1, 0], [0, 1]], 9)
    with pytest.raises(ModulusMismatch):
        compose(identity(5), identity(7))


@given(matrices(), st.integers(1, Q - 1))
def test_canonical_form_is_scalar_invariant(m, s):
    scaled = [[s * x for x in row] for row in m]
    c = canonicalize(m, Q)
    assert canonicalize(scaled, Q) == c
    assert (c.a, c.b)[0 if c.a else 1] == 1


@given(matrices(), matrices(), matrices())
def test_group_axioms(x, y, z):
    x, y, z = (canonicalize(m, Q) for m in (x, y, z))
    assert compose(compose(x, y), z) == compose(x, compose(y, z))
    assert compose(x, identity(Q)) == x == compose(identity(Q), x)
    assert compose(x, x.inverse()) == identity(Q)
    assert x @ y == compose(x, y)


@given(matrices(), matrices())
def test_psl2_class_is_a_homomorphism(x, y):
    x, y = canonicalize(x, Q), canonicalize(y, Q)
    sign = {PslClass.SQUARE: 1, PslClass.NON_SQUARE: -1}
    assert sign[psl2_class(compose(x, y))] == sign[psl2_class(x)] * sign[psl2_class(y)]


@pytest.mark.parametrize("q", [2, 3, 5, 7])
def test_pgl2_enumeration(q):
    elems = pgl2_elements(q)
    assert len(elems) == pgl2_order(q) == q * (q * q - 1)
    assert elems == sorted(elems)
    assert len(set(elems)) == len(elems)
    # all canonical and closed under composition by a fixed element
    s = set(elems)
    g = elems[len(elems) // 2]
    assert {compose(g, h) for h in elems} == s


def test_psl2_is_index_two():
    elems = pgl2_elements(5)
    squares = [m for m in elems if psl2_class(m) == PslClass.SQUARE]
    assert len(squares) == len(elems) // 2


def test_enumeration_cap():
    with pytest.raises(CapExceeded):
        pgl2_elements(101, cap=1000)


def test_codes_roundtrip_and_order():
    elems = pgl2_elements(7)
    codes = [encode(m) for m in elems]
    assert codes == sorted(codes)
    assert [decode(c, 7) for c in codes] == elems
    a, b, c, d = decode_array(np.array(codes), 7)
    assert list(zip(a.tolist(), b.tolist(), c.tolist(), d.tolist())) == [m.entries for m in elems]


def test_mul_codes_matches_compose():
    q = 11
    elems = pgl2_elements(q)
    codes = np.array([encode(m) for m in elems])
    inv = inverse_table(q)
    s = canonicalize([[3, 5], [2, 8]], q)
    got = mul_codes(s, codes, inv)
    assert got.tolist() == [encode(compose(s, h)) for h in elems]
