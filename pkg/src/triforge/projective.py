"""Projective 2x2 matrices over Z/q and the groups PGL2(q) / PSL2(q).

Every element is stored in canonical form: the matrix is rescaled so that
its first nonzero entry in the scan order (a, b, c, d) equals 1.  Two
matrices represent the same element of PGL2(q) exactly when their canonical
forms agree, so dataclass equality and hashing are group equality.

Besides the scalar API there is a small vectorised layer
(:func:`encode`, :func:`mul_codes`) used by the lazy breadth-first search in
:mod:`triforge.lps`.  It packs a canonical matrix into one integer whose
ordering agrees with the lexicographic order of ``(a, b, c, d)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .arith import MAX_MODULUS, is_prime, legendre
from .errors import CapExceeded, ModulusMismatch, ParameterError, SingularMatrix

DEFAULT_ENUMERATION_CAP = 5_000_000


class PslClass(enum.Enum):
    SQUARE = "Square"
    NON_SQUARE = "NonSquare"


@dataclass(frozen=True, order=True)
class ProjMat:
    a: int
    b: int
    c: int
    d: int
    q: int

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def det(self) -> int:
        return (self.a * self.d - self.b * self.c) % self.q

    def __matmul__(self, other: ProjMat) -> ProjMat:
        return compose(self, other)

    def inverse(self) -> ProjMat:
        # adjugate; the determinant is a scalar and disappears projectively
        return canonicalize([[self.d, -self.b], [-self.c, self.a]], self.q)

    def __repr__(self) -> str:
        return f"ProjMat([[{self.a},{self.b}],[{self.c},{self.d}]] mod {self.q})"


def _check_modulus(q: int) -> None:
    if not (2 <= q <= MAX_MODULUS and is_prime(q)):
        raise ParameterError(f"modulus must be a prime below 2^31, got {q}")


def canonicalize(m: Sequence[Sequence[int]], q: int) -> ProjMat:
    """Scale a nonsingular 2x2 matrix mod ``q`` so its leading nonzero entry is 1.

    >>> canonicalize([[2, 4], [0, 2]], 5)
    ProjMat([[1,2],[0,1]] mod 5)
    """
    _check_modulus(q)
    (a, b), (c, d) = m
    a, b, c, d = a % q, b % q, c % q, d % q
    if (a * d - b * c) % q == 0:
        raise SingularMatrix(f"singular matrix [[{a},{b}],[{c},{d}]] mod {q}")
    lead = a if a else b
    s = pow(lead, -1, q)
    return ProjMat(a * s % q, b * s % q, c * s % q, d * s % q, q)


def identity(q: int) -> ProjMat:
    return ProjMat(1, 0, 0, 1, q)


def compose(m1: ProjMat, m2: ProjMat) -> ProjMat:
    """Canonical form of the product ``m1 * m2``."""
    if m1.q != m2.q:
        raise ModulusMismatch(f"moduli {m1.q} and {m2.q} differ")
    a1, b1, c1, d1 = m1.entries
    a2, b2, c2, d2 = m2.entries
    return canonicalize(
        [[a1 * a2 + b1 * c2, a1 * b2 + b1 * d2], [c1 * a2 + d1 * c2, c1 * b2 + d1 * d2]],
        m1.q,
    )


def pgl2_order(q: int) -> int:
    return q * (q - 1) * (q + 1)


def pgl2_elements(q: int, cap: int = DEFAULT_ENUMERATION_CAP) -> list[ProjMat]:
    """All elements of PGL2(q) in lexicographic order of canonical entries."""
    _check_modulus(q)
    if pgl2_order(q) > cap:
        raise CapExceeded(f"|PGL2({q})| = {pgl2_order(q)} exceeds cap {cap}")
    out = [ProjMat(0, 1, c, d, q) for c in range(1, q) for d in range(q)]
    out += [
        ProjMat(1, b, c, d, q)
        for b in range(q)
        for c in range(q)
        for d in range(q)
        if (d - b * c) % q
    ]
    return out


def psl2_class(m: ProjMat) -> PslClass:
    """Square class of the determinant; constant on cosets of PSL2(q)."""
    if m.q == 2:
        return PslClass.SQUARE
    return PslClass.SQUARE if legendre(m.det(), m.q) == 1 else PslClass.NON_SQUARE


# -- vectorised layer ------------------------------------------------------

def encode(m: ProjMat) -> int:
    """Pack a canonical matrix into an integer ordered like ``(a, b, c, d)``."""
    q = m.q
    if m.a == 0:
        return m.c * q + m.d
    return q * q * (1 + m.b) + m.c * q + m.d


def decode(code: int, q: int) -> ProjMat:
    if code < q * q:
        return ProjMat(0, 1, code // q, code % q, q)
    hi, lo = divmod(code, q * q)
    return ProjMat(1, hi - 1, lo // q, lo % q, q)


def decode_array(codes: np.ndarray, q: int) -> tuple[np.ndarray, ...]:
    codes = np.asarray(codes, dtype=np.int64)
    q2 = q * q
    upper = codes >= q2
    hi = codes // q2
    lo = codes % q2
    a = upper.astype(np.int64)
    b = np.where(upper, hi - 1, 1)
    return a, b, lo // q, lo % q


def inverse_table(q: int) -> np.ndarray:
    inv = np.zeros(q, dtype=np.int64)
    for x in range(1, q):
        inv[x] = pow(x, -1, q)
    return inv


def mul_codes(s: ProjMat, codes: np.ndarray, inv: np.ndarray) -> np.ndarray:
    """Codes of ``s * h`` for every encoded ``h`` in ``codes``."""
    q = s.q
    if q > 1 << 20:
        raise ParameterError("vectorised layer supports q < 2^20")
    a, b, c, d = decode_array(codes, q)
    na = (s.a * a + s.b * c) % q
    nb = (s.a * b + s.b * d) % q
    nc = (s.c * a + s.d * c) % q
    nd = (s.c * b + s.d * d) % q
    lead = np.where(na != 0, na, nb)
    sc = inv[lead]
    na, nb, nc, nd = na * sc % q, nb * sc % q, nc * sc % q, nd * sc % q
    return np.where(na == 0, nc * q + nd, q * q * (1 + nb) + nc * q + nd)
