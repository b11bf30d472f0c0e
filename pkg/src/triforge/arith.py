"""Integer quaternions, four-square representations and mod-q primitives."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from sympy import divisors, isprime

from .errors import ModulusMismatch, ParameterError

MAX_MODULUS = 2**31 - 1


@dataclass(frozen=True, order=True)
class Quaternion:
    """Lipschitz quaternion ``x0 + x1 i + x2 j + x3 k`` with integer coefficients."""

    x0: int
    x1: int
    x2: int
    x3: int

    def __iter__(self) -> Iterator[int]:
        return iter((self.x0, self.x1, self.x2, self.x3))

    def __mul__(self, other: Quaternion) -> Quaternion:
        a0, a1, a2, a3 = self
        b0, b1, b2, b3 = other
        return Quaternion(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )

    def conjugate(self) -> Quaternion:
        return Quaternion(self.x0, -self.x1, -self.x2, -self.x3)

    def norm(self) -> int:
        return self.x0**2 + self.x1**2 + self.x2**2 + self.x3**2


@dataclass(frozen=True)
class SolutionSet:
    """The ``p + 1`` quaternions of norm ``p`` with positive odd real part."""

    p: int
    members: tuple[Quaternion, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Quaternion]:
        return iter(self.members)

    def __contains__(self, item: object) -> bool:
        return item in self.members


@dataclass(frozen=True)
class Residue:
    """An element of Z/q for a prime modulus q."""

    value: int
    modulus: int

    def __post_init__(self):
        if not 2 <= self.modulus <= MAX_MODULUS:
            raise ParameterError(f"modulus {self.modulus} outside [2, 2^31 - 1]")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other) -> int:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ModulusMismatch("residues with different moduli")
            return other.value
        return int(other)

    def __add__(self, other):
        return Residue(self.value + self._coerce(other), self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        return Residue(self.value - self._coerce(other), self.modulus)

    def __rsub__(self, other):
        return Residue(self._coerce(other) - self.value, self.modulus)

    def __mul__(self, other):
        return Residue(self.value * self._coerce(other), self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __pow__(self, e: int):
        return Residue(pow(self.value, e, self.modulus), self.modulus)

    def __int__(self) -> int:
        return self.value

    def inverse(self) -> Residue:
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.modulus}")
        return Residue(pow(self.value, -1, self.modulus), self.modulus)


def is_prime(n: int) -> bool:
    return bool(isprime(n))


def r4_count(n: int) -> int:
    """Number of integer 4-tuples whose squares sum to ``n`` (Jacobi's formula).

    >>> r4_count(1), r4_count(2), r4_count(5)
    (8, 24, 48)
    """
    if n < 1:
        raise ParameterError(f"r4_count needs n >= 1, got {n}")
    return 8 * sum(d for d in divisors(n) if d % 4)


def four_square_tuples(n: int) -> list[tuple[int, int, int, int]]:
    """All integer 4-tuples with ``sum(x_i**2) == n``, by direct search.

    Each coordinate is bounded by ``isqrt(n)``; the last one is solved for.
    """
    r = math.isqrt(n)
    rng = range(-r, r + 1)
    out = []
    for x0, x1, x2 in product(rng, repeat=3):
        rest = n - x0 * x0 - x1 * x1 - x2 * x2
        if rest < 0:
            continue
        x3 = math.isqrt(rest)
        if x3 * x3 == rest:
            out.append((x0, x1, x2, x3))
            if x3:
                out.append((x0, x1, x2, -x3))
    return sorted(out)


def enumerate_S(p: int) -> SolutionSet:
    """Quaternions of norm ``p`` with ``x0 > 0`` odd, for a prime ``p = 1 mod 4``."""
    if not is_prime(p) or p % 4 != 1:
        raise ParameterError(f"p must be a prime congruent to 1 mod 4, got {p}")
    members = tuple(
        Quaternion(*t) for t in four_square_tuples(p) if t[0] > 0 and t[0] % 2 == 1
    )
    if len(members) != p + 1:
        raise AssertionError(f"found {len(members)} solutions for p={p}")
    return SolutionSet(p, members)


def legendre(a: int, q: int) -> int:
    """Legendre symbol (a/q) via Euler's criterion; q an odd prime."""
    if q < 3 or q % 2 == 0:
        raise ParameterError(f"legendre needs an odd prime modulus, got {q}")
    t = pow(a % q, (q - 1) // 2, q)
    return -1 if t == q - 1 else t


def sqrt_minus_one(q: int) -> Residue:
    """The smaller square root of -1 modulo a prime ``q = 1 mod 4``."""
    if not is_prime(q) or q % 4 != 1:
        raise ParameterError(f"q must be a prime congruent to 1 mod 4, got {q}")
    # any non-residue n gives n^((q-1)/4) as a root of -1
    n = 2
    while legendre(n, q) != -1:
        n += 1
    e = pow(n, (q - 1) // 4, q)
    return Residue(min(e, q - e), q)
