"""Concrete finite groups used as targets of ``Z/k * Z/k``.

Permutations are tuples ``p`` with ``p[i]`` the image of ``i``; products are
composition ``(x*y)(i) = x[y[i]]``.  Elements of SL2(p) are tuples
``(a, b, c, d)`` with matrix multiplication mod ``p``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Hashable

from ..arith import is_prime
from ..errors import CapExceeded, OrderMismatch, ParameterError
from ..graphs import element_order

GROUP_CAP = 10**5


def perm_mul(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x[i] for i in y)


def perm_from_cycles(n: int, *cycles: tuple[int, ...]) -> tuple[int, ...]:
    """Permutation of ``range(n)`` from disjoint cycles."""
    img = list(range(n))
    for cyc in cycles:
        for s, t in zip(cyc, cyc[1:] + cyc[:1]):
            img[s] = t
    return tuple(img)


def sl2_multiplier(p: int) -> Callable:
    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % p, (a * f + b * h) % p, (c * e + d * g) % p, (c * f + d * h) % p)

    mul.modulus = p
    return mul


@lru_cache(maxsize=8)
def sl2_elements(p: int) -> tuple[tuple[int, int, int, int], ...]:
    """All of SL2(p) in lexicographic order."""
    if not is_prime(p):
        raise ParameterError(f"{p} is not prime")
    if p * (p * p - 1) > 10**7:
        raise CapExceeded(f"|SL2({p})| too large to enumerate")
    out = []
    for a in range(p):
        for b in range(p):
            for c in range(p):
                if a:
                    out.append((a, b, c, (1 + b * c) * pow(a, -1, p) % p))
                elif b * c % p == p - 1:
                    out.extend((0, b, c, d) for d in range(p))
    return tuple(sorted(out))


@dataclass
class PermQuotient:
    """A homomorphism ``Z/k * Z/k -> H`` given by the images ``a``, ``b``.

    ``elements`` is the subgroup generated by ``a`` and ``b``, computed by
    breadth-first search from the identity; it is never assumed.
    """

    k: int
    description: str
    a: Hashable
    b: Hashable
    compose: Callable = field(repr=False)
    cap: int = GROUP_CAP
    elements: list = field(init=False, repr=False)
    identity: Hashable = field(init=False, repr=False)

    def __post_init__(self):
        for name, g in (("a", self.a), ("b", self.b)):
            o = element_order(g, self.compose)
            if o != self.k:
                raise OrderMismatch(f"order({name}) = {o}, expected {self.k}")
        e = self.a
        for _ in range(self.k - 1):
            e = self.compose(e, self.a)
        self.identity = e
        seen = {e}
        order = [e]
        for h in order:
            for g in (self.a, self.b):
                x = self.compose(h, g)
                if x not in seen:
                    if len(order) >= self.cap:
                        raise CapExceeded(f"generated subgroup exceeds cap {self.cap}")
                    seen.add(x)
                    order.append(x)
        self.elements = order

    @property
    def order(self) -> int:
        return len(self.elements)

    def evaluate(self, word) -> Hashable:
        """Image of a syllable word over letters 0 -> a, 1 -> b."""
        inv_a = self.power(self.a, self.k - 1)
        inv_b = self.power(self.b, self.k - 1)
        x = self.identity
        for letter, e in word:
            g = (self.a, self.b)[letter] if e > 0 else (inv_a, inv_b)[letter]
            for _ in range(abs(e) % self.k):
                x = self.compose(x, g)
        return x

    def power(self, g, n: int):
        x = self.identity
        for _ in range(n % self.k):
            x = self.compose(x, g)
        return x

    def digest(self) -> str:
        return f"{self.description}|k={self.k}|a={self.a}|b={self.b}"


def dihedral_quotient(l: int) -> PermQuotient:
    """``x -> a``, ``y -> b`` with ``a``, ``b`` reflections whose product has order ``l``.

    Acts on ``Z/2l`` by ``a: i -> -i`` and ``b: i -> 2 - i`` so that it is
    faithful for every ``l >= 2`` (the group has order ``2l``).
    """
    if l < 2:
        raise ParameterError(f"dihedral order parameter must be >= 2, got {l}")
    n = 2 * l
    a = tuple((-i) % n for i in range(n))
    b = tuple((2 - i) % n for i in range(n))
    return PermQuotient(2, f"D{l}", a, b, perm_mul)


def cyclic_quotient(k: int) -> PermQuotient:
    """Both generators to the same generator of ``Z/k``."""
    g = tuple((i + 1) % k for i in range(k))
    return PermQuotient(k, f"C{k}", g, g, perm_mul)


def sl2_quotient(p: int, k: int, a, b) -> PermQuotient:
    return PermQuotient(k, f"SL2({p})", tuple(a), tuple(b), sl2_multiplier(p))
