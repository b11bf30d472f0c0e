"""Schreier generators for kernels of ``Z/k * Z/k -> H`` and the presentations they give.

Words are tuples of syllables ``(letter, exponent)``.  Inside a pair
quotient the letters are 0 and 1 (the two free factors); in an emitted
presentation they are the generator indices 0, 1, 2 of ``x1, x2, x3``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ..errors import MixedK, ParameterError
from ..smith import Presentation, Word, abelianization
from .groups import PermQuotient, dihedral_quotient


def free_reduce(syllables: Iterable[tuple[int, int]]) -> Word:
    out: list[list[int]] = []
    for g, e in syllables:
        if e == 0:
            continue
        if out and out[-1][0] == g:
            out[-1][1] += e
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([g, e])
    return tuple((g, e) for g, e in out)


def _mod_exponent(e: int, k: int) -> int:
    r = e % k
    return r - k if r > k // 2 else r


def reduce_in_free_product(word: Word, k: int) -> Word:
    """Normal form in the free product of copies of ``Z/k``.

    Exponents are taken mod ``k`` into ``(-k/2, k/2]``; syllables that vanish
    let their neighbours merge.
    """
    out: list[list[int]] = []
    for g, e in word:
        if out and out[-1][0] == g:
            out[-1][1] = _mod_exponent(out[-1][1] + e, k)
            if out[-1][1] == 0:
                out.pop()
        else:
            e = _mod_exponent(e, k)
            if e:
                out.append([g, e])
    return tuple((g, e) for g, e in out)


def cyclically_reduce(word: Word, k: int) -> Word:
    w = list(reduce_in_free_product(word, k))
    while len(w) > 1 and w[0][0] == w[-1][0]:
        first, last = w.pop(0), w.pop()
        e = _mod_exponent(first[1] + last[1], k)
        if e:
            w.insert(0, (first[0], e))
    return tuple(w)


def inverse_word(word: Word) -> Word:
    return tuple((g, -e) for g, e in reversed(word))


def transversal(pq: PermQuotient) -> dict:
    """Words ``t(h)`` with ``phi(t(h)) = h`` from a BFS tree over ``a^{+-1}, b^{+-1}``."""
    letters = [(0, 1), (1, 1), (0, -1), (1, -1)]
    images = [pq.a, pq.b, pq.power(pq.a, -1), pq.power(pq.b, -1)]
    words = {pq.identity: ()}
    queue = [pq.identity]
    for h in queue:
        for (g, e), s in zip(letters, images):
            x = pq.compose(h, s)
            if x not in words:
                words[x] = words[h] + ((g, e),)
                queue.append(x)
    if len(words) != pq.order:
        raise AssertionError("transversal does not cover the quotient")
    return words


def schreier_generators(pq: PermQuotient) -> list[Word]:
    """Generators ``t(h) s t(h*phi(s))^-1`` of ``ker(phi)``, reduced in ``Z/k * Z/k``.

    Freely trivial words (tree edges) and words trivial in the free product
    are dropped, as are repeats; order follows the transversal.
    """
    t = transversal(pq)
    out: list[Word] = []
    seen = set()
    for h in pq.elements:
        for letter, s in ((0, pq.a), (1, pq.b)):
            w = free_reduce(t[h] + ((letter, 1),) + inverse_word(t[pq.compose(h, s)]))
            if not w:
                continue
            w = reduce_in_free_product(w, pq.k)
            if w and w not in seen:
                seen.add(w)
                out.append(w)
    return out


def relabel(word: Word, i: int, j: int) -> Word:
    return tuple(((i, j)[g], e) for g, e in word)


def emit_presentation(
    k: int, pq12: PermQuotient, pq13: PermQuotient, pq23: PermQuotient
) -> Presentation:
    """Presentation of ``G/K`` with ``G = <x1, x2, x3 | x_i^k>`` and ``K`` the
    normal closure of the three pair kernels."""
    pairs = ((pq12, 0, 1), (pq13, 0, 2), (pq23, 1, 2))
    if any(pq.k != k for pq, _, _ in pairs):
        raise MixedK("all three quotients must use the same k")
    relators: list[Word] = [((g, k),) for g in range(3)]
    seen = set(relators)
    for pq, i, j in pairs:
        for w in schreier_generators(pq):
            rw = relabel(w, i, j)
            if rw not in seen:
                seen.add(rw)
                relators.append(rw)
    return Presentation(3, tuple(relators))


def classical_presentation(l: int, m: int, r: int) -> Presentation:
    """``<x1,x2,x3 | x_i^2, (x1x2)^l, (x2x3)^m, (x1x3)^r>`` written literally."""
    def power_of_product(i, j, n):
        return tuple(s for _ in range(n) for s in ((i, 1), (j, 1)))

    relators = [((g, 2),) for g in range(3)]
    relators += [power_of_product(0, 1, l), power_of_product(1, 2, m), power_of_product(0, 2, r)]
    return Presentation(3, tuple(relators))


@dataclass(frozen=True)
class ClassicalCheck:
    l: int
    m: int
    r: int
    emitted: tuple[int, tuple[int, ...]]
    literal: tuple[int, tuple[int, ...]]
    relator_count: int
    relators_trivial: bool

    @property
    def passed(self) -> bool:
        return self.emitted == self.literal and self.relators_trivial


def classical_check(l: int, m: int, r: int) -> ClassicalCheck:
    """Compare the Schreier presentation from dihedral quotients with the
    reflection triangle group presentation through their abelianisations."""
    if min(l, m, r) < 2:
        raise ParameterError(f"l, m, r must all be >= 2, got {(l, m, r)}")
    d12, d13, d23 = dihedral_quotient(l), dihedral_quotient(r), dihedral_quotient(m)
    trivial = all(
        pq.evaluate(w) == pq.identity for pq in (d12, d13, d23) for w in schreier_generators(pq)
    )
    pres = emit_presentation(2, d12, d13, d23)
    ab_e = abelianization(pres)
    ab_l = abelianization(classical_presentation(l, m, r))
    return ClassicalCheck(
        l, m, r,
        (ab_e[0], tuple(ab_e[1])),
        (ab_l[0], tuple(ab_l[1])),
        len(pres.relators),
        trivial,
    )


def format_presentation(pres: Presentation, k: int) -> str:
    """Text form: ``gens 3 k <k>`` then one relator per line of ``x<i>^<e>`` tokens."""
    lines = [f"gens {pres.generator_count} k {k}"]
    for w in pres.relators:
        lines.append(" ".join(f"x{g + 1}^{e}" for g, e in w))
    return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> tuple[Presentation, int]:
    rows = text.rstrip("\n").split("\n")
    head = rows[0].split()
    if len(head) != 4 or head[0] != "gens" or head[2] != "k":
        raise ParameterError(f"bad presentation header {rows[0]!r}")
    n, k = int(head[1]), int(head[3])
    relators = []
    for row in rows[1:]:
        word = []
        for tok in row.split():
            g, e = tok.split("^")
            if not g.startswith("x"):
                raise ParameterError(f"bad token {tok!r}")
            word.append((int(g[1:]) - 1, int(e)))
        relators.append(tuple(word))
    return Presentation(n, tuple(relators)), k

