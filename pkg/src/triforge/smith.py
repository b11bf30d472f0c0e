"""Smith normal form over the integers and abelianisation of finite presentations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import CapExceeded, ParameterError

SNF_CAP = 4_000_000  # matrix entries

Word = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Presentation:
    """Finite presentation; relators are words of ``(generator, exponent)`` syllables."""

    generator_count: int
    relators: tuple[Word, ...]

    def __post_init__(self):
        for w in self.relators:
            for g, e in w:
                if not 0 <= g < self.generator_count:
                    raise ParameterError(f"generator index {g} out of range")
                if e == 0:
                    raise ParameterError("zero exponent in relator")

    def exponent_matrix(self) -> list[list[int]]:
        rows = []
        for w in self.relators:
            row = [0] * self.generator_count
            for g, e in w:
                row[g] += e
            rows.append(row)
        return rows


def smith_normal_form(m: Sequence[Sequence[int]], cap: int = SNF_CAP) -> list[int]:
    """Invariant factors ``d1 | d2 | ...`` (``min(rows, cols)`` of them, zeros last).

    >>> smith_normal_form([[2, 0], [0, 3]])
    [1, 6]
    """
    a = [[int(x) for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if any(len(r) != cols for r in a):
        raise ParameterError("ragged matrix")
    if rows * cols > cap:
        raise CapExceeded(f"{rows}x{cols} matrix exceeds SNF cap of {cap} entries")
    size = min(rows, cols)
    for t in range(size):
        while True:
            best = None
            for i in range(t, rows):
                row = a[i]
                for j in range(t, cols):
                    x = row[j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
                        if best[0] == 1:
                            break
                if best is not None and best[0] == 1:
                    break
            if best is None:
                return [abs(a[i][i]) for i in range(t)] + [0] * (size - t)
            _, i, j = best
            a[t], a[i] = a[i], a[t]
            if j != t:
                for row in a:
                    row[t], row[j] = row[j], row[t]
            piv = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                f = a[i][t] // piv
                if f:
                    ri, rt = a[i], a[t]
                    for j in range(t, cols):
                        ri[j] -= f * rt[j]
                if a[i][t]:
                    dirty = True
            rt = a[t]
            for j in range(t + 1, cols):
                f = rt[j] // piv
                if f:
                    for row in a[t:]:
                        row[j] -= f * row[t]
                if rt[j]:
                    dirty = True
            if dirty:
                continue
            # pivot must divide the rest of the block
            bad = next(
                (i for i in range(t + 1, rows) if any(a[i][j] % piv for j in range(t + 1, cols))),
                None,
            )
            if bad is None:
                break
            rt, rb = a[t], a[bad]
            for j in range(t, cols):
                rt[j] += rb[j]
    return [abs(a[i][i]) for i in range(size)]


def abelianization(pres: Presentation) -> tuple[int, list[int]]:
    """``(free_rank, torsion)`` of the abelianised group.

    >>> abelianization(Presentation(3, (((0, 2),), ((1, 2),), ((2, 2),))))
    (0, [2, 2, 2])
    """
    # zero and repeated rows do not change the relation lattice
    rows = sorted({tuple(r) for r in pres.exponent_matrix() if any(r)})
    factors = smith_normal_form(rows) if rows else []
    rank = sum(1 for d in factors if d)
    return pres.generator_count - rank, [d for d in factors if d > 1]
