"""LPS quotient graphs ``X^{p,q}`` built from four-square representations of ``p``.

Each quaternion ``x0 + x1 i + x2 j + x3 k`` of norm ``p`` (with ``x0 > 0``
odd) is sent to the matrix ``[[x0 + e x1, x2 + e x3], [-x2 + e x3, x0 - e x1]]``
mod ``q``, where ``e^2 = -1``.  These ``p + 1`` matrices have determinant
``p`` and form an inverse-closed multiset in PGL2(q); the graph is the
Cayley graph on PGL2(q) when ``p`` is a non-residue mod ``q`` (bipartite
case) and on PSL2(q) otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .arith import enumerate_S, is_prime, legendre, sqrt_minus_one
from .errors import ConnectivityFailure, ParameterError, StructuralCheckFailed
from .graphs import (
    MultiGraph,
    connectivity_and_bipartition,
    graph_from_half_edges,
    pair_half_edges,
)
from .projective import (
    DEFAULT_ENUMERATION_CAP,
    ProjMat,
    PslClass,
    canonicalize,
    decode,
    encode,
    inverse_table,
    mul_codes,
    pgl2_elements,
    pgl2_order,
    psl2_class,
)

DEFAULT_DEPTH_CAP = 8


@dataclass(frozen=True)
class LpsParams:
    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if not (is_prime(p) and p % 4 == 1 and p >= 5):
            raise ParameterError(f"p must be a prime >= 5 with p = 1 mod 4, got {p}")
        if not (is_prime(q) and q % 4 == 1):
            raise ParameterError(f"q must be a prime with q = 1 mod 4, got {q}")
        if p == q:
            raise ParameterError("p and q must differ")

    @property
    def k(self) -> int:
        return self.p + 1

    @property
    def legendre_pq(self) -> int:
        return legendre(self.p, self.q)

    @property
    def bipartite(self) -> bool:
        return self.legendre_pq == -1

    @property
    def vertex_count(self) -> int:
        n = pgl2_order(self.q)
        return n if self.bipartite else n // 2


@dataclass(frozen=True)
class LowerBound:
    """Certified lower bound on a girth that was not determined exactly."""

    value: int


@dataclass(eq=False)
class LpsGraph:
    params: LpsParams
    generators: list[ProjMat]
    graph: MultiGraph
    vertex_codes: np.ndarray = field(repr=False)

    @property
    def bipartite(self) -> bool:
        return self.params.bipartite

    def vertex_labels(self) -> list[ProjMat]:
        return [decode(int(c), self.params.q) for c in self.vertex_codes]

    def label_sidecar(self) -> str:
        """One ``a b c d`` line per vertex index."""
        return "".join(f"{m.a} {m.b} {m.c} {m.d}\n" for m in self.vertex_labels())


def generators_mod_q(p: int, q: int) -> list[ProjMat]:
    """Images in PGL2(q) of the ``p + 1`` quaternions, in quaternion order."""
    LpsParams(p, q)
    e = sqrt_minus_one(q).value
    return [
        canonicalize([[x0 + e * x1, x2 + e * x3], [-x2 + e * x3, x0 - e * x1]], q)
        for x0, x1, x2, x3 in enumerate_S(p)
    ]


def build_lps(p: int, q: int, cap: int = DEFAULT_ENUMERATION_CAP) -> LpsGraph:
    """Materialise ``X^{p,q}`` and verify regularity, connectivity and bipartiteness."""
    params = LpsParams(p, q)
    gens = generators_mod_q(p, q)
    elements = pgl2_elements(q, cap)
    if not params.bipartite:
        elements = [m for m in elements if psl2_class(m) is PslClass.SQUARE]
    codes = np.array([encode(m) for m in elements], dtype=np.int64)
    inv = inverse_table(q)
    targets = np.empty((len(codes), len(gens)), dtype=np.int64)
    for i, s in enumerate(gens):
        img = mul_codes(s, codes, inv)
        pos = np.searchsorted(codes, img)
        if np.any(pos >= len(codes)) or np.any(codes[np.minimum(pos, len(codes) - 1)] != img):
            raise StructuralCheckFailed(f"generator {s} leaves the vertex set")
        targets[:, i] = pos
    partner = pair_half_edges(gens, lambda m: m.inverse())
    g = graph_from_half_edges(
        targets, partner, declared_degree=p + 1, is_vertex_transitive=True, orbit_reps=(0,)
    )
    connected, bip = connectivity_and_bipartition(g)
    if not connected:
        raise ConnectivityFailure(f"X^{{{p},{q}}} came out disconnected")
    if (bip is not None) != params.bipartite:
        raise StructuralCheckFailed("bipartiteness disagrees with the Legendre symbol")
    if bip is not None:
        # colour classes must be the two determinant classes
        sq = np.array([psl2_class(m) is PslClass.SQUARE for m in elements])
        col = np.array(bip.color, dtype=bool)
        if not (np.all(col == ~sq) or np.all(col == sq)):
            raise StructuralCheckFailed("colour classes are not the PSL2 cosets")
    return LpsGraph(params, gens, g, codes)


def girth_lazy(p: int, q: int, depth_cap: int = DEFAULT_DEPTH_CAP) -> int | LowerBound:
    """Girth of ``X^{p,q}`` by breadth-first search from the identity.

    Vertices are generated on demand as packed canonical matrices; only the
    explored ball is kept.  The graph is vertex-transitive, so the shortest
    circuit through the identity is a shortest circuit overall.  Expanding
    levels ``0..depth_cap-1`` detects every circuit of length at most
    ``2*depth_cap``; if none closes, ``LowerBound(2*depth_cap)`` is returned.
    """
    LpsParams(p, q)
    if depth_cap < 1:
        raise ParameterError("depth_cap must be positive")
    gens = generators_mod_q(p, q)
    partner = np.array(pair_half_edges(gens, lambda m: m.inverse()), dtype=np.int64)
    inv = inverse_table(q)
    prev = np.zeros(0, dtype=np.int64)
    cur = np.array([encode(ProjMat(1, 0, 0, 1, q))], dtype=np.int64)
    incoming = np.array([-1], dtype=np.int64)
    for d in range(depth_cap):
        back = np.where(incoming >= 0, partner[np.maximum(incoming, 0)], -1)
        new_codes, new_in = [], []
        best = math.inf
        for j, s in enumerate(gens):
            keep = back != j
            img = mul_codes(s, cur[keep], inv)
            if np.any(np.isin(img, prev)):
                best = min(best, 2 * d)
            if np.any(np.isin(img, cur)):
                best = min(best, 2 * d + 1)
            fresh = img[~np.isin(img, prev) & ~np.isin(img, cur)]
            new_codes.append(fresh)
            new_in.append(np.full(len(fresh), j, dtype=np.int64))
        if best < math.inf:
            return int(best)
        nxt = np.concatenate(new_codes)
        order = np.argsort(nxt, kind="stable")
        nxt, nin = nxt[order], np.concatenate(new_in)[order]
        if len(nxt) > 1 and np.any(nxt[1:] == nxt[:-1]):
            return 2 * d + 2
        prev, cur, incoming = cur, nxt, nin
    return LowerBound(2 * depth_cap)


def lps_girth_bound(p: int, q: int) -> float:
    """Guaranteed girth lower bound ``(4/3) log_p q``."""
    LpsParams(p, q)
    return 4.0 / 3.0 * math.log(q) / math.log(p)


def free_rank(g: MultiGraph) -> int:
    """Rank ``E - V + 1`` of the fundamental group of a connected graph."""
    return g.m - g.n + 1


def rank_check(lg: LpsGraph) -> tuple[int, int, bool]:
    """Compare ``E - V + 1`` with the Nielsen-Schreier prediction for index ``V``."""
    g = lg.graph
    computed = free_rank(g)
    predicted = g.n * ((lg.params.p + 1) // 2 - 1) + 1
    return computed, predicted, computed == predicted


def scan_row(p: int, q: int, depth_cap: int = DEFAULT_DEPTH_CAP) -> dict:
    params = LpsParams(p, q)
    gl = girth_lazy(p, q, depth_cap)
    girth_doc = {"lower_bound": gl.value} if isinstance(gl, LowerBound) else {"value": gl}
    gval = gl.value if isinstance(gl, LowerBound) else gl
    return {
        "q": q,
        "legendre": params.legendre_pq,
        "bipartite": params.bipartite,
        "vertices": params.vertex_count,
        "girth": girth_doc,
        "lps_girth_bound": lps_girth_bound(p, q),
        "rotund": gval > 6,
    }


def scan_candidates(p: int, q_min: int, q_max: int) -> list[int]:
    """Primes ``q = 1 mod 4`` in ``[q_min, q_max]`` other than ``p``."""
    if not (is_prime(p) and p % 4 == 1 and p >= 5):
        raise ParameterError(f"p must be a prime >= 5 with p = 1 mod 4, got {p}")
    return [q for q in range(max(q_min, 5), q_max + 1) if q % 4 == 1 and q != p and is_prime(q)]
