"""Rotund / expansive certificates for fillings and triangle-group assembly.

A filling is described operationally by its link graph, the quotient of
the Bass-Serre tree ``T_k`` by the filling subgroup.  It is rotund when the
link has girth greater than 6 and expansive when ``lambda_1 > 1/2``.
Three rotund fillings with the same ``k`` give a triangle complex whose
equilateral hyperbolic triangles have angle ``theta = 2 pi / n`` (``n`` the
smallest girth); if all three are also expansive the resulting group has
property (T).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..errors import MixedK, NotBipartite, NotConnected, NotRegular, StructuralCheckFailed
from ..graphs import (
    MultiGraph,
    coset_graph,
    connectivity_and_bipartition,
    fnv1a64,
    girth,
    graph_hash,
)
from ..lps import (
    DEFAULT_DEPTH_CAP,
    LowerBound,
    LpsGraph,
    LpsParams,
    build_lps,
    generators_mod_q,
    girth_lazy,
)
from ..spectral import (
    CERTIFIED_TRUE,
    DENSE_CAP,
    EXACT_CAP,
    certify_expansive,
    lambda1,
    ramanujan_implies_expansive,
)
from .groups import PermQuotient

CERTIFIED_EXPANSIVE = "CertifiedExpansive"
CERTIFIED_NOT_EXPANSIVE = "CertifiedNotExpansive"
FLOAT_ESTIMATE = "FloatEstimate"
THEORY_BACKED = "TheoryBacked"
UNDETERMINED = "Undetermined"

LPS_CITATION = "LPS-Ramanujan"

REJECTED = "Rejected"
HYPERBOLIC = "Hyperbolic"
HYPERBOLIC_WITH_T = "HyperbolicWithT"

_ANGLE_MARGIN = 1e-9


@dataclass(frozen=True)
class Lambda1Status:
    status: str
    reason: str | None = None
    estimate: float | None = None
    error_bound: float | None = None
    citation: str | None = None

    @property
    def expansive(self) -> bool:
        """Counts towards property (T): exact certificate or theory citation."""
        return self.status in (CERTIFIED_EXPANSIVE, THEORY_BACKED)


@dataclass(frozen=True)
class FillingCertificate:
    k: int
    source: dict
    girth: int | float | LowerBound
    rotund: bool
    lambda1: Lambda1Status
    graph_hash: str

    @property
    def girth_floor(self) -> float:
        """Exact girth, or the certified lower bound."""
        return self.girth.value if isinstance(self.girth, LowerBound) else self.girth


def _is_rotund(g) -> bool:
    value = g.value if isinstance(g, LowerBound) else g
    return value > 6


def _check_link(g: MultiGraph, k: int, extended: bool) -> None:
    if g.regular_degree() != k:
        raise NotRegular(f"link graph is not {k}-regular")
    connected, bip = connectivity_and_bipartition(g)
    if not connected:
        raise NotConnected("link graph is not connected")
    if bip is None and not extended:
        raise NotBipartite("ordinary fillings have bipartite link graphs")


def _spectral_status(
    g: MultiGraph, exact: bool, theory_backed: bool, exact_cap: int, dense_cap: int
) -> Lambda1Status:
    if exact and g.n <= exact_cap:
        c = certify_expansive(g, exact_cap=exact_cap, dense_cap=dense_cap)
        if c.status == CERTIFIED_TRUE:
            return Lambda1Status(CERTIFIED_EXPANSIVE)
        return Lambda1Status(CERTIFIED_NOT_EXPANSIVE, reason=c.reason)
    est = bound = None
    if g.n <= dense_cap:
        est, bound = lambda1(g)
        est, bound = float(est), float(bound)
    if theory_backed:
        return Lambda1Status(THEORY_BACKED, estimate=est, error_bound=bound, citation=LPS_CITATION)
    if est is not None:
        return Lambda1Status(FLOAT_ESTIMATE, estimate=est, error_bound=bound)
    return Lambda1Status(UNDETERMINED)


def certify_filling(
    g: MultiGraph | LpsGraph,
    k: int | None = None,
    *,
    extended: bool = False,
    exact: bool = True,
    source: dict | None = None,
    exact_cap: int = EXACT_CAP,
    dense_cap: int = DENSE_CAP,
) -> FillingCertificate:
    """Certificate for a filling given by its link graph.

    LPS links with ``k >= 15`` that are too large for exact inertia are
    marked ``TheoryBacked``: the Ramanujan bound then forces expansion.
    """
    theory = False
    if isinstance(g, LpsGraph):
        source = source or {"type": "LPS", "p": g.params.p, "q": g.params.q}
        theory = ramanujan_implies_expansive(g.params.k)
        k = g.params.k if k is None else k
        g = g.graph
    if k is None:
        k = g.regular_degree()
        if k is None:
            raise NotRegular("link graph is not regular")
    _check_link(g, k, extended)
    h = graph_hash(g)
    source = source or {"type": "graph", "digest": h}
    gi = girth(g)
    lam = _spectral_status(g, exact, theory, exact_cap, dense_cap)
    return FillingCertificate(k, source, gi, _is_rotund(gi), lam, h)


def certify_lps(
    p: int,
    q: int,
    *,
    exact: bool = True,
    depth_cap: int = DEFAULT_DEPTH_CAP,
    dense_cap: int = DENSE_CAP,
    exact_cap: int = EXACT_CAP,
) -> FillingCertificate:
    """Certificate for ``X^{p,q}``; large graphs are never materialised.

    Above ``dense_cap`` vertices the girth comes from the lazy search and the
    graph hash is taken over the parameter line and generator list.
    """
    params = LpsParams(p, q)
    if not params.bipartite:
        raise NotBipartite(f"X^{{{p},{q}}} is not bipartite (p is a square mod q)")
    if params.vertex_count <= dense_cap:
        return certify_filling(build_lps(p, q), exact=exact, exact_cap=exact_cap, dense_cap=dense_cap)
    gi = girth_lazy(p, q, depth_cap)
    text = f"LPS {p} {q}\n" + "".join(f"{m.a} {m.b} {m.c} {m.d}\n" for m in generators_mod_q(p, q))
    lam = (
        Lambda1Status(THEORY_BACKED, citation=LPS_CITATION)
        if ramanujan_implies_expansive(params.k)
        else Lambda1Status(UNDETERMINED)
    )
    return FillingCertificate(
        params.k,
        {"type": "LPS", "p": p, "q": q},
        gi,
        _is_rotund(gi),
        lam,
        f"{fnv1a64(text.encode()):016x}",
    )


def certify_quotient(pq: PermQuotient, *, extended: bool = True, exact: bool = True) -> FillingCertificate:
    """Certificate for the kernel of ``Z/k * Z/k -> H`` (an extended filling by default)."""
    g = coset_graph(pq.k, pq.a, pq.b, pq.elements, pq.compose)
    digest = f"{fnv1a64(pq.digest().encode()):016x}"
    return certify_filling(
        g, pq.k, extended=extended, exact=exact,
        source={"type": "PermQuotient", "digest": digest, "group": pq.description},
    )


@dataclass(frozen=True)
class TriangleAssembly:
    k: int
    certificates: tuple[FillingCertificate, FillingCertificate, FillingCertificate]
    theta: float
    angle_per_filling: tuple[bool, bool, bool]
    triangle_angle_sum: bool
    verdict: str
    reason: str | None = None
    t_basis: str | None = None
    inputs: tuple[str, ...] = field(default=())


def assemble_triangle(
    c1: FillingCertificate, c2: FillingCertificate, c3: FillingCertificate
) -> TriangleAssembly:
    """Combine three filling certificates into a verdict on the triangle group.

    The angle checks are evaluated in floating point with a small margin and
    cross-checked against their exact integer forms ``girth_i >= n`` and
    ``n > 6``.
    """
    certs = (c1, c2, c3)
    if len({c.k for c in certs}) != 1:
        raise MixedK(f"certificates have different k: {[c.k for c in certs]}")
    girths = [c.girth_floor for c in certs]
    n = min(girths)
    theta = 0.0 if n == math.inf else 2 * math.pi / n
    if n == math.inf:
        angle = (True, True, True)
    else:
        angle = tuple(theta * gi >= 2 * math.pi - _ANGLE_MARGIN for gi in girths)
        if angle != tuple(gi >= n for gi in girths):
            raise StructuralCheckFailed("floating angle check disagrees with integer form")
    tri = 3 * theta < math.pi - _ANGLE_MARGIN
    if tri != (n > 6):
        raise StructuralCheckFailed("triangle angle check disagrees with n > 6")
    inputs = tuple(c.graph_hash for c in certs)
    not_rotund = [i + 1 for i, c in enumerate(certs) if not c.rotund]
    if not_rotund:
        return TriangleAssembly(
            c1.k, certs, theta, angle, tri, REJECTED,
            reason=f"not rotund: filling {', '.join(map(str, not_rotund))}", inputs=inputs,
        )
    if not (all(angle) and tri):
        return TriangleAssembly(
            c1.k, certs, theta, angle, tri, REJECTED, reason="angle condition fails", inputs=inputs
        )
    if all(c.lambda1.expansive for c in certs):
        kinds = {c.lambda1.status for c in certs}
        basis = (
            "certified" if kinds == {CERTIFIED_EXPANSIVE}
            else "theory-backed" if kinds == {THEORY_BACKED}
            else "mixed"
        )
        return TriangleAssembly(c1.k, certs, theta, angle, tri, HYPERBOLIC_WITH_T, t_basis=basis, inputs=inputs)
    return TriangleAssembly(c1.k, certs, theta, angle, tri, HYPERBOLIC, inputs=inputs)


VERDICT_RANK = {REJECTED: 0, HYPERBOLIC: 1, HYPERBOLIC_WITH_T: 2}
