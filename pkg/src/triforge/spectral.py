"""Adjacency spectra, the normalised Laplacian gap and exact inertia certificates.

Two tiers are used.  Up to ``EXACT_CAP`` vertices every decision is made by
exact symmetric elimination over the integers, so boundary cases such as an
eigenvalue sitting exactly at ``k/2`` are classified correctly.  Above that
(up to ``DENSE_CAP``) a dense ``eigh`` with a residual-based error bound is
reported, and the caller decides what to do with it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import CapExceeded, NotConnected, NotRegular, ParameterError
from .graphs import MultiGraph, connectivity_and_bipartition

DENSE_CAP = 4096
EXACT_CAP = 512
DEFAULT_TOL = 1e-8

CERTIFIED_TRUE = "CertifiedTrue"
CERTIFIED_FALSE = "CertifiedFalse"
FLOAT_ONLY = "FloatOnly"


@dataclass(frozen=True)
class SpectrumReport:
    """Ascending adjacency eigenvalues, each within ``error_bound`` of the truth."""

    eigenvalues: np.ndarray
    error_bound: float
    k: int | None

    def count_above(self, shift: float) -> int:
        """Eigenvalues above ``shift``; refuses when one lies within the error bound."""
        gap = np.abs(self.eigenvalues - shift)
        if np.any(gap <= self.error_bound):
            raise ValueError(f"an eigenvalue lies within {self.error_bound:g} of {shift}")
        return int(np.sum(self.eigenvalues > shift))


@dataclass(frozen=True)
class InertiaCertificate:
    shift: Fraction
    n_pos: int
    n_zero: int
    n_neg: int
    method: str = "bareiss-ldl"


@dataclass(frozen=True)
class Certification:
    """Outcome of an expansion or Ramanujan check.

    ``status`` is one of ``CertifiedTrue``, ``CertifiedFalse`` or ``FloatOnly``.
    For ``CertifiedFalse`` of the expansion check ``reason`` is ``boundary``
    (an eigenvalue sits exactly on the threshold) or ``below``.
    """

    status: str
    reason: str | None = None
    estimate: float | None = None
    error_bound: float | None = None
    inertia: InertiaCertificate | None = None


def adjacency_spectrum(
    g: MultiGraph, tol: float = DEFAULT_TOL, dense_cap: int = DENSE_CAP
) -> SpectrumReport:
    """Full symmetric eigensolve of the adjacency matrix.

    The error bound combines the residual ``A V - V diag(w)`` with the loss of
    orthogonality of ``V`` and a rounding allowance for forming the residual.
    """
    if g.n > dense_cap:
        raise CapExceeded(f"{g.n} vertices exceeds dense cap {dense_cap}")
    a = g.adjacency_matrix().astype(np.float64)
    if g.n == 0:
        return SpectrumReport(np.zeros(0), 0.0, g.regular_degree())
    w, v = np.linalg.eigh(a)
    resid = np.linalg.norm(a @ v - v * w, ord="fro")
    ortho = np.linalg.norm(v.T @ v - np.eye(g.n), ord="fro")
    eps = np.finfo(np.float64).eps
    anorm = np.linalg.norm(a, ord="fro")
    eta = resid / np.sqrt(max(1.0 - ortho, 0.5)) + ortho * anorm + 4 * g.n * eps * anorm
    if eta > tol:
        raise ValueError(f"eigenvalue error bound {eta:g} exceeds tolerance {tol:g}")
    return SpectrumReport(w, float(eta), g.regular_degree())


def _require_connected_regular(g: MultiGraph) -> int:
    k = g.regular_degree()
    if k is None:
        raise NotRegular("graph is not regular")
    if k == 0 or not connectivity_and_bipartition(g)[0]:
        raise NotConnected("graph is not connected")
    return k


def lambda1(g: MultiGraph, tol: float = DEFAULT_TOL) -> tuple[float, float]:
    """Smallest positive eigenvalue of ``I - A/k`` and its error bound."""
    k = _require_connected_regular(g)
    if g.n == 1:
        raise ParameterError("a single vertex has no positive Laplacian eigenvalue")
    rep = adjacency_spectrum(g, tol)
    # connected: k is a simple eigenvalue, so the second largest is mu_2
    mu2 = rep.eigenvalues[-2]
    return 1.0 - mu2 / k, rep.error_bound / k


def inertia(
    a: Sequence[Sequence[int]] | np.ndarray, shift=0, exact_cap: int = EXACT_CAP
) -> InertiaCertificate:
    """Exact eigenvalue counts of the integer symmetric ``a`` relative to ``shift``.

    Works on ``den*a - num*I`` with fraction-free (Bareiss) symmetric
    elimination.  The signs of consecutive pivot ratios are the signs of the
    diagonal of an LDL^T congruence, which by Sylvester's law give the
    inertia.  When the remaining diagonal is zero but the block is not, the
    congruence ``row_i += row_j, col_i += col_j`` creates the pivot ``2*a_ij``.
    """
    shift = Fraction(shift)
    arr = np.asarray(a)
    n = arr.shape[0] if arr.ndim == 2 else 0
    if arr.ndim != 2 or arr.shape != (n, n):
        raise ParameterError("inertia needs a square matrix")
    if n > exact_cap:
        raise CapExceeded(f"dimension {n} exceeds exact cap {exact_cap}")
    if not np.array_equal(arr, arr.T):
        raise ParameterError("matrix is not symmetric")
    num, den = shift.numerator, shift.denominator
    m = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            m[i, j] = den * int(arr[i, j]) - (num if i == j else 0)

    pos = neg = 0
    prev = 1
    while m.shape[0]:
        size = m.shape[0]
        diag = [t for t in range(size) if m[t, t] != 0]
        if diag:
            piv = diag[0]
        else:
            nz = np.argwhere(m != 0)
            if len(nz) == 0:
                break
            i, j = (int(x) for x in nz[0])
            m[i, :] += m[j, :]
            m[:, i] += m[:, j]
            piv = i
        if piv:
            perm = [piv] + [t for t in range(size) if t != piv]
            m = m[np.ix_(perm, perm)]
        p = m[0, 0]
        if (p > 0) == (prev > 0):
            pos += 1
        else:
            neg += 1
        c = m[0, 1:]
        m = (p * m[1:, 1:] - np.outer(c, c)) // prev
        prev = p
    return InertiaCertificate(shift, pos, n - pos - neg, neg)


def certify_expansive(
    g: MultiGraph, exact_cap: int = EXACT_CAP, dense_cap: int = DENSE_CAP,
    tol: float = DEFAULT_TOL,
) -> Certification:
    """Decide ``lambda_1 > 1/2``, i.e. every eigenvalue except ``k`` is below ``k/2``."""
    k = _require_connected_regular(g)
    if g.n <= exact_cap:
        cert = inertia(g.adjacency_matrix(), Fraction(k, 2), exact_cap)
        if cert.n_pos == 1 and cert.n_zero == 0:
            return Certification(CERTIFIED_TRUE, inertia=cert)
        reason = "boundary" if cert.n_pos == 1 else "below"
        return Certification(CERTIFIED_FALSE, reason=reason, inertia=cert)
    if g.n <= dense_cap:
        value, bound = lambda1(g, tol)
        return Certification(FLOAT_ONLY, estimate=value, error_bound=bound)
    raise CapExceeded(f"{g.n} vertices exceeds dense cap {dense_cap}")


def ramanujan_margin(k: int) -> float:
    """The Ramanujan lower bound ``1 - 2 sqrt(k-1)/k`` on ``lambda_1``."""
    return 1.0 - 2.0 * np.sqrt(k - 1) / k


def ramanujan_implies_expansive(k: int) -> bool:
    # 1 - 2 sqrt(k-1)/k > 1/2  <=>  k^2 - 16k + 16 > 0 (k >= 2)
    return k * k - 16 * k + 16 > 0


def certify_ramanujan(
    g: MultiGraph, exact_cap: int = EXACT_CAP, dense_cap: int = DENSE_CAP,
    tol: float = DEFAULT_TOL,
) -> Certification:
    """Every eigenvalue with ``mu^2 > 4(k-1)`` must be ``+k`` or ``-k``.

    ``k = 2`` is Ramanujan by convention (all eigenvalues lie on the boundary).
    """
    k = _require_connected_regular(g)
    if k == 2:
        return Certification(CERTIFIED_TRUE, reason="k=2 convention")
    bipartite = connectivity_and_bipartition(g)[1] is not None
    extremal = 2 if bipartite else 1
    if g.n <= exact_cap:
        a = g.adjacency_matrix()
        cert = inertia(a @ a - 4 * (k - 1) * np.eye(g.n, dtype=np.int64), 0, exact_cap)
        if cert.n_pos == extremal:
            return Certification(CERTIFIED_TRUE, inertia=cert)
        return Certification(CERTIFIED_FALSE, reason="nontrivial eigenvalue too large", inertia=cert)
    if g.n <= dense_cap:
        rep = adjacency_spectrum(g, tol)
        w = rep.eigenvalues
        inner = w[1:-1] if bipartite else w[:-1]
        return Certification(
            FLOAT_ONLY, estimate=float(np.max(np.abs(inner))), error_bound=rep.error_bound
        )
    raise CapExceeded(f"{g.n} vertices exceeds dense cap {dense_cap}")
