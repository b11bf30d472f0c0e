"""Random quotients ``Z/k * Z/k -> SL2(p)`` and the link graphs of their kernels.

Each trial draws ``a`` and ``b`` uniformly from the elements of order
exactly ``k`` in SL2(p), builds the coset graph for ``H = <a, b>`` and
records girth and ``lambda_1``.  Trial ``t`` uses the generator
``default_rng([seed, t])``, so serial and parallel runs agree exactly.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache

import numpy as np

from ..arith import is_prime
from ..errors import BadDivisibility, EvenK, ParameterError
from ..graphs import coset_graph, girth
from .groups import sl2_elements, sl2_multiplier, sl2_quotient

C_GRID = (0.1, 0.5, 1.0)
LAMBDA_BINS = np.linspace(0.0, 2.0, 41)


@dataclass(frozen=True)
class TrialRecord:
    trial: int
    a: tuple[int, int, int, int]
    b: tuple[int, int, int, int]
    group_order: int
    vertices: int
    edges: int
    regular: bool
    bipartite: bool
    connected: bool
    girth: int
    lambda1: float
    girth_benchmark: float


@dataclass
class VarjuReport:
    p: int
    k: int
    seed: int
    trials: int
    records: list[TrialRecord]
    girth_histogram: dict[int, int] = field(default_factory=dict)
    lambda1_histogram: dict = field(default_factory=dict)
    c_grid: list[dict] = field(default_factory=list)
    size_measure: str = "vertex count"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["girth_histogram"] = {str(g): c for g, c in self.girth_histogram.items()}
        return d


def validate_parameters(p: int, k: int) -> None:
    if not is_prime(p):
        raise ParameterError(f"p = {p} is not prime")
    if k % 2 == 0:
        raise EvenK(f"k must be odd, got {k}")
    if k < 3:
        raise ParameterError(f"k must be at least 3, got {k}")
    if (p - 1) % k and (p + 1) % k:
        raise BadDivisibility(f"k = {k} divides neither p - 1 nor p + 1 for p = {p}")


@lru_cache(maxsize=8)
def order_k_elements(p: int, k: int) -> tuple:
    mul = sl2_multiplier(p)
    one = (1, 0, 0, 1)
    out = []
    for g in sl2_elements(p):
        x, n = g, 1
        while x != one and n <= k:
            x, n = mul(x, g), n + 1
        if x == one and n == k:
            out.append(g)
    return tuple(out)


def _biadjacency_mu2(g, k: int) -> float:
    """Second largest adjacency eigenvalue of a balanced bipartite coset graph.

    The spectrum is plus/minus the singular values of the colour-0 by
    colour-1 block, obtained from ``eigvalsh(B^T B)``.
    """
    half = g.n // 2
    bmat = np.zeros((half, g.n - half))
    np.add.at(bmat, (g.edges[:, 0], g.edges[:, 1] - half), 1.0)
    if bmat.shape[0] < 2:
        return -float(k)
    ev = np.linalg.eigvalsh(bmat.T @ bmat)
    return float(np.sqrt(max(ev[-2], 0.0)))


def run_trial(p: int, k: int, seed: int, trial: int) -> TrialRecord:
    elems = order_k_elements(p, k)
    rng = np.random.default_rng([seed, trial])
    a = elems[int(rng.integers(len(elems)))]
    b = elems[int(rng.integers(len(elems)))]
    pq = sl2_quotient(p, k, a, b)
    g = coset_graph(k, pq.a, pq.b, pq.elements, pq.compose)
    half = g.n // 2
    deg = g.degrees()
    bip = bool(np.all(g.edges[:, 0] < half) and np.all(g.edges[:, 1] >= half))
    mu2 = _biadjacency_mu2(g, k)
    return TrialRecord(
        trial=trial,
        a=a,
        b=b,
        group_order=pq.order,
        vertices=g.n,
        edges=g.m,
        regular=bool(np.all(deg == k)),
        bipartite=bip,
        # H = <a, b> by construction, and the coset graph of a generating pair is connected
        connected=True,
        girth=int(girth(g)),
        lambda1=1.0 - mu2 / k,
        girth_benchmark=math.log(g.n) / (3 * math.log(k - 1)),
    )


def _run_chunk(args) -> list[TrialRecord]:
    p, k, seed, trials = args
    return [run_trial(p, k, seed, t) for t in trials]


def varju_sample(p: int, k: int, seed: int = 0, trials: int = 100, workers: int = 1) -> VarjuReport:
    """Sample ``trials`` random quotients and summarise girth and ``lambda_1``."""
    validate_parameters(p, k)
    if trials < 0:
        raise ParameterError("trials must be nonnegative")
    if not order_k_elements(p, k):
        raise ParameterError(f"SL2({p}) has no elements of order {k}")
    idx = list(range(trials))
    if workers > 1 and trials > 1:
        chunks = [idx[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_run_chunk, [(p, k, seed, c) for c in chunks]))
        records = sorted((r for part in parts for r in part), key=lambda r: r.trial)
    else:
        records = _run_chunk((p, k, seed, idx))
    ghist: dict[int, int] = {}
    for r in records:
        ghist[r.girth] = ghist.get(r.girth, 0) + 1
    lam = np.array([r.lambda1 for r in records])
    counts, _ = np.histogram(lam, bins=LAMBDA_BINS)
    grid = []
    for c in C_GRID:
        thr = 1.0 - k ** (-c)
        grid.append({"c": c, "threshold": thr, "fraction_above": float(np.mean(lam > thr)) if trials else 0.0})
    return VarjuReport(
        p, k, seed, trials, records,
        girth_histogram=dict(sorted(ghist.items())),
        lambda1_histogram={"bin_edges": LAMBDA_BINS.tolist(), "counts": counts.tolist()},
        c_grid=grid,
    )
