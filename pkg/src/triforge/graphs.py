"""Finite multigraphs: Cayley and coset graph builders, girth, bipartiteness.

Conventions
-----------
* Loops count 2 towards the degree of their vertex, parallel edges count
  separately.  A loop is a circuit of length 1 and a pair of parallel edges
  a circuit of length 2, so ``girth`` is defined for every multigraph.
* Cayley graphs use left multiplication: the generator ``s`` joins ``h`` to
  ``s*h``.  Coset graphs use left cosets ``h<a>`` and ``h<b>``; the group
  acts on them by left multiplication.
"""

from __future__ import annotations

import math
import warnings
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Hashable, Sequence

import numpy as np

from .errors import ClosureViolation, NonSymmetricGenerators, OrderMismatch, ParameterError

INFINITE = math.inf


@dataclass(frozen=True)
class Bipartition:
    color: tuple[int, ...]

    def classes(self) -> tuple[list[int], list[int]]:
        zero = [v for v, c in enumerate(self.color) if c == 0]
        one = [v for v, c in enumerate(self.color) if c == 1]
        return zero, one


@dataclass(eq=False)
class MultiGraph:
    """Undirected multigraph on vertices ``0..n-1``.

    ``edges`` is an ``(m, 2)`` integer array with ``u <= v`` in each row,
    sorted lexicographically; repeated rows are parallel edges.

    ``orbit_reps`` lists vertices meeting every orbit of a known automorphism
    group; girth search only needs to start from these.
    """

    n: int
    edges: np.ndarray
    declared_degree: int | None = None
    is_vertex_transitive: bool = False
    orbit_reps: tuple[int, ...] | None = None
    _adj: list[list[int]] | None = field(default=None, repr=False)

    def __post_init__(self):
        e = np.asarray(self.edges, dtype=np.int64).reshape(-1, 2)
        if e.size and (e.min() < 0 or e.max() >= self.n):
            raise ParameterError("edge endpoint outside [0, n)")
        e = np.sort(e, axis=1)
        order = np.lexsort((e[:, 1], e[:, 0]))
        self.edges = e[order]
        self.edges.setflags(write=False)
        if self.declared_degree is not None:
            deg = self.degrees()
            if not np.all(deg == self.declared_degree):
                raise ParameterError(
                    f"declared degree {self.declared_degree} but degrees range "
                    f"{deg.min()}..{deg.max()}"
                )

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> np.ndarray:
        return np.bincount(self.edges.ravel(), minlength=self.n)

    def regular_degree(self) -> int | None:
        deg = self.degrees()
        if self.n == 0:
            return 0
        return int(deg[0]) if np.all(deg == deg[0]) else None

    def adjacency_lists(self) -> list[list[int]]:
        """Neighbour lists with multiplicity; a loop appears twice."""
        if self._adj is None:
            adj: list[list[int]] = [[] for _ in range(self.n)]
            for u, v in self.edges.tolist():
                adj[u].append(v)
                adj[v].append(u)
            self._adj = adj
        return self._adj

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        np.add.at(a, (self.edges[:, 0], self.edges[:, 1]), 1)
        np.add.at(a, (self.edges[:, 1], self.edges[:, 0]), 1)
        return a

    def has_loop(self) -> bool:
        return bool(np.any(self.edges[:, 0] == self.edges[:, 1]))

    def has_parallel_edges(self) -> bool:
        if self.m < 2:
            return False
        return bool(np.any(np.all(self.edges[1:] == self.edges[:-1], axis=1)))


# -- builders --------------------------------------------------------------

def pair_half_edges(generators: Sequence, invert: Callable) -> list[int]:
    """Match every generator index with an index of its inverse.

    Copies of an involution are matched among themselves; a leftover copy is
    matched with itself and contributes a single edge ``{h, s*h}``.
    """
    positions: dict = {}
    for i, s in enumerate(generators):
        positions.setdefault(s, []).append(i)
    partner = [-1] * len(generators)
    for s, idx in positions.items():
        inv = invert(s)
        if inv not in positions:
            raise NonSymmetricGenerators(f"inverse of generator {s!r} missing")
        if inv == s:
            for x, y in zip(idx[0::2], idx[1::2]):
                partner[x], partner[y] = y, x
            if len(idx) % 2:
                partner[idx[-1]] = idx[-1]
        else:
            jdx = positions[inv]
            if len(idx) != len(jdx):
                raise NonSymmetricGenerators(f"multiplicity of {s!r} and its inverse differ")
            for x, y in zip(idx, jdx):
                partner[x], partner[y] = y, x
    return partner


def graph_from_half_edges(
    targets: np.ndarray, partner: Sequence[int], **flags
) -> MultiGraph:
    """Graph whose half-edge ``(h, i)`` points at ``targets[h, i]``."""
    targets = np.asarray(targets, dtype=np.int64)
    n = targets.shape[0]
    src = np.arange(n, dtype=np.int64)
    chunks = []
    for i, j in enumerate(partner):
        t = targets[:, i]
        if i < j:
            chunks.append(np.stack([src, t], axis=1))
        elif i == j:
            if np.any(t == src):
                raise NonSymmetricGenerators("an unpaired identity generator gives half a loop")
            keep = src < t
            chunks.append(np.stack([src[keep], t[keep]], axis=1))
    edges = np.concatenate(chunks) if chunks else np.zeros((0, 2), dtype=np.int64)
    return MultiGraph(n, edges, **flags)


def cayley_graph(
    elements: Sequence[Hashable],
    generators: Sequence[Hashable],
    compose: Callable,
    invert: Callable,
) -> MultiGraph:
    """Cayley graph with edges ``{h, s*h}``, one per inverse pair of generators."""
    index = {h: i for i, h in enumerate(elements)}
    partner = pair_half_edges(generators, invert)
    targets = np.empty((len(elements), len(generators)), dtype=np.int64)
    for hi, h in enumerate(elements):
        for si, s in enumerate(generators):
            t = index.get(compose(s, h))
            if t is None:
                raise ClosureViolation(f"{s!r} * {h!r} is not among the elements")
            targets[hi, si] = t
    return graph_from_half_edges(
        targets,
        partner,
        declared_degree=len(generators),
        is_vertex_transitive=True,
        orbit_reps=(0,) if elements else (),
    )


def element_order(x, compose: Callable, limit: int = 10**7) -> int:
    """Smallest ``n >= 1`` with ``x**n`` the identity."""
    y, n = compose(x, x), 1
    while y != x:
        y, n = compose(y, x), n + 1
        if n > limit:
            raise ParameterError("element order exceeds limit")
    return n


def generated_subgroup(gens: Sequence, compose: Callable) -> set:
    found = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                x = compose(h, g)
                if x not in found:
                    found.add(x)
                    nxt.append(x)
        frontier = nxt
    return found


def coset_graph(k: int, a, b, elements: Sequence, compose: Callable) -> MultiGraph:
    """Quotient of the Bass-Serre tree of ``Z/k * Z/k`` by the kernel of ``x -> a, y -> b``.

    Vertices are the left cosets ``h<a>`` (colour 0, listed first) and ``h<b>``
    (colour 1); every element ``h`` contributes the edge ``h<a> -- h<b>``.
    """
    for name, g in (("a", a), ("b", b)):
        o = element_order(g, compose)
        if o != k:
            raise OrderMismatch(f"order({name}) = {o}, expected {k}")
    index = {h: i for i, h in enumerate(elements)}
    if len(index) != len(elements):
        raise ParameterError("duplicate group elements")
    if len(generated_subgroup([a, b], compose)) != len(elements):
        warnings.warn("a and b do not generate the given group", stacklevel=2)

    def coset_ids(g) -> tuple[list[int], int]:
        ids = [-1] * len(elements)
        count = 0
        for i, h in enumerate(elements):
            if ids[i] >= 0:
                continue
            x = h
            for _ in range(k):
                j = index.get(x)
                if j is None:
                    raise ClosureViolation(f"{x!r} is not among the elements")
                ids[j] = count
                x = compose(x, g)
            count += 1
        return ids, count

    ca, na = coset_ids(a)
    cb, _ = coset_ids(b)
    edges = np.array([[u, na + v] for u, v in zip(ca, cb)], dtype=np.int64).reshape(-1, 2)
    n_vertices = na + (max(cb) + 1 if cb else 0)
    return MultiGraph(
        n_vertices, edges, declared_degree=k, orbit_reps=(0, na) if elements else ()
    )


# -- invariants ------------------------------------------------------------

def _root_girth(adj: list[list[int]], root: int, best: float) -> float:
    dist = {root: 0}
    parent = {root: -1}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        du = dist[u]
        if 2 * du + 1 >= best:
            break
        for w in adj[u]:
            dw = dist.get(w)
            if dw is None:
                dist[w] = du + 1
                parent[w] = u
                queue.append(w)
            elif w != parent[u]:
                best = min(best, du + dw + 1)
    return best


def girth(g: MultiGraph, roots: Sequence[int] | None = None) -> float:
    """Length of the shortest circuit; ``math.inf`` for a forest.

    Starts a pruned BFS from every vertex unless ``roots`` is given or the
    graph records orbit representatives.
    """
    if g.has_loop():
        return 1
    if g.has_parallel_edges():
        return 2
    if roots is None:
        roots = g.orbit_reps if g.orbit_reps is not None else range(g.n)
    adj = g.adjacency_lists()
    best = INFINITE
    for r in roots:
        best = _root_girth(adj, r, best)
        if best == 3:
            break
    return int(best) if best != INFINITE else INFINITE


def connectivity_and_bipartition(g: MultiGraph) -> tuple[bool, Bipartition | None]:
    adj = g.adjacency_lists()
    color = [-1] * g.n
    components = 0
    bipartite = True
    for s in range(g.n):
        if color[s] >= 0:
            continue
        components += 1
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    bipartite = False
    return components <= 1, (Bipartition(tuple(color)) if bipartite else None)


def is_connected(g: MultiGraph) -> bool:
    return connectivity_and_bipartition(g)[0]


# -- edge-list format ------------------------------------------------------

def to_edgelist(g: MultiGraph) -> str:
    """Header ``n m k bipartite_flag`` then one ``u v`` line per edge.

    ``k`` is the common degree, or -1 when the graph is not regular.
    """
    k = g.regular_degree()
    bip = connectivity_and_bipartition(g)[1] is not None
    lines = [f"{g.n} {g.m} {-1 if k is None else k} {int(bip)}"]
    lines += [f"{u} {v}" for u, v in g.edges.tolist()]
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> MultiGraph:
    rows = text.split("\n")
    try:
        n, m, k, bip = (int(t) for t in rows[0].split())
        edges = [tuple(int(t) for t in r.split()) for r in rows[1 : 1 + m]]
    except ValueError as exc:
        raise ParameterError(f"malformed edge list: {exc}") from None
    if len(edges) != m or any(len(e) != 2 for e in edges):
        raise ParameterError("edge count does not match header")
    g = MultiGraph(n, np.array(edges, dtype=np.int64).reshape(-1, 2),
                   declared_degree=None if k < 0 else k)
    if (connectivity_and_bipartition(g)[1] is not None) != bool(bip):
        raise ParameterError("bipartite flag disagrees with the edges")
    return g


def fnv1a64(data: bytes) -> int:
    h = 0xCBF29CE484222325
    for byte in data:
        h ^= byte
        h = (h * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return h


def graph_hash(g: MultiGraph) -> str:
    """FNV-1a (64 bit) of the canonical edge-list text, as 16 hex digits."""
    return f"{fnv1a64(to_edgelist(g).encode()):016x}"
