import itertools
import math
import warnings

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from triforge.errors import ClosureViolation, NonSymmetricGenerators, OrderMismatch, ParameterError
from triforge.fillings.groups import perm_from_cycles, perm_mul
from triforge.graphs import (
    MultiGraph,
    cayley_graph,
    connectivity_and_bipartition,
    coset_graph,
    element_order,
    fnv1a64,
    from_edgelist,
    generated_subgroup,
    girth,
    graph_hash,
    is_connected,
    to_edgelist,
)


def from_nx(h):
    h = nx.convert_node_labels_to_integers(h)
    return MultiGraph(h.number_of_nodes(), np.array(list(h.edges()), dtype=np.int64))


def zmod(k):
    return (lambda x, y: (x + y) % k), (lambda x: (-x) % k)


def test_cycle_from_z4():
    add, neg = zmod(4)
    g = cayley_graph(list(range(4)), [1, 3], add, neg)
    assert g.n == 4 and g.m == 4
    assert g.regular_degree() == 2
    assert girth(g) == 4
    assert connectivity_and_bipartition(g)[1] is not None


def test_involution_generators():
    add, neg = zmod(2)
    single = cayley_graph([0, 1], [1], add, neg)
    assert single.m == 1 and single.regular_degree() == 1
    assert girth(single) == math.inf
    double = cayley_graph([0, 1], [1, 1], add, neg)
    assert double.m == 2 and girth(double) == 2


def test_missing_inverse():
    add, neg = zmod(5)
    with pytest.raises(NonSymmetricGenerators):
        cayley_graph(list(range(5)), [1], add, neg)


def test_closure_violation():
    add, neg = zmod(6)
    with pytest.raises(ClosureViolation):
        cayley_graph([0, 1, 2], [1, 5], add, neg)


def test_s3_transpositions_give_k33():
    elems = sorted(itertools.permutations(range(3)))
    gens = [(1, 0, 2), (0, 2, 1), (2, 1, 0)]
    inv = lambda p: tuple(sorted(range(3), key=lambda i: p[i]))
    g = cayley_graph(elems, gens, perm_mul, inv)
    assert g.n == 6 and g.m == 9
    assert not g.has_parallel_edges()
    assert girth(g) == 4
    colour = connectivity_and_bipartition(g)[1]
    assert colour is not None
    left, right = colour.classes()
    assert len(left) == len(right) == 3
    assert all((u in left) != (v in left) for u, v in g.edges.tolist())


def test_known_girths():
    assert girth(from_nx(nx.petersen_graph())) == 5
    assert girth(from_nx(nx.complete_graph(4))) == 3
    assert girth(from_nx(nx.cycle_graph(11))) == 11
    assert girth(from_nx(nx.heawood_graph())) == 6
    assert girth(from_nx(nx.path_graph(5))) == math.inf
    assert girth(MultiGraph(1, np.array([[0, 0]]))) == 1
    assert girth(MultiGraph(2, np.array([[0, 1], [1, 0]]))) == 2


@settings(max_examples=40, deadline=None)
@given(st.integers(4, 40), st.integers(0, 2**32 - 1))
def test_girth_matches_networkx(n, seed):
    h = nx.gnm_random_graph(n, min(n * (n - 1) // 2, int(1.3 * n)), seed=seed)
    expected = nx.girth(h)
    assert girth(from_nx(h)) == expected


def test_a4_coset_graph():
    a = perm_from_cycles(4, (0, 1, 2))
    b = perm_from_cycles(4, (1, 2, 3))
    elems = sorted(generated_subgroup([a, b], perm_mul))
    assert len(elems) == 12
    g = coset_graph(3, a, b, elems, perm_mul)
    assert g.n == 8 and g.m == 12
    assert g.regular_degree() == 3
    connected, colour = connectivity_and_bipartition(g)
    assert connected and colour is not None
    assert sorted(colour.classes()[0]) == [0, 1, 2, 3]


@pytest.mark.parametrize("k", [2, 3, 5, 8])
def test_degenerate_cyclic_quotient(k):
    add, _ = zmod(k)
    g = coset_graph(k, 1, 1, list(range(k)), add)
    assert g.n == 2 and g.m == k
    assert g.edges.tolist() == [[0, 1]] * k
    assert girth(g) == 2


def test_coset_graph_checks():
    add, _ = zmod(6)
    with pytest.raises(OrderMismatch):
        coset_graph(3, 1, 2, list(range(6)), add)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        coset_graph(3, 2, 4, list(range(6)), add)
    assert any("generate" in str(w.message) for w in caught)


def test_element_order():
    add, _ = zmod(12)
    assert [element_order(x, add) for x in (0, 1, 2, 3, 4, 6)] == [1, 12, 6, 4, 3, 2]


def test_multigraph_validation():
    with pytest.raises(ParameterError):
        MultiGraph(2, np.array([[0, 2]]))
    with pytest.raises(ParameterError):
        MultiGraph(3, np.array([[0, 1], [1, 2]]), declared_degree=2)
    g = MultiGraph(3, np.array([[2, 1], [0, 1]]))
    assert g.edges.tolist() == [[0, 1], [1, 2]]
    assert g.degrees().tolist() == [1, 2, 1]
    assert g.regular_degree() is None


def test_connectivity():
    assert is_connected(from_nx(nx.petersen_graph()))
    assert not is_connected(MultiGraph(4, np.array([[0, 1], [2, 3]])))


def test_edgelist_roundtrip():
    g = from_nx(nx.petersen_graph())
    text = to_edgelist(g)
    assert text.splitlines()[0] == "10 15 3 0"
    h = from_edgelist(text)
    assert h.n == g.n and np.array_equal(h.edges, g.edges)
    assert to_edgelist(h) == text
    with pytest.raises(ParameterError):
        from_edgelist("3 2 -1 1\n0 1\n")
    with pytest.raises(ParameterError):
        from_edgelist("3 1 -1 0\n0 1\n")  # flag says non-bipartite


def test_fnv1a64_reference_values():
    assert fnv1a64(b"") == 0xCBF29CE484222325
    assert fnv1a64(b"a") == 0xAF63DC4C8601EC8C
    assert fnv1a64(b"foobar") == 0x85944171F73967E8


def test_graph_hash_depends_only_on_edges():
    g = from_nx(nx.cycle_graph(6))
    h = MultiGraph(6, g.edges[::-1].copy())
    assert graph_hash(g) == graph_hash(h)
    assert len(graph_hash(g)) == 16
    assert graph_hash(g) != graph_hash(from_nx(nx.cycle_graph(7)))
