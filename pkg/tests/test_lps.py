import math

import networkx as nx
import numpy as np
import pytest

from triforge.arith import legendre
from triforge.errors import ParameterError
from triforge.graphs import connectivity_and_bipartition, girth
from triforge.lps import (
    LowerBound,
    LpsParams,
    build_lps,
    free_rank,
    generators_mod_q,
    girth_lazy,
    lps_girth_bound,
    rank_check,
    scan_candidates,
    scan_row,
)
from triforge.projective import PslClass, ProjMat, compose, identity, psl2_class


@pytest.mark.parametrize("p, q", [(3, 5), (7, 13), (5, 7), (5, 5), (17, 9), (2, 5)])
def test_params_rejected(p, q):
    with pytest.raises(ParameterError):
        LpsParams(p, q)


def test_params():
    a = LpsParams(17, 5)
    assert (a.k, a.legendre_pq, a.bipartite, a.vertex_count) == (18, -1, True, 120)
    b = LpsParams(17, 13)
    assert (b.legendre_pq, b.bipartite, b.vertex_count) == (1, False, 1092)


def test_generator_example():
    gens = generators_mod_q(5, 13)
    assert len(gens) == 6
    # (1, 2, 0, 0) with eps = 5: [[11, 0], [0, -9]] ~ [[1, 0], [0, 11]]
    assert ProjMat(1, 0, 0, 11, 13) in gens


@pytest.mark.parametrize("p, q", [(5, 13), (17, 5), (13, 17), (17, 13)])
def test_generators_are_symmetric_with_det_class_of_p(p, q):
    gens = generators_mod_q(p, q)
    assert len(gens) == p + 1 == len(set(gens))
    s = set(gens)
    for m in gens:
        assert m.inverse() in s
        assert legendre(m.det(), q) == legendre(p, q)
        assert m != identity(q)


def test_x17_5(x17_5):
    g = x17_5.graph
    assert g.n == 120 and g.m == 120 * 18 // 2
    assert g.regular_degree() == 18
    connected, colour = connectivity_and_bipartition(g)
    assert connected and colour is not None
    assert girth(g) == 4
    assert x17_5.bipartite


def test_x5_13(x5_13):
    g = x5_13.graph
    assert (g.n, g.regular_degree()) == (2184, 6)
    assert not g.has_parallel_edges() and not g.has_loop()
    # independent oracle: networkx girth over the simple graph
    h = nx.Graph()
    h.add_edges_from(g.edges.tolist())
    assert nx.girth(h) == 8
    assert girth(g) == 8
    assert girth_lazy(5, 13) == 8


def test_non_bipartite_case():
    lg = build_lps(17, 13)
    assert lg.graph.n == 1092
    assert connectivity_and_bipartition(lg.graph)[1] is None
    assert all(psl2_class(m) == PslClass.SQUARE for m in lg.vertex_labels())
    assert girth(lg.graph) == girth_lazy(17, 13) == 3


def test_vertex_labels_are_sorted_group_elements(x17_5):
    labels = x17_5.vertex_labels()
    assert labels == sorted(labels)
    assert labels[0] == ProjMat(0, 1, 1, 0, 5)
    assert len(x17_5.label_sidecar().splitlines()) == 120


def test_edges_match_left_multiplication(x17_5):
    labels = x17_5.vertex_labels()
    index = {m: i for i, m in enumerate(labels)}
    expected = sorted(
        tuple(sorted((index[h], index[compose(s, h)])))
        for h in labels
        for s in x17_5.generators
    )
    # every edge is seen once from each end
    got = sorted(map(tuple, x17_5.graph.edges.tolist()))
    assert sorted(got + got) == expected


def test_lazy_girth_caps():
    assert girth_lazy(5, 13, depth_cap=3) == LowerBound(6)
    assert girth_lazy(5, 13, depth_cap=4) == 8
    with pytest.raises(ParameterError):
        girth_lazy(5, 13, depth_cap=0)


@pytest.mark.parametrize("p, q", [(5, 13), (17, 5), (13, 5), (5, 29)])
def test_lazy_matches_materialised(p, q):
    assert girth_lazy(p, q) == girth(build_lps(p, q).graph, roots=None)


def test_rank_formula(x17_5, x5_13):
    for lg in (x17_5, x5_13):
        computed, predicted, ok = rank_check(lg)
        assert ok and computed == predicted == free_rank(lg.graph)
        assert computed == lg.graph.n * ((lg.params.p + 1) // 2 - 1) + 1


def test_girth_bound():
    assert lps_girth_bound(5, 13) == pytest.approx(4 / 3 * math.log(13) / math.log(5))
    assert math.ceil(lps_girth_bound(5, 13)) == 3


def test_scan():
    assert scan_candidates(17, 5, 60) == [5, 13, 29, 37, 41, 53]
    row = scan_row(17, 269)
    assert row["q"] == 269 and row["legendre"] == -1 and row["bipartite"]
    assert row["rotund"] and row["girth"] == {"value": 8}
    assert row["vertices"] == 269 * (269**2 - 1)
    with pytest.raises(ParameterError):
        scan_candidates(7, 5, 60)
