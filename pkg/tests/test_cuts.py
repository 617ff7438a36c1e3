import numpy as np
import pytest

from edgecert.constructions import build_H1, complete_graph, cycle_graph, multi_edge
from edgecert.cuts import brute_force_min_cut, edge_connectivity, vertex_connectivity_simple
from edgecert.errors import DisconnectedError, NotSimpleError, TooLargeError, TooSmallError
from edgecert.multigraph import build
from edgecert.partition import cut_witness
from helpers import ht32
from oracles import brute_force_vertex_cut


def test_h31_edge_connectivity():
    res = edge_connectivity(build_H1(3))
    assert res.value == 1
    assert (res.witness.a, res.witness.b) == (3, 3)


def test_h54_edge_connectivity(h54):
    assert edge_connectivity(h54).value == 4


@pytest.mark.parametrize("d", [1, 3, 6])
def test_multi_edge(d):
    assert edge_connectivity(multi_edge(d)).value == d


def test_brute_force_examples():
    assert brute_force_min_cut(ht32()).value == 2
    assert brute_force_min_cut(build_H1(3)).value == edge_connectivity(build_H1(3)).value == 1
    path = build(3, [(0, 1, 2), (1, 2, 2)])
    assert brute_force_min_cut(path).value == 2
    assert edge_connectivity(path).value == 2


def test_errors():
    with pytest.raises(DisconnectedError):
        edge_connectivity(build(4, [(0, 1, 3), (2, 3, 3)]))
    with pytest.raises(TooSmallError):
        edge_connectivity(build(1, []))
    with pytest.raises(TooLargeError):
        brute_force_min_cut(cycle_graph(17))
    with pytest.raises(DisconnectedError):
        brute_force_min_cut(build(3, [(0, 1, 1)]))


def test_witness_is_deterministic_and_valid():
    g = build_H1(5)
    a = edge_connectivity(g)
    b = edge_connectivity(g)
    assert a == b
    assert cut_witness(g, a.witness.side).l == a.value


def test_random_weighted_graphs_against_brute_force():
    rng = np.random.default_rng(7)
    checked = 0
    while checked < 150:
        n = int(rng.integers(2, 10))
        m = np.triu(rng.integers(0, 4, (n, n)) * (rng.random((n, n)) < 0.5), 1)
        g = build(n, [(i, j, int(m[i, j])) for i in range(n) for j in range(i + 1, n) if m[i, j]])
        try:
            brute = brute_force_min_cut(g)
        except DisconnectedError:
            continue
        fast = edge_connectivity(g)
        assert fast.value == brute.value
        assert cut_witness(g, fast.witness.side).l == fast.value
        checked += 1


def test_vertex_connectivity_examples():
    assert vertex_connectivity_simple(complete_graph(4)) == 3
    assert vertex_connectivity_simple(cycle_graph(6)) == 2
    bowtie = build(5, [(0, 1, 1), (1, 2, 1), (0, 2, 1), (2, 3, 1), (3, 4, 1), (2, 4, 1)])
    assert vertex_connectivity_simple(bowtie) == brute_force_vertex_cut(bowtie.mult) == 1


def test_vertex_connectivity_errors():
    with pytest.raises(NotSimpleError):
        vertex_connectivity_simple(multi_edge(2))
    with pytest.raises(TooLargeError):
        vertex_connectivity_simple(cycle_graph(11))


def test_vertex_connectivity_against_networkx():
    rng = np.random.default_rng(3)
    seen = 0
    while seen < 60:
        n = int(rng.integers(2, 9))
        m = np.triu(rng.random((n, n)) < 0.55, 1)
        g = build(n, [(i, j, 1) for i in range(n) for j in range(i + 1, n) if m[i, j]])
        try:
            k = vertex_connectivity_simple(g)
        except DisconnectedError:
            continue
        assert k == brute_force_vertex_cut(g.mult)
        seen += 1


def test_witness_orientation_small_side_first():
    rng = np.random.default_rng(17)
    checked = 0
    while checked < 100:
        n = int(rng.integers(2, 9))
        m = np.triu(rng.integers(1, 4, (n, n)) * (rng.random((n, n)) < 0.6), 1)
        g = build(n, [(i, j, int(m[i, j])) for i in range(n) for j in range(i + 1, n) if m[i, j]])
        try:
            results = [edge_connectivity(g), brute_force_min_cut(g)]
        except DisconnectedError:
            continue
        for res in results:
            w = res.witness
            assert w.a <= w.b
            if w.a == w.b:
                assert 0 in w.side
        checked += 1
