import pytest

from ochrom.graph import (EDGE, FWD, BWD, GraphKind, MixedGraph, gen_dn,
                          gen_complete_mixed, gen_random_mixed, gen_star,
                          gen_tk2, gen_tournament)


def test_empty_graph():
    g = MixedGraph(0)
    assert g.n == 0
    assert g.arcs() == []
    assert g.edges() == []
    assert g.kind is GraphKind.SIMPLE


def test_constructor_validation():
    with pytest.raises(ValueError):
        MixedGraph(-1)
    with pytest.raises(ValueError):
        MixedGraph(2, {(1, 0): EDGE})   # pair must be ordered low < high
    with pytest.raises(ValueError):
        MixedGraph(2, {(0, 2): EDGE})   # vertex out of range
    with pytest.raises(ValueError):
        MixedGraph(2, {(0, 1): 7})      # bad code


def test_from_parts_and_codes():
    g = MixedGraph.from_parts(3, arcs=[(2, 0)], edges=[(0, 1)])
    assert g.code(2, 0) == FWD
    assert g.code(0, 2) == BWD
    assert g.has_arc(2, 0) and not g.has_arc(0, 2)
    assert g.has_edge(0, 1) and g.has_edge(1, 0)
    assert g.arcs() == [(2, 0)]
    assert g.edges() == [(0, 1)]
    assert g.kind is GraphKind.MIXED
    assert not g.is_oriented() and not g.is_simple()


def test_from_parts_rejects_loops_and_duplicates():
    with pytest.raises(ValueError):
        MixedGraph.from_parts(2, arcs=[(0, 0)])
    with pytest.raises(ValueError):
        MixedGraph.from_parts(2, arcs=[(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        MixedGraph.from_parts(2, arcs=[(0, 1)], edges=[(0, 1)])


def test_degree_triple_and_neighbours():
    g = MixedGraph.from_parts(4, arcs=[(0, 1), (2, 0)], edges=[(0, 3)])
    assert g.degree_triple(0) == (1, 1, 1)
    assert g.neighbours(0) == [1, 2, 3]
    assert g.out_neighbours(0) == [1]
    assert g.in_neighbours(0) == [2]
    assert g.edge_neighbours(0) == [3]
    assert g.isolated_vertices() == []
    assert g.add_isolated().isolated_vertices() == [4]


def test_two_dipath_linked():
    g = MixedGraph.from_parts(3, arcs=[(0, 1), (1, 2)])
    assert g.two_dipath_linked(0, 2)
    assert g.two_dipath_linked(2, 0)
    assert not g.two_dipath_linked(0, 1)
    h = MixedGraph.from_parts(3, arcs=[(0, 1), (2, 1)])  # both into 1
    assert not h.two_dipath_linked(0, 2)


def test_add_edge_add_arc_immutable():
    g = MixedGraph(2)
    h = g.add_arc(1, 0)
    assert g.arc_count == 0 and h.arc_count == 1
    assert h.has_arc(1, 0)
    with pytest.raises(ValueError):
        h.add_edge(0, 1)
    with pytest.raises(ValueError):
        g.add_edge(0, 0)


def test_identify_relabeling():
    # path 0-1, 2-3 as edges; identify free pair (1, 2)
    g = MixedGraph.from_parts(4, edges=[(0, 1), (2, 3)])
    h = g.identify(1, 2)
    assert h.n == 3
    assert h.edges() == [(0, 1), (1, 2)]


def test_identify_arc_beats_parallel_edge():
    # 0->2 arc and 1-2 edge become parallel when 0, 1 merge
    g = MixedGraph.from_parts(3, arcs=[(0, 2)], edges=[(1, 2)])
    h = g.identify(0, 1)
    assert h.n == 2
    assert h.arcs() == [(0, 1)]
    assert h.edges() == []


def test_identify_preconditions():
    g = MixedGraph.from_parts(3, arcs=[(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        g.identify(0, 1)   # adjacent
    with pytest.raises(ValueError):
        g.identify(0, 2)   # 2-dipath ends
    with pytest.raises(ValueError):
        g.identify(1, 1)


def test_underlying_complement_induced():
    g = MixedGraph.from_parts(4, arcs=[(0, 1)], edges=[(2, 3)])
    u = g.underlying()
    assert u.is_simple()
    assert u.edges() == [(0, 1), (2, 3)]
    c = u.complement()
    assert set(c.edges()) == {(0, 2), (0, 3), (1, 2), (1, 3)}
    with pytest.raises(ValueError):
        g.complement()
    sub = g.induced([0, 1, 3])
    assert sub.n == 3
    assert sub.arcs() == [(0, 1)]
    assert sub.edges() == []


def test_equality_and_hash():
    a = MixedGraph.from_parts(3, arcs=[(0, 1)])
    b = MixedGraph.from_parts(3, arcs=[(0, 1)])
    c = MixedGraph.from_parts(3, arcs=[(1, 0)])
    assert a == b and hash(a) == hash(b)
    assert a != c
    assert len({a, b, c}) == 2


def test_gen_star():
    g = gen_star(2, 3)
    assert g.n == 6
    assert g.degree_triple(0) == (0, 3, 2)
    assert all(g.has_arc(v, 0) for v in (1, 2))
    assert all(g.has_arc(0, v) for v in (3, 4, 5))
    with pytest.raises(ValueError):
        gen_star(0, 0)


def test_gen_dn():
    g = gen_dn(6)
    assert g.n == 6
    assert set(g.arcs()) == {(0, 1), (1, 2), (2, 3), (4, 3), (5, 3)}
    with pytest.raises(ValueError):
        gen_dn(3)


def test_gen_tk2():
    g = gen_tk2(3)
    assert g.n == 6
    assert g.arcs() == [(0, 1), (2, 3), (4, 5)]
    assert g.edge_count == 0


def test_gen_tournament_complete_and_deterministic():
    g = gen_tournament(5, seed=7)
    assert g.arc_count == 10
    assert all(g.is_adjacent(u, v) for u in range(5) for v in range(u + 1, 5))
    assert g == gen_tournament(5, seed=7)
    assert g != gen_tournament(5, seed=8)


def test_gen_random_mixed_deterministic_and_valid():
    g = gen_random_mixed(7, 0.3, 0.2, seed=42)
    assert g == gen_random_mixed(7, 0.3, 0.2, seed=42)
    with pytest.raises(ValueError):
        gen_random_mixed(3, 0.8, 0.5, seed=0)  # probabilities sum over 1
    dense = gen_random_mixed(6, 1.0, 0.0, seed=1)
    assert dense.arc_count == 15


def test_gen_complete_mixed():
    g = gen_complete_mixed(5, seed=3)
    assert all(g.is_adjacent(u, v) for u in range(5) for v in range(u + 1, 5))
