import pytest

from ochrom.colouring import (chromatic_poly, count_colourings,
                              is_oriented_colouring, oriented_chromatic_number,
                              poly_bruteforce, poly_reduction)
from ochrom.graph import MixedGraph, gen_dn, gen_tk2, gen_tournament
from ochrom.poly import IntPolynomial, X, falling_factorial


def dipath(k):
    return MixedGraph.from_parts(k + 1, arcs=[(i, i + 1) for i in range(k)])


def cycle_simple(n):
    return MixedGraph.from_parts(
        n, edges=[(i, (i + 1) % n) for i in range(n)])


def test_is_oriented_colouring_conditions():
    g = gen_tk2(2)   # arcs 0->1, 2->3
    assert is_oriented_colouring(g, [0, 1, 0, 1])
    # opposite direction between the same two colour classes
    assert not is_oriented_colouring(g, [0, 1, 1, 0])
    assert not is_oriented_colouring(g, [0, 0, 1, 2])
    with pytest.raises(ValueError):
        is_oriented_colouring(g, [0, 1])
    h = MixedGraph.from_parts(2, edges=[(0, 1)])
    assert not is_oriented_colouring(h, [3, 3])
    assert is_oriented_colouring(h, {0: 1, 1: 2})


def test_count_colourings_small_cases():
    arc = MixedGraph.from_parts(2, arcs=[(0, 1)])
    for k in range(5):
        assert count_colourings(arc, k) == k * (k - 1)
    # a 2-dipath needs three distinct colours: ends sharing a colour would
    # put opposite arcs between the same class pair through the middle
    assert count_colourings(dipath(2), 2) == 0
    assert count_colourings(dipath(2), 3) == 6
    assert count_colourings(MixedGraph(0), 3) == 1
    assert count_colourings(MixedGraph(3), 0) == 0


def test_count_colourings_guard():
    with pytest.raises(ValueError):
        count_colourings(MixedGraph(9), 2)
    assert count_colourings(MixedGraph(9), 1, max_n=9) == 1
    with pytest.raises(ValueError):
        count_colourings(MixedGraph(2), -1)


def test_poly_bruteforce_matches_direct_counts():
    g = gen_tk2(2)
    p = poly_bruteforce(g)
    for k in range(6):
        assert p(k) == count_colourings(g, k)
    assert p == IntPolynomial((0, 1, 0, -2, 1))  # x^4 - 2x^3 + x


def test_tournament_polynomial_is_falling_factorial():
    for n in (2, 3, 4):
        g = gen_tournament(n, seed=1)
        assert poly_bruteforce(g) == falling_factorial(n)
        assert poly_reduction(g)[0] == falling_factorial(n)


def test_reduction_agrees_with_bruteforce():
    cases = [
        dipath(3),
        gen_dn(5),
        gen_tk2(3),
        MixedGraph.from_parts(4, arcs=[(0, 3), (1, 2), (3, 1), (3, 2)]),
        MixedGraph.from_parts(5, arcs=[(0, 1), (2, 3)], edges=[(1, 2), (3, 4)]),
    ]
    for g in cases:
        assert poly_reduction(g)[0] == poly_bruteforce(g)


def test_reduction_order_and_memo_are_transparent():
    g = gen_dn(7)
    base = poly_reduction(g)[0]
    assert poly_reduction(g, order="highest")[0] == base
    assert poly_reduction(g, memo=False)[0] == base
    with pytest.raises(ValueError):
        poly_reduction(g, order="random")


def test_reduction_stats():
    p, stats = poly_reduction(gen_dn(8))
    assert p.degree == 8
    assert stats.node_count > stats.max_depth > 0
    assert stats.cache_hits > 0
    _, cold = poly_reduction(gen_dn(8), memo=False)
    assert cold.cache_hits == 0
    assert cold.node_count >= stats.node_count


def test_reduction_guard():
    with pytest.raises(ValueError):
        poly_reduction(MixedGraph(15))
    big = gen_tournament(15, seed=0)   # base case, no recursion needed
    assert poly_reduction(big, max_n=15)[0] == falling_factorial(15)


def test_chromatic_poly_known_graphs():
    path3 = MixedGraph.from_parts(3, edges=[(0, 1), (1, 2)])
    assert chromatic_poly(path3) == X * (X - 1) ** 2
    # cycle formula (k-1)^n + (-1)^n (k-1)
    for n in (3, 4, 5):
        shifted = (X - 1) ** n + (-1) ** n * (X - 1)
        assert chromatic_poly(cycle_simple(n)) == shifted
    with pytest.raises(ValueError):
        chromatic_poly(gen_tk2(1))


def test_oriented_polynomial_counts_never_exceed_underlying():
    # every oriented colouring is a proper colouring of the underlying graph
    for seed in range(5):
        from ochrom.graph import gen_random_mixed
        g = gen_random_mixed(6, 0.4, 0.0, seed)
        p = poly_reduction(g)[0]
        q = chromatic_poly(g.underlying())
        for k in range(7):
            assert 0 <= p(k) <= q(k)


def test_oriented_chromatic_number():
    assert oriented_chromatic_number(MixedGraph(0)) == 0
    assert oriented_chromatic_number(MixedGraph(3)) == 1
    assert oriented_chromatic_number(MixedGraph.from_parts(2, arcs=[(0, 1)])) == 2
    assert oriented_chromatic_number(dipath(2)) == 3
    # directed 5-cycle is the classic graph needing more colours than a
    # clique of its size would suggest
    c5 = MixedGraph.from_parts(5, arcs=[(i, (i + 1) % 5) for i in range(5)])
    assert oriented_chromatic_number(c5) == 5
