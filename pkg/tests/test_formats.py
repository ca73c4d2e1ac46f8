import pytest

from ochrom.formats import (DIGRAPH6, GRAPH6, MIXED, FormatError, parse,
                            serialize)
from ochrom.graph import MixedGraph, gen_random_mixed, gen_tournament


def complete_simple(n):
    return MixedGraph.from_parts(
        n, edges=[(u, v) for u in range(n) for v in range(u + 1, n)])


def test_graph6_known_strings():
    assert serialize(MixedGraph.from_parts(2, edges=[(0, 1)]), GRAPH6) == "A_"
    assert serialize(complete_simple(4), GRAPH6) == "C~"
    assert parse("A_", GRAPH6) == MixedGraph.from_parts(2, edges=[(0, 1)])
    assert parse(">>graph6<<C~", GRAPH6) == complete_simple(4)


def test_graph6_round_trip():
    for seed in range(10):
        g = gen_random_mixed(7, 0.0, 0.4, seed).underlying()
        assert parse(serialize(g, GRAPH6), GRAPH6) == g


def test_graph6_large_size_header():
    g = MixedGraph(100)
    text = serialize(g, GRAPH6)
    assert text.startswith("~")
    assert parse(text, GRAPH6) == g


def test_graph6_rejects_arcs_and_bad_padding():
    with pytest.raises(FormatError):
        serialize(MixedGraph.from_parts(2, arcs=[(0, 1)]), GRAPH6)
    with pytest.raises(FormatError):
        parse("A", GRAPH6)        # truncated data
    with pytest.raises(FormatError):
        parse("A" + chr(63 + 1), GRAPH6)   # nonzero padding bits
    with pytest.raises(FormatError):
        parse("", GRAPH6)


def test_digraph6_round_trip():
    for seed in range(10):
        g = gen_tournament(6, seed)
        text = serialize(g, DIGRAPH6)
        assert text.startswith("&")
        assert parse(text, DIGRAPH6) == g
    assert parse(">>digraph6<<" + serialize(g, DIGRAPH6), DIGRAPH6) == g


def test_digraph6_validation():
    with pytest.raises(FormatError):
        serialize(MixedGraph.from_parts(2, edges=[(0, 1)]), DIGRAPH6)
    with pytest.raises(FormatError):
        parse("A_", DIGRAPH6)     # missing '&'
    # symmetric pair 0<->1 on n=2: bits 0110 -> value 0b011000 = 24
    bad = "&" + chr(63 + 2) + chr(63 + 24)
    with pytest.raises(FormatError):
        parse(bad, DIGRAPH6)
    # loop at 0 on n=2: bits 1000 -> value 0b100000 = 32
    loop = "&" + chr(63 + 2) + chr(63 + 32)
    with pytest.raises(FormatError):
        parse(loop, DIGRAPH6)


def test_mixed_round_trip():
    for seed in range(10):
        g = gen_random_mixed(6, 0.3, 0.2, seed)
        assert parse(serialize(g, MIXED), MIXED) == g


def test_mixed_parsing_details():
    text = "# leading comment\nn=3\na 2 0   # an arc\ne 0 1\n\n"
    g = parse(text, MIXED)
    assert g.arcs() == [(2, 0)]
    assert g.edges() == [(0, 1)]
    assert parse("n=0\n", MIXED) == MixedGraph(0)


@pytest.mark.parametrize("bad", [
    "",
    "a 0 1\n",                 # missing header
    "n=x\n",
    "n=3\nz 0 1\n",
    "n=3\na 0\n",
    "n=3\na 0 3\n",            # out of range
    "n=3\na 0 0\n",            # loop
    "n=3\na 0 1\ne 0 1\n",     # duplicate pair
])
def test_mixed_errors(bad):
    with pytest.raises(FormatError):
        parse(bad, MIXED)


def test_unknown_format():
    with pytest.raises(FormatError):
        serialize(MixedGraph(1), "dot")
    with pytest.raises(FormatError):
        parse("n=1\n", "dot")
