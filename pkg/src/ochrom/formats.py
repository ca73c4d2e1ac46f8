"""Graph file formats: graph6, digraph6, and a plain mixed-text format.

graph6/digraph6 follow the nauty format description.  graph6 carries simple
graphs only; digraph6 carries loop-free digraphs, which we additionally
require to be antisymmetric (oriented).  Mixed graphs use the text format:

    n=<count>
    a <u> <v>      arc u -> v
    e <u> <v>      edge u - v

one relation per line, '#' starts a comment, LF line endings.
"""

from __future__ import annotations

import itertools

from .graph import EDGE, FWD, MixedGraph

GRAPH6 = "graph6"
DIGRAPH6 = "digraph6"
MIXED = "mixed"

FORMATS = (GRAPH6, DIGRAPH6, MIXED)


class FormatError(ValueError):
    """Malformed graph text."""


# -- graph6 machinery ----------------------------------------------------


def _encode_size(n: int) -> str:
    if n < 0:
        raise FormatError("negative size")
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    raise FormatError("graphs this large are out of scope")


def _decode_size(data: str):
    if not data:
        raise FormatError("empty graph string")
    if data[0] != "~":
        return ord(data[0]) - 63, data[1:]
    if len(data) < 4 or data[1] == "~":
        raise FormatError("unsupported or truncated size header")
    n = 0
    for ch in data[1:4]:
        n = (n << 6) | (ord(ch) - 63)
    return n, data[4:]


def _encode_bits(bits) -> str:
    out = []
    for chunk_start in range(0, len(bits), 6):
        chunk = bits[chunk_start:chunk_start + 6]
        chunk = chunk + [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def _decode_bits(data: str, count: int):
    need = (count + 5) // 6
    if len(data) != need:
        raise FormatError(f"expected {need} data characters, got {len(data)}")
    bits = []
    for ch in data:
        val = ord(ch) - 63
        if not (0 <= val <= 63):
            raise FormatError(f"character {ch!r} outside graph6 range")
        bits.extend((val >> s) & 1 for s in range(5, -1, -1))
    if any(bits[count:]):
        raise FormatError("nonzero padding bits")
    return bits[:count]


def _serialize_graph6(g: MixedGraph) -> str:
    if not g.is_simple():
        raise FormatError("graph6 encodes simple graphs only")
    bits = [1 if g.has_edge(u, v) else 0
            for v in range(g.n) for u in range(v)]
    return _encode_size(g.n) + _encode_bits(bits)


def _parse_graph6(text: str) -> MixedGraph:
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    n, rest = _decode_size(text)
    bits = _decode_bits(rest, n * (n - 1) // 2)
    rel = {}
    i = 0
    for v in range(n):
        for u in range(v):
            if bits[i]:
                rel[(u, v)] = EDGE
            i += 1
    return MixedGraph(n, rel)


def _serialize_digraph6(g: MixedGraph) -> str:
    if not g.is_oriented():
        raise FormatError("digraph6 output requires an oriented graph")
    bits = [1 if g.has_arc(u, v) else 0
            for u in range(g.n) for v in range(g.n)]
    return "&" + _encode_size(g.n) + _encode_bits(bits)


def _parse_digraph6(text: str) -> MixedGraph:
    if text.startswith(">>digraph6<<"):
        text = text[len(">>digraph6<<"):]
    if not text.startswith("&"):
        raise FormatError("digraph6 strings start with '&'")
    n, rest = _decode_size(text[1:])
    bits = _decode_bits(rest, n * n)
    arcs = []
    for u in range(n):
        for v in range(n):
            if bits[u * n + v]:
                if u == v:
                    raise FormatError("loop in digraph6 input")
                if bits[v * n + u]:
                    raise FormatError(
                        f"symmetric arc pair {u}<->{v}; input is not oriented")
                arcs.append((u, v))
    return MixedGraph.from_parts(n, arcs=arcs)


# -- mixed-text ----------------------------------------------------------


def _serialize_mixed(g: MixedGraph) -> str:
    lines = [f"n={g.n}"]
    for u, v in itertools.combinations(range(g.n), 2):
        code = g.code(u, v)
        if code == EDGE:
            lines.append(f"e {u} {v}")
        elif code == FWD:
            lines.append(f"a {u} {v}")
        elif code != 0:
            lines.append(f"a {v} {u}")
    return "\n".join(lines) + "\n"


def _parse_mixed(text: str) -> MixedGraph:
    lines = []
    for raw in text.split("\n"):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines or not lines[0].startswith("n="):
        raise FormatError("mixed-text must start with an n=<count> line")
    try:
        n = int(lines[0][2:])
    except ValueError:
        raise FormatError(f"bad vertex count in {lines[0]!r}") from None
    arcs, edges = [], []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 3 or parts[0] not in ("a", "e"):
            raise FormatError(f"bad relation line {line!r}")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise FormatError(f"bad vertex in {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"vertex out of range in {line!r}")
        (arcs if parts[0] == "a" else edges).append((u, v))
    try:
        return MixedGraph.from_parts(n, arcs=arcs, edges=edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


# -- public entry points -------------------------------------------------


def serialize(g: MixedGraph, fmt: str) -> str:
    if fmt == GRAPH6:
        return _serialize_graph6(g)
    if fmt == DIGRAPH6:
        return _serialize_digraph6(g)
    if fmt == MIXED:
        return _serialize_mixed(g)
    raise FormatError(f"unknown format {fmt!r}")


def parse(text: str, fmt: str) -> MixedGraph:
    text = text.strip("\n") if fmt != MIXED else text
    if fmt == GRAPH6:
        return _parse_graph6(text.strip())
    if fmt == DIGRAPH6:
        return _parse_digraph6(text.strip())
    if fmt == MIXED:
        return _parse_mixed(text)
    raise FormatError(f"unknown format {fmt!r}")
