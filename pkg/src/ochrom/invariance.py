"""Chromatic invariance and equivalence decisions, with certificates.

An oriented graph keeps the chromatic polynomial of its underlying graph
exactly when it is quasi-transitive (no induced 2-dipath) and the underlying
graph is 2K2-free; such graphs are exactly quasi-transitive orientations of
co-interval graphs.  The orientation side is decided by the classical
edge-forcing (implication class) algorithm, which doubles as the certificate
producer.  Every verdict carries a witness that the caller can re-verify.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass

from .colouring import chromatic_poly, poly_reduction
from .formats import MIXED, serialize
from .graph import MixedGraph
from .structure import obstructing_pairs, star_closure


@dataclass
class InvarianceVerdict:
    verdict: bool
    certificate_kind: str
    # orientation / equivalent_simple_graph: MixedGraph
    # violating_2dipath: (u, w, v); violating_2k2: (a, b, c, d)
    # not_comparability: forcing conflict chain
    certificate: object = None

    def to_dict(self):
        cert = self.certificate
        if isinstance(cert, MixedGraph):
            cert = serialize(cert, MIXED)
        elif isinstance(cert, tuple):
            cert = list(cert)
        return {"verdict": "yes" if self.verdict else "no",
                "certificate_kind": self.certificate_kind,
                "certificate": cert}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def is_quasi_transitive(g: MixedGraph):
    """(True, None) or (False, witness 2-dipath (u, w, v))."""
    if not g.is_oriented():
        raise ValueError("quasi-transitivity is defined for oriented graphs")
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.is_adjacent(u, v):
                continue
            for w in range(g.n):
                if w in (u, v):
                    continue
                if g.has_arc(u, w) and g.has_arc(w, v):
                    return False, (u, w, v)
                if g.has_arc(v, w) and g.has_arc(w, u):
                    return False, (v, w, u)
    return True, None


def is_2k2_free(g: MixedGraph):
    """(True, None) or (False, (a, b, c, d)) with ab, cd an induced 2K2."""
    if not g.is_simple():
        raise ValueError("2K2-freeness is checked on simple graphs")
    edges = g.edges()
    for i, (a, b) in enumerate(edges):
        for c, d in edges[i + 1:]:
            if len({a, b, c, d}) != 4:
                continue
            if not (g.is_adjacent(a, c) or g.is_adjacent(a, d)
                    or g.is_adjacent(b, c) or g.is_adjacent(b, d)):
                return False, (a, b, c, d)
    return True, None


def ochrom_invar(g: MixedGraph) -> InvarianceVerdict:
    """Does the oriented graph share the polynomial of its underlying graph?"""
    qt, triple = is_quasi_transitive(g)
    if not qt:
        return InvarianceVerdict(False, "violating_2dipath", triple)
    free, quad = is_2k2_free(g.underlying())
    if not free:
        return InvarianceVerdict(False, "violating_2k2", quad)
    return InvarianceVerdict(True, "orientation", g)


# -- transitive orientation via edge forcing -----------------------------


def produce_quasi_transitive_orientation(g: MixedGraph):
    """(orientation, None) on success, (None, conflict) otherwise.

    Forcing rule: with edges ab and ac present and bc absent, the directions
    of ab and ac at the shared vertex a force each other.  Each implication
    class is seeded with its lexicographically least edge oriented low->high,
    closed under forcing within the not-yet-oriented edges, committed, and
    removed; a class forcing some edge in both directions certifies a
    non-comparability graph.  The result is a transitive (hence
    quasi-transitive) orientation.
    """
    if not g.is_simple():
        raise ValueError("orientation production takes simple graphs")
    remaining = set(frozenset(e) for e in g.edges())
    arcs = {}

    while remaining:
        seed = min(tuple(sorted(e)) for e in remaining)
        direction = {frozenset(seed): seed}
        parent = {seed: None}
        queue = deque([seed])
        conflict = None
        while queue and conflict is None:
            a, b = queue.popleft()
            for edge in list(remaining):
                if a not in edge:
                    other_end = None
                else:
                    (other_end,) = edge - {a}
                if other_end is None or other_end == b:
                    continue
                if g.is_adjacent(b, other_end):
                    continue
                forced = (a, other_end)
                key = frozenset(forced)
                prev = direction.get(key)
                if prev is None:
                    direction[key] = forced
                    parent[forced] = (a, b)
                    queue.append(forced)
                elif prev != forced:
                    conflict = (prev, forced, _forcing_chain(parent, (a, b)))
                    break
            if conflict is None:
                # same rule from the head end: ab with edge xb, ax absent
                for edge in list(remaining):
                    if b not in edge:
                        continue
                    (other_end,) = edge - {b}
                    if other_end == a or g.is_adjacent(a, other_end):
                        continue
                    forced = (other_end, b)
                    key = frozenset(forced)
                    prev = direction.get(key)
                    if prev is None:
                        direction[key] = forced
                        parent[forced] = (a, b)
                        queue.append(forced)
                    elif prev != forced:
                        conflict = (prev, forced, _forcing_chain(parent, (a, b)))
                        break
        if conflict is not None:
            return None, conflict
        arcs.update(direction)
        remaining -= set(direction)

    result = MixedGraph.from_parts(g.n, arcs=arcs.values())
    qt, witness = is_quasi_transitive(result)
    if not qt:
        # cannot happen for a correct forcing closure; stay defensive
        return None, ("not_quasi_transitive", witness)
    return result, None


def _forcing_chain(parent, last):
    chain = []
    node = last
    while node is not None:
        chain.append(node)
        node = parent.get(node)
    chain.reverse()
    return tuple(chain)


def chrom_invar(g: MixedGraph) -> InvarianceVerdict:
    """Does the simple graph admit a chromatically invariant orientation?

    Yes exactly for co-interval graphs; the certificate is a verifying
    quasi-transitive orientation.
    """
    if not g.is_simple():
        raise ValueError("chrom_invar takes simple graphs")
    orientation, conflict = produce_quasi_transitive_orientation(g)
    if orientation is None:
        return InvarianceVerdict(False, "not_comparability", conflict)
    free, quad = is_2k2_free(g)
    if not free:
        return InvarianceVerdict(False, "violating_2k2", quad)
    return InvarianceVerdict(True, "orientation", orientation)


# -- interval-graph route for cross-checking -----------------------------


def maximum_cardinality_search(g: MixedGraph):
    """MCS visit order (a reversed perfect elimination order when chordal)."""
    n = g.n
    weight = [0] * n
    visited = [False] * n
    order = []
    for _ in range(n):
        v = max((u for u in range(n) if not visited[u]),
                key=lambda u: (weight[u], -u))
        visited[v] = True
        order.append(v)
        for w in g.neighbours(v):
            if not visited[w]:
                weight[w] += 1
    return order


def is_chordal(g: MixedGraph) -> bool:
    if not g.is_simple():
        raise ValueError("chordality is checked on simple graphs")
    order = maximum_cardinality_search(g)
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [w for w in g.neighbours(v) if pos[w] < pos[v]]
        if not earlier:
            continue
        u = max(earlier, key=lambda w: pos[w])
        for w in earlier:
            if w != u and not g.is_adjacent(u, w):
                return False
    return True


def _components_without_closed_nbhd(g: MixedGraph, v: int):
    """Component id per vertex of g - N[v]; -1 marks removed vertices."""
    removed = set(g.neighbours(v)) | {v}
    comp = [-1] * g.n
    cid = 0
    for s in range(g.n):
        if s in removed or comp[s] != -1:
            continue
        stack = [s]
        comp[s] = cid
        while stack:
            x = stack.pop()
            for y in g.neighbours(x):
                if y not in removed and comp[y] == -1:
                    comp[y] = cid
                    stack.append(y)
        cid += 1
    return comp


def has_asteroidal_triple(g: MixedGraph) -> bool:
    """Three pairwise non-adjacent vertices, each pair connected avoiding the
    closed neighbourhood of the third."""
    if not g.is_simple():
        raise ValueError("asteroidal triples are checked on simple graphs")
    comps = [_components_without_closed_nbhd(g, v) for v in range(g.n)]
    for x, y, z in itertools.combinations(range(g.n), 3):
        if g.is_adjacent(x, y) or g.is_adjacent(y, z) or g.is_adjacent(x, z):
            continue
        if (comps[z][x] == comps[z][y] != -1
                and comps[y][x] == comps[y][z] != -1
                and comps[x][y] == comps[x][z] != -1):
            return True
    return False


def is_interval(g: MixedGraph) -> bool:
    return is_chordal(g) and not has_asteroidal_triple(g)


def is_cointerval(g: MixedGraph, method: str = "forcing") -> bool:
    """Co-interval recognition by either of two equivalent routes.

    "forcing": 2K2-free comparability (orientation production succeeds).
    "complement": the complement is an interval graph (chordal and free of
    asteroidal triples).
    """
    if not g.is_simple():
        raise ValueError("co-interval recognition takes simple graphs")
    if method == "forcing":
        orientation, _ = produce_quasi_transitive_orientation(g)
        return orientation is not None and is_2k2_free(g)[0]
    if method == "complement":
        return is_interval(g.complement())
    raise ValueError(f"unknown method {method!r}")


# -- chromatic equivalence -----------------------------------------------


def equivalence_witness(g: MixedGraph):
    """A simple graph with the same polynomial, when no arcs obstruct.

    Returns the underlying graph of the closure when the oriented graph has
    no obstructing arc pairs; otherwise None (no claim either way -- whether
    obstruction-free is also necessary is open for oriented graphs).
    """
    if not g.is_oriented():
        raise ValueError("equivalence witness takes oriented graphs")
    if obstructing_pairs(g):
        return None
    return star_closure(g).underlying()


def search_equivalent_simple(g: MixedGraph, *, max_n: int = 5):
    """Exhaustively look for a chromatically equivalent simple graph.

    Brute search over all simple graphs on g.n vertices; intended only for
    probing small obstructed cases, never relied on by any verdict.
    """
    if g.n > max_n:
        raise ValueError(f"search guard: n={g.n} exceeds {max_n}")
    target = poly_reduction(g)[0]
    pairs = list(itertools.combinations(range(g.n), 2))
    for mask in range(1 << len(pairs)):
        candidate = MixedGraph.from_parts(
            g.n, edges=[pairs[i] for i in range(len(pairs)) if mask >> i & 1])
        if chromatic_poly(candidate) == target:
            return candidate
    return None
