"""Mixed graphs: a vertex set with at most one relation per unordered pair.

A relation is either an undirected edge or an arc in one direction.  Oriented
graphs (no edges) and simple graphs (no arcs) are the two degenerate kinds.
Graphs are immutable; every mutating operation returns a new graph.
"""

from __future__ import annotations

import itertools
from enum import Enum

from .rng import SplitMix64

# Relation codes, always read relative to an ordered pair (u, v).
NONE = 0
EDGE = 1
FWD = 2   # arc u -> v
BWD = 3   # arc v -> u

_FLIP = {NONE: NONE, EDGE: EDGE, FWD: BWD, BWD: FWD}


class GraphKind(Enum):
    SIMPLE = "simple"      # no arcs (includes the relation-free graph)
    ORIENTED = "oriented"  # no edges, at least one arc
    MIXED = "mixed"        # both


class MixedGraph:
    """Immutable graph on vertices 0..n-1, at most one relation per pair."""

    __slots__ = ("n", "_rel", "_hash")

    def __init__(self, n: int, rel=None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        rel = dict(rel) if rel else {}
        for (u, v), code in rel.items():
            if not (0 <= u < v < n):
                raise ValueError(f"bad pair ({u}, {v}) for n={n}")
            if code not in (EDGE, FWD, BWD):
                raise ValueError(f"bad relation code {code!r} on ({u}, {v})")
        self.n = n
        self._rel = rel
        self._hash = None

    @classmethod
    def from_parts(cls, n: int, arcs=(), edges=()) -> "MixedGraph":
        """Build from explicit arc (tail, head) and edge pairs."""
        rel = {}
        for u, v in arcs:
            if u == v:
                raise ValueError("loops are not allowed")
            key = (min(u, v), max(u, v))
            code = FWD if u < v else BWD
            if key in rel:
                raise ValueError(f"duplicate relation on pair {key}")
            rel[key] = code
        for u, v in edges:
            if u == v:
                raise ValueError("loops are not allowed")
            key = (min(u, v), max(u, v))
            if key in rel:
                raise ValueError(f"duplicate relation on pair {key}")
            rel[key] = EDGE
        return cls(n, rel)

    # -- queries ---------------------------------------------------------

    def code(self, u: int, v: int) -> int:
        """Relation code read relative to the ordered pair (u, v)."""
        if u == v:
            return NONE
        if u < v:
            return self._rel.get((u, v), NONE)
        return _FLIP[self._rel.get((v, u), NONE)]

    def is_adjacent(self, u: int, v: int) -> bool:
        return self.code(u, v) != NONE

    def has_edge(self, u: int, v: int) -> bool:
        return self.code(u, v) == EDGE

    def has_arc(self, u: int, v: int) -> bool:
        """True iff the arc u -> v is present."""
        return self.code(u, v) == FWD

    def arcs(self):
        """All arcs as (tail, head) pairs, in stored-pair order."""
        out = []
        for (u, v), code in sorted(self._rel.items()):
            if code == FWD:
                out.append((u, v))
            elif code == BWD:
                out.append((v, u))
        return out

    def edges(self):
        """All edges as (u, v) pairs with u < v."""
        return [p for p, code in sorted(self._rel.items()) if code == EDGE]

    @property
    def arc_count(self) -> int:
        return sum(1 for code in self._rel.values() if code != EDGE)

    @property
    def edge_count(self) -> int:
        return sum(1 for code in self._rel.values() if code == EDGE)

    @property
    def kind(self) -> GraphKind:
        if self.arc_count == 0:
            return GraphKind.SIMPLE
        if self.edge_count == 0:
            return GraphKind.ORIENTED
        return GraphKind.MIXED

    def is_oriented(self) -> bool:
        """No edges (arcs only, possibly none)."""
        return self.edge_count == 0

    def is_simple(self) -> bool:
        """No arcs (edges only, possibly none)."""
        return self.arc_count == 0

    def out_neighbours(self, u: int):
        return [v for v in range(self.n) if self.code(u, v) == FWD]

    def in_neighbours(self, u: int):
        return [v for v in range(self.n) if self.code(u, v) == BWD]

    def edge_neighbours(self, u: int):
        return [v for v in range(self.n) if self.code(u, v) == EDGE]

    def neighbours(self, u: int):
        """Vertices related to u in any way."""
        return [v for v in range(self.n) if self.code(u, v) != NONE]

    def degree_triple(self, u: int):
        e = o = i = 0
        for v in range(self.n):
            c = self.code(u, v)
            if c == EDGE:
                e += 1
            elif c == FWD:
                o += 1
            elif c == BWD:
                i += 1
        return (e, o, i)

    def isolated_vertices(self):
        return [u for u in range(self.n) if not self.neighbours(u)]

    def two_dipath_linked(self, u: int, v: int) -> bool:
        """True iff some w gives a directed path u->w->v or v->w->u."""
        for w in range(self.n):
            if w == u or w == v:
                continue
            if self.has_arc(u, w) and self.has_arc(w, v):
                return True
            if self.has_arc(v, w) and self.has_arc(w, u):
                return True
        return False

    # -- pure mutations --------------------------------------------------

    def _with_pair(self, u: int, v: int, code: int) -> "MixedGraph":
        if u == v:
            raise ValueError("loops are not allowed")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"vertex out of range for n={self.n}")
        if self.is_adjacent(u, v):
            raise ValueError(f"pair ({u}, {v}) already holds a relation")
        rel = dict(self._rel)
        if u < v:
            rel[(u, v)] = code
        else:
            rel[(v, u)] = _FLIP[code]
        return MixedGraph(self.n, rel)

    def add_edge(self, u: int, v: int) -> "MixedGraph":
        """Copy with a new edge between u and v."""
        return self._with_pair(u, v, EDGE)

    def add_arc(self, u: int, v: int) -> "MixedGraph":
        """Copy with a new arc u -> v."""
        return self._with_pair(u, v, FWD)

    def identify(self, u: int, v: int) -> "MixedGraph":
        """Merge u and v into one vertex, collapsing parallel relations.

        Only legal for non-adjacent pairs that are not the ends of any
        2-dipath; that precondition rules out opposing-arc conflicts at the
        merged vertex.  The merged vertex takes label min(u, v); labels above
        max(u, v) shift down by one.  Where an arc and an edge become
        parallel, the arc survives.
        """
        if u == v:
            raise ValueError("cannot identify a vertex with itself")
        if self.is_adjacent(u, v):
            raise ValueError(f"({u}, {v}) are adjacent; identification illegal")
        if self.two_dipath_linked(u, v):
            raise ValueError(f"({u}, {v}) are 2-dipath ends; identification illegal")
        lo, hi = min(u, v), max(u, v)

        def remap(w):
            if w == u or w == v:
                return lo
            return w - 1 if w > hi else w

        merged = {}
        for (a, b), code in self._rel.items():
            na, nb = remap(a), remap(b)
            if na > nb:
                na, nb = nb, na
                code = _FLIP[code]
            old = merged.get((na, nb))
            if old is None or old == code:
                merged[(na, nb)] = code
            elif EDGE in (old, code):
                # arc beats parallel edge
                merged[(na, nb)] = old if code == EDGE else code
            else:
                raise AssertionError("opposing arcs at merge; precondition violated")
        return MixedGraph(self.n - 1, merged)

    def underlying(self) -> "MixedGraph":
        """Forget arc directions; the result is simple."""
        return MixedGraph(self.n, {p: EDGE for p in self._rel})

    def complement(self) -> "MixedGraph":
        """Edge-complement of a simple graph."""
        if not self.is_simple():
            raise ValueError("complement is defined for simple graphs only")
        rel = {}
        for u, v in itertools.combinations(range(self.n), 2):
            if (u, v) not in self._rel:
                rel[(u, v)] = EDGE
        return MixedGraph(self.n, rel)

    def induced(self, vertices) -> "MixedGraph":
        """Subgraph induced on the given vertices, relabeled in sorted order."""
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        rel = {}
        for (a, b), code in self._rel.items():
            if a in index and b in index:
                rel[(index[a], index[b])] = code
        return MixedGraph(len(vs), rel)

    def add_isolated(self, count: int = 1) -> "MixedGraph":
        """Copy with extra isolated vertices appended."""
        if count < 0:
            raise ValueError("count must be nonnegative")
        return MixedGraph(self.n + count, self._rel)

    # -- value semantics -------------------------------------------------

    def relation_items(self):
        """Canonical (pair, code) listing; two graphs are equal iff these match."""
        return tuple(sorted(self._rel.items()))

    def __eq__(self, other):
        if not isinstance(other, MixedGraph):
            return NotImplemented
        return self.n == other.n and self._rel == other._rel

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.relation_items()))
        return self._hash

    def __repr__(self):
        return (f"MixedGraph(n={self.n}, arcs={self.arcs()!r}, "
                f"edges={self.edges()!r})")


# -- generators ----------------------------------------------------------


def gen_star(i: int, o: int) -> MixedGraph:
    """Oriented star: centre 0 with i in-neighbours and o out-neighbours."""
    if i < 0 or o < 0 or i + o < 1:
        raise ValueError("star needs at least one leaf")
    arcs = [(v, 0) for v in range(1, i + 1)]
    arcs += [(0, v) for v in range(i + 1, i + o + 1)]
    return MixedGraph.from_parts(i + o + 1, arcs=arcs)


def gen_dn(n: int) -> MixedGraph:
    """Directed path 0->1->2->3 with n-4 extra leaves, each arced into vertex 3."""
    if n < 4:
        raise ValueError("family requires n >= 4")
    arcs = [(0, 1), (1, 2), (2, 3)] + [(x, 3) for x in range(4, n)]
    return MixedGraph.from_parts(n, arcs=arcs)


def gen_tk2(t: int) -> MixedGraph:
    """t disjoint arcs 0->1, 2->3, ..."""
    if t < 1:
        raise ValueError("t must be positive")
    return MixedGraph.from_parts(2 * t, arcs=[(2 * k, 2 * k + 1) for k in range(t)])


def gen_tournament(n: int, seed: int) -> MixedGraph:
    """Random orientation of K_n, deterministic in the seed."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = SplitMix64(seed)
    rel = {}
    for u, v in itertools.combinations(range(n), 2):
        rel[(u, v)] = FWD if rng.next_u64() & 1 else BWD
    return MixedGraph(n, rel)


def gen_random_mixed(n: int, arc_prob: float, edge_prob: float, seed: int) -> MixedGraph:
    """Each pair independently: arc with arc_prob (fair direction), edge with edge_prob."""
    if n < 1:
        raise ValueError("n must be positive")
    if not (0 <= arc_prob <= 1 and 0 <= edge_prob <= 1 and arc_prob + edge_prob <= 1):
        raise ValueError("probabilities must be in [0,1] with sum <= 1")
    rng = SplitMix64(seed)
    t_arc = int(arc_prob * 2**64)
    t_edge = t_arc + int(edge_prob * 2**64)
    rel = {}
    for u, v in itertools.combinations(range(n), 2):
        r = rng.next_u64()
        if r < t_arc:
            rel[(u, v)] = FWD if rng.next_u64() & 1 else BWD
        elif r < t_edge:
            rel[(u, v)] = EDGE
    return MixedGraph(n, rel)


def gen_complete_mixed(n: int, seed: int) -> MixedGraph:
    """Every pair adjacent; edge or arc direction drawn uniformly."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = SplitMix64(seed)
    rel = {}
    for u, v in itertools.combinations(range(n), 2):
        rel[(u, v)] = (EDGE, FWD, BWD)[rng.choice(3)]
    return MixedGraph(n, rel)
