"""Structural sets behind the coefficient formulas.

Three ingredients drive the second and third coefficients of the oriented
chromatic polynomial: pairs of vertices at the ends of an induced 2-dipath,
pairs of obstructing arcs, and triangles of the underlying graph.  The
closure operation adds an edge per induced-2-dipath pair without changing
the polynomial.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb

from .graph import MixedGraph


def dipath_pairs(g: MixedGraph):
    """Unordered non-adjacent pairs joined by a 2-dipath (induced, since the
    ends are non-adjacent)."""
    out = set()
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.is_adjacent(u, v) and g.two_dipath_linked(u, v):
                out.add((u, v))
    return out


def _unconstrained(g: MixedGraph, p: int, q: int) -> bool:
    # no relation of any kind and no 2-dipath between p and q
    return not g.is_adjacent(p, q) and not g.two_dipath_linked(p, q)


def obstructing_pairs(g: MixedGraph):
    """Unordered pairs of non-incident arcs whose cross end-pairs are free.

    For arcs u->v and x->y the cross pairs are {u,y} (tail/head) and {v,x}
    (head/tail).  "Free" means no relation at all and no 2-dipath: an arc
    between the cross ends already forces distinct colours, so such a pair
    cannot obstruct anything.
    """
    arcs = g.arcs()
    out = set()
    for i, (u, v) in enumerate(arcs):
        for x, y in arcs[i + 1:]:
            if len({u, v, x, y}) != 4:
                continue
            if _unconstrained(g, u, y) and _unconstrained(g, v, x):
                out.add(((u, v), (x, y)))
    return out


def triangle_count(g: MixedGraph) -> int:
    """Triples pairwise adjacent in the underlying simple graph."""
    count = 0
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if not g.is_adjacent(a, b):
                continue
            for c in range(b + 1, g.n):
                if g.is_adjacent(a, c) and g.is_adjacent(b, c):
                    count += 1
    return count


def star_closure(g: MixedGraph) -> MixedGraph:
    """Add one edge per induced-2-dipath pair; a single pass suffices since
    arcs (hence 2-dipaths) are unchanged."""
    out = g
    for u, v in sorted(dipath_pairs(g)):
        out = out.add_edge(u, v)
    return out


@dataclass
class StructureReport:
    """Counts and two predictions for the second nontrivial coefficient.

    predicted_c1 is exact.  predicted_c2 is the first-order local count
    C(|A|+|D|+|E|, 2) - |T| - |D| - |O|; it is exact whenever D is empty
    but can overshoot otherwise, because a closure edge for a dipath pair
    may complete more than one triangle at once.  closure_c2 evaluates the
    same count on the closure (where D vanishes) and is exact in general.
    """

    n: int
    arc_count: int
    edge_count: int
    dipath_pairs: tuple
    obstructing_pairs: tuple
    triangle_count: int
    closure_triangle_count: int
    closure_obstructing_count: int
    predicted_c1: int = field(init=False)
    predicted_c2: int = field(init=False)
    closure_c2: int = field(init=False)

    def __post_init__(self):
        a, e = self.arc_count, self.edge_count
        d, o = len(self.dipath_pairs), len(self.obstructing_pairs)
        self.predicted_c1 = -(a + e + d)
        self.predicted_c2 = comb(a + d + e, 2) - self.triangle_count - d - o
        self.closure_c2 = (comb(a + d + e, 2) - self.closure_triangle_count
                           - self.closure_obstructing_count)

    def to_dict(self):
        return {
            "n": self.n,
            "arc_count": self.arc_count,
            "edge_count": self.edge_count,
            "dipath_pairs": [list(p) for p in self.dipath_pairs],
            "dipath_pair_count": len(self.dipath_pairs),
            "obstructing_pairs": [[list(a) for a in p] for p in self.obstructing_pairs],
            "obstructing_pair_count": len(self.obstructing_pairs),
            "triangle_count": self.triangle_count,
            "closure_triangle_count": self.closure_triangle_count,
            "closure_obstructing_count": self.closure_obstructing_count,
            "predicted_c1": self.predicted_c1,
            "predicted_c2": self.predicted_c2,
            "closure_c2": self.closure_c2,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def predict_coefficients(g: MixedGraph) -> StructureReport:
    """Counts plus the closed-form predictions for the coefficients of
    lambda**(n-1) and lambda**(n-2)."""
    closed = star_closure(g)
    return StructureReport(
        n=g.n,
        arc_count=g.arc_count,
        edge_count=g.edge_count,
        dipath_pairs=tuple(sorted(dipath_pairs(g))),
        obstructing_pairs=tuple(sorted(obstructing_pairs(g))),
        triangle_count=triangle_count(g),
        closure_triangle_count=triangle_count(closed),
        closure_obstructing_count=len(obstructing_pairs(closed)),
    )
