"""Canonical forms for small mixed graphs.

The reduction recursion meets the same subproblem under many labelings, so
memoization keys must identify graphs up to isomorphism.  We refine vertices
into cells by an isomorphism-invariant colouring, then take the minimum
relation encoding over all cell-respecting orderings.  Exhaustive at desk
scale; if the within-cell permutation count exceeds a cap, the key falls
back to the refined labeled encoding, which only equates identical graphs
(fewer cache hits, still correct).
"""

from __future__ import annotations

import itertools
from math import factorial

from .graph import MixedGraph


def relation_matrix(g: MixedGraph):
    """m[u][v]: 0 none, 1 edge, 2 arc u->v, 3 arc v->u."""
    n = g.n
    m = [[0] * n for _ in range(n)]
    for u in range(n):
        for v in range(n):
            if u != v:
                m[u][v] = g.code(u, v)
    return m


def pair_encoding(g: MixedGraph):
    """Relation codes for pairs (i, j), i < j, in lexicographic pair order."""
    return permuted_encoding(g, range(g.n))


def permuted_encoding(g: MixedGraph, order):
    """Encoding of g relabeled so new vertex i is old vertex order[i]."""
    order = list(order)
    return tuple(g.code(order[i], order[j])
                 for i in range(g.n) for j in range(i + 1, g.n))


def all_encodings(g: MixedGraph):
    """Encodings of g under every relabeling (small n only)."""
    return {permuted_encoding(g, p) for p in itertools.permutations(range(g.n))}


def _refine_cells(g: MixedGraph):
    """Equitable-style refinement; returns cells in a canonical order."""
    n = g.n
    colour = {v: g.degree_triple(v) for v in range(n)}
    classes = -1
    while True:
        sig = {}
        for v in range(n):
            rels = sorted((g.code(v, w), colour[w])
                          for w in range(n) if w != v and g.code(v, w))
            sig[v] = (colour[v], tuple(rels))
        palette = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new_colour = {v: (palette[sig[v]],) for v in range(n)}
        new_classes = len(palette)
        if new_classes == classes:
            break
        colour, classes = new_colour, new_classes
    cells = {}
    for v in range(n):
        cells.setdefault(colour[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def canonical_key(g: MixedGraph, perm_cap: int = 200_000):
    """Hashable key equal for isomorphic graphs (below the permutation cap)."""
    n = g.n
    if n <= 1:
        return (n, ())
    cells = _refine_cells(g)
    count = 1
    for cell in cells:
        count *= factorial(len(cell))
        if count > perm_cap:
            order = [v for cell in cells for v in cell]
            return ("raw", n, permuted_encoding(g, order))
    best = None
    for parts in itertools.product(*(itertools.permutations(c) for c in cells)):
        order = [v for part in parts for v in part]
        enc = permuted_encoding(g, order)
        if best is None or enc < best:
            best = enc
    return (n, best)
