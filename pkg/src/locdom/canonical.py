"""Canonical forms, isomorphism tests and automorphism generators.

The canonical form of a graph is the graph6 encoding of a canonically
relabelled copy, so two graphs are isomorphic exactly when their forms
are byte-equal and the form doubles as a serialization.

Labelling search: iterated neighbour-colour refinement produces an
ordered partition; the first non-singleton cell is individualised in all
inequivalent ways and the search recurses, keeping the labelling whose
packed upper-triangle adjacency bits are lexicographically least.  Leaves
that tie with the current best reveal automorphisms, which prune sibling
branches (one representative per orbit of the stabiliser of the fixed
prefix).  Validated against brute-force permutation isomorphism on all
connected graphs up to n = 6.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph
from .graph6 import write_graph6

__all__ = [
    "canonical_form",
    "canonical_labeling",
    "automorphism_generators",
    "are_isomorphic",
]


def _refine(nbrs: Sequence[Sequence[int]], colors: list[int]) -> list[int]:
    """Stable neighbour-colour refinement of an ordered partition.

    Cell order is invariant: new colours sort by (old colour, sorted
    multiset of neighbour colours), so refinement only splits cells in
    place and never reorders them.
    """
    n = len(colors)
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in nbrs[v])))
            for v in range(n)
        ]
        remap = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [remap[s] for s in sigs]
        if new == colors:
            return new
        colors = new


def _columns(rows: Sequence[int], lab: Sequence[int]) -> tuple[int, ...]:
    # lab[position] = vertex; column j packs adjacency bits to positions < j.
    cols = []
    for j in range(1, len(lab)):
        rj = rows[lab[j]]
        c = 0
        for i in range(j):
            c = (c << 1) | ((rj >> lab[i]) & 1)
        cols.append(c)
    return tuple(cols)


def _search(g: Graph) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Return (canonical labelling position->vertex, automorphism generators)."""
    n = g.n
    if n == 1:
        return (0,), ()
    rows = g._rows
    nbrs = g._neighbor_lists()

    best_cols: tuple[int, ...] | None = None
    best_lab: list[int] | None = None
    gens: list[tuple[int, ...]] = []

    def rec(colors: list[int], fixed: list[int]) -> None:
        nonlocal best_cols, best_lab
        ncells = max(colors) + 1
        if ncells == n:
            lab = [0] * n
            for v in range(n):
                lab[colors[v]] = v
            cols = _columns(rows, lab)
            if best_cols is None or cols < best_cols:
                best_cols = cols
                best_lab = lab
            elif cols == best_cols:
                perm = [0] * n
                for i in range(n):
                    perm[best_lab[i]] = lab[i]
                gens.append(tuple(perm))
            return
        cells = [[] for _ in range(ncells)]
        for v in range(n):
            cells[colors[v]].append(v)
        target = next(cell for cell in cells if len(cell) > 1)
        explored: list[int] = []
        for v in target:
            if explored and _in_orbit(v, explored, gens, fixed):
                continue
            branch = [2 * c for c in colors]
            branch[v] -= 1
            rec(_refine(nbrs, branch), fixed + [v])
            explored.append(v)

    rec(_refine(nbrs, [0] * n), [])
    return tuple(best_lab), tuple(gens)


def _in_orbit(
    v: int,
    explored: list[int],
    gens: list[tuple[int, ...]],
    fixed: list[int],
) -> bool:
    """Is v reachable from an explored sibling under automorphisms that fix
    the individualised prefix pointwise?"""
    live = [p for p in gens if all(p[f] == f for f in fixed)]
    if not live:
        return False
    orbit = set(explored)
    frontier = list(explored)
    while frontier:
        u = frontier.pop()
        for p in live:
            w = p[u]
            if w == v:
                return True
            if w not in orbit:
                orbit.add(w)
                frontier.append(w)
    return False


def _canonical_data(g: Graph):
    if g._canon is None:
        lab, gens = _search(g)
        inverse = [0] * g.n
        for pos, v in enumerate(lab):
            inverse[v] = pos
        from .graph import relabeled

        form = write_graph6(relabeled(g, inverse))
        g._canon = (form, lab, gens)
    return g._canon


def canonical_form(g: Graph) -> bytes:
    """Canonical byte encoding: equal for two graphs iff they are isomorphic."""
    return _canonical_data(g)[0]


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """The labelling (position -> vertex) realising the canonical form."""
    return _canonical_data(g)[1]


def automorphism_generators(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Automorphisms discovered by the canonical search (generators of a
    subgroup of Aut(g); empty for graphs the refinement fully separates)."""
    return _canonical_data(g)[2]


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Isomorphism test via canonical forms, with cheap invariant cutoffs."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
