"""Immutable simple graphs on vertices 0..n-1 with bitset adjacency.

Every graph in this package lives on the vertex set {0, ..., n-1} with no
holes, no loops and no multi-edges.  Adjacency is stored as one Python
integer bitmask per vertex, so neighbourhood intersections, domination
checks and subset tests are single word-level operations for the graph
sizes this library targets (n up to a few dozen).

Graphs are immutable and hashable; derived data (all-pairs distances,
canonical form) is cached on the instance after first computation, which
is semantically invisible.  Disconnected graphs are representable, but
operations that need connectivity raise :class:`DisconnectedGraphError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "UNREACHABLE",
    "DisconnectedGraphError",
    "Graph",
    "DistanceMatrix",
    "TreeProfile",
    "tree_profile",
    "strong_product",
    "join",
    "disjoint_union",
    "complement",
    "relabeled",
]

#: Distance-matrix entry for a pair with no connecting path.
UNREACHABLE = -1


class DisconnectedGraphError(ValueError):
    """An operation that requires a connected graph received one that is not."""


class DistanceMatrix:
    """All-pairs hop distances of a graph.

    ``dm[u][v]`` is the length of a shortest u-v path, or :data:`UNREACHABLE`
    when no path exists.  Rows are plain tuples.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: tuple[tuple[int, ...], ...]):
        self.rows = rows

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, v: int) -> tuple[int, ...]:
        return self.rows[v]

    @property
    def is_connected(self) -> bool:
        return all(UNREACHABLE not in row for row in self.rows)

    def max_distance(self) -> int:
        """Largest finite entry (the diameter when the graph is connected)."""
        return max(max(row) for row in self.rows)

    def __repr__(self) -> str:  # pragma: no cover
        return f"DistanceMatrix(n={self.n})"


def _bfs_row(rows: Sequence[int], n: int, src: int) -> tuple[int, ...]:
    dist = [UNREACHABLE] * n
    seen = frontier = 1 << src
    d = 0
    while frontier:
        m = frontier
        while m:
            low = m & -m
            dist[low.bit_length() - 1] = d
            m ^= low
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= rows[low.bit_length() - 1]
            m ^= low
        frontier = nxt & ~seen
        seen |= frontier
        d += 1
    return tuple(dist)


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "_rows", "_nbrs", "_dist", "_canon", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"graph order must be a positive integer, got {n!r}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) has a vertex outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop edge ({u},{v}) is not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self._rows = tuple(rows)
        self._nbrs = None
        self._dist = None
        self._canon = None
        self._hash = None

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an explicit edge list (duplicates collapse)."""
        return cls(n, edges)

    @classmethod
    def _from_rows(cls, rows: Sequence[int]) -> "Graph":
        # Internal fast path: trusts that rows are symmetric and loop-free.
        g = object.__new__(cls)
        g.n = len(rows)
        g._rows = tuple(rows)
        g._nbrs = None
        g._dist = None
        g._canon = None
        g._hash = None
        return g

    # -- basic queries -------------------------------------------------

    def neighbors_mask(self, v: int) -> int:
        """Bitmask of the open neighborhood N(v)."""
        return self._rows[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return _bits(self._rows[v])

    def _neighbor_lists(self) -> tuple[tuple[int, ...], ...]:
        if self._nbrs is None:
            self._nbrs = tuple(_bits(r) for r in self._rows)
        return self._nbrs

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self._rows)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._rows[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            row = self._rows[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    out.append((u, v))
                row >>= 1
                v += 1
        return out

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self._rows) // 2

    # -- distances -----------------------------------------------------

    def distance_matrix(self) -> DistanceMatrix:
        """All-pairs hop distances, computed once by per-vertex BFS."""
        if self._dist is None:
            rows = self._rows
            n = self.n
            self._dist = DistanceMatrix(tuple(_bfs_row(rows, n, s) for s in range(n)))
        return self._dist

    def is_connected(self) -> bool:
        if self._dist is not None:
            return self._dist.is_connected
        return UNREACHABLE not in _bfs_row(self._rows, self.n, 0)

    def diameter(self) -> int:
        """Maximum distance over all vertex pairs; requires connectivity."""
        dm = self.distance_matrix()
        if not dm.is_connected:
            raise DisconnectedGraphError("diameter is undefined for disconnected graphs")
        return dm.max_distance()

    def is_tree(self) -> bool:
        return self.edge_count == self.n - 1 and self.is_connected()

    # -- dunder --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self._rows))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph({self.n}, {self.edges()!r})"


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


# -- graph operators ----------------------------------------------------


def strong_product(g: Graph, h: Graph) -> Graph:
    """Strong product: pairs adjacent iff each coordinate is equal or adjacent.

    Vertex (i, j) maps to index i*h.n + j (row-major).  The strong product
    of two paths is the king grid.
    """
    hn = h.n
    n = g.n * hn
    rows = [0] * n
    for i in range(g.n):
        gi = g.neighbors_mask(i) | (1 << i)
        for j in range(hn):
            hj = h.neighbors_mask(j) | (1 << j)
            base = i * hn + j
            row = 0
            mi = gi
            while mi:
                low = mi & -mi
                i2 = low.bit_length() - 1
                mi ^= low
                row |= hj << (i2 * hn)
            rows[base] = row & ~(1 << base)
    return Graph._from_rows(rows)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; h's vertices are shifted up by g.n."""
    shift = g.n
    rows = list(g._rows) + [r << shift for r in h._rows]
    return Graph._from_rows(rows)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every cross edge."""
    shift = g.n
    gfull = (1 << shift) - 1
    hfull = ((1 << h.n) - 1) << shift
    rows = [r | hfull for r in g._rows]
    rows += [(r << shift) | gfull for r in h._rows]
    return Graph._from_rows(rows)


def complement(g: Graph) -> Graph:
    """Flip every non-loop pair."""
    full = (1 << g.n) - 1
    rows = [(~r & full) & ~(1 << v) for v, r in enumerate(g._rows)]
    return Graph._from_rows(rows)


def relabeled(g: Graph, mapping: Sequence[int]) -> Graph:
    """Apply a vertex permutation: ``mapping[old] = new``."""
    if sorted(mapping) != list(range(g.n)):
        raise ValueError("mapping is not a permutation of the vertex set")
    rows = [0] * g.n
    for u in range(g.n):
        ru = g._rows[u]
        nu = mapping[u]
        row = 0
        while ru:
            low = ru & -ru
            row |= 1 << mapping[low.bit_length() - 1]
            ru ^= low
        rows[nu] = row
    return Graph._from_rows(rows)


# -- trees ---------------------------------------------------------------


@dataclass(frozen=True)
class TreeProfile:
    """Leaf/support structure of a tree."""

    leaves: tuple[int, ...]
    supports: tuple[int, ...]
    strong_supports: tuple[int, ...]

    @property
    def leaf_count(self) -> int:
        return len(self.leaves)

    @property
    def support_count(self) -> int:
        return len(self.supports)


def tree_profile(g: Graph) -> TreeProfile:
    """Leaves, support vertices (adjacent to a leaf) and strong supports
    (adjacent to at least two leaves) of a tree."""
    if not g.is_tree():
        raise ValueError("tree_profile requires a tree (connected, n-1 edges)")
    leaves = tuple(v for v in range(g.n) if g.degree(v) == 1)
    leaf_mask = 0
    for v in leaves:
        leaf_mask |= 1 << v
    supports = []
    strong = []
    for v in range(g.n):
        k = (g.neighbors_mask(v) & leaf_mask).bit_count()
        if k >= 1:
            supports.append(v)
        if k >= 2:
            strong.append(v)
    return TreeProfile(leaves, tuple(supports), tuple(strong))
