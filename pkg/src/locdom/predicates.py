"""Code predicates: domination, location, and their combinations.

For a graph G and a vertex subset S (a *code*, an ordered tuple of
distinct vertices):

* ``is_dominating``: every vertex outside S has a neighbour in S.
* ``is_locating``: the metric vectors (d(v, x) for x in S) of the
  vertices outside S are pairwise distinct.  A vertex inside S is the
  unique vertex at distance 0 from itself, so restricting the pairwise
  check to V minus S loses nothing; this is the standard resolving-set
  reading and does not change any minimum value.
* ``is_mld``: dominating and locating simultaneously.
* ``is_ld``: every vertex outside S has a nonempty neighbourhood trace
  N(v) & S, and the traces are pairwise distinct.

Empty codes: the empty set dominates nothing (False for any n >= 1) and
locates only the one-vertex graph (zero-length vectors collide otherwise).

``is_dominating`` and ``is_ld`` are pure neighbourhood conditions and
accept any graph; the metric predicates need finite distances and raise
:class:`~locdom.graph.DisconnectedGraphError` on disconnected input.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .graph import DisconnectedGraphError, Graph

__all__ = [
    "Code",
    "metric_vector",
    "is_dominating",
    "is_locating",
    "is_mld",
    "is_ld",
]

#: A code is an ordered tuple of distinct vertex indices.
Code = tuple[int, ...]


def _as_code(g: Graph, code: Iterable[int]) -> Code:
    code = tuple(code)
    seen = 0
    for v in code:
        if not (isinstance(v, int) and 0 <= v < g.n):
            raise ValueError(f"code member {v!r} outside 0..{g.n - 1}")
        bit = 1 << v
        if seen & bit:
            raise ValueError(f"duplicate code member {v}")
        seen |= bit
    return code


def _mask_of(code: Sequence[int]) -> int:
    mask = 0
    for v in code:
        mask |= 1 << v
    return mask


def _dist_rows(g: Graph):
    dm = g.distance_matrix()
    if not dm.is_connected:
        raise DisconnectedGraphError("metric predicates require a connected graph")
    return dm.rows


def metric_vector(g: Graph, code: Iterable[int], v: int) -> tuple[int, ...]:
    """Distances from v to each code member, in the code's fixed order."""
    code = _as_code(g, code)
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    dist = _dist_rows(g)
    dv = dist[v]
    return tuple(dv[x] for x in code)


def is_dominating(g: Graph, code: Iterable[int]) -> bool:
    """True iff every vertex outside the code has a neighbour in it."""
    code = _as_code(g, code)
    mask = cov = 0
    rows = g._rows
    for v in code:
        mask |= 1 << v
        cov |= rows[v]
    return (cov | mask) == (1 << g.n) - 1


def is_locating(g: Graph, code: Iterable[int]) -> bool:
    """True iff vertices outside the code have pairwise distinct metric vectors."""
    code = _as_code(g, code)
    dist = _dist_rows(g)
    return _locates(dist, g.n, _mask_of(code), code)


def is_mld(g: Graph, code: Iterable[int]) -> bool:
    """Dominating and locating at once."""
    code = _as_code(g, code)
    return is_dominating(g, code) and _locates(
        _dist_rows(g), g.n, _mask_of(code), code
    )


def is_ld(g: Graph, code: Iterable[int]) -> bool:
    """True iff neighbourhood traces outside the code are nonempty and
    pairwise distinct."""
    code = _as_code(g, code)
    return _ld_ok(g._rows, g.n, _mask_of(code))


# -- fast inner checks (shared with the exact solvers) --------------------


def _locates(dist, n: int, mask: int, code: Sequence[int], shift: int = 0) -> bool:
    # metric vectors packed as integers; distances are < n, so n's bit
    # length is a collision-free field width
    if not shift:
        shift = max(1, (n - 1).bit_length())
    seen = set()
    for v in range(n):
        if (mask >> v) & 1:
            continue
        dv = dist[v]
        key = 0
        for x in code:
            key = (key << shift) | dv[x]
        if key in seen:
            return False
        seen.add(key)
    return True


def _ld_ok(rows, n: int, mask: int) -> bool:
    seen = set()
    for v in range(n):
        if (mask >> v) & 1:
            continue
        t = rows[v] & mask
        if not t or t in seen:
            return False
        seen.add(t)
    return True


def _dominates(rows, full: int, code: Sequence[int]) -> bool:
    mask = cov = 0
    for v in code:
        mask |= 1 << v
        cov |= rows[v]
    return (cov | mask) == full
