"""Independent brute-force oracles for the test suite.

Everything here recomputes results from first principles with plain dict
adjacency, explicit BFS and raw definition transcriptions, deliberately
sharing no algorithmic machinery with the package (graphs are only taken
apart via .n and .edges()).  These oracles define the expected values the
package is tested against.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations, permutations

from locdom import Graph


def adjacency(g: Graph) -> dict[int, set[int]]:
    adj = {v: set() for v in range(g.n)}
    for u, v in g.edges():
        adj[u].add(v)
        adj[v].add(u)
    return adj


def bfs_distances(adj: dict[int, set[int]], n: int, src: int) -> list:
    dist = {src: 0}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return [dist.get(v) for v in range(n)]


def is_connected(g: Graph) -> bool:
    adj = adjacency(g)
    return None not in bfs_distances(adj, g.n, 0)


def all_distances(g: Graph) -> list[list]:
    adj = adjacency(g)
    return [bfs_distances(adj, g.n, s) for s in range(g.n)]


# -- definition-transcribed predicates --------------------------------------


def brute_dominating(adj, n, subset) -> bool:
    chosen = set(subset)
    return all(v in chosen or adj[v] & chosen for v in range(n))


def brute_locating(dist, n, subset) -> bool:
    chosen = set(subset)
    vectors = [
        tuple(dist[v][x] for x in subset) for v in range(n) if v not in chosen
    ]
    return len(vectors) == len(set(vectors))


def brute_ld(adj, n, subset) -> bool:
    chosen = set(subset)
    traces = []
    for v in range(n):
        if v in chosen:
            continue
        t = frozenset(adj[v] & chosen)
        if not t:
            return False
        traces.append(t)
    return len(traces) == len(set(traces))


def brute_minimum(g: Graph, param: str):
    """(size, lexicographically least witness) by unseeded exhaustive scan."""
    n = g.n
    adj = adjacency(g)
    dist = all_distances(g)
    if param == "gamma":
        accept = lambda s: brute_dominating(adj, n, s)
    elif param == "beta":
        accept = lambda s: brute_locating(dist, n, s)
    elif param == "eta":
        accept = lambda s: brute_dominating(adj, n, s) and brute_locating(dist, n, s)
    elif param == "lambda":
        accept = lambda s: brute_ld(adj, n, s)
    else:
        raise ValueError(param)
    for k in range(1, n + 1):
        for subset in combinations(range(n), k):
            if accept(subset):
                return k, subset
    raise AssertionError("the full vertex set must qualify")


def brute_parameters(g: Graph) -> dict[str, int]:
    return {p: brute_minimum(g, p)[0] for p in ("gamma", "beta", "eta", "lambda")}


# -- brute-force isomorphism -------------------------------------------------


def _degree_sequence(g: Graph):
    return sorted(g.degrees())


def _distance_profile(g: Graph):
    rows = all_distances(g)
    return sorted(tuple(sorted(-1 if d is None else d for d in row)) for row in rows)


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    """Permutation search, pruned only by isomorphism-invariant facts."""
    if g.n != h.n or len(g.edges()) != len(h.edges()):
        return False
    if _degree_sequence(g) != _degree_sequence(h):
        return False
    if _distance_profile(g) != _distance_profile(h):
        return False
    g_edges = {frozenset(e) for e in g.edges()}
    h_edges = {frozenset(e) for e in h.edges()}
    for perm in permutations(range(g.n)):
        if all(frozenset((perm[u], perm[v])) in h_edges for u, v in g_edges):
            return True
    return False


# -- labeled enumeration oracle ----------------------------------------------


def labeled_connected_classes(n: int) -> list[Graph]:
    """Every connected graph class of order n, found by enumerating all
    2^C(n,2) labeled graphs and deduplicating with brute-force isomorphism."""
    pair_list = list(combinations(range(n), 2))
    buckets: dict[tuple, list[Graph]] = {}
    reps: list[Graph] = []
    for bits in range(1 << len(pair_list)):
        edges = [pair_list[i] for i in range(len(pair_list)) if (bits >> i) & 1]
        g = Graph(n, edges)
        if not is_connected(g):
            continue
        key = (tuple(_degree_sequence(g)), tuple(_distance_profile(g)))
        bucket = buckets.setdefault(key, [])
        if not any(brute_isomorphic(g, rep) for rep in bucket):
            bucket.append(g)
            reps.append(g)
    return reps


# -- trees --------------------------------------------------------------------


def prufer_tree(seq: tuple[int, ...]) -> Graph:
    """Tree of order len(seq) + 2 decoded from its Prufer sequence."""
    n = len(seq) + 2
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    remaining = list(seq)
    for v in remaining:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    last = [u for u in range(n) if degree[u] == 1]
    edges.append((last[0], last[1]))
    return Graph(n, edges)


def prufer_tree_class_count(n: int) -> int:
    """Number of tree classes of order n via all n^(n-2) Prufer sequences,
    deduplicated by brute-force isomorphism."""
    if n == 1 or n == 2:
        return 1
    reps: list[Graph] = []
    from itertools import product

    for seq in product(range(n), repeat=n - 2):
        t = prufer_tree(seq)
        if not any(brute_isomorphic(t, rep) for rep in reps):
            reps.append(t)
    return len(reps)
