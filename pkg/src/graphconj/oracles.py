"""Brute-force reference values, straight from the definitions.

Deliberately slow and independent of the solvers in :mod:`graphconj.invariants`:
vertex sets are enumerated by cardinality with ``itertools.combinations`` and
checked with plain Python sets.  Intended for n <= 12 (vertex invariants) and
small edge counts (matching invariants).
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph
from .invariants import InvariantId, InvariantUndefined

MAX_VERTEX_ORDER = 12


def _nbrs(G: Graph) -> list[set[int]]:
    return [{u for u in range(G.n) if G.adj[v] >> u & 1} for v in range(G.n)]


def _connected(N: list[set[int]], S: set[int]) -> bool:
    if not S:
        return False
    start = next(iter(S))
    seen, stack = {start}, [start]
    while stack:
        v = stack.pop()
        for u in N[v] & S:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return seen == S


def _largest(G: Graph, ok) -> int:
    for size in range(G.n, -1, -1):
        if any(ok(set(S)) for S in combinations(range(G.n), size)):
            return size
    raise AssertionError("empty set always qualifies")


def _smallest(G: Graph, ok) -> int:
    for size in range(0, G.n + 1):
        if any(ok(set(S)) for S in combinations(range(G.n), size)):
            return size
    raise InvariantUndefined("no set satisfies the predicate")


def alpha_k(G: Graph, k: int, within: set[int] | None = None) -> int:
    N = _nbrs(G)
    pool = sorted(range(G.n) if within is None else within)
    for size in range(len(pool), -1, -1):
        for S in combinations(pool, size):
            s = set(S)
            if all(len(N[v] & s) <= k for v in s):
                return size
    return 0


def alpha_local_k(G: Graph, k: int) -> int:
    N = _nbrs(G)
    return max((alpha_k(G, k, N[v]) for v in range(G.n)), default=0)


def gamma(G: Graph) -> int:
    N = _nbrs(G)
    return _smallest(G, lambda S: all(v in S or N[v] & S for v in range(G.n)))


def gamma_total(G: Graph) -> int:
    N = _nbrs(G)
    if any(not nb for nb in N):
        raise InvariantUndefined("isolated vertex")
    return _smallest(G, lambda S: all(N[v] & S for v in range(G.n)))


def gamma_k(G: Graph, k: int) -> int:
    N = _nbrs(G)
    return _smallest(G, lambda S: all(v in S or len(N[v] & S) >= k for v in range(G.n)))


def gamma_connected(G: Graph) -> int:
    N = _nbrs(G)
    if not _connected(N, set(range(G.n))):
        raise InvariantUndefined("disconnected")
    return _smallest(
        G, lambda S: _connected(N, S) and all(v in S or N[v] & S for v in range(G.n))
    )


def gamma_independent(G: Graph) -> int:
    N = _nbrs(G)
    return _smallest(
        G,
        lambda S: all(not (N[v] & S) for v in S) and all(v in S or N[v] & S for v in range(G.n)),
    )


def all_matchings(G: Graph) -> list[list[tuple[int, int]]]:
    """Every matching of G, including the empty one."""
    edges = G.edges()
    out: list[list[tuple[int, int]]] = []

    def rec(i: int, used: set[int], chosen: list[tuple[int, int]]) -> None:
        if i == len(edges):
            out.append(list(chosen))
            return
        rec(i + 1, used, chosen)
        u, v = edges[i]
        if u not in used and v not in used:
            chosen.append((u, v))
            rec(i + 1, used | {u, v}, chosen)
            chosen.pop()

    rec(0, set(), [])
    return out


def mu(G: Graph) -> int:
    return max(len(M) for M in all_matchings(G))


def gamma_edge(G: Graph) -> int:
    edges = G.edges()
    if not edges:
        raise InvariantUndefined("edgeless")
    best = None
    for M in all_matchings(G):
        used = {x for e in M for x in e}
        if all(u in used or v in used for u, v in edges):
            best = len(M) if best is None else min(best, len(M))
    return best


def compute(G: Graph, inv: InvariantId) -> int:
    kind = inv.kind
    if kind == "alpha":
        return alpha_k(G, 0)
    if kind == "alpha_k":
        return alpha_k(G, inv.k)
    if kind == "alpha_local_k":
        return alpha_local_k(G, inv.k)
    if kind == "mu":
        return mu(G)
    if kind == "gamma":
        return gamma(G)
    if kind == "gamma_total":
        return gamma_total(G)
    if kind == "gamma_k":
        return gamma_k(G, inv.k)
    if kind == "gamma_connected":
        return gamma_connected(G)
    if kind == "gamma_independent":
        return gamma_independent(G)
    if kind == "gamma_edge":
        return gamma_edge(G)
    raise ValueError(kind)


def spanning_trees(G: Graph) -> list[list[tuple[int, int]]]:
    """All spanning trees as edge lists (n - 1 edge subsets that connect G)."""
    edges = G.edges()
    out = []
    for T in combinations(edges, G.n - 1):
        parent = list(range(G.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for u, v in T:
            a, b = find(u), find(v)
            if a == b:
                ok = False
                break
            parent[a] = b
        if ok:
            out.append(list(T))
    return out
