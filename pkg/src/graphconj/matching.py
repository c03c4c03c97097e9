"""Maximum matching in general graphs (Edmonds' blossom algorithm)."""

from __future__ import annotations

from collections import deque

from .graph import Graph, bits


def maximum_matching(G: Graph) -> list[tuple[int, int]]:
    """A maximum matching as sorted ``(u, v)`` pairs with ``u < v``.

    Augmenting paths are grown by BFS from each exposed vertex; odd cycles
    are shrunk onto their base vertex.
    """
    n = G.n
    nbrs = [list(bits(G.adj[v])) for v in range(n)]
    match = [-1] * n

    # greedy start; exposed vertices are still searched afterwards
    for u in range(n):
        if match[u] < 0:
            for v in nbrs[u]:
                if match[v] < 0:
                    match[u], match[v] = v, u
                    break

    for root in range(n):
        if match[root] < 0:
            _augment_from(root, nbrs, match)

    return sorted((u, v) for u, v in enumerate(match) if u < v)


def _augment_from(root: int, nbrs: list[list[int]], match: list[int]) -> bool:
    n = len(nbrs)
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] < 0:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in nbrs[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] >= 0 and parent[match[to]] >= 0):
                cur = lca(v, to)
                in_blossom = [False] * n
                mark_path(v, cur, to, in_blossom)
                mark_path(to, cur, v, in_blossom)
                for i in range(n):
                    if in_blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] < 0:
                parent[to] = v
                if match[to] < 0:
                    # flip the alternating path ending at ``to``
                    while to >= 0:
                        pv = parent[to]
                        nxt = match[pv]
                        match[to], match[pv] = pv, to
                        to = nxt
                    return True
                used[match[to]] = True
                queue.append(match[to])
    return False


def matching_number(G: Graph) -> int:
    return len(maximum_matching(G))


def is_matching(G: Graph, edges: list[tuple[int, int]]) -> bool:
    covered = 0
    for u, v in edges:
        if not G.has_edge(u, v) or covered >> u & 1 or covered >> v & 1:
            return False
        covered |= 1 << u | 1 << v
    return True


def is_maximal_matching(G: Graph, edges: list[tuple[int, int]]) -> bool:
    """Matching whose unmatched vertices form an independent set."""
    if not is_matching(G, edges):
        return False
    covered = 0
    for u, v in edges:
        covered |= 1 << u | 1 << v
    free = G.full & ~covered
    return all(not (G.adj[v] & free) for v in bits(free))
