"""Bitset graph representation, graph6 codec and structural predicates.

Vertex sets are plain ``int`` bit masks over vertex indices ``0..n-1``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

MAX_ORDER = 64


class GraphError(ValueError):
    """Raised for malformed graphs, vertex sets or graph6 input."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the open neighborhood of ``v`` as a bit mask.
    """

    n: int
    adj: tuple[int, ...]
    _checked: bool = field(default=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not 0 < self.n <= MAX_ORDER:
            raise GraphError(f"order must be in 1..{MAX_ORDER}, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match order")
        if self._checked:
            return
        full = self.full
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(popcount(nb) for nb in self.adj)

    @property
    def min_degree(self) -> int:
        return min(self.degrees)

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    @cached_property
    def m(self) -> int:
        return sum(self.degrees) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def closed(self, v: int) -> int:
        return self.adj[v] | 1 << v

    def neighborhood(self, mask: int) -> int:
        """Open neighborhood N(S) of a vertex set."""
        out = 0
        for v in bits(mask):
            out |= self.adj[v]
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    @cached_property
    def graph6(self) -> str:
        return encode_graph6(self).decode("ascii")

    def __str__(self) -> str:
        return self.graph6


def check_mask(G: Graph, mask: int) -> None:
    if mask < 0 or mask & ~G.full:
        raise GraphError(f"vertex set {mask:#x} has bits outside 0..{G.n - 1}")


# -- graph6 -----------------------------------------------------------------


def encode_graph6(G: Graph) -> bytes:
    n = G.n
    if n <= 62:
        out = bytearray([n + 63])
    else:
        out = bytearray([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    acc = nbits = 0
    for j in range(1, n):
        col = G.adj[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def parse_graph6(text: bytes | str) -> Graph:
    if isinstance(text, str):
        text = text.encode("ascii")
    data = text.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data:
        raise GraphError("empty graph6 string")
    if any(b < 63 or b > 126 for b in data):
        raise GraphError("graph6 bytes must lie in 63..126")
    if data[0] != 126:
        n, body = data[0] - 63, data[1:]
    else:
        if len(data) >= 2 and data[1] == 126:
            raise GraphError("8-byte size form is not supported (n > 64)")
        if len(data) < 4:
            raise GraphError("truncated long-form size")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        body = data[4:]
        if n < 63:
            raise GraphError(f"long-form size used for n={n}")
    if n == 0:
        raise GraphError("graph6 string encodes the empty graph")
    if n > MAX_ORDER:
        raise GraphError(f"order {n} exceeds the cap of {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise GraphError(f"expected {need} data bytes for n={n}, got {len(body)}")
    adj = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if (body[pos // 6] - 63) >> (5 - pos % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos += 1
    pad = need * 6 - nbits
    if pad and (body[-1] - 63) & ((1 << pad) - 1):
        raise GraphError("nonzero padding bits")
    return Graph(n, tuple(adj), _checked=True)


# -- subgraphs and edge counts ----------------------------------------------


def induced_subgraph(G: Graph, S: int) -> Graph:
    """G[S] relabeled to ``0..|S|-1`` in ascending order of original labels."""
    check_mask(G, S)
    if not S:
        raise GraphError("induced subgraph of the empty set")
    verts = list(bits(S))
    index = {v: i for i, v in enumerate(verts)}
    adj = []
    for v in verts:
        adj.append(mask_of(index[u] for u in bits(G.adj[v] & S)))
    return Graph(len(verts), tuple(adj), _checked=True)


def edges_within(G: Graph, S: int) -> int:
    """|E(G[S])|."""
    return sum(popcount(G.adj[v] & S) for v in bits(S)) // 2


def edges_between(G: Graph, X: int, Y: int) -> int:
    """|[X, Y]| for disjoint vertex sets."""
    check_mask(G, X)
    check_mask(G, Y)
    if X & Y:
        raise GraphError("edges_between requires disjoint vertex sets")
    return sum(popcount(G.adj[v] & Y) for v in bits(X))


# -- structural predicates --------------------------------------------------


def component_of(G: Graph, v: int, within: int | None = None) -> int:
    """Vertex mask of the component of ``v`` in G[within]."""
    within = G.full if within is None else within
    seen = 1 << v
    frontier = seen
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= G.adj[u]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def is_connected(G: Graph) -> bool:
    return component_of(G, 0) == G.full


def is_connected_set(G: Graph, S: int) -> bool:
    if not S:
        return False
    return component_of(G, (S & -S).bit_length() - 1, S) == S


def connected_sets(G: Graph, size: int) -> Iterator[int]:
    """Every vertex set of the given size inducing a connected subgraph, once each.

    Sets are grown from their lowest vertex through exclusive neighborhoods.
    """
    adj = G.adj
    full = G.full

    def grow(S: int, near: int, ext: int, low: int) -> Iterator[int]:
        if popcount(S) == size:
            yield S
            return
        while ext:
            w = (ext & -ext).bit_length() - 1
            ext &= ~(1 << w)
            fresh = adj[w] & ~S & ~near & ~((1 << (low + 1)) - 1)
            yield from grow(S | 1 << w, near | adj[w], ext | fresh, low)

    if size < 1:
        return
    for v in range(G.n):
        above = full & ~((1 << (v + 1)) - 1)
        yield from grow(1 << v, adj[v] | 1 << v, adj[v] & above, v)


def is_bipartite(G: Graph) -> bool:
    color = [-1] * G.n
    for s in range(G.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in bits(G.adj[v]):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def is_tree(G: Graph) -> bool:
    return G.m == G.n - 1 and is_connected(G)


def regularity(G: Graph) -> int | None:
    """The common degree r if G is r-regular, else None."""
    d = G.degrees
    return d[0] if min(d) == max(d) else None


def is_triangle_free(G: Graph) -> bool:
    return all(not (G.adj[u] & G.adj[v]) for u, v in G.edges())


def _has_independent_subset(G: Graph, cand: int, size: int) -> bool:
    # independent set of ``size`` vertices inside ``cand``
    if size <= 0:
        return True
    if popcount(cand) < size:
        return False
    v = (cand & -cand).bit_length() - 1
    rest = cand & ~(1 << v)
    return _has_independent_subset(G, rest & ~G.adj[v], size - 1) or _has_independent_subset(
        G, rest, size
    )


def is_star_free(G: Graph, r: int) -> bool:
    """True iff G has no induced K_{1,r}: every neighborhood has independence number < r."""
    if r < 1:
        raise GraphError("K_{1,r}-freeness needs r >= 1")
    return not any(_has_independent_subset(G, G.adj[v], r) for v in range(G.n))


def is_claw_free(G: Graph) -> bool:
    return is_star_free(G, 3)


@dataclass(frozen=True)
class StructuralPredicates:
    connected: bool
    tree: bool
    bipartite: bool
    regular: int | None
    claw_free: bool
    triangle_free: bool
    has_isolated_vertex: bool
    star_free: dict[int, bool]

    def is_regular(self, r: int) -> bool:
        return self.regular == r


def structural_predicates(G: Graph, star_r: Iterable[int] = ()) -> StructuralPredicates:
    return StructuralPredicates(
        connected=is_connected(G),
        tree=is_tree(G),
        bipartite=is_bipartite(G),
        regular=regularity(G),
        claw_free=is_claw_free(G),
        triangle_free=is_triangle_free(G),
        has_isolated_vertex=G.min_degree == 0,
        star_free={r: is_star_free(G, r) for r in star_r},
    )


def has_induced_star_bruteforce(G: Graph, r: int) -> bool:
    """Exhaustive search for an induced K_{1,r}; reference for :func:`is_star_free`."""
    for c in range(G.n):
        nbrs = list(bits(G.adj[c]))
        for leaves in combinations(nbrs, r):
            if all(not G.has_edge(a, b) for a, b in combinations(leaves, 2)):
                return True
    return False


# -- named graphs -----------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def disjoint_union(G: Graph, H: Graph) -> Graph:
    return Graph.from_edges(G.n + H.n, G.edges() + [(u + G.n, v + G.n) for u, v in H.edges()])
