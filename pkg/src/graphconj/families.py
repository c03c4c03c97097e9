"""Constructors for the sharpness families and membership certifiers."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graph import Graph, GraphError, bits, is_bipartite, is_tree, mask_of, popcount, regularity

CERTIFY_GR_MAX_ORDER = 24


@dataclass(frozen=True)
class FamilyCertificate:
    """Witness of family membership.

    ``partition`` is ``(A, B)`` as vertex masks for ``G_r``; ``tree_edges`` is
    the spanning (1,r)-tree for ``spanning_1r_tree_host``.
    """

    family: str
    parameter: int
    partition: tuple[int, int] | None = None
    tree_edges: tuple[tuple[int, int], ...] = field(default=())

    def describe(self) -> str:
        if self.partition is not None:
            A, B = self.partition
            return f"{self.family}(r={self.parameter}) A={sorted(bits(A))} B={sorted(bits(B))}"
        return f"{self.family}(r={self.parameter}) T={list(self.tree_edges)}"


# -- G_r ---------------------------------------------------------------------------


def build_Gr_example(r: int) -> Graph:
    """The 4r-vertex member of G_r generalizing the cubic and quartic examples.

    Labels: x1=0, x2=1, y1=2, y2=3, then the left K_{r-1,r-1} (a-side, b-side)
    and the right one (c-side, d-side).
    """
    if r < 2:
        raise GraphError("G_r needs r >= 2")
    x1, x2, y1, y2 = 0, 1, 2, 3
    s = r - 1
    a = range(4, 4 + s)
    b = range(4 + s, 4 + 2 * s)
    c = range(4 + 2 * s, 4 + 3 * s)
    d = range(4 + 3 * s, 4 + 4 * s)
    edges = [(x1, x2), (y1, y2)]
    edges += [(u, v) for u in a for v in b] + [(u, v) for u in c for v in d]
    edges += [(x1, u) for u in a] + [(y1, u) for u in b]
    edges += [(x2, u) for u in c] + [(y2, u) for u in d]
    return Graph.from_edges(4 * r, edges)


def Gr_example_partition(r: int) -> tuple[int, int]:
    """The intended (A, B) of :func:`build_Gr_example`."""
    B = 0b1111
    return ((1 << 4 * r) - 1) & ~B, B


def _exact_open_covers(G: Graph) -> list[int]:
    """All B with |N(v) & B| = 1 for every vertex v."""
    adj = G.adj
    found: list[int] = []

    def rec(covered: int, B: int, banned: int) -> None:
        if covered == G.full:
            found.append(B)
            return
        best_u, best_opts = -1, None
        for u in bits(G.full & ~covered):
            opts = [b for b in bits(adj[u] & ~banned) if not adj[b] & covered]
            if best_opts is None or len(opts) < len(best_opts):
                best_u, best_opts = u, opts
                if len(opts) <= 1:
                    break
        for b in best_opts:
            rec(covered | adj[b], B | 1 << b, banned)
            banned |= 1 << b

    rec(0, 0, 0)
    return found


def certify_G_r(G: Graph, r: int) -> FamilyCertificate | None:
    """Find (A, B) proving G is in G_r, or None when no such partition exists.

    G[B] is 1-regular and G[A] is (r-1)-regular in an r-regular graph exactly
    when every vertex has a single neighbor in B, so B is searched as an exact
    cover of V by open neighborhoods.  The smallest-mask B is reported.
    """
    if r < 2:
        raise GraphError("G_r needs r >= 2")
    if G.n > CERTIFY_GR_MAX_ORDER:
        raise GraphError(f"certify_G_r is capped at n <= {CERTIFY_GR_MAX_ORDER}")
    if regularity(G) != r or not is_bipartite(G) or G.n % r:
        return None
    covers = _exact_open_covers(G)
    if not covers:
        return None
    B = min(covers)
    assert popcount(B) * r == G.n
    return FamilyCertificate("G_r", r, partition=(G.full & ~B, B))


def validate_Gr_certificate(G: Graph, cert: FamilyCertificate) -> bool:
    r = cert.parameter
    A, B = cert.partition
    if A & B or A | B != G.full or regularity(G) != r or not is_bipartite(G):
        return False
    return all(popcount(G.adj[v] & A) == r - 1 for v in bits(A)) and all(
        popcount(G.adj[v] & B) == 1 for v in bits(B)
    )


# -- claw-free chain ----------------------------------------------------------------


def build_claw_free_chain(ell: int) -> Graph:
    """G_ell on 3*ell + 1 vertices: hubs v_1..v_{ell+1} are 0..ell, then the pairs.

    Both ends of the i-th pair are joined to hubs v_i and v_{i+1}.
    """
    if ell < 1:
        raise GraphError("chain length must be >= 1")
    edges = []
    for i in range(ell):
        p, q = ell + 1 + 2 * i, ell + 2 + 2 * i
        edges += [(p, q), (p, i), (p, i + 1), (q, i), (q, i + 1)]
    return Graph.from_edges(3 * ell + 1, edges)


def chain_hubs(ell: int) -> int:
    """The hub set {v_1, ..., v_{ell+1}}: independent and 2-dominating in G_ell."""
    return (1 << (ell + 1)) - 1


# -- (1,r)-trees --------------------------------------------------------------------


def leaves(T: Graph) -> int:
    return mask_of(v for v in range(T.n) if T.degrees[v] == 1)


def is_1r_tree(T: Graph, r: int) -> bool:
    return is_tree(T) and all(d in (1, r) for d in T.degrees)


def leaf_bound(n: int, r: int) -> Fraction:
    """Upper bound ((r-2)n + 2)/(r-1) on the leaves of a tree with max degree <= r."""
    return Fraction((r - 2) * n + 2, r - 1)


def build_1r_tree(r: int, expansions: list[int] = ()) -> Graph:
    """Start from K_{1,r} (center 0) and give each listed leaf r-1 new leaf children."""
    if r < 3:
        raise GraphError("(1,r)-trees need r >= 3")
    edges = [(0, i) for i in range(1, r + 1)]
    deg = [r] + [1] * r
    for leaf in expansions:
        if not 0 <= leaf < len(deg) or deg[leaf] != 1:
            raise GraphError(f"expansion target {leaf} is not a current leaf")
        for _ in range(r - 1):
            edges.append((leaf, len(deg)))
            deg.append(1)
        deg[leaf] = r
    return Graph.from_edges(len(deg), edges)


def overlay_regular_on_leaves(T: Graph, H: Graph) -> Graph:
    """Place the (r-1)-regular graph H on the leaves of the (1,r)-tree T.

    The i-th leaf in ascending label order plays H's vertex i.  The result is
    r-regular with T as a spanning (1,r)-tree.
    """
    r = T.max_degree
    if r < 3 or not is_1r_tree(T, r):
        raise GraphError("T must be a (1,r)-tree with r >= 3")
    leaf_list = list(bits(leaves(T)))
    if H.n != len(leaf_list):
        raise GraphError(f"H has {H.n} vertices but T has {len(leaf_list)} leaves")
    if regularity(H) != r - 1:
        raise GraphError(f"H must be {r - 1}-regular")
    edges = T.edges()
    present = set(edges)
    for u, v in H.edges():
        e = tuple(sorted((leaf_list[u], leaf_list[v])))
        if e in present:
            raise GraphError(f"duplicate edge {e}")
        present.add(e)
        edges.append(e)
    return Graph.from_edges(T.n, edges)
