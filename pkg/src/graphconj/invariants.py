"""Exact solvers for independence, domination and matching invariants.

Every vertex-set invariant has two code paths: a branch-and-bound search for
the value, and an ordered search for the witness.  The witness search visits
vertex sets in increasing bit-mask order, so the returned witness is the
numerically smallest optimal mask; its size must agree with the value solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .graph import Graph, GraphError, bits, is_connected, is_connected_set, popcount
from .matching import maximum_matching

KINDS = (
    "alpha",
    "alpha_k",
    "alpha_local_k",
    "mu",
    "gamma",
    "gamma_total",
    "gamma_k",
    "gamma_connected",
    "gamma_independent",
    "gamma_edge",
)
PARAMETERIZED = frozenset({"alpha_k", "alpha_local_k", "gamma_k"})

_LABELS = {
    "alpha": "alpha",
    "mu": "mu",
    "gamma": "gamma",
    "gamma_total": "gamma_t",
    "gamma_connected": "gamma_c",
    "gamma_independent": "i",
    "gamma_edge": "gamma_e",
}


class InvariantUndefined(GraphError):
    """The invariant is not defined on this graph (e.g. total domination with an isolate)."""


@dataclass(frozen=True, order=True)
class InvariantId:
    kind: str
    k: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown invariant kind {self.kind!r}")
        if (self.kind in PARAMETERIZED) != (self.k is not None):
            raise ValueError(f"{self.kind} {'needs' if self.kind in PARAMETERIZED else 'takes no'} parameter k")
        if self.k is not None and self.k < 0:
            raise ValueError("k must be nonnegative")
        if self.kind == "gamma_k" and self.k == 0:
            raise ValueError("k-domination needs k >= 1")

    @classmethod
    def parse(cls, text: str) -> InvariantId:
        """Parse ``kind`` or ``kind:k`` as used in cache files; short labels are accepted too."""
        kind, _, k = text.partition(":")
        if not k:
            for full, short in _LABELS.items():
                if kind == short:
                    kind = full
            if kind.startswith("gamma_") and kind[6:].isdigit():
                kind, k = "gamma_k", kind[6:]
            elif kind.startswith("alpha_L") and kind[7:].isdigit():
                kind, k = "alpha_local_k", kind[7:]
            elif kind.startswith("alpha_") and kind[6:].isdigit():
                kind, k = "alpha_k", kind[6:]
        return cls(kind, int(k) if k else None)

    @property
    def key(self) -> str:
        return self.kind if self.k is None else f"{self.kind}:{self.k}"

    @property
    def label(self) -> str:
        """Short display name: alpha, alpha_1, alpha_L0, gamma_2, gamma_t, ..."""
        if self.kind == "alpha_k":
            return f"alpha_{self.k}"
        if self.kind == "alpha_local_k":
            return f"alpha_L{self.k}"
        if self.kind == "gamma_k":
            return f"gamma_{self.k}"
        return _LABELS[self.kind]

    def __str__(self) -> str:
        return self.label


# -- k-independence ------------------------------------------------------------


def _max_k_independent(G: Graph, k: int, cand: int) -> int:
    """Size of a largest k-independent subset of ``cand``."""
    adj = G.adj
    best = 0

    if k == 0:
        def mis(cand: int, size: int) -> None:
            nonlocal best
            while True:
                if size + popcount(cand) <= best:
                    return
                if not cand:
                    best = size
                    return
                # take isolated and pendant candidates greedily; both are safe
                pick = -1
                top, top_deg = -1, -1
                for v in bits(cand):
                    d = popcount(adj[v] & cand)
                    if d <= 1:
                        pick = v
                        break
                    if d > top_deg:
                        top, top_deg = v, d
                if pick < 0:
                    break
                cand &= ~(adj[pick] | 1 << pick)
                size += 1
                if not cand:
                    best = max(best, size)
                    return
            mis(cand & ~(adj[top] | 1 << top), size + 1)
            mis(cand & ~(1 << top), size)

        mis(cand, 0)
        return best

    def search(S: int, cand: int, size: int) -> None:
        nonlocal best
        if size + popcount(cand) <= best:
            return
        if not cand:
            best = size
            return
        v = max(bits(cand), key=lambda u: (popcount(adj[u] & cand), -u))
        rest = cand & ~(1 << v)
        S2 = S | 1 << v
        # drop candidates that would break a degree cap
        blocked = 0
        if popcount(adj[v] & S2) >= k:
            blocked |= adj[v]
        for u in bits(adj[v] & S):
            if popcount(adj[u] & S2) >= k:
                blocked |= adj[u]
        nxt = rest & ~blocked
        for c in bits(nxt & adj[v]):
            if popcount(adj[c] & S2) > k:
                nxt &= ~(1 << c)
        search(S2, nxt, size + 1)
        search(S, rest, size)

    search(0, cand, 0)
    return best


def _is_k_independent(G: Graph, S: int, k: int) -> bool:
    return all(popcount(G.adj[v] & S) <= k for v in bits(S))


def independence_number(G: Graph) -> int:
    return _max_k_independent(G, 0, G.full)


def k_independence_number(G: Graph, k: int) -> int:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _max_k_independent(G, k, G.full)


def local_k_independence(G: Graph, k: int) -> int:
    """Max over v of the k-independence number of G[N(v)]; empty neighborhoods give 0."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return max((_max_k_independent(G, k, G.adj[v]) for v in range(G.n) if G.adj[v]), default=0)


# -- domination ------------------------------------------------------------------


def _min_hitting(G: Graph, need: list[int], cover: list[int], independent: bool = False) -> int:
    """Minimum S with S & need[u] != 0 for all u; ``cover[w]`` = {u : w in need[u]}.

    With ``independent`` the chosen set must also be independent.
    """
    n = G.n
    adj = G.adj
    best = n + 1

    def search(unhit: int, allowed: int, size: int) -> None:
        nonlocal best
        if not unhit:
            best = min(best, size)
            return
        if size + 1 >= best:
            return
        reach = max(popcount(cover[w] & unhit) for w in bits(allowed)) if allowed else 0
        if reach == 0:
            return
        if size + -(-popcount(unhit) // reach) >= best:
            return
        u = min(bits(unhit), key=lambda x: (popcount(need[x] & allowed), x))
        options = need[u] & allowed
        for w in sorted(bits(options), key=lambda x: -popcount(cover[x] & unhit)):
            nxt_allowed = allowed & ~(1 << w)
            if independent:
                nxt_allowed &= ~adj[w]
            search(unhit & ~cover[w], nxt_allowed, size + 1)
            allowed &= ~(1 << w)

    search(G.full, G.full, 0)
    return best


def domination_number(G: Graph) -> int:
    closed = [G.closed(v) for v in range(G.n)]
    return _min_hitting(G, closed, closed)


def total_domination_number(G: Graph) -> int:
    if G.min_degree == 0:
        raise InvariantUndefined("total domination needs a graph without isolated vertices")
    return _min_hitting(G, list(G.adj), list(G.adj))


def independent_domination_number(G: Graph) -> int:
    closed = [G.closed(v) for v in range(G.n)]
    return _min_hitting(G, closed, closed, independent=True)


def k_domination_number(G: Graph, k: int) -> int:
    """Minimum S such that every vertex outside S has at least k neighbors in S."""
    if k < 1:
        raise ValueError("k-domination needs k >= 1")
    n = G.n
    adj = G.adj
    # vertices of degree < k can never be k-dominated from outside
    forced = sum(1 << v for v in range(n) if G.degrees[v] < k)
    best = n

    def deficit(v: int, S: int) -> int:
        return max(0, k - popcount(adj[v] & S))

    def search(S: int, out: int, undecided: int) -> None:
        nonlocal best
        size = popcount(S)
        if size >= best:
            return
        worst = 0
        total = 0
        pivot = -1
        for u in bits(out):
            d = deficit(u, S)
            if d:
                if popcount(adj[u] & undecided) < d:
                    return
                total += d
                if d > worst:
                    worst, pivot = d, u
        if worst:
            spread = max(popcount(adj[w] & out) for w in bits(undecided))
            if size + max(worst, -(-total // spread)) >= best:
                return
            w = max(bits(adj[pivot] & undecided), key=lambda x: (popcount(adj[x] & out), -x))
            search(S | 1 << w, out, undecided & ~(1 << w))
            search(S, out | 1 << w, undecided & ~(1 << w))
            return
        needy = [u for u in bits(undecided) if deficit(u, S)]
        if not needy:
            best = size
            return
        u = needy[0]
        search(S, out | 1 << u, undecided & ~(1 << u))
        search(S | 1 << u, out, undecided & ~(1 << u))

    search(forced, 0, G.full & ~forced)
    return best


def connected_domination_number(G: Graph) -> int:
    """Smallest connected dominating set, by growing connected sets of each size."""
    if not is_connected(G):
        raise InvariantUndefined("connected domination needs a connected graph")
    n = G.n
    adj = G.adj
    full = G.full
    gain = max(G.max_degree - 1, 1)

    def grow(S: int, dom: int, ext: int, low: int, left: int) -> bool:
        if dom == full:
            return True
        if left == 0 or popcount(full & ~dom) > left * gain:
            return False
        while ext:
            w = (ext & -ext).bit_length() - 1
            ext &= ~(1 << w)
            # exclusive neighbors of w above the root keep each set unique
            fresh = adj[w] & ~S & ~dom & ~((1 << (low + 1)) - 1)
            if grow(S | 1 << w, dom | adj[w], ext | fresh, low, left - 1):
                return True
        return False

    for size in range(1, n + 1):
        for v in range(n):
            above = full & ~((1 << (v + 1)) - 1)
            if grow(1 << v, G.closed(v), adj[v] & above, v, size - 1):
                return size
    raise AssertionError("unreachable: V(G) is a connected dominating set")


# -- matchings -------------------------------------------------------------------


def matching_number(G: Graph) -> int:
    return len(maximum_matching(G))


def edge_domination_number(G: Graph) -> int:
    """Minimum size of a maximal matching."""
    if G.m == 0:
        raise InvariantUndefined("edge domination needs at least one edge")
    adj = G.adj
    best = G.n // 2

    def lower(free: int) -> int:
        # disjoint residual edges need at least half as many matching edges
        g = 0
        while free:
            v = (free & -free).bit_length() - 1
            nb = adj[v] & free
            free &= ~(1 << v)
            if nb:
                u = (nb & -nb).bit_length() - 1
                free &= ~(1 << u)
                g += 1
        return -(-g // 2)

    def search(free: int, size: int) -> None:
        nonlocal best
        live = [v for v in bits(free) if adj[v] & free]
        if not live:
            best = min(best, size)
            return
        if size + lower(free) >= best:
            return
        u = min(live, key=lambda x: (popcount(adj[x] & free), x))
        v = (adj[u] & free & -(adj[u] & free)).bit_length() - 1
        # some matching edge must touch u or v; try edges at u, then edges at v avoiding u
        for w in bits(adj[u] & free):
            search(free & ~(1 << u | 1 << w), size + 1)
        for w in bits(adj[v] & free & ~(1 << u)):
            search(free & ~(1 << v | 1 << w), size + 1)

    search(G.full, 0)
    return best


# -- ordered witness search ----------------------------------------------------


def _smallest_mask(
    n: int,
    size: int,
    accept: Callable[[int], bool],
    viable: Callable[[int, int], bool] | None = None,
) -> int | None:
    """Numerically smallest ``size``-subset of ``0..n-1`` satisfying ``accept``.

    Decides vertices from the highest index down, excluding before including;
    ``viable(chosen, undecided)`` may prune partial assignments.
    """

    def rec(i: int, chosen: int, count: int) -> int | None:
        if count == size:
            return chosen if accept(chosen) else None
        if i + 1 < size - count:
            return None
        undecided = (1 << (i + 1)) - 1
        if viable is not None and not viable(chosen, undecided):
            return None
        found = rec(i - 1, chosen, count)
        if found is not None:
            return found
        return rec(i - 1, chosen | 1 << i, count + 1)

    return rec(n - 1, 0, 0)


def _dominates(G: Graph, S: int) -> bool:
    return G.neighborhood(S) | S == G.full


def _totally_dominates(G: Graph, S: int) -> bool:
    return G.neighborhood(S) == G.full


def _k_dominates(G: Graph, S: int, k: int) -> bool:
    return all(popcount(G.adj[v] & S) >= k for v in bits(G.full & ~S))


def _is_independent(G: Graph, S: int) -> bool:
    return all(not (G.adj[v] & S) for v in bits(S))


def maximum_k_independent_set(G: Graph, k: int = 0) -> int:
    size = k_independence_number(G, k)
    found = _smallest_mask(
        G.n,
        size,
        lambda S: _is_k_independent(G, S, k),
        lambda S, U: _is_k_independent(G, S, k) and popcount(S) + popcount(U) >= size,
    )
    assert found is not None
    return found


def maximum_independent_set(G: Graph) -> int:
    return maximum_k_independent_set(G, 0)


def minimum_dominating_set(G: Graph, kind: str = "plain", k: int = 1) -> int:
    """Smallest-mask optimal witness for plain, total, k_dom, connected or independent domination."""
    if kind == "plain":
        size = domination_number(G)
        accept = lambda S: _dominates(G, S)
        viable = lambda S, U: _dominates(G, S | U)
    elif kind == "total":
        size = total_domination_number(G)
        accept = lambda S: _totally_dominates(G, S)
        viable = lambda S, U: _totally_dominates(G, S | U)
    elif kind == "k_dom":
        size = k_domination_number(G, k)
        accept = lambda S: _k_dominates(G, S, k)
        viable = lambda S, U: _k_dominates(G, S | U, k)
    elif kind == "connected":
        size = connected_domination_number(G)
        accept = lambda S: is_connected_set(G, S) and _dominates(G, S)
        viable = lambda S, U: _dominates(G, S | U)
    elif kind == "independent":
        size = independent_domination_number(G)
        accept = lambda S: _is_independent(G, S) and _dominates(G, S)
        viable = lambda S, U: _is_independent(G, S)
    else:
        raise ValueError(f"unknown domination kind {kind!r}")
    found = _smallest_mask(G.n, size, accept, viable)
    assert found is not None
    return found


def minimum_maximal_matching(G: Graph) -> list[tuple[int, int]]:
    """Witness for the edge domination number: smallest edge mask over ``G.edges()`` order."""
    size = edge_domination_number(G)
    edges = G.edges()
    ends = [1 << u | 1 << v for u, v in edges]

    def covered_by(S: int) -> int:
        return sum(ends[i] for i in bits(S))

    def accept(S: int) -> bool:
        cov = covered_by(S)
        return all(e & cov for e in ends)

    def viable(S: int, U: int) -> bool:
        cov = 0
        for i in bits(S):
            if cov & ends[i]:
                return False
            cov |= ends[i]
        return True

    found = _smallest_mask(len(edges), size, lambda S: viable(S, 0) and accept(S), viable)
    assert found is not None
    return [edges[i] for i in bits(found)]


# -- dispatch --------------------------------------------------------------------


def compute(G: Graph, inv: InvariantId) -> int:
    kind = inv.kind
    if kind == "alpha":
        return independence_number(G)
    if kind == "alpha_k":
        return k_independence_number(G, inv.k)
    if kind == "alpha_local_k":
        return local_k_independence(G, inv.k)
    if kind == "mu":
        return matching_number(G)
    if kind == "gamma":
        return domination_number(G)
    if kind == "gamma_total":
        return total_domination_number(G)
    if kind == "gamma_k":
        return k_domination_number(G, inv.k)
    if kind == "gamma_connected":
        return connected_domination_number(G)
    if kind == "gamma_independent":
        return independent_domination_number(G)
    if kind == "gamma_edge":
        return edge_domination_number(G)
    raise ValueError(kind)


def is_defined(G: Graph, inv: InvariantId) -> bool:
    if inv.kind == "gamma_total":
        return G.min_degree > 0
    if inv.kind == "gamma_connected":
        return is_connected(G)
    if inv.kind == "gamma_edge":
        return G.m > 0
    return True


ALPHA = InvariantId("alpha")
MU = InvariantId("mu")
GAMMA = InvariantId("gamma")
GAMMA_T = InvariantId("gamma_total")
GAMMA_C = InvariantId("gamma_connected")
GAMMA_I = InvariantId("gamma_independent")
GAMMA_E = InvariantId("gamma_edge")


def alpha_k(k: int) -> InvariantId:
    return InvariantId("alpha_k", k)


def alpha_local(k: int) -> InvariantId:
    return InvariantId("alpha_local_k", k)


def gamma_k(k: int) -> InvariantId:
    return InvariantId("gamma_k", k)


# every invariant exercised by the oracle comparison and the selftest
CATALOG = (
    ALPHA,
    alpha_k(1),
    alpha_k(2),
    alpha_local(0),
    alpha_local(1),
    MU,
    GAMMA,
    GAMMA_T,
    gamma_k(2),
    gamma_k(3),
    GAMMA_C,
    GAMMA_I,
    GAMMA_E,
)
