"""Registry of checkable bounds, evaluated exactly on one graph at a time.

Each statement is evaluated to a :class:`TheoremReport`: whether the graph
meets the hypothesis, both sides as exact fractions, whether the bound holds,
and whether it is tight.  Equality characterizations attach a certificate, and
the counting quantities behind each bound are exposed as diagnostics.
"""

from __future__ import annotations

import os
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable

from . import invariants as inv
from .families import (
    FamilyCertificate,
    certify_G_r,
    is_1r_tree,
    leaf_bound,
    leaves,
)
from .graph import (
    Graph,
    GraphError,
    bits,
    connected_sets,
    edges_between,
    edges_within,
    is_claw_free,
    is_connected,
    is_star_free,
    is_tree,
    popcount,
    regularity,
)

SPANNING_TREE_MAX_ORDER = 20


class TheoremViolation(AssertionError):
    """A proved statement failed on a graph; always an implementation bug."""

    def __init__(self, theorem: TheoremId, graph_key: str, report: TheoremReport):
        super().__init__(f"{theorem} violated on {graph_key}: lhs={report.lhs} rhs={report.rhs}")
        self.theorem = theorem
        self.graph_key = graph_key
        self.report = report


@dataclass(frozen=True, order=True)
class TheoremId:
    name: str
    r: int | None = None
    k: int | None = None

    def __post_init__(self) -> None:
        if self.name not in STATEMENTS:
            raise ValueError(f"unknown statement {self.name!r}")
        params = STATEMENTS[self.name].params
        given = tuple(p for p in ("r", "k") if getattr(self, p) is not None)
        if given != params:
            raise ValueError(f"{self.name} takes parameters {params or 'none'}, got {given or 'none'}")
        if self.name == "THM_2_4" and (self.r < 3 or self.k < 0):
            raise ValueError("THM_2_4 needs r >= 3 and k >= 0")
        if self.name == "THM_2_6" and (self.k < 0 or self.r < self.k + 2):
            raise ValueError("THM_2_6 needs k >= 0 and r >= k + 2")
        if self.name in ("LEM_4_4", "THM_4_5") and self.r < 3:
            raise ValueError(f"{self.name} needs r >= 3")

    @classmethod
    def parse(cls, text: str) -> TheoremId:
        """Accepts ``THM_3_2``, ``THM_2_4(3,1)`` or ``THM_2_4(r=3,k=1)``."""
        m = re.fullmatch(r"\s*([A-Z0-9_a-z]+)\s*(?:\((.*)\))?\s*", text)
        if not m:
            raise ValueError(f"cannot parse statement id {text!r}")
        name, args = m.group(1), m.group(2)
        if name not in STATEMENTS:
            raise ValueError(f"unknown statement {name!r}")
        values: dict[str, int] = {}
        if args:
            params = STATEMENTS[name].params
            for i, part in enumerate(a.strip() for a in args.split(",")):
                key, eq, val = part.partition("=")
                if not eq:
                    if i >= len(params):
                        raise ValueError(f"too many parameters for {name}")
                    key, val = params[i], part
                values[key.strip()] = int(val)
        return cls(name, values.get("r"), values.get("k"))

    def __str__(self) -> str:
        params = [f"{p}={getattr(self, p)}" for p in ("r", "k") if getattr(self, p) is not None]
        return f"{self.name}({','.join(params)})" if params else self.name


@dataclass
class TheoremReport:
    theorem: TheoremId
    graph_key: str
    hypothesis_met: bool
    relation: str
    lhs: Fraction | None
    rhs: Fraction | None
    holds: bool
    tight: bool
    certificate: FamilyCertificate | None = None
    diagnostics: dict[str, object] = field(default_factory=dict)

    def to_line(self) -> str:
        def fmt(x: Fraction | None) -> str:
            return "-" if x is None else str(x)

        return "\t".join(
            [self.graph_key, str(self.theorem), fmt(self.lhs), fmt(self.rhs),
             str(self.holds).lower(), str(self.tight).lower()]
        )


@dataclass(frozen=True)
class Statement:
    name: str
    params: tuple[str, ...]
    text: str
    proved: bool
    evaluate: Callable[[TheoremId, Graph], "_Eval"]
    confirmed_by: str | None = None


@dataclass
class _Eval:
    hypothesis: bool
    lhs: Fraction | None
    rhs: Fraction | None
    certificate: FamilyCertificate | None = None
    diagnostics: dict[str, object] = field(default_factory=dict)


# -- cached invariant access ------------------------------------------------------


@lru_cache(maxsize=200_000)
def value(G: Graph, invariant: inv.InvariantId) -> int:
    return inv.compute(G, invariant)


@lru_cache(maxsize=20_000)
def _dom_witness(G: Graph, kind: str, k: int = 1) -> int:
    return inv.minimum_dominating_set(G, kind, k)


@lru_cache(maxsize=20_000)
def _kind_witness(G: Graph, k: int) -> int:
    return inv.maximum_k_independent_set(G, k)


def F(x: int | Fraction) -> Fraction:
    return Fraction(x)


# -- spanning (1,r)-trees ---------------------------------------------------------


def _spanning_trees_within(G: Graph, S: int, max_deg: int):
    """Spanning trees of G[S] (edge lists) with every degree <= max_deg."""
    verts = list(bits(S))
    edges = [(u, v) for u in verts for v in bits(G.adj[u] & S) if u < v]
    need = len(verts) - 1
    parent = {v: v for v in verts}

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    deg = {v: 0 for v in verts}
    chosen: list[tuple[int, int]] = []

    def rec(i: int):
        if len(chosen) == need:
            yield list(chosen)
            return
        if len(edges) - i < need - len(chosen):
            return
        u, v = edges[i]
        a, b = find(u), find(v)
        if a != b and deg[u] < max_deg and deg[v] < max_deg:
            parent[a] = b
            deg[u] += 1
            deg[v] += 1
            chosen.append((u, v))
            yield from rec(i + 1)
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1
            parent[a] = a
        yield from rec(i + 1)

    yield from rec(0)


def _assign_leaves(G: Graph, internal: int, cap: dict[int, int]) -> list[tuple[int, int]] | None:
    """Attach every non-internal vertex to one adjacent internal vertex, filling ``cap`` exactly."""
    leaf_list = list(bits(G.full & ~internal))
    if sum(cap.values()) != len(leaf_list):
        return None
    owner: dict[int, list[int]] = {v: [] for v in cap}

    def place(u: int, seen: set[int]) -> bool:
        for v in bits(G.adj[u] & internal):
            if v in seen or cap[v] == 0:
                continue
            seen.add(v)
            if len(owner[v]) < cap[v]:
                owner[v].append(u)
                return True
            for w in list(owner[v]):
                owner[v].remove(w)
                if place(w, seen):
                    owner[v].append(u)
                    return True
                owner[v].append(w)
        return False

    for u in leaf_list:
        if not place(u, set()):
            return None
    return sorted((min(u, v), max(u, v)) for v, us in owner.items() for u in us)


def has_spanning_1r_tree(G: Graph, r: int) -> FamilyCertificate | None:
    """A spanning tree of G with all degrees in {1, r}, or None if there is none.

    The internal vertices of such a tree form a connected dominating set of
    exactly (n-2)/(r-1) vertices; each candidate set is tried with every
    spanning tree on it and a capacity matching of the remaining vertices.
    """
    if r < 3:
        raise GraphError("spanning (1,r)-trees need r >= 3")
    if G.n > SPANNING_TREE_MAX_ORDER:
        raise GraphError(f"spanning (1,r)-tree search is capped at n <= {SPANNING_TREE_MAX_ORDER}")
    if not is_connected(G):
        raise GraphError("spanning (1,r)-tree search needs a connected graph")
    n = G.n
    if n == 1:
        return None
    if n == 2:
        return FamilyCertificate("spanning_1r_tree_host", r, tree_edges=((0, 1),))
    if (n - 2) % (r - 1) or G.max_degree < r:
        return None
    size = (n - 2) // (r - 1)
    for internal in sorted(connected_sets(G, size)):
        if G.neighborhood(internal) | internal != G.full:
            continue
        for core in _spanning_trees_within(G, internal, r):
            cap = {v: r for v in bits(internal)}
            for u, v in core:
                cap[u] -= 1
                cap[v] -= 1
            attached = _assign_leaves(G, internal, cap)
            if attached is not None:
                return FamilyCertificate(
                    "spanning_1r_tree_host", r, tree_edges=tuple(sorted(core + attached))
                )
    return None


def validate_spanning_tree_certificate(G: Graph, cert: FamilyCertificate) -> bool:
    edges = cert.tree_edges
    if any(not G.has_edge(u, v) for u, v in edges):
        return False
    T = Graph.from_edges(G.n, edges)
    return T.n == G.n and (is_1r_tree(T, cert.parameter) or (G.n == 2 and is_tree(T)))


# -- statement evaluators -----------------------------------------------------------


def _regular_r(G: Graph, min_r: int) -> int | None:
    r = regularity(G)
    return r if r is not None and r >= min_r else None


def _connected_cubic(G: Graph) -> bool:
    return regularity(G) == 3 and is_connected(G)


def _ev_obs_2_1(tid: TheoremId, G: Graph) -> _Eval:
    r = _regular_r(G, 2)
    cert = certify_G_r(G, r) if r is not None else None
    if cert is None:
        return _Eval(False, None, None)
    return _Eval(True, F(value(G, inv.ALPHA)), Fraction(r, 2) * value(G, inv.GAMMA_T), cert)


def _ev_thm_2_2(tid: TheoremId, G: Graph) -> _Eval:
    r = _regular_r(G, 2)
    if r is None:
        return _Eval(False, None, None)
    D = _dom_witness(G, "total")
    Q = G.full & ~D
    lhs = F(value(G, inv.ALPHA))
    rhs = Fraction(r, 2) * popcount(D)
    diag = {
        "r": r,
        "gamma_t_set": sorted(bits(D)),
        "edges_D_Q": edges_between(G, D, Q),
        "degree_sum_D": sum(G.degrees[v] for v in bits(D)),
        "edges_in_D": edges_within(G, D),
        "n_over_r": Fraction(G.n, r),
    }
    cert = certify_G_r(G, r) if lhs == rhs else None
    return _Eval(True, lhs, rhs, cert, diag)


def _ev_conj_2_1(tid: TheoremId, G: Graph) -> _Eval:
    if not _connected_cubic(G):
        return _Eval(False, None, None)
    return _Eval(True, F(value(G, inv.ALPHA)), Fraction(3, 2) * value(G, inv.GAMMA_T))


def _exchange_counts(G: Graph, I: int, D: int) -> dict[str, object]:
    A, B = I & ~D, D & ~I
    return {
        "I": sorted(bits(I)),
        "D": sorted(bits(D)),
        "size_A": popcount(A),
        "size_B": popcount(B),
        "edges_A_B": edges_between(G, A, B),
    }


def _ev_thm_2_4(tid: TheoremId, G: Graph) -> _Eval:
    r, k = tid.r, tid.k
    j = r * (k + 1) - 1
    lhs = F(value(G, inv.alpha_k(k)))
    rhs = F(value(G, inv.gamma_k(j)))
    if not is_star_free(G, r):
        return _Eval(False, lhs, rhs)
    diag = {"j": j, **_exchange_counts(G, _kind_witness(G, k), _dom_witness(G, "k_dom", j))}
    diag["per_vertex"] = (r - 1) * (k + 1)
    return _Eval(True, lhs, rhs, None, diag)


def _ev_cor_2_5(tid: TheoremId, G: Graph) -> _Eval:
    lhs = F(value(G, inv.ALPHA))
    rhs = F(value(G, inv.gamma_k(2)))
    return _Eval(is_connected(G) and is_claw_free(G), lhs, rhs)


def _ev_thm_2_6(tid: TheoremId, G: Graph) -> _Eval:
    r, k = tid.r, tid.k
    j = r + k - 1
    lhs = F(value(G, inv.alpha_k(k)))
    rhs = F(value(G, inv.gamma_k(j)))
    local = value(G, inv.alpha_local(k))
    if not (is_connected(G) and local <= r - 1):
        return _Eval(False, lhs, rhs, diagnostics={"alpha_local": local})
    diag = {"j": j, "alpha_local": local,
            **_exchange_counts(G, _kind_witness(G, k), _dom_witness(G, "k_dom", j))}
    diag["per_vertex"] = r - 1
    return _Eval(True, lhs, rhs, None, diag)


def _gamma_e_sides(G: Graph) -> tuple[Fraction, Fraction]:
    return F(value(G, inv.GAMMA_E)), F(value(G, inv.MU))


def _ev_conj_3_1(tid: TheoremId, G: Graph) -> _Eval:
    if not _connected_cubic(G):
        return _Eval(False, None, None)
    ge, mu = _gamma_e_sides(G)
    return _Eval(True, ge, Fraction(3, 5) * mu)


def _ev_thm_3_2(tid: TheoremId, G: Graph) -> _Eval:
    if G.m == 0 or G.min_degree < 1:
        return _Eval(False, None, None)
    dl, dh, n = G.min_degree, G.max_degree, G.n
    M = inv.minimum_maximal_matching(G)
    A = sum(1 << u | 1 << v for u, v in M)
    B = G.full & ~A
    diag = {
        "matched": popcount(A),
        "unmatched": popcount(B),
        "edges_A_B": edges_between(G, A, B),
        "lower_count": dl * popcount(B),
        "upper_count": (dh - 1) * popcount(A),
    }
    return _Eval(True, F(len(M)), Fraction(dl * n, 2 * (dh + dl - 1)), None, diag)


def _ev_cor_3_3(tid: TheoremId, G: Graph) -> _Eval:
    if G.m == 0 or G.min_degree < 1:
        return _Eval(False, None, None)
    ge, mu = _gamma_e_sides(G)
    dl, dh = G.min_degree, G.max_degree
    return _Eval(True, ge, Fraction(dl, dh + dl - 1) * mu)


def _ev_cor_3_4(tid: TheoremId, G: Graph) -> _Eval:
    r = _regular_r(G, 1)
    if r is None:
        return _Eval(False, None, None)
    ge, mu = _gamma_e_sides(G)
    return _Eval(True, ge, Fraction(r, 2 * r - 1) * mu, diagnostics={"r": r})


def _ev_thm_4_3(tid: TheoremId, G: Graph) -> _Eval:
    r = _regular_r(G, 2)
    if r is None or not is_connected(G):
        return _Eval(False, None, None)
    D = _dom_witness(G, "connected")
    A = G.full & ~D
    diag = {
        "r": r,
        "gamma_c_set": sorted(bits(D)),
        "outside": popcount(A),
        "edges_A_D": edges_between(G, A, D),
        "degree_sum_D": sum(G.degrees[v] for v in bits(D)),
        "edges_in_D": edges_within(G, D),
        "upper_count": r * popcount(D) - 2 * (popcount(D) - 1),
    }
    return _Eval(True, F(popcount(D)), Fraction(G.n - 2, r - 1), None, diag)


def _ev_lem_4_4(tid: TheoremId, G: Graph) -> _Eval:
    r = tid.r
    if not is_tree(G) or G.max_degree > r:
        return _Eval(False, None, None)
    counts = [0] * (r + 1)
    for d in G.degrees:
        counts[d] += 1
    lhs = F(popcount(leaves(G)))
    rhs = leaf_bound(G.n, r)
    cert = None
    if lhs == rhs and is_1r_tree(G, r):
        cert = FamilyCertificate("one_r_tree", r, tree_edges=tuple(G.edges()))
    return _Eval(True, lhs, rhs, cert, {"degree_counts": counts})


def _ev_thm_4_5(tid: TheoremId, G: Graph) -> _Eval:
    r = tid.r
    if not is_connected(G) or G.max_degree > r:
        return _Eval(False, None, None)
    lhs = F(value(G, inv.GAMMA_C))
    rhs = Fraction(G.n - 2, r - 1)
    cert = has_spanning_1r_tree(G, r) if lhs == rhs else None
    return _Eval(True, lhs, rhs, cert)


def _ev_cor_4_6(tid: TheoremId, G: Graph) -> _Eval:
    r = _regular_r(G, 2)
    if r is None or not is_connected(G):
        return _Eval(False, None, None)
    mu, alpha = value(G, inv.MU), value(G, inv.ALPHA)
    diag = {"r": r, "alpha_bound": Fraction(2 * alpha - 2, r - 1), "mu_ge_alpha": mu >= alpha}
    return _Eval(True, F(value(G, inv.GAMMA_C)), Fraction(2 * mu - 2, r - 1), None, diag)


def _ev_cor_4_7(tid: TheoremId, G: Graph) -> _Eval:
    if not _connected_cubic(G):
        return _Eval(False, None, None)
    gc, mu, alpha = (value(G, x) for x in (inv.GAMMA_C, inv.MU, inv.ALPHA))
    diag = {"part_a": gc >= mu - 1, "part_b": gc >= alpha - 1}
    return _Eval(True, F(gc), F(max(mu, alpha) - 1), None, diag)


def _ev_conj_4_1(tid: TheoremId, G: Graph) -> _Eval:
    if not _connected_cubic(G):
        return _Eval(False, None, None)
    return _Eval(True, F(value(G, inv.GAMMA_C)), F(value(G, inv.MU) - 1))


def _ev_conj_4_2(tid: TheoremId, G: Graph) -> _Eval:
    if not _connected_cubic(G):
        return _Eval(False, None, None)
    return _Eval(True, F(value(G, inv.GAMMA_C)), F(value(G, inv.ALPHA) - 1))


def _statements() -> dict[str, Statement]:
    rows = [
        ("OBS_2_1", (), "G in G_r  =>  alpha = (r/2) gamma_t", _ev_obs_2_1, None),
        ("THM_2_2", (), "r-regular, r >= 2  =>  alpha <= (r/2) gamma_t; equality iff G in G_r", _ev_thm_2_2, None),
        ("CONJ_2_1_cubic", (), "connected cubic  =>  alpha <= (3/2) gamma_t", _ev_conj_2_1, "THM_2_2"),
        ("THM_2_4", ("r", "k"), "K_{1,r}-free  =>  alpha_k <= gamma_{r(k+1)-1}", _ev_thm_2_4, None),
        ("COR_2_5", (), "connected claw-free  =>  alpha <= gamma_2", _ev_cor_2_5, "THM_2_4"),
        ("THM_2_6", ("r", "k"), "connected, alpha_{k,L} <= r-1  =>  alpha_k <= gamma_{r+k-1}", _ev_thm_2_6, None),
        ("CONJ_3_1_cubic", (), "connected cubic  =>  gamma_e >= (3/5) mu", _ev_conj_3_1, "COR_3_5_cubic"),
        ("THM_3_2", (), "delta >= 1  =>  gamma_e >= delta n / (2(Delta + delta - 1))", _ev_thm_3_2, None),
        ("COR_3_3", (), "delta >= 1  =>  gamma_e >= delta/(Delta + delta - 1) mu", _ev_cor_3_3, "THM_3_2"),
        ("COR_3_4", (), "r-regular, r >= 1  =>  gamma_e >= r/(2r-1) mu", _ev_cor_3_4, "THM_3_2"),
        ("COR_3_5_cubic", (), "connected cubic  =>  gamma_e >= (3/5) mu", _ev_conj_3_1, "THM_3_2"),
        ("THM_4_3", (), "connected r-regular, r >= 2  =>  gamma_c >= (n-2)/(r-1)", _ev_thm_4_3, None),
        ("LEM_4_4", ("r",), "tree, Delta <= r  =>  leaves <= ((r-2)n+2)/(r-1); equality iff (1,r)-tree", _ev_lem_4_4, None),
        ("THM_4_5", ("r",), "connected, Delta <= r  =>  gamma_c >= (n-2)/(r-1); equality iff spanning (1,r)-tree", _ev_thm_4_5, "LEM_4_4"),
        ("COR_4_6", (), "connected r-regular, r >= 2  =>  gamma_c >= (2 mu - 2)/(r-1) >= (2 alpha - 2)/(r-1)", _ev_cor_4_6, "THM_4_5"),
        ("COR_4_7ab_cubic", (), "connected cubic  =>  gamma_c >= mu - 1 and gamma_c >= alpha - 1", _ev_cor_4_7, "COR_4_6"),
        ("CONJ_4_1_cubic", (), "connected cubic  =>  gamma_c >= mu - 1", _ev_conj_4_1, "COR_4_7ab_cubic"),
        ("CONJ_4_2_cubic", (), "connected cubic  =>  gamma_c >= alpha - 1", _ev_conj_4_2, "COR_4_7ab_cubic"),
    ]
    return {name: Statement(name, params, text, True, fn, conf) for name, params, text, fn, conf in rows}


_RELATION = {
    "OBS_2_1": "=",
    "THM_2_2": "<=",
    "CONJ_2_1_cubic": "<=",
    "THM_2_4": "<=",
    "COR_2_5": "<=",
    "THM_2_6": "<=",
    "LEM_4_4": "<=",
}

STATEMENTS = _statements()


def relation(name: str) -> str:
    return _RELATION.get(name, ">=")


def check(theorem: TheoremId, G: Graph) -> TheoremReport:
    ev = STATEMENTS[theorem.name].evaluate(theorem, G)
    rel = relation(theorem.name)
    if not ev.hypothesis:
        return TheoremReport(theorem, G.graph6, False, rel, ev.lhs, ev.rhs, True, False,
                             None, ev.diagnostics)
    if rel == "<=":
        holds = ev.lhs <= ev.rhs
    elif rel == ">=":
        holds = ev.lhs >= ev.rhs
    else:
        holds = ev.lhs == ev.rhs
    tight = holds and ev.lhs == ev.rhs
    return TheoremReport(theorem, G.graph6, True, rel, ev.lhs, ev.rhs, holds, tight,
                         ev.certificate, ev.diagnostics)


# -- corpus verification ------------------------------------------------------------


@dataclass
class CorpusSummary:
    theorem: TheoremId
    total: int
    hypothesis_met: int
    holds: int
    tight: int
    violations: list[str]
    tight_graphs: list[str]

    def line(self) -> str:
        return (f"{self.theorem}\tgraphs={self.total}\thypothesis={self.hypothesis_met}"
                f"\tholds={self.holds}\ttight={self.tight}\tviolations={len(self.violations)}")


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("GF_JOBS", "1")))
    except ValueError:
        return 1


def _check_all(args: tuple[list[TheoremId], Graph]) -> list[TheoremReport]:
    theorems, G = args
    return [check(t, G) for t in theorems]


def check_corpus(theorems: list[TheoremId], corpus: Iterable[Graph], jobs: int | None = None
                 ) -> list[list[TheoremReport]]:
    """Reports per graph (outer, input order) and per theorem (inner, given order)."""
    graphs = list(corpus)
    jobs = default_jobs() if jobs is None else jobs
    work = [(theorems, G) for G in graphs]
    if jobs <= 1:
        return [_check_all(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_check_all, work, chunksize=64))


def summarize(theorem: TheoremId, reports: list[TheoremReport], abort: bool = True) -> CorpusSummary:
    violations = sorted(r.graph_key for r in reports if not r.holds)
    if violations and abort and STATEMENTS[theorem.name].proved:
        bad = next(r for r in reports if not r.holds)
        raise TheoremViolation(theorem, bad.graph_key, bad)
    tight = sorted(r.graph_key for r in reports if r.tight)
    return CorpusSummary(
        theorem=theorem,
        total=len(reports),
        hypothesis_met=sum(r.hypothesis_met for r in reports),
        holds=sum(r.holds for r in reports),
        tight=len(tight),
        violations=violations,
        tight_graphs=tight,
    )


def verify_corpus(theorem: TheoremId, corpus: Iterable[Graph], jobs: int | None = None,
                  abort: bool = True) -> CorpusSummary:
    reports = [row[0] for row in check_corpus([theorem], corpus, jobs)]
    return summarize(theorem, reports, abort)


# statements proved outright, at the parameters exercised by default
PROVED_SUITE = [
    TheoremId("THM_2_2"),
    TheoremId("THM_2_4", 3, 0),
    TheoremId("THM_2_4", 3, 1),
    TheoremId("COR_2_5"),
    TheoremId("THM_2_6", 3, 0),
    TheoremId("THM_3_2"),
    TheoremId("COR_3_3"),
    TheoremId("COR_3_4"),
    TheoremId("COR_3_5_cubic"),
    TheoremId("THM_4_3"),
    TheoremId("LEM_4_4", 3),
    TheoremId("THM_4_5", 3),
    TheoremId("COR_4_6"),
    TheoremId("COR_4_7ab_cubic"),
]
