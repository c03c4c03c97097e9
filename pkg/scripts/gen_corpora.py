"""Regenerate the vendored graph6 corpora under src/graphconj/data/.

Isomorphism classes are separated by a seeded Weisfeiler-Lehman hash bucket
followed by VF2 inside each bucket.  Class counts are checked against the
known enumerations before anything is written.

    python scripts/gen_corpora.py [--skip-connected]
"""

from __future__ import annotations

import argparse
from itertools import combinations
from pathlib import Path

import networkx as nx

DATA = Path(__file__).resolve().parents[1] / "src" / "graphconj" / "data"

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}
CUBIC_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85, 14: 509}
# trees with maximum degree <= 3
TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 2, 6: 4, 7: 6, 8: 11, 9: 18, 10: 37,
               11: 66, 12: 135, 13: 265, 14: 552, 15: 1132}


def certificate(g: nx.Graph) -> str:
    """Isomorphism invariant; WL refinement seeded with per-vertex distance profiles.

    Plain WL cannot split regular graphs, so each vertex starts from its BFS
    layer sizes and triangle count.
    """
    tri = nx.triangles(g)
    for v in g:
        layers: dict[int, int] = {}
        for d in nx.single_source_shortest_path_length(g, v).values():
            layers[d] = layers.get(d, 0) + 1
        g.nodes[v]["seed"] = f"{sorted(layers.items())}/{tri[v]}"
    return nx.weisfeiler_lehman_graph_hash(g, node_attr="seed", iterations=3)


class IsoClasses:
    def __init__(self) -> None:
        self.buckets: dict[tuple, list[nx.Graph]] = {}
        self.reps: list[nx.Graph] = []

    def add(self, g: nx.Graph) -> bool:
        key = certificate(g)
        bucket = self.buckets.setdefault(key, [])
        if any(nx.is_isomorphic(g, h) for h in bucket):
            return False
        bucket.append(g)
        self.reps.append(g)
        return True


def g6(g: nx.Graph) -> str:
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def connected_graphs(max_n: int) -> dict[int, list[nx.Graph]]:
    by_n: dict[int, list[nx.Graph]] = {}
    for g in nx.graph_atlas_g()[1:]:
        if nx.is_connected(g):
            by_n.setdefault(g.number_of_nodes(), []).append(nx.convert_node_labels_to_integers(g))
    for n in range(8, max_n + 1):
        # every connected graph has a non-cut vertex, so deleting it stays connected
        classes = IsoClasses()
        for h in by_n[n - 1]:
            for size in range(1, n):
                for nbrs in combinations(range(n - 1), size):
                    g = h.copy()
                    g.add_node(n - 1)
                    g.add_edges_from((n - 1, u) for u in nbrs)
                    classes.add(g)
        by_n[n] = classes.reps
    return by_n


def _partial_key(g: nx.Graph, need: dict[int, int]) -> str:
    for v in g:
        g.nodes[v]["need"] = str(need[v])
    return nx.weisfeiler_lehman_graph_hash(g, node_attr="need", iterations=4)


def cubic_of_order(n: int) -> list[nx.Graph]:
    """Connected cubic graphs on n vertices, up to isomorphism.

    Partial graphs are completed one vertex at a time (lowest vertex with
    missing degree gets all its remaining edges); after each step states are
    merged up to isomorphism preserving every vertex's missing degree, which
    keeps the set of completions intact.
    """
    start = nx.empty_graph(n)
    start.add_edges_from([(0, 1), (0, 2), (0, 3)])
    frontier = [start]
    done: list[nx.Graph] = []
    match = nx.algorithms.isomorphism.categorical_node_match("need", None)
    while frontier:
        buckets: dict[str, list[nx.Graph]] = {}
        nxt: list[nx.Graph] = []
        for g in frontier:
            need = {v: 3 - d for v, d in g.degree()}
            open_ = [v for v in g if need[v] > 0]
            if not open_:
                if nx.is_connected(g):
                    done.append(g)
                continue
            v = open_[0]
            partners = [u for u in open_ if u != v and not g.has_edge(u, v)]
            for chosen in combinations(partners, need[v]):
                h = g.copy()
                h.add_edges_from((v, u) for u in chosen)
                hneed = {x: 3 - d for x, d in h.degree()}
                # a finished component that is not the whole graph can never reconnect
                if any(all(hneed[x] == 0 for x in comp) and len(comp) < n
                       for comp in nx.connected_components(h)):
                    continue
                key = _partial_key(h, hneed)
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(h, k, node_match=match) for k in bucket):
                    continue
                bucket.append(h)
                nxt.append(h)
        frontier = nxt
    classes = IsoClasses()
    for g in done:
        classes.add(nx.Graph(g.edges()))
    return classes.reps


def cubic_graphs(max_n: int) -> dict[int, list[nx.Graph]]:
    return {n: cubic_of_order(n) for n in range(4, max_n + 1, 2)}


def trees(max_n: int, max_degree: int = 3) -> dict[int, list[nx.Graph]]:
    out = {1: [nx.empty_graph(1)]}
    for n in range(2, max_n + 1):
        out[n] = [t for t in nx.nonisomorphic_trees(n) if max(d for _, d in t.degree()) <= max_degree]
    return out


def augment_slice(base: list[str], n: int, count: int) -> list[str]:
    """Deterministic distinct connected graphs on n vertices grown from (n-1)-vertex ones."""
    out: list[str] = []
    seen: set[str] = set()
    i = 0
    while len(out) < count:
        h = nx.from_graph6_bytes(base[(i * 7) % len(base)].encode())
        mask = (i * 37) % ((1 << (n - 1)) - 1) + 1
        h.add_node(n - 1)
        h.add_edges_from((n - 1, u) for u in range(n - 1) if mask >> u & 1)
        key = g6(h)
        if key not in seen:
            seen.add(key)
            out.append(key)
        i += 1
    return out


def write(name: str, header: str, lines: list[str]) -> None:
    path = DATA / name
    path.write_text(f"# {header}\n" + "\n".join(lines) + "\n")
    print(f"{path.name}: {len(lines)} graphs", flush=True)


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--skip-connected", action="store_true",
                        help="reuse the existing connected-graph files")
    args = parser.parse_args()
    DATA.mkdir(parents=True, exist_ok=True)

    if args.skip_connected:
        lines = (DATA / "connected_8.g6").read_text().splitlines()
        eight = [x for x in lines if x and not x.startswith("#")]
    else:
        conn = connected_graphs(8)
        for n, count in CONNECTED_COUNTS.items():
            assert len(conn[n]) == count, (n, len(conn[n]))
        write("connected_le7.g6", "all connected graphs on 1..7 vertices",
              [g6(g) for n in range(1, 8) for g in conn[n]])
        eight = [g6(g) for g in conn[8]]
        write("connected_8.g6", "all connected graphs on 8 vertices", eight)

    cubic = cubic_graphs(14)
    for n, count in CUBIC_COUNTS.items():
        assert len(cubic[n]) == count, (n, len(cubic[n]))
    write("cubic_le14.g6", "all connected cubic graphs on 4..14 vertices",
          [g6(g) for n in sorted(cubic) for g in cubic[n]])

    tr = trees(15)
    for n, count in TREE_COUNTS.items():
        assert len(tr[n]) == count, (n, len(tr[n]))
    write("trees_le15_maxdeg3.g6", "all trees on 1..15 vertices with maximum degree <= 3",
          [g6(t) for n in sorted(tr) for t in tr[n]])

    nine = augment_slice(eight, 9, 250)
    ten = augment_slice(nine, 10, 250)
    write("slice_9_10.g6", "fixed slice of 500 connected graphs on 9 and 10 vertices", nine + ten)


if __name__ == "__main__":
    main()
