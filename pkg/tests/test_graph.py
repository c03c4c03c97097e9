import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import from_nx, graphs, to_nx
from graphconj.families import Gr_example_partition, build_claw_free_chain, build_Gr_example
from graphconj.graph import (
    Graph,
    GraphError,
    complete_graph,
    cycle_graph,
    edges_between,
    edges_within,
    encode_graph6,
    has_induced_star_bruteforce,
    induced_subgraph,
    is_star_free,
    mask_of,
    parse_graph6,
    path_graph,
    petersen_graph,
    star_graph,
    structural_predicates,
)


def test_graph6_known_strings():
    assert parse_graph6("Bw") == complete_graph(3)
    assert parse_graph6(b"C~") == complete_graph(4)
    assert encode_graph6(complete_graph(3)) == b"Bw"
    assert encode_graph6(complete_graph(4)) == b"C~"
    assert parse_graph6(">>graph6<<Bw") == complete_graph(3)


def test_path_p4_matches_reference_encoder():
    ref = nx.to_graph6_bytes(nx.path_graph(4), header=False).strip()
    assert ref == b"Ch"
    assert encode_graph6(path_graph(4)) == ref
    assert parse_graph6("Ch") == path_graph(4)


def test_c5_round_trip_and_reference_bytes():
    C5 = cycle_graph(5)
    assert parse_graph6(encode_graph6(C5)) == C5
    assert encode_graph6(C5) == nx.to_graph6_bytes(nx.cycle_graph(5), header=False).strip()


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=12))
def test_graph6_agrees_with_networkx(G):
    ref = nx.to_graph6_bytes(to_nx(G), header=False).strip()
    assert encode_graph6(G) == ref
    assert parse_graph6(ref) == G


@pytest.mark.parametrize("n", [62, 63, 64])
def test_graph6_long_form(n):
    G = cycle_graph(n)
    data = encode_graph6(G)
    assert data == nx.to_graph6_bytes(nx.cycle_graph(n), header=False).strip()
    assert (data[0] == ord("~")) == (n >= 63)
    assert parse_graph6(data) == G


@pytest.mark.parametrize("bad", ["", "?", "Bx", "B", "Bww", "C~~", "~??~" + "?" * 10, "B\x7f"])
def test_graph6_rejects_malformed(bad):
    with pytest.raises(GraphError):
        parse_graph6(bad)


def test_graph6_rejects_more_than_64_vertices():
    data = nx.to_graph6_bytes(nx.empty_graph(65), header=False).strip()
    with pytest.raises(GraphError):
        parse_graph6(data)
    with pytest.raises(GraphError):
        Graph.from_edges(65, [])


def test_graph_validation():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0b00))  # asymmetric
    with pytest.raises(GraphError):
        Graph(1, (0b1,))  # loop
    with pytest.raises(GraphError):
        Graph.from_edges(0, [])


def test_induced_subgraph_examples():
    assert induced_subgraph(complete_graph(4), 0b0111) == complete_graph(3)
    two = induced_subgraph(cycle_graph(5), mask_of([0, 2]))
    assert two.n == 2 and two.m == 0
    G = build_Gr_example(3)
    _, B = Gr_example_partition(3)
    H = induced_subgraph(G, B)
    assert H.n == 4 and all(d == 1 for d in H.degrees)
    with pytest.raises(GraphError):
        induced_subgraph(G, 0)


def test_edges_between_examples():
    assert edges_between(complete_graph(4), 0b0011, 0b1100) == 4
    assert edges_between(cycle_graph(5), mask_of([0]), mask_of([2, 3])) == 0
    G = build_Gr_example(3)
    A, B = Gr_example_partition(3)
    assert edges_between(G, A, B) == 8
    with pytest.raises(GraphError):
        edges_between(G, 0b11, 0b10)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=10), graphs(min_n=10, max_n=10))
def test_degree_sum_identity(G, H):
    X = H.adj[0] & G.full
    rest = G.full & ~X
    assert sum(G.degrees[v] for v in range(G.n) if X >> v & 1) == (
        2 * edges_within(G, X) + edges_between(G, X, rest))


def test_structural_predicate_examples():
    p = structural_predicates(star_graph(3))
    assert (p.claw_free, p.bipartite, p.tree) == (False, True, True)
    p = structural_predicates(build_claw_free_chain(3))
    assert p.claw_free and p.connected
    p = structural_predicates(petersen_graph(), star_r=[3])
    assert p.regular == 3 and not p.bipartite and p.triangle_free


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=8))
def test_predicates_agree_with_networkx(G):
    h = to_nx(G)
    p = structural_predicates(G)
    assert p.connected == nx.is_connected(h)
    assert p.bipartite == nx.is_bipartite(h)
    assert p.tree == nx.is_tree(h)
    assert p.triangle_free == (sum(nx.triangles(h).values()) == 0)
    assert p.has_isolated_vertex == (nx.number_of_isolates(h) > 0)
    degs = {d for _, d in h.degree()}
    assert p.regular == (degs.pop() if len(degs) == 1 else None)


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=8))
def test_star_free_agrees_with_induced_search(G):
    for r in (2, 3, 4):
        assert is_star_free(G, r) == (not has_induced_star_bruteforce(G, r))


def test_round_trip_all_atlas_graphs():
    for h in nx.graph_atlas_g()[1:]:
        G = from_nx(h)
        assert parse_graph6(encode_graph6(G)) == G
