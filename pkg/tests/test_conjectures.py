from fractions import Fraction

import networkx as nx
import pytest

from conftest import from_nx
from graphconj import conjectures as cj
from graphconj import invariants as inv
from graphconj.corpus import builtin
from graphconj.graph import complete_graph, star_graph

ALPHA, GT, G2, MU = inv.ALPHA, inv.GAMMA_T, inv.gamma_k(2), inv.MU


@pytest.fixture(scope="module")
def small():
    corpus = builtin("connected_le7")
    return corpus, cj.ValueTable(corpus, cj.DEFAULT_INVARIANTS)


@pytest.fixture(scope="module")
def cubic():
    corpus = builtin("cubic_le10")
    return corpus, cj.ValueTable(corpus, cj.DEFAULT_INVARIANTS)


def make(table, hyp, lhs, slope, intercept, rhs, target):
    return cj._make(table, hyp, lhs, Fraction(slope), Fraction(intercept), rhs, target)


def test_slope_grid():
    slopes = cj.default_slopes()
    assert Fraction(3, 2) in slopes and Fraction(5, 3) in slopes and Fraction(1) in slopes
    expected = {Fraction(a, b) for a in range(1, 9) for b in range(1, 5)}
    assert set(slopes) == expected and len(slopes) == 22
    with pytest.raises(ValueError):
        cj.EngineConfig(slopes=())
    with pytest.raises(ValueError):
        cj.EngineConfig(hypotheses=("planar",))


def test_inequality_rendering(small):
    _, table = small
    c = make(table, "cubic", ALPHA, Fraction(3, 2), 0, GT, ALPHA)
    assert str(c) == "cubic: alpha <= 3/2*gamma_t"
    c = make(table, "none", MU, 1, 1, inv.GAMMA_C, inv.GAMMA_C)
    assert str(c) == "mu <= gamma_c + 1" and not c.upper


def test_hypothesis_order():
    assert cj.weaker("tree") == ["none", "connected", "triangle_free", "bipartite"]
    assert cj.weaker("cubic") == ["none", "connected"]
    assert cj.weaker("none") == []


def test_minimize_keeps_claw_free_for_alpha_le_gamma2(small):
    corpus, table = small
    c = make(table, "claw_free", ALPHA, 1, 0, G2, ALPHA)
    assert cj._holds(table, table.members("claw_free"), ALPHA, G2, Fraction(1), Fraction(0))
    assert cj.minimize_hypothesis(c, table).hypothesis == "claw_free"
    # a connected witness with alpha > gamma_2 exists in the corpus
    assert any(inv.independence_number(G) > inv.k_domination_number(G, 2) for G in corpus)


def test_minimize_relaxes_universal_bound(small):
    _, table = small
    c = make(table, "cubic", inv.GAMMA, 1, 0, ALPHA, ALPHA)
    assert cj.minimize_hypothesis(c, table).hypothesis == "none"


def test_minimize_keeps_cubic_for_ratio_bound(small):
    _, table = small
    K15 = star_graph(5)
    assert inv.independence_number(K15) == 5 > Fraction(3, 2) * inv.total_domination_number(K15)
    c = make(table, "cubic", ALPHA, Fraction(3, 2), 0, GT, ALPHA)
    assert cj.minimize_hypothesis(c, table).hypothesis == "cubic"


def test_filter_drops_dominated_ratio(cubic):
    _, table = cubic
    loose = make(table, "cubic", ALPHA, 2, 0, GT, ALPHA)
    tight = make(table, "cubic", ALPHA, Fraction(3, 2), 0, GT, ALPHA)
    assert cj.significance_filter([loose, tight], table) == [tight]
    assert cj.significance_filter([tight, loose], table) == [tight]
    assert cj.significance_filter([loose], table) == [loose]


def test_filter_keeps_bounds_that_each_win_somewhere():
    corpus = [from_nx(h) for h in nx.graph_atlas_g()[1:] if nx.is_connected(h)]
    table = cj.ValueTable(corpus, [ALPHA, G2, MU])
    a = make(table, "claw_free", ALPHA, 1, 0, G2, ALPHA)
    b = make(table, "regular_2", ALPHA, 1, 0, MU, ALPHA)
    for conj in (a, b):
        assert cj._holds(table, table.members(conj.hypothesis), conj.lhs, conj.rhs, conj.slope, conj.intercept)
    assert cj.significance_filter([a, b], table) == [a, b]


def test_generate_errors(small):
    corpus, _ = small
    with pytest.raises(ValueError):
        cj.generate([], ALPHA)
    with pytest.raises(ValueError):
        cj.generate(corpus, inv.alpha_local(3))


def _truth(conj, table):
    L, R = table.values[conj.lhs], table.values[conj.rhs]
    return all(L[i] <= conj.slope * R[i] + conj.intercept for i in table.members(conj.hypothesis))


@pytest.mark.parametrize("target", [ALPHA, inv.GAMMA_E, inv.GAMMA_C, G2])
def test_generate_properties(small, target):
    corpus, table = small
    out = cj.generate(corpus, target, table=table)
    assert out
    for conj in out:
        assert target in (conj.lhs, conj.rhs) and conj.lhs != conj.rhs
        assert _truth(conj, table)
        assert 1 <= conj.touch <= conj.support
        assert conj.slope > 0
    assert [c.rank_key() for c in out] == sorted(c.rank_key() for c in out)
    # each survivor is the unique tightest bound in its direction somewhere
    for conj in out:
        assert cj._uniquely_best_somewhere(conj, out, table)
    assert [c.to_line() for c in cj.generate(corpus, target, table=table)] == [c.to_line() for c in out]


def test_cubic_alpha_ratio_bound_is_found_but_dominated(cubic):
    corpus, table = cubic
    cands = cj._candidates(table, ALPHA, cj.EngineConfig())
    ratio = [c for c in cands if str(c) == "cubic: alpha <= 3/2*gamma_t"]
    assert len(ratio) == 1 and _truth(ratio[0], table)
    shifted = make(table, "cubic", ALPHA, 1, 1, GT, ALPHA)
    assert _truth(shifted, table)
    L, R = table.values[ALPHA], table.values[GT]
    assert all(R[i] + 1 <= Fraction(3, 2) * R[i] for i in table.members("cubic"))


def test_cubic_recovers_connected_domination_vs_matching(cubic):
    corpus, table = cubic
    out = cj.generate(corpus, inv.GAMMA_C, table=table)
    assert "cubic: mu <= gamma_c + 1" in [str(c) for c in out[:20]]


def test_value_table_handles_undefined():
    table = cj.ValueTable([complete_graph(1), complete_graph(3)], [GT, ALPHA])
    assert table.values[GT] == [None, 2]
