from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gtriple.errors import DuplicateEdge, IndexOutOfRange, SelfLoop
from gtriple.families import gen_small_counterexample, gen_zak_sharp
from gtriple.graph import (
    CONSTANTS,
    Triple,
    classify_vertices,
    complete_graph,
    disjoint_union,
    empty_graph,
    f_delta,
    graph_from_edges,
    path_graph,
    shared_degree,
    star_graph,
    triple_stats,
)
from gtriple.rng import SplitMix64, random_triple
from gtriple.solver import contract_placement

from .conftest import triples


def test_path_on_three_vertices():
    g = graph_from_edges(3, [(0, 1), (1, 2)])
    assert g.degrees() == [1, 2, 1]
    assert g.edges() == [(0, 1), (1, 2)]
    assert sum(g.degrees()) == 2 * g.num_edges


def test_single_isolated_vertex():
    g = graph_from_edges(1, [])
    assert g.n == 1 and g.adj == (0,) and g.num_edges == 0


@pytest.mark.parametrize(
    "n, edges, exc",
    [
        (3, [(0, 0)], SelfLoop),
        (3, [(0, 3)], IndexOutOfRange),
        (3, [(-1, 2)], IndexOutOfRange),
        (3, [(0, 1), (1, 0)], DuplicateEdge),
        (3, [(0, 1), (0, 1)], DuplicateEdge),
    ],
)
def test_graph_from_edges_rejects(n, edges, exc):
    with pytest.raises(exc):
        graph_from_edges(n, edges)


def test_duplicate_yellow_rejected():
    with pytest.raises(DuplicateEdge):
        Triple.from_edges(2, e3=[(0, 1), (0, 1)])


def test_constants():
    c = CONSTANTS
    assert c.c_main == 11 * 195**2 == 418275
    assert c.c_detailed == c.c_main + 4
    assert c.f_const**2 * 11 == c.c_main
    assert c.k_const * 13 == c.f_const


def test_stats_small_counterexample():
    s = triple_stats(gen_small_counterexample())
    assert (s.e1, s.e2, s.e3) == (12, 10, 0)
    assert (s.delta1, s.delta2, s.script_d, s.f_value) == (2, 4, 4, 26)
    assert s.f_value == 3 * 12 - 10


def test_stats_triangle_plus_star():
    s = triple_stats(gen_zak_sharp(8))
    assert (s.e1, s.e2, s.delta1, s.delta2, s.script_d) == (7, 7, 4, 4, 4)
    assert s.f_value == 18 == 3 * 8 - 6


def test_stats_empty():
    s = triple_stats(Triple(empty_graph(5), empty_graph(5)))
    assert all(v == 0 for v in s.as_dict().values())


def test_script_d_uses_yellow_excess_of_other_side():
    # V1 vertex 0 has 6 yellow edges -> delta3_1 = 6 adds 2 to delta2's term
    t = Triple.from_edges(7, e1=[(0, 1)], e2=[(0, 1), (0, 2)], e3=[(0, w) for w in range(6)])
    s = triple_stats(t)
    assert (s.delta3_1, s.delta3_2, s.delta3) == (6, 1, 6)
    assert s.script_d == max(1 + 0, 2 + 2) == 4
    assert (s.d1_cap, s.d2_cap) == (6, 2)
    assert s.f_value == 1 + 2 + 6 + 4


@given(triples())
def test_stats_invariants(t):
    s = triple_stats(t)
    assert s.script_d == max(
        s.delta1 + max(s.delta3_2 - 4, 0), s.delta2 + max(s.delta3_1 - 4, 0)
    )
    assert s.f_value == s.e1 + s.e2 + s.e3 + s.script_d
    assert s.delta3 == max(s.delta3_1, s.delta3_2)
    assert s.d1_cap == max(s.delta1, s.delta3_1)
    assert s.d2_cap == max(s.delta2, s.delta3_2)
    assert (s.f_value == 0) == (not t.yellow and s.e1 == 0 and s.e2 == 0)


@given(triples(max_n=6), st.randoms(use_true_random=False))
def test_stats_label_invariant(t, rnd):
    p1, p2 = list(range(t.n)), list(range(t.n))
    rnd.shuffle(p1)
    rnd.shuffle(p2)
    assert triple_stats(t.relabel(p1, p2)) == triple_stats(t)


def test_f_delta_examples():
    t = gen_small_counterexample()
    assert f_delta(t, t) == 0
    assert f_delta(t, Triple(empty_graph(12), empty_graph(12))) == 26


@settings(max_examples=200)
@given(triples(min_n=2, max_n=7))
def test_f_delta_after_contraction(t):
    x, y = next(((u, w) for u in range(t.n) for w in range(t.n) if (u, w) not in t.yellow), (None, None))
    if x is None:
        return
    t2 = contract_placement(t, x, y)

    def f_from_scratch(tr):
        d1 = [sum(1 for a, b in tr.g1.edges() if v in (a, b)) for v in range(tr.n)]
        d2 = [sum(1 for a, b in tr.g2.edges() if v in (a, b)) for v in range(tr.n)]
        y1 = [sum(1 for a, _ in tr.yellow if a == v) for v in range(tr.n)]
        y2 = [sum(1 for _, b in tr.yellow if b == v) for v in range(tr.n)]
        m = lambda xs: max(xs, default=0)  # noqa: E731
        dd = max(m(d1) + max(m(y2) - 4, 0), m(d2) + max(m(y1) - 4, 0))
        return len(tr.g1.edges()) + len(tr.g2.edges()) + len(tr.yellow) + dd

    assert f_delta(t, t2) == f_from_scratch(t) - f_from_scratch(t2)


# -- shared degree -----------------------------------------------------------------


def _sd_oracle(t, side, v) -> Fraction:
    g = t.graph(side)
    deg = g.degree(v)
    d3 = t.yellow_degree(side, v)
    if deg < 15:
        return deg + Fraction(2, 3) * sum(1 for x in g.neighbors(v) if g.degree(x) >= 15) + d3
    return deg - Fraction(2, 3) * sum(1 for x in g.neighbors(v) if g.degree(x) < 15) + d3


def test_shared_degree_leaf_of_big_star():
    # vertex 1 is a leaf of K_{1,20}
    g = star_graph(20)
    t = Triple(g, empty_graph(21))
    assert shared_degree(t, 1, 1) == 5


def test_shared_degree_hub_with_five_small_neighbours():
    # hub 0 with 20 neighbours: 15 of them lie in a K_16 (degree >= 15), 5 are leaves
    edges = [(0, i) for i in range(1, 21)]
    edges += [(i, j) for i in range(1, 16) for j in range(i + 1, 16)]
    g = graph_from_edges(21, edges)
    assert g.degree(0) == 20
    t = Triple(g, empty_graph(21))
    assert shared_degree(t, 1, 0) == 50
    assert _sd_oracle(t, 1, 0) == Fraction(50, 3)


def test_shared_degree_index_check():
    t = Triple(empty_graph(3), empty_graph(3))
    with pytest.raises(IndexOutOfRange):
        shared_degree(t, 2, 3)


def _heavy_random_triple(rng: SplitMix64, n: int) -> Triple:
    m1 = rng.between(0, n * (n - 1) // 2)
    m2 = rng.between(0, n * (n - 1) // 2)
    return random_triple(rng, n, m1, m2, rng.between(0, n))


def test_shared_degree_sum_identity_n10():
    rng = SplitMix64(10)
    t = _heavy_random_triple(rng, 10)
    for side in (1, 2):
        total = sum(shared_degree(t, side, v) for v in range(t.n))
        assert total == 3 * (2 * t.graph(side).num_edges + len(t.yellow))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32), st.integers(16, 30))
def test_shared_degree_properties(seed, n):
    # large enough that degrees straddle the threshold
    t = _heavy_random_triple(SplitMix64(seed), n)
    for side in (1, 2):
        g = t.graph(side)
        vals = [shared_degree(t, side, v) for v in range(n)]
        assert sum(vals) == 3 * (2 * g.num_edges + len(t.yellow))
        for v, third in enumerate(vals):
            assert Fraction(third, 3) == _sd_oracle(t, side, v)
            d = g.degree(v) + t.yellow_degree(side, v)
            if g.degree(v) < 15:
                assert third >= 3 * d
            else:
                assert third >= d


# -- classification ----------------------------------------------------------------


def _by_vertex(t):
    return {(c.side, c.index): c for c in classify_vertices(t)}


def test_classify_star():
    t = Triple(star_graph(3), empty_graph(4))
    c = _by_vertex(t)
    for leaf in (1, 2, 3):
        assert c[1, leaf].weak
        assert c[1, leaf].sponsor == (1, 0)
    centre = c[1, 0]
    assert not centre.weak
    assert centre.sponsor_of == ((1, 1), (1, 2), (1, 3))
    assert centre.donor and centre.supersponsor
    assert centre.degree_one_neighbors == ((1, 1), (1, 2), (1, 3))
    assert not any(c[2, v].weak for v in range(4))


def test_classify_path():
    t = Triple(path_graph(4), empty_graph(4))
    c = _by_vertex(t)
    # interior vertices: degree 2 with a degree-2 neighbour; ends are 1-vertices
    assert all(c[1, v].weak for v in range(4))
    assert all(c[1, v].sponsor is None for v in range(4))
    assert not any(x.donor for x in c.values())


def test_classify_five_cycle():
    g = graph_from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    t = Triple(empty_graph(5), g)
    c = _by_vertex(t)
    assert all(c[2, v].weak and c[2, v].sponsor is None for v in range(5))
    assert all(c[2, v].supersponsor for v in range(5))


def test_classify_counts_yellow_edges():
    # leaf 1 of a 4-star in G1 also gets a yellow edge, so its degree is 2
    t = Triple.from_edges(5, e1=[(0, i) for i in range(1, 5)], e3=[(1, 0)])
    c = _by_vertex(t)
    assert c[1, 1].degree == 2 and not c[1, 1].weak
    assert c[2, 0].degree == 1 and c[2, 0].weak
    assert c[1, 0].degree_one_neighbors == ((1, 2), (1, 3), (1, 4))


def test_sponsor_needs_unique_big_neighbour():
    edges = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]
    t = Triple(graph_from_edges(7, edges), empty_graph(7))
    c = _by_vertex(t)
    assert c[1, 0].weak is False  # both neighbours have degree 3
    t2 = Triple(graph_from_edges(7, edges + [(3, 4)]), empty_graph(7))
    c2 = _by_vertex(t2)
    # 3 and 4 now have degree 2 and are adjacent -> weak; 1 is their unique big neighbour
    assert c2[1, 3].weak and c2[1, 3].sponsor == (1, 1)


@given(triples())
def test_classification_invariants(t):
    classes = classify_vertices(t)
    for c in classes:
        assert c.supersponsor == (len(c.weak_neighbors) >= 2)
        if c.donor:
            assert c.side == 1 and len(c.degree_one_neighbors) >= 2
    if 1 not in t.g1.degrees():
        assert not any(c.donor for c in classes)


def test_disjoint_union_numbering():
    g = disjoint_union(complete_graph(3), star_graph(2))
    assert g.edges() == [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5)]
