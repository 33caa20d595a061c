from __future__ import annotations

import itertools

import pytest

from gtriple.errors import CliqueSearchTooLarge, TooLarge
from gtriple.graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    graph_from_edges,
    path_graph,
    star_graph,
)
from gtriple.iso import canonical_form, clique_number, components, is_isomorphic, max_clique
from gtriple.rng import SplitMix64, gnm


def _iso_oracle(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        return False
    eg = set(g.edges())
    target = set(h.edges())
    for p in itertools.permutations(range(g.n)):
        if {tuple(sorted((p[u], p[v]))) for u, v in eg} == target:
            return True
    return False


def _clique_oracle(g: Graph) -> int:
    best = 0
    for r in range(1, g.n + 1):
        if any(all(g.has_edge(u, v) for u, v in itertools.combinations(c, 2)) for c in itertools.combinations(range(g.n), r)):
            best = r
        else:
            break
    return best


def _random_graph(rng: SplitMix64, n: int) -> Graph:
    return gnm(rng, n, rng.between(0, n * (n - 1) // 2))


def test_triangle_vs_three_cycle():
    assert is_isomorphic(complete_graph(3), cycle_graph(3))
    assert canonical_form(complete_graph(3)) == canonical_form(cycle_graph(3))


def test_path_vs_claw():
    assert not is_isomorphic(path_graph(4), star_graph(3))
    assert canonical_form(path_graph(4)) != canonical_form(star_graph(3))


def test_two_triangles_vs_hexagon():
    two = disjoint_union(complete_graph(3), complete_graph(3))
    assert not is_isomorphic(two, cycle_graph(6))
    assert canonical_form(two) != canonical_form(cycle_graph(6))


def test_order_mismatch():
    assert not is_isomorphic(empty_graph(2), empty_graph(3))


def test_guards():
    with pytest.raises(TooLarge):
        is_isomorphic(empty_graph(13), empty_graph(13))
    with pytest.raises(TooLarge):
        canonical_form(empty_graph(11))
    with pytest.raises(CliqueSearchTooLarge):
        max_clique(empty_graph(33))


def test_canonical_form_matches_isomorphism_on_seeded_pairs():
    rng = SplitMix64(500)
    agree = 0
    for _ in range(500):
        n = rng.between(1, 7)
        g = _random_graph(rng, n)
        if rng.below(2):
            # a relabelled copy, so that plenty of pairs are isomorphic
            p = list(range(n))
            for i in range(n - 1, 0, -1):
                j = rng.below(i + 1)
                p[i], p[j] = p[j], p[i]
            h = g.relabel(p)
        else:
            h = gnm(rng, n, g.num_edges)
        iso = is_isomorphic(g, h)
        assert (canonical_form(g) == canonical_form(h)) == iso
        if n <= 6:
            assert iso == _iso_oracle(g, h)
        agree += 1
    assert agree == 500


def test_canonical_form_counts_classes():
    # number of graphs on n unlabelled vertices: 1, 2, 4, 11, 34
    for n, expected in ((1, 1), (2, 2), (3, 4), (4, 11), (5, 34)):
        forms = set()
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            forms.add(canonical_form(graph_from_edges(n, [e for i, e in enumerate(pairs) if mask >> i & 1])))
        assert len(forms) == expected


def test_equivalence_relation():
    rng = SplitMix64(77)
    gs = [gnm(rng, 5, rng.between(3, 5)) for _ in range(40)]
    for g in gs:
        assert is_isomorphic(g, g)
    for a, b in itertools.combinations(gs, 2):
        assert is_isomorphic(a, b) == is_isomorphic(b, a)
    for a, b, c in itertools.combinations(gs[:20], 3):
        if is_isomorphic(a, b) and is_isomorphic(b, c):
            assert is_isomorphic(a, c)


def test_max_clique_against_oracle():
    rng = SplitMix64(3)
    for _ in range(150):
        n = rng.between(0, 9)
        g = _random_graph(rng, n)
        c = max_clique(g)
        assert all(g.has_edge(u, v) for u, v in itertools.combinations(c, 2))
        assert len(c) == clique_number(g) == _clique_oracle(g)


def test_max_clique_examples():
    assert clique_number(empty_graph(0)) == 0
    assert clique_number(empty_graph(4)) == 1
    assert clique_number(complete_bipartite(4, 4)) == 2
    g = disjoint_union(cycle_graph(5), complete_graph(4))
    assert sorted(max_clique(g)) == [5, 6, 7, 8]
    assert clique_number(complete_graph(32)) == 32


def test_components():
    g = disjoint_union(path_graph(3), empty_graph(1), complete_graph(2))
    assert components(g) == [[0, 1, 2], [3], [4, 5]]
