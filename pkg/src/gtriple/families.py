"""Generators for the named witness and sharpness instances.

Vertices are numbered component by component in the order the components
are written (triangle before star, clique before isolated vertices, ...).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BadParam
from .graph import (
    Graph,
    Triple,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    matching_graph,
    star_graph,
)

FAMILIES = ("zak-sharp", "small-cx", "be-exception", "star-cycle", "matching-biclique")


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: dict[str, int] = field(default_factory=dict)

    def build(self) -> Triple:
        return generate(self.name, **self.params)


def _pair(g1: Graph, g2: Graph) -> Triple:
    return Triple(g1, g2, frozenset())


def triangle_star(n: int) -> Graph:
    """``K_3 + K_{1,n-4}``: triangle on 0..2, star centre 3, leaves 4..n-1."""
    return disjoint_union(complete_graph(3), star_graph(n - 4))


def gen_zak_sharp(n: int) -> Triple:
    if n < 8:
        raise BadParam(f"zak-sharp needs n >= 8, got {n}")
    g = triangle_star(n)
    return _pair(g, g)


def gen_small_counterexample() -> Triple:
    """``4K_3`` against ``K_5`` plus seven isolated vertices (n = 12)."""
    g1 = disjoint_union(*[complete_graph(3)] * 4)
    g2 = disjoint_union(complete_graph(5), empty_graph(7))
    return _pair(g1, g2)


def _k(m: int) -> Graph:
    return complete_graph(m)


def _e(m: int) -> Graph:
    return empty_graph(m)


def be_exception_graphs(k: int) -> tuple[Graph, Graph]:
    """The k-th (1-based) exceptional pair, in listed order."""
    pairs = {
        1: lambda: (disjoint_union(_k(2), _k(2)), disjoint_union(_k(1), _k(3))),
        2: lambda: (disjoint_union(_e(2), _k(3)), disjoint_union(_k(2), _k(3))),
        3: lambda: (disjoint_union(_k(2), _k(2), _k(2)), disjoint_union(_e(2), _k(4))),
        4: lambda: (disjoint_union(_e(3), _k(3)), disjoint_union(_k(3), _k(3))),
        5: lambda: (disjoint_union(_k(2), _k(2), _k(3)), disjoint_union(_e(3), _k(4))),
        6: lambda: (disjoint_union(_e(4), _k(4)), disjoint_union(_k(2), _k(3), _k(3))),
        7: lambda: (disjoint_union(_e(5), _k(4)), disjoint_union(_k(3), _k(3), _k(3))),
    }
    if k not in pairs:
        raise BadParam(f"exception index must be in 1..7, got {k}")
    return pairs[k]()


def gen_be_exception(k: int) -> Triple:
    return _pair(*be_exception_graphs(k))


def gen_star_cycle(n: int) -> Triple:
    """``K_{1,n-2}`` plus an isolated vertex, against ``C_n``."""
    if n < 3:
        raise BadParam(f"star-cycle needs n >= 3, got {n}")
    return _pair(disjoint_union(star_graph(n - 2), _e(1)), cycle_graph(n))


def gen_matching_biclique(k: int) -> Triple:
    """``K_{k,k}`` against a perfect matching on ``2k`` vertices."""
    if k < 1:
        raise BadParam(f"matching-biclique needs k >= 1, got {k}")
    return _pair(complete_bipartite(k, k), matching_graph(k))


def triangles_vs_clique(n: int, triangles: int, edges: int, clique: int) -> Triple:
    """``a K_3 + b K_2 + c K_1`` against ``K_s`` plus ``n - s`` isolated vertices."""
    rest = n - 3 * triangles - 2 * edges
    if triangles < 0 or edges < 0 or rest < 0 or not 0 <= clique <= n:
        raise BadParam(f"no such grid point: n={n} a={triangles} b={edges} s={clique}")
    g1 = disjoint_union(*[_k(3)] * triangles, *[_k(2)] * edges, _e(rest))
    g2 = disjoint_union(_k(clique), _e(n - clique))
    return _pair(g1, g2)


def generate(name: str, n: int | None = None, k: int | None = None) -> Triple:
    """Dispatch by family name; ``n`` or ``k`` as each family requires."""
    def need(value: int | None, label: str) -> int:
        if value is None:
            raise BadParam(f"family {name} needs --{label}")
        return value

    if name == "zak-sharp":
        return gen_zak_sharp(need(n, "n"))
    if name == "small-cx":
        return gen_small_counterexample()
    if name in ("be-exception", "be-exception-k"):
        return gen_be_exception(need(k, "k"))
    if name == "star-cycle":
        return gen_star_cycle(need(n, "n"))
    if name == "matching-biclique":
        if k is None and n is not None:
            if n % 2:
                raise BadParam("matching-biclique needs even n")
            k = n // 2
        return gen_matching_biclique(need(k, "k"))
    raise BadParam(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")
