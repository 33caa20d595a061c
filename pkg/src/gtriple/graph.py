"""Graphs, graph triples and the degree statistics defined on them.

Adjacency is stored as one Python ``int`` bitset per vertex: bit ``w`` of
``adj[v]`` is set iff ``vw`` is an edge.  Yellow edges of a triple are kept
both as a set of ``(V1 index, V2 index)`` pairs and as per-side bitsets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import DuplicateEdge, IndexOutOfRange, SelfLoop

MAX_ORDER = 4096

Edge = tuple[int, int]


@dataclass(frozen=True)
class Constants:
    c_main: int = 418275
    c_detailed: int = 418279
    f_const: int = 195
    k_const: int = 15


CONSTANTS = Constants()
# white-degree cut-off used by the shared degree; equals k_const
SD_THRESHOLD = CONSTANTS.k_const


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on ``0..n-1``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise ValueError("adjacency length must equal n")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask & ~full:
                raise IndexOutOfRange(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if mask >> v & 1:
                raise SelfLoop(f"self-loop at {v}")
            for w in _bits(mask):
                if not self.adj[w] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at {v}-{w}")

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[Edge]:
        """Sorted list of edges ``(u, v)`` with ``u < v``."""
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    @cached_property
    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    @property
    def max_degree(self) -> int:
        return max((m.bit_count() for m in self.adj), default=0)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return graph_from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def delete_vertex(self, x: int) -> "Graph":
        """Remove ``x``; vertices above ``x`` shift down by one."""
        if not 0 <= x < self.n:
            raise IndexOutOfRange(f"vertex {x} not in 0..{self.n - 1}")
        low = (1 << x) - 1
        adj = []
        for v, mask in enumerate(self.adj):
            if v == x:
                continue
            adj.append((mask & low) | (mask >> (x + 1) << x))
        return Graph(self.n - 1, tuple(adj))


def graph_from_edges(n: int, edges: Iterable[Edge]) -> Graph:
    """Build a graph, rejecting out-of-range ids, loops and repeated edges."""
    if not 0 <= n:
        raise IndexOutOfRange(f"vertex count must be non-negative, got {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at {u}")
        if adj[u] >> v & 1:
            raise DuplicateEdge(f"edge ({min(u, v)}, {max(u, v)}) given twice")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def disjoint_union(*graphs: Graph) -> Graph:
    """Components are numbered consecutively in argument order."""
    adj: list[int] = []
    offset = 0
    for g in graphs:
        adj.extend(m << offset for m in g.adj)
        offset += g.n
    return Graph(offset, tuple(adj))


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with the centre at vertex 0."""
    return graph_from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return graph_from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def matching_graph(k: int) -> Graph:
    return graph_from_edges(2 * k, [(2 * i, 2 * i + 1) for i in range(k)])


@dataclass(frozen=True)
class Triple:
    """Two same-order white graphs plus yellow (forbidden-assignment) pairs.

    ``yellow`` holds ``(u, w)`` with ``u`` in V1 and ``w`` in V2.
    """

    g1: Graph
    g2: Graph
    yellow: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.g1.n != self.g2.n:
            raise ValueError(f"orders differ: {self.g1.n} vs {self.g2.n}")
        if not isinstance(self.yellow, frozenset):
            object.__setattr__(self, "yellow", frozenset(self.yellow))
        n = self.n
        for u, w in self.yellow:
            if not (0 <= u < n and 0 <= w < n):
                raise IndexOutOfRange(f"yellow edge ({u}, {w}) outside 0..{n - 1}")

    @classmethod
    def build(cls, g1: Graph, g2: Graph, yellow: Iterable[Edge] = ()) -> "Triple":
        """Like the constructor but rejects repeated yellow pairs."""
        seen: set[Edge] = set()
        for e in yellow:
            e = (e[0], e[1])
            if e in seen:
                raise DuplicateEdge(f"yellow edge {e} given twice")
            seen.add(e)
        return cls(g1, g2, frozenset(seen))

    @classmethod
    def from_edges(
        cls, n: int, e1: Iterable[Edge] = (), e2: Iterable[Edge] = (), e3: Iterable[Edge] = ()
    ) -> "Triple":
        return cls.build(graph_from_edges(n, e1), graph_from_edges(n, e2), e3)

    @property
    def n(self) -> int:
        return self.g1.n

    def graph(self, side: int) -> Graph:
        if side == 1:
            return self.g1
        if side == 2:
            return self.g2
        raise ValueError(f"side must be 1 or 2, got {side}")

    @cached_property
    def yellow_rows(self) -> tuple[int, ...]:
        """Bit ``w`` of entry ``u`` set iff ``(u, w)`` is yellow."""
        rows = [0] * self.n
        for u, w in self.yellow:
            rows[u] |= 1 << w
        return tuple(rows)

    @cached_property
    def yellow_cols(self) -> tuple[int, ...]:
        """Bit ``u`` of entry ``w`` set iff ``(u, w)`` is yellow."""
        cols = [0] * self.n
        for u, w in self.yellow:
            cols[w] |= 1 << u
        return tuple(cols)

    def yellow_mask(self, side: int, v: int) -> int:
        return self.yellow_rows[v] if side == 1 else self.yellow_cols[v]

    def yellow_degree(self, side: int, v: int) -> int:
        return self.yellow_mask(side, v).bit_count()

    def yellow_edges(self) -> list[Edge]:
        return sorted(self.yellow)

    def relabel(self, perm1: Sequence[int], perm2: Sequence[int]) -> "Triple":
        """Rename V1 vertex ``u`` to ``perm1[u]`` and V2 vertex ``w`` to ``perm2[w]``."""
        yellow = frozenset((perm1[u], perm2[w]) for u, w in self.yellow)
        return Triple(self.g1.relabel(perm1), self.g2.relabel(perm2), yellow)


@dataclass(frozen=True)
class TripleStats:
    e1: int
    e2: int
    e3: int
    delta1: int
    delta2: int
    delta3_1: int
    delta3_2: int
    delta3: int
    d1_cap: int
    d2_cap: int
    script_d: int
    f_value: int

    @property
    def max_delta(self) -> int:
        return max(self.delta1, self.delta2)

    def as_dict(self) -> dict[str, int]:
        return dict(self.__dict__)


def triple_stats(t: Triple) -> TripleStats:
    e1, e2, e3 = t.g1.num_edges, t.g2.num_edges, len(t.yellow)
    delta1, delta2 = t.g1.max_degree, t.g2.max_degree
    d31 = max((m.bit_count() for m in t.yellow_rows), default=0)
    d32 = max((m.bit_count() for m in t.yellow_cols), default=0)
    script_d = max(delta1 + max(d32 - 4, 0), delta2 + max(d31 - 4, 0))
    return TripleStats(
        e1=e1,
        e2=e2,
        e3=e3,
        delta1=delta1,
        delta2=delta2,
        delta3_1=d31,
        delta3_2=d32,
        delta3=max(d31, d32),
        d1_cap=max(delta1, d31),
        d2_cap=max(delta2, d32),
        script_d=script_d,
        f_value=e1 + e2 + e3 + script_d,
    )


def f_delta(t1: Triple, t2: Triple) -> int:
    """Drop in potential ``F`` from ``t1`` to ``t2``."""
    return triple_stats(t1).f_value - triple_stats(t2).f_value


def shared_degree(t: Triple, side: int, v: int) -> int:
    """Three times the shared degree of ``v`` (always an integer).

    Each white edge between a vertex of white degree < 15 and one of degree
    >= 15 moves 2/3 of its weight to the low-degree end; yellow degree is
    added unchanged.
    """
    g = t.graph(side)
    if not 0 <= v < g.n:
        raise IndexOutOfRange(f"vertex {v} not in 0..{g.n - 1}")
    deg = g.adj[v].bit_count()
    high = sum(1 for x in _bits(g.adj[v]) if g.adj[x].bit_count() >= SD_THRESHOLD)
    d3 = t.yellow_degree(side, v)
    if deg < SD_THRESHOLD:
        return 3 * deg + 2 * high + 3 * d3
    return 3 * deg - 2 * (deg - high) + 3 * d3


Vertex = tuple[int, int]  # (side, index)


@dataclass(frozen=True)
class VertexClass:
    side: int
    index: int
    degree: int
    weak: bool
    sponsor: Vertex | None
    sponsor_of: tuple[Vertex, ...]
    weak_neighbors: tuple[Vertex, ...]
    donor: bool
    supersponsor: bool
    degree_one_neighbors: tuple[Vertex, ...]


def _full_neighbors(t: Triple, side: int, v: int) -> list[Vertex]:
    other = 3 - side
    white = [(side, x) for x in _bits(t.graph(side).adj[v])]
    return white + [(other, x) for x in _bits(t.yellow_mask(side, v))]


def classify_vertices(t: Triple) -> list[VertexClass]:
    """Weak / sponsor / donor / supersponsor classification of every vertex.

    Degrees and neighbourhoods count white and yellow edges together, except
    that ``degree_one_neighbors`` (and so the donor test) only looks at
    white neighbours.  A weak vertex gets a sponsor only when exactly one
    neighbour has degree at least 3.  Output lists V1 first, then V2, by index.
    """
    verts = [(s, v) for s in (1, 2) for v in range(t.n)]
    nbrs = {x: _full_neighbors(t, *x) for x in verts}
    deg = {x: len(nbrs[x]) for x in verts}
    weak = {
        x: deg[x] == 1 or (deg[x] == 2 and any(deg[y] == 2 for y in nbrs[x])) for x in verts
    }
    sponsor: dict[Vertex, Vertex | None] = {}
    for x in verts:
        big = [y for y in nbrs[x] if deg[y] >= 3]
        sponsor[x] = big[0] if weak[x] and len(big) == 1 else None
    sponsored: dict[Vertex, list[Vertex]] = {x: [] for x in verts}
    for x in verts:
        if sponsor[x] is not None:
            sponsored[sponsor[x]].append(x)

    out = []
    for x in verts:
        wn = tuple(y for y in nbrs[x] if weak[y])
        ones = tuple(y for y in nbrs[x] if y[0] == x[0] and deg[y] == 1)
        out.append(
            VertexClass(
                side=x[0],
                index=x[1],
                degree=deg[x],
                weak=weak[x],
                sponsor=sponsor[x],
                sponsor_of=tuple(sorted(sponsored[x])),
                weak_neighbors=tuple(sorted(wn)),
                donor=x[0] == 1 and len(ones) >= 2,
                supersponsor=len(wn) >= 2,
                degree_one_neighbors=tuple(sorted(ones)),
            )
        )
    return out
