"""Exact small-graph routines: isomorphism, canonical form, maximum clique."""

from __future__ import annotations

from .errors import CliqueSearchTooLarge, TooLarge
from .graph import Graph, _bits

ISO_MAX_N = 12
CANON_MAX_N = 10
CLIQUE_MAX_N = 32


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        return False
    if g.n > ISO_MAX_N:
        raise TooLarge(f"isomorphism test limited to n <= {ISO_MAX_N}, got {g.n}")
    if g.num_edges != h.num_edges:
        return False
    dg, dh = g.degrees(), h.degrees()
    if sorted(dg) != sorted(dh):
        return False
    n = g.n
    # match high-degree vertices first
    order = sorted(range(n), key=lambda v: (-dg[v], v))
    mapping = [-1] * n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used >> w & 1 or dh[w] != dg[v]:
                continue
            if any(g.has_edge(v, order[j]) != h.has_edge(w, mapping[order[j]]) for j in range(i)):
                continue
            mapping[v] = w
            used |= 1 << w
            if extend(i + 1):
                return True
            used &= ~(1 << w)
            mapping[v] = -1
        return False

    return extend(0)


def _twin_ids(g: Graph) -> list[int]:
    ids: dict[tuple[int, int], int] = {}
    out = []
    for v, mask in enumerate(g.adj):
        key_open, key_closed = (0, mask), (1, mask | 1 << v)
        if key_open in ids:
            out.append(ids[key_open])
        elif key_closed in ids:
            out.append(ids[key_closed])
        else:
            ids[key_open] = ids[key_closed] = v
            out.append(v)
    return out


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant byte string: equal outputs iff isomorphic graphs.

    Vertices are laid out in non-increasing degree order; among those
    layouts the upper triangle of the adjacency matrix, read column by
    column, is made lexicographically minimal.  Twins are interchangeable,
    so only one of them is branched on at each step.
    """
    n = g.n
    if n > CANON_MAX_N:
        raise TooLarge(f"canonical form limited to n <= {CANON_MAX_N}, got {n}")
    deg = g.degrees()
    cell = sorted(deg, reverse=True)
    twin = _twin_ids(g)
    best: list[int] | None = None
    perm: list[int] = []
    bits: list[int] = []

    def dfs(placed: int) -> None:
        nonlocal best
        j = len(perm)
        if j == n:
            if best is None or bits < best:
                best = bits.copy()
            return
        tried = set()
        for v in range(n):
            if placed >> v & 1 or deg[v] != cell[j] or twin[v] in tried:
                continue
            tried.add(twin[v])
            start = len(bits)
            bits.extend(1 if g.adj[v] >> p & 1 else 0 for p in perm)
            if best is None or bits <= best[: len(bits)]:
                perm.append(v)
                dfs(placed | 1 << v)
                perm.pop()
            del bits[start:]

    dfs(0)
    assert best is not None
    code = 0
    for b in best:
        code = code << 1 | b
    return bytes([n]) + code.to_bytes((len(best) + 7) // 8, "big")


def max_clique(g: Graph) -> list[int]:
    """Maximum clique by branch and bound with a greedy colouring bound."""
    if g.n > CLIQUE_MAX_N:
        raise CliqueSearchTooLarge(f"clique search limited to n <= {CLIQUE_MAX_N}, got {g.n}")
    adj = g.adj
    best: list[int] = []

    def color_bound(cand: int) -> list[tuple[int, int]]:
        # (vertex, colour number) in non-decreasing colour order
        out = []
        color = 0
        uncolored = cand
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~adj[v] & ~(1 << v)
                uncolored &= ~(1 << v)
                out.append((v, color))
        return out

    def expand(clique: list[int], cand: int) -> None:
        nonlocal best
        ordered = color_bound(cand)
        for v, c in reversed(ordered):
            if len(clique) + c <= len(best):
                return
            clique.append(v)
            nxt = cand & adj[v]
            if nxt:
                expand(clique, nxt)
            elif len(clique) > len(best):
                best = clique.copy()
            clique.pop()
            cand &= ~(1 << v)

    expand([], (1 << g.n) - 1)
    return sorted(best)


def clique_number(g: Graph) -> int:
    return len(max_clique(g))


def is_complete_graph(g: Graph) -> bool:
    return all(m.bit_count() == g.n - 1 for m in g.adj)


def components(g: Graph) -> list[list[int]]:
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        out.append(list(_bits(comp)))
    return out
