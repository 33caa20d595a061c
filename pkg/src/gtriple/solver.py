"""Deciding list packability.

Three routes are provided: :func:`verify_packing` checks a certificate,
:func:`brute_force_pack` enumerates every bijection (small ``n`` only) and
:func:`solve_pack` runs the bitset backtracking kernel.  The reduction
:func:`contract_placement` fixes one assignment and pushes its consequences
into new yellow edges.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from . import _kernel
from .errors import (
    BadParam,
    GTripleError,
    IndexOutOfRange,
    NotAPermutation,
    TooLarge,
    YellowForbidden,
)
from .graph import Triple, _bits

BRUTE_FORCE_MAX_N = 8

Packing = tuple[int, ...]


@dataclass(frozen=True)
class Violation:
    """``kind`` is ``"yellow"`` (witness ``(u,)``) or ``"white"`` (witness ``(u, v)``)."""

    kind: str
    witness: tuple[int, ...]


def _check_permutation(f: Sequence[int], n: int) -> None:
    if len(f) != n or sorted(f) != list(range(n)):
        raise NotAPermutation(f"map {list(f)} is not a permutation of 0..{n - 1}")


def verify_packing(t: Triple, f: Sequence[int]) -> list[Violation]:
    """All ways ``f`` fails to be a list packing of ``t`` (empty if it is one)."""
    _check_permutation(f, t.n)
    out = [Violation("yellow", (u,)) for u in range(t.n) if t.yellow_rows[u] >> f[u] & 1]
    adj2 = t.g2.adj
    out += [Violation("white", (u, v)) for u, v in t.g1.edges() if adj2[f[u]] >> f[v] & 1]
    return out


def is_packing(t: Triple, f: Sequence[int]) -> bool:
    return not verify_packing(t, f)


def brute_force_pack(t: Triple) -> tuple[Packing | None, int]:
    """First valid bijection in lexicographic order and the number of valid ones."""
    n = t.n
    if n > BRUTE_FORCE_MAX_N:
        raise TooLarge(f"brute force limited to n <= {BRUTE_FORCE_MAX_N}, got {n}")
    edges = t.g1.edges()
    adj2 = t.g2.adj
    rows = t.yellow_rows
    first = None
    count = 0
    for f in itertools.permutations(range(n)):
        if any(rows[u] >> f[u] & 1 for u in range(n)):
            continue
        if any(adj2[f[u]] >> f[v] & 1 for u, v in edges):
            continue
        count += 1
        if first is None:
            first = f
    return first, count


def _twin_classes(adj: Sequence[int], yellow: Sequence[int]) -> list[list[int]]:
    """Classes of vertices whose pairwise transposition is an automorphism."""
    groups: dict[tuple[int, int, int], list[int]] = {}
    for v, mask in enumerate(adj):
        groups.setdefault((0, mask, yellow[v]), []).append(v)
        groups.setdefault((1, mask | 1 << v, yellow[v]), []).append(v)
    return [g for g in groups.values() if len(g) > 1]


def search_order(t: Triple) -> list[int]:
    """V1 vertices by descending total degree, ties by index."""
    deg = [t.g1.adj[u].bit_count() + t.yellow_rows[u].bit_count() for u in range(t.n)]
    return sorted(range(t.n), key=lambda u: (-deg[u], u))


@dataclass(frozen=True)
class SolveResult:
    status: str  # "packs" | "no-packing" | "budget-exceeded"
    packing: Packing | None
    nodes: int


_STATUS = {1: "packs", 0: "no-packing", -1: "budget-exceeded"}


def solve(t: Triple, budget: int = 0, kernel: str | None = None) -> SolveResult:
    """Run the backtracking search; ``budget`` caps placements tried (0 = none).

    Interchangeable vertices (twins with identical yellow neighbourhoods)
    are only tried in one canonical order, which never loses a solution.
    """
    n = t.n
    full = (1 << n) - 1
    order = search_order(t)
    pos = {u: i for i, u in enumerate(order)}
    prev1 = [-1] * n
    for cls in _twin_classes(t.g1.adj, t.yellow_rows):
        cls.sort(key=pos.__getitem__)
        for a, b in zip(cls, cls[1:]):
            prev1[b] = a
    prev2 = [-1] * n
    for cls in _twin_classes(t.g2.adj, t.yellow_cols):
        for a, b in zip(cls, cls[1:]):
            prev2[b] = a
    status, image, nodes = _kernel.get_kernel(kernel)(
        n,
        [t.g1.neighbors(u) for u in range(n)],
        list(t.g2.adj),
        [full & ~t.yellow_rows[u] for u in range(n)],
        order,
        prev1,
        prev2,
        budget,
    )
    return SolveResult(_STATUS[status], tuple(image) if image is not None else None, nodes)


def solve_pack(t: Triple) -> Packing | None:
    """A list packing of ``t``, or None when none exists (complete search)."""
    return solve(t).packing


@dataclass(frozen=True)
class Contraction:
    """Result of fixing some assignments.

    ``keep1[i]`` / ``keep2[i]`` give the original index of vertex ``i`` of
    the reduced triple on each side.
    """

    triple: Triple
    placements: tuple[tuple[int, int], ...]
    keep1: tuple[int, ...]
    keep2: tuple[int, ...]

    def lift(self, f: Sequence[int]) -> Packing:
        """Extend a packing of the reduced triple to the original one."""
        n = len(self.keep1) + len(self.placements)
        out = [-1] * n
        for i, w in enumerate(f):
            out[self.keep1[i]] = self.keep2[w]
        for x, y in self.placements:
            out[x] = y
        return tuple(out)


def contract_placement(t: Triple, x: int, y: int) -> Triple:
    """Map ``x -> y``, delete both and forbid ``N1(x) x N2(y)`` by yellow edges.

    Every list packing of the result lifts to one of ``t`` by adding ``x -> y``.
    Indices above ``x`` (resp. ``y``) shift down by one.
    """
    n = t.n
    if not (0 <= x < n and 0 <= y < n):
        raise IndexOutOfRange(f"placement {x}:{y} outside 0..{n - 1}")
    if t.yellow_rows[x] >> y & 1:
        raise YellowForbidden(f"({x}, {y}) is a yellow edge")
    yellow = {(u, w) for u, w in t.yellow if u != x and w != y}
    yellow.update((u, w) for u in _bits(t.g1.adj[x]) for w in _bits(t.g2.adj[y]))
    shifted = frozenset((u - (u > x), w - (w > y)) for u, w in yellow)
    return Triple(t.g1.delete_vertex(x), t.g2.delete_vertex(y), shifted)


def extend_by_placements(t: Triple, placements: Sequence[tuple[int, int]]) -> Contraction:
    """Apply :func:`contract_placement` left to right.

    Placements use the original triple's indices.
    """
    keep1 = list(range(t.n))
    keep2 = list(range(t.n))
    cur = t
    for i, (x, y) in enumerate(placements):
        try:
            if x not in keep1 or y not in keep2:
                if 0 <= x < t.n and 0 <= y < t.n:
                    raise BadParam(f"vertex of {x}:{y} already placed")
                raise IndexOutOfRange(f"placement {x}:{y} outside 0..{t.n - 1}")
            cx, cy = keep1.index(x), keep2.index(y)
            cur = contract_placement(cur, cx, cy)
        except GTripleError as exc:
            raise type(exc)(f"placement #{i} ({x}:{y}): {exc}") from exc
        del keep1[cx]
        del keep2[cy]
    return Contraction(cur, tuple((x, y) for x, y in placements), tuple(keep1), tuple(keep2))
