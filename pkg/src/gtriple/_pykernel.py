"""Pure-Python backtracking kernel (fallback for the compiled one).

Both kernels implement exactly the same search and must agree on the
returned map and node count.
"""

from __future__ import annotations

FOUND = 1
EXHAUSTED = 0
OUT_OF_BUDGET = -1


def backtrack(
    n: int,
    nbr1: list[list[int]],
    adj2: list[int],
    allowed: list[int],
    order: list[int],
    prev1: list[int],
    prev2: list[int],
    budget: int = 0,
) -> tuple[int, list[int] | None, int]:
    """Search for a list packing.

    ``order`` fixes the V1 assignment order.  ``allowed[u]`` is the initial
    candidate bitset of ``u``.  ``prev1[u]`` names an earlier-assigned twin
    whose image must be smaller than ``u``'s (or -1); ``prev2[w]`` names a
    twin of ``w`` that must already be used before ``w`` may be (or -1).
    ``budget`` caps the number of placements tried; 0 means unlimited.
    """
    if n == 0:
        return FOUND, [], 0
    pos = [0] * n
    for i, u in enumerate(order):
        pos[u] = i
    later = [[v for v in nbr1[u] if pos[v] > pos[u]] for u in range(n)]

    cand = list(allowed)
    image = [-1] * n
    used = 0
    rem = [0] * n
    trail: list[tuple[int, int]] = []
    marks = [0] * n
    nodes = 0

    def domain(d: int) -> int:
        u = order[d]
        mask = cand[u] & ~used
        p = prev1[u]
        if p >= 0:
            mask &= ~((2 << image[p]) - 1)
        return mask

    d = 0
    rem[0] = domain(0)
    while True:
        mask = rem[d]
        if not mask:
            d -= 1
            if d < 0:
                return EXHAUSTED, None, nodes
            u = order[d]
            used &= ~(1 << image[u])
            image[u] = -1
            mark = marks[d]
            while len(trail) > mark:
                v, old = trail.pop()
                cand[v] = old
            continue
        low = mask & -mask
        rem[d] = mask ^ low
        w = low.bit_length() - 1
        q = prev2[w]
        if q >= 0 and not used >> q & 1:
            continue
        nodes += 1
        if budget and nodes > budget:
            return OUT_OF_BUDGET, None, nodes - 1
        u = order[d]
        image[u] = w
        used |= low
        marks[d] = len(trail)
        forbid = ~adj2[w]
        for v in later[u]:
            trail.append((v, cand[v]))
            cand[v] &= forbid
        ok = True
        for i in range(d + 1, n):
            if not cand[order[i]] & ~used:
                ok = False
                break
        if not ok:
            used ^= low
            image[u] = -1
            mark = marks[d]
            while len(trail) > mark:
                v, old = trail.pop()
                cand[v] = old
            continue
        d += 1
        if d == n:
            return FOUND, image, nodes
        rem[d] = domain(d)
