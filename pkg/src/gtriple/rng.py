"""Portable seeded randomness: SplitMix64 and uniform G(n, m).

The streams are fully specified here so another implementation can
reproduce them bit for bit:

* ``SplitMix64``: state ``s`` (64-bit).  ``next()`` does
  ``s += 0x9E3779B97F4A7C15``; ``z = s``;
  ``z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9``;
  ``z = (z ^ (z >> 27)) * 0x94D049BB133111EB``; returns ``z ^ (z >> 31)``,
  all arithmetic mod 2**64.
* ``below(k)`` returns ``next() % k`` (the modulo bias is accepted).
* ``gnm(n, m)``: list the pairs ``(u, v)``, ``u < v``, lexicographically;
  for ``i = 0 .. m-1`` swap entry ``i`` with entry ``i + below(N - i)``
  (``N`` = number of pairs); the first ``m`` entries are the edges, in
  that sampled order.
"""

from __future__ import annotations

from .graph import Graph, Triple, graph_from_edges

MASK64 = (1 << 64) - 1


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int) -> None:
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        if k <= 0:
            raise ValueError("bound must be positive")
        return self.next() % k

    def between(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in ``lo..hi`` inclusive."""
        return lo + self.below(hi - lo + 1)


def sample_pairs(rng: SplitMix64, pool: list[tuple[int, int]], m: int) -> list[tuple[int, int]]:
    """Partial Fisher-Yates: ``m`` distinct entries of ``pool`` in sampled order."""
    pool = list(pool)
    if not 0 <= m <= len(pool):
        raise ValueError(f"cannot pick {m} of {len(pool)}")
    for i in range(m):
        j = i + rng.below(len(pool) - i)
        pool[i], pool[j] = pool[j], pool[i]
    return pool[:m]


def gnm_edges(rng: SplitMix64, n: int, m: int) -> list[tuple[int, int]]:
    pool = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return sample_pairs(rng, pool, m)


def gnm(rng: SplitMix64, n: int, m: int) -> Graph:
    return graph_from_edges(n, gnm_edges(rng, n, m))


def random_triple(rng: SplitMix64, n: int, m1: int, m2: int, m3: int) -> Triple:
    """G(n, m1), G(n, m2) and ``m3`` uniform yellow pairs, drawn in that order."""
    g1 = gnm(rng, n, m1)
    g2 = gnm(rng, n, m2)
    yellow = sample_pairs(rng, [(u, w) for u in range(n) for w in range(n)], m3)
    return Triple(g1, g2, frozenset(yellow))
