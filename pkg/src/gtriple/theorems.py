"""Hypothesis predicates for the packing theorems and Zak's conjecture.

Every inequality is evaluated in integer form.  ``margin`` is the slack of
the theorem's main inequality (right side minus left side); if one of the
side conditions on maximum degrees or on ``n`` fails, ``margin`` is instead
the most negative failing slack, so ``margin >= 0`` exactly when the
hypothesis holds.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .errors import CliqueSearchTooLarge, YellowNotAllowed
from .families import be_exception_graphs
from .graph import CONSTANTS, Graph, Triple, triple_stats
from .iso import clique_number, components, is_isomorphic

ZAK_52_MIN_N = 10**10


@dataclass(frozen=True)
class Verdict:
    theorem: str
    hypothesis_holds: bool
    guarantees_packing: bool
    exception: str | None
    margin: int
    conditions: dict[str, bool] = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "hypothesis_holds": self.hypothesis_holds,
            "guarantees_packing": self.guarantees_packing,
            "exception": self.exception,
            "margin": self.margin,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)


def _margin(main: int, sides: dict[str, int]) -> int:
    bad = [s for s in sides.values() if s < 0]
    return min([main, *bad]) if bad else main


def _verdict(
    theorem: str,
    main: int,
    sides: dict[str, int],
    exception: str | None = None,
    theorem_proved: bool = True,
) -> Verdict:
    margin = _margin(main, sides)
    holds = margin >= 0
    conditions = {name: slack >= 0 for name, slack in sides.items()}
    conditions["main"] = main >= 0
    return Verdict(
        theorem=theorem,
        hypothesis_holds=holds,
        guarantees_packing=theorem_proved and holds and exception is None,
        exception=exception,
        margin=margin,
        conditions=conditions,
    )


def _require_pair(t: Triple, theorem: str) -> None:
    if t.yellow:
        raise YellowNotAllowed(f"{theorem} concerns plain pairs; triple has {len(t.yellow)} yellow edges")


# -- Sauer-Spencer, list version ------------------------------------------------


def is_perfect_matching(g: Graph) -> bool:
    return g.n % 2 == 0 and all(m.bit_count() == 1 for m in g.adj)


def is_balanced_biclique(g: Graph) -> bool:
    """``K_{n/2,n/2}``: the complement is two disjoint cliques of size n/2."""
    n = g.n
    if n == 0 or n % 2 or any(m.bit_count() != n // 2 for m in g.adj):
        return False
    full = (1 << n) - 1
    comp = Graph(n, tuple(full & ~m & ~(1 << v) for v, m in enumerate(g.adj)))
    parts = components(comp)
    return len(parts) == 2 and all(len(p) == n // 2 for p in parts) and comp.num_edges == 2 * math.comb(n // 2, 2)


def _ss_exception(t: Triple) -> str | None:
    n = t.n
    if n % 2 or t.yellow:
        return None
    half = n // 2
    for name, a, b in (("G1", t.g1, t.g2), ("G2", t.g2, t.g1)):
        if not is_perfect_matching(a):
            continue
        other = "G2" if name == "G1" else "G1"
        if half % 2 and is_balanced_biclique(b):
            return f"{name} is a perfect matching and {other} is K_{{{half},{half}}} with {half} odd"
        if b.max_degree >= half:
            if b.n > 32:
                raise CliqueSearchTooLarge(f"clique search needed on n = {b.n} > 32")
            if clique_number(b) >= half + 1:
                return f"{name} is a perfect matching and {other} contains K_{half + 1}"
    return None


def sauer_spencer_from_stats(n: int, delta1: int, delta2: int, delta3: int) -> Verdict:
    """Arithmetic part only (no exception check)."""
    return _verdict("ss", n - 2 * (delta1 * delta2 + delta3), {})


def check_sauer_spencer_list(t: Triple) -> Verdict:
    """List Sauer-Spencer: ``2(D1*D2 + D3) <= n`` minus the exceptional pairs."""
    s = triple_stats(t)
    main = t.n - 2 * (s.delta1 * s.delta2 + s.delta3)
    exception = _ss_exception(t) if main >= 0 and s.delta3 == 0 else None
    return _verdict("ss", main, {}, exception)


# -- Bollobas-Eldridge, list version ---------------------------------------------


def be_exception_index(g1: Graph, g2: Graph) -> int | None:
    """1-based index of the exceptional pair ``{g1, g2}`` matches, if any."""
    n = g1.n
    if not 4 <= n <= 9 or g1.num_edges + g2.num_edges != 2 * n - 3:
        return None
    for k in range(1, 8):
        a, b = be_exception_graphs(k)
        if a.n != n:
            continue
        if (is_isomorphic(g1, a) and is_isomorphic(g2, b)) or (
            is_isomorphic(g1, b) and is_isomorphic(g2, a)
        ):
            return k
    return None


def check_be_list(t: Triple) -> Verdict:
    s = triple_stats(t)
    n = t.n
    sides = {
        "delta1": n - 2 - s.delta1,
        "delta2": n - 2 - s.delta2,
        "delta3": n - 1 - s.delta3,
    }
    k = be_exception_index(t.g1, t.g2)
    exception = f"exceptional pair #{k}" if k is not None else None
    return _verdict("be", 2 * n - 3 - (s.e1 + s.e2 + s.e3), sides, exception)


# -- Zak ---------------------------------------------------------------------------


def _pair_sum(t: Triple) -> tuple[int, int, int]:
    s = triple_stats(t)
    return s.e1 + s.e2 + s.max_delta, s.delta1, s.delta2


def zak_conjecture_from_stats(n: int, total: int, delta1: int, delta2: int) -> Verdict:
    """``total`` is ``e1 + e2 + max(D1, D2)``."""
    sides = {"delta1": n - 2 - delta1, "delta2": n - 2 - delta2}
    return _verdict("zak-conj", 3 * n - 7 - total, sides, theorem_proved=False)


def check_zak_conjecture(t: Triple) -> Verdict:
    _require_pair(t, "zak-conj")
    total, d1, d2 = _pair_sum(t)
    return zak_conjecture_from_stats(t.n, total, d1, d2)


def ceil_96_n_three_quarters(n: int) -> int:
    """Smallest integer ``k`` with ``k**4 >= 96**4 * n**3``."""
    target = 96**4 * n**3
    k = math.isqrt(math.isqrt(target))
    return k if k**4 >= target else k + 1


def zak_theorem_holds(n: int, total: int) -> bool:
    """``total <= 3n - 96 n^(3/4) - 65``, exactly."""
    lhs = 3 * n - 65 - total
    return lhs >= 0 and lhs**4 >= 96**4 * n**3


def zak_theorem_from_stats(n: int, total: int, delta1: int = 0, delta2: int = 0) -> Verdict:
    # floor of the irrational threshold, so margin 0 means total sits on it
    main = 3 * n - 65 - ceil_96_n_three_quarters(n) - total
    sides = {"delta1": n - 2 - delta1, "delta2": n - 2 - delta2}
    return _verdict("zak-thm", main, sides)


def check_zak_theorem(t: Triple) -> Verdict:
    _require_pair(t, "zak-thm")
    total, d1, d2 = _pair_sum(t)
    return zak_theorem_from_stats(t.n, total, d1, d2)


def zak_52_from_stats(n: int, total: int) -> Verdict:
    """``n >= 10**10`` and ``2 * total < 5n - 4``."""
    return _verdict("zak-52", 5 * n - 5 - 2 * total, {"n_bound": n - ZAK_52_MIN_N})


def check_zak_52(t: Triple) -> Verdict:
    _require_pair(t, "zak-52")
    total, _, _ = _pair_sum(t)
    return zak_52_from_stats(t.n, total)


# -- main theorem ------------------------------------------------------------------


def main_pair_from_stats(n: int, total: int, delta1: int, delta2: int) -> Verdict:
    sides = {"delta1": n - 2 - delta1, "delta2": n - 2 - delta2}
    return _verdict("main", 3 * n - CONSTANTS.c_main - total, sides)


def main_triple_from_stats(n: int, f_value: int, delta1: int, delta2: int, delta3: int) -> Verdict:
    sides = {"delta1": n - 2 - delta1, "delta2": n - 2 - delta2, "delta3": n - 1 - delta3}
    return _verdict("main-triple", 3 * n - CONSTANTS.c_detailed - f_value, sides)


def check_main_theorem(t: Triple, variant: str = "pair") -> Verdict:
    s = triple_stats(t)
    if variant == "pair":
        _require_pair(t, "main")
        return main_pair_from_stats(t.n, s.e1 + s.e2 + s.max_delta, s.delta1, s.delta2)
    if variant == "triple":
        return main_triple_from_stats(t.n, s.f_value, s.delta1, s.delta2, s.delta3)
    raise ValueError(f"variant must be 'pair' or 'triple', got {variant!r}")


# -- combined ---------------------------------------------------------------------


@dataclass(frozen=True)
class Implication:
    verdict: Verdict | None  # first predicate that guarantees a packing
    verdicts: tuple[Verdict, ...]

    @property
    def margins(self) -> dict[str, int]:
        return {v.theorem: v.margin for v in self.verdicts}


def implied_packable(t: Triple) -> Implication:
    """Run the predicates in a fixed order and report the first one that applies."""
    verdicts = []
    try:
        verdicts.append(check_sauer_spencer_list(t))
    except CliqueSearchTooLarge:
        s = triple_stats(t)
        v = sauer_spencer_from_stats(t.n, s.delta1, s.delta2, s.delta3)
        verdicts.append(Verdict("ss", v.hypothesis_holds, False, "exception check too large", v.margin))
    verdicts.append(check_be_list(t))
    if not t.yellow:
        verdicts += [check_zak_52(t), check_zak_theorem(t), check_main_theorem(t, "pair")]
    else:
        verdicts.append(check_main_theorem(t, "triple"))
    best = next((v for v in verdicts if v.guarantees_packing), None)
    return Implication(best, tuple(verdicts))


THEOREMS = {
    "ss": check_sauer_spencer_list,
    "be": check_be_list,
    "zak-conj": check_zak_conjecture,
    "zak-thm": check_zak_theorem,
    "zak-52": check_zak_52,
    "main": lambda t: check_main_theorem(t, "triple" if t.yellow else "pair"),
}
