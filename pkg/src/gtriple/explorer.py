"""Counterexample hunting: exhaustive, family-grid and random search.

A search emits one :class:`SearchRecord` per instance that satisfies the
chosen hypothesis, each solved under a node budget.  Records are
deterministic for a fixed :class:`SearchConfig`, including under
``jobs > 1`` (results are merged back in instance order).
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable, Iterator

from .errors import ConfigError, ExhaustiveTooLarge
from .families import triangles_vs_clique
from .graph import Graph, Triple, graph_from_edges, triple_stats
from .io import format_packing, parse_triple, serialize_triple
from .iso import canonical_form
from .rng import SplitMix64, gnm_edges
from .solver import solve
from .theorems import THEOREMS

MODES = ("exhaustive", "family", "random")
HYPOTHESES = tuple(THEOREMS)
EXHAUSTIVE_MAX_N = 7
DEFAULT_BUDGET = 1_000_000


@dataclass(frozen=True)
class SearchConfig:
    mode: str
    n: int
    hypothesis: str
    seed: int | None = None
    budget: int = DEFAULT_BUDGET
    samples: int = 100
    grid: dict[str, list[int]] = field(default_factory=dict)
    jobs: int = 1

    def validate(self) -> None:
        if self.mode not in MODES:
            raise ConfigError(f"mode must be one of {', '.join(MODES)}, got {self.mode!r}")
        if self.hypothesis not in HYPOTHESES:
            raise ConfigError(f"hypothesis must be one of {', '.join(HYPOTHESES)}")
        if self.n < 1:
            raise ConfigError("n must be positive")
        if self.budget <= 0:
            raise ConfigError("budget must be positive")
        if self.mode == "exhaustive" and self.n > EXHAUSTIVE_MAX_N:
            raise ExhaustiveTooLarge(f"exhaustive search limited to n <= {EXHAUSTIVE_MAX_N}")
        if self.mode == "random":
            if self.seed is None:
                raise ConfigError("random mode needs a seed")
            if self.samples < 0:
                raise ConfigError("samples must be non-negative")
        if self.jobs < 1:
            raise ConfigError("jobs must be at least 1")


@dataclass(frozen=True)
class SearchRecord:
    index: int
    source: dict
    instance: str
    stats: dict[str, int]
    verdict: dict
    pack_result: str
    nodes: int
    packing: str | None

    @property
    def counterexample(self) -> bool:
        """Hypothesis holds, no listed exception applies, and no packing exists."""
        return (
            self.pack_result == "no-packing"
            and self.verdict["hypothesis_holds"]
            and self.verdict["exception"] is None
        )

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "source": self.source,
            "instance": self.instance,
            "stats": self.stats,
            "verdict": self.verdict,
            "pack_result": self.pack_result,
            "nodes": self.nodes,
            "packing": self.packing,
            "counterexample": self.counterexample,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _evaluate(job: tuple[int, dict, str, str, int]) -> SearchRecord | None:
    index, source, text, hypothesis, budget = job
    t = parse_triple(text)
    verdict = THEOREMS[hypothesis](t)
    if not verdict.hypothesis_holds:
        return None
    res = solve(t, budget=budget)
    return SearchRecord(
        index=index,
        source=source,
        instance=text,
        stats=triple_stats(t).as_dict(),
        verdict=verdict.to_dict(),
        pack_result=res.status,
        nodes=res.nodes,
        packing=format_packing(res.packing) if res.packing is not None else None,
    )


# -- instance streams -----------------------------------------------------------


def nonisomorphic_graphs(n: int) -> list[Graph]:
    """One representative per isomorphism class, by edge count then canonical form."""
    if n > EXHAUSTIVE_MAX_N:
        raise ExhaustiveTooLarge(f"graph enumeration limited to n <= {EXHAUSTIVE_MAX_N}")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    layer = {canonical_form(graph_from_edges(n, [])): graph_from_edges(n, [])}
    out: list[Graph] = []
    while layer:
        out.extend(layer[k] for k in sorted(layer))
        nxt: dict[bytes, Graph] = {}
        for g in layer.values():
            for u, v in pairs:
                if g.has_edge(u, v):
                    continue
                h = graph_from_edges(n, g.edges() + [(u, v)])
                key = canonical_form(h)
                if key not in nxt:
                    nxt[key] = h
        layer = nxt
    return out


def _quick_fail(hypothesis: str, n: int, m1: int, d1: int, m2: int, d2: int) -> bool:
    """Cheap necessary-condition filter for pairs, before building a triple."""
    total = m1 + m2 + max(d1, d2)
    if hypothesis == "ss":
        return 2 * d1 * d2 > n
    if hypothesis == "be":
        return d1 > n - 2 or d2 > n - 2 or m1 + m2 > 2 * n - 3
    if hypothesis == "zak-conj":
        return d1 > n - 2 or d2 > n - 2 or total > 3 * n - 7
    return False


def _exhaustive_jobs(cfg: SearchConfig) -> Iterator[tuple[dict, Triple]]:
    graphs = nonisomorphic_graphs(cfg.n)
    info = [(g.num_edges, g.max_degree) for g in graphs]
    for i, g1 in enumerate(graphs):
        for j in range(i, len(graphs)):
            if _quick_fail(cfg.hypothesis, cfg.n, *info[i], *info[j]):
                continue
            yield {"g1": i, "g2": j}, Triple(g1, graphs[j], frozenset())


DEFAULT_GRID_FAMILY = "triangles-vs-clique"


def default_grid(n: int) -> dict[str, list[int]]:
    """Triangles plus isolated vertices against a clique plus isolated vertices."""
    return {"triangles": list(range(n // 3 + 1)), "edges": [0], "clique": list(range(n + 1))}


def _family_jobs(cfg: SearchConfig) -> Iterator[tuple[dict, Triple]]:
    grid = cfg.grid or default_grid(cfg.n)
    for a in grid.get("triangles", [0]):
        for b in grid.get("edges", [0]):
            if 3 * a + 2 * b > cfg.n:
                continue
            for s in grid.get("clique", [0]):
                if not 0 <= s <= cfg.n:
                    continue
                src = {"family": DEFAULT_GRID_FAMILY, "triangles": a, "edges": b, "clique": s}
                yield src, triangles_vs_clique(cfg.n, a, b, s)


def _edge_cap(hypothesis: str, n: int) -> int:
    return {"zak-conj": 3 * n - 7, "be": 2 * n - 3, "ss": n}.get(hypothesis, 3 * n)


def _random_jobs(cfg: SearchConfig) -> Iterator[tuple[dict, Triple]]:
    """Seeded G(n, m) pairs pushed to the hypothesis boundary.

    Each sample draws ``m1`` uniformly in ``0..cap`` and sets
    ``m2 = cap - m1`` (both clipped to ``C(n, 2)``), where ``cap`` is the
    edge allowance of the hypothesis.  While the hypothesis fails, the most
    recently sampled edge of the larger graph is dropped (ties: G1).
    """
    n = cfg.n
    rng = SplitMix64(cfg.seed or 0)
    full = math.comb(n, 2)
    cap = _edge_cap(cfg.hypothesis, n)
    check = THEOREMS[cfg.hypothesis]
    for i in range(cfg.samples):
        m1 = min(rng.between(0, cap), full)
        m2 = min(cap - m1, full)
        e1 = gnm_edges(rng, n, m1)
        e2 = gnm_edges(rng, n, m2)
        while True:
            t = Triple(graph_from_edges(n, e1), graph_from_edges(n, e2), frozenset())
            if not (e1 or e2) or check(t).hypothesis_holds:
                break
            if len(e1) >= len(e2):
                e1.pop()
            else:
                e2.pop()
        yield {"sample": i, "m1": m1, "m2": m2}, t


def _jobs(cfg: SearchConfig) -> Iterator[tuple[dict, Triple]]:
    if cfg.mode == "exhaustive":
        return _exhaustive_jobs(cfg)
    if cfg.mode == "family":
        return _family_jobs(cfg)
    return _random_jobs(cfg)


def search(cfg: SearchConfig) -> Iterator[SearchRecord]:
    cfg.validate()
    jobs = (
        (i, src, serialize_triple(t), cfg.hypothesis, cfg.budget)
        for i, (src, t) in enumerate(_jobs(cfg))
    )
    if cfg.jobs == 1:
        results: Iterable[SearchRecord | None] = map(_evaluate, jobs)
        for rec in results:
            if rec is not None:
                yield rec
        return
    with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
        for rec in pool.map(_evaluate, jobs, chunksize=16):
            if rec is not None:
                yield rec


def summarize(cfg: SearchConfig, records: list[SearchRecord]) -> dict:
    counts = {"packs": 0, "no-packing": 0, "budget-exceeded": 0}
    for r in records:
        counts[r.pack_result] += 1
    return {
        "summary": True,
        "mode": cfg.mode,
        "n": cfg.n,
        "hypothesis": cfg.hypothesis,
        "seed": cfg.seed,
        "budget": cfg.budget,
        "records": len(records),
        "packs": counts["packs"],
        "no_packing": counts["no-packing"],
        "budget_exceeded": counts["budget-exceeded"],
        "counterexamples": sum(r.counterexample for r in records),
    }


def run_search(cfg: SearchConfig, out: IO[str]) -> dict:
    """Write one JSON line per record, then the summary; return the summary."""
    records = []
    for rec in search(cfg):
        out.write(rec.to_json() + "\n")
        records.append(rec)
    summary = summarize(cfg, records)
    out.write(json.dumps(summary) + "\n")
    return summary


def _parse_values(text: str, lineno: int) -> list[int]:
    vals: list[int] = []
    try:
        for part in text.split(","):
            part = part.strip()
            if ".." in part:
                lo, hi = part.split("..")
                vals.extend(range(int(lo), int(hi) + 1))
            else:
                vals.append(int(part))
    except ValueError as exc:
        raise ConfigError(f"line {lineno}: bad value list {text!r}") from exc
    return vals


def parse_grid(text: str) -> dict[str, list[int]]:
    """Parse ``key = values`` lines (``#`` comments; values like ``0..4`` or ``1,3``)."""
    grid: dict[str, list[int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        if key == "family":
            if value != DEFAULT_GRID_FAMILY:
                raise ConfigError(f"line {lineno}: unsupported family {value!r}")
            continue
        if key not in ("triangles", "edges", "clique"):
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        grid[key] = _parse_values(value, lineno)
    return grid


def load_grid(path: str | Path) -> dict[str, list[int]]:
    return parse_grid(Path(path).read_text(encoding="utf-8"))
