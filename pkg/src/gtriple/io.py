"""Reading and writing the ``.gtriple`` text format and packing certificates.

Layout::

    gtriple 1
    n <N>
    E1
    <u> <v>        # u < v, one per line
    E2
    <u> <v>
    E3
    <u> <w>        # u in V1, w in V2

Lines starting with ``#`` are ignored anywhere, as are blank lines.
Serialization is canonical: sections are sorted and no comments are written.
"""

from __future__ import annotations

from pathlib import Path

from .errors import DuplicateEdge, GTripleSyntaxError, IndexOutOfRange, NotAPermutation, SelfLoop
from .graph import MAX_ORDER, Graph, Triple, graph_from_edges

HEADER = "gtriple 1"
SECTIONS = ("E1", "E2", "E3")


def serialize_triple(t: Triple) -> str:
    lines = [HEADER, f"n {t.n}", "E1"]
    lines += [f"{u} {v}" for u, v in t.g1.edges()]
    lines.append("E2")
    lines += [f"{u} {v}" for u, v in t.g2.edges()]
    lines.append("E3")
    lines += [f"{u} {w}" for u, w in t.yellow_edges()]
    return "\n".join(lines) + "\n"


def _parse_int(tok: str, lineno: int) -> int:
    if not tok.isdigit():
        raise GTripleSyntaxError(f"expected a non-negative integer, got {tok!r}", lineno)
    return int(tok)


def parse_triple(text: str) -> Triple:
    rows = [
        (i, line.strip())
        for i, line in enumerate(text.split("\n"), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not rows or rows[0][1] != HEADER:
        raise GTripleSyntaxError(f"first line must be {HEADER!r}", rows[0][0] if rows else 1)
    if len(rows) < 2:
        raise GTripleSyntaxError("missing 'n <N>' line", rows[0][0] + 1)
    lineno, line = rows[1]
    parts = line.split(" ")
    if len(parts) != 2 or parts[0] != "n":
        raise GTripleSyntaxError("expected 'n <N>'", lineno)
    n = _parse_int(parts[1], lineno)
    if n > MAX_ORDER:
        raise GTripleSyntaxError(f"n = {n} exceeds {MAX_ORDER}", lineno)

    sections: dict[str, list[tuple[int, int, int]]] = {}
    current: str | None = None
    for lineno, line in rows[2:]:
        expected = SECTIONS[len(sections)] if len(sections) < 3 else None
        if line in SECTIONS:
            if line != expected:
                raise GTripleSyntaxError(f"section {line} out of order", lineno)
            current = line
            sections[line] = []
            continue
        if current is None:
            raise GTripleSyntaxError("edge line before section header E1", lineno)
        parts = line.split(" ")
        if len(parts) != 2:
            raise GTripleSyntaxError("edge lines are '<u> <v>'", lineno)
        u, v = (_parse_int(p, lineno) for p in parts)
        if u >= n or v >= n:
            raise IndexOutOfRange(f"line {lineno}: vertex outside 0..{n - 1}")
        if current != "E3":
            if u == v:
                raise SelfLoop(f"line {lineno}: self-loop at {u}")
            if u > v:
                raise GTripleSyntaxError(f"{current} edges need u < v", lineno)
        sections[current].append((u, v, lineno))
    if len(sections) != 3:
        raise GTripleSyntaxError(f"missing section {SECTIONS[len(sections)]}", rows[-1][0])

    def white(name: str) -> Graph:
        seen: set[tuple[int, int]] = set()
        for u, v, ln in sections[name]:
            if (u, v) in seen:
                raise DuplicateEdge(f"line {ln}: edge {u} {v} repeated in {name}")
            seen.add((u, v))
        return graph_from_edges(n, seen)

    g1, g2 = white("E1"), white("E2")
    yellow: set[tuple[int, int]] = set()
    for u, w, ln in sections["E3"]:
        if (u, w) in yellow:
            raise DuplicateEdge(f"line {ln}: yellow edge {u} {w} repeated")
        yellow.add((u, w))
    return Triple(g1, g2, frozenset(yellow))


def read_triple(path: str | Path) -> Triple:
    return parse_triple(Path(path).read_text(encoding="utf-8"))


def write_triple(t: Triple, path: str | Path) -> None:
    Path(path).write_text(serialize_triple(t), encoding="utf-8", newline="\n")


def format_packing(f: list[int] | tuple[int, ...]) -> str:
    return ",".join(str(x) for x in f)


def parse_packing(text: str, n: int | None = None) -> tuple[int, ...]:
    """Parse ``f(0),f(1),...``; raises NotAPermutation unless it is one."""
    text = text.strip()
    try:
        vals = tuple(int(tok) for tok in text.split(",")) if text else ()
    except ValueError as exc:
        raise NotAPermutation(f"malformed certificate {text!r}") from exc
    if n is not None and len(vals) != n:
        raise NotAPermutation(f"certificate has {len(vals)} entries, expected {n}")
    if sorted(vals) != list(range(len(vals))):
        raise NotAPermutation("certificate is not a permutation of 0..n-1")
    return vals
