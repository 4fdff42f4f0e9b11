"""Text formats for hypergraphs, colorings and designs.

Hypergraph: first line "n k", then one edge per line as space-separated
1-based vertices. Coloring: first line "n k r", then either C(n,k) lines
holding one color each in colex edge order (compact) or lines
"v1 ... vk color" (explicit); the writer always emits compact. Design:
first line "n h k", then one block per line. Lines starting with '#' are
comments everywhere.
"""

from __future__ import annotations

import math
from typing import Iterable, TextIO

from .core import Coloring, Hypergraph, colex_rank, mask_to_vertices, vertices_to_mask
from .designs import SteinerSystem


class FormatError(ValueError):
    """Malformed input file; message carries the offending line number."""


def _data_lines(fh: TextIO) -> Iterable[tuple[int, str]]:
    for lineno, raw in enumerate(fh, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _ints(line: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError as exc:
        raise FormatError(f"line {lineno}: expected integers, got {line!r}") from exc


def write_hypergraph(h: Hypergraph, fh: TextIO) -> None:
    fh.write(f"{h.n} {h.k}\n")
    for e in h.edges:
        fh.write(" ".join(str(v) for v in mask_to_vertices(e)) + "\n")


def read_hypergraph(fh: TextIO) -> Hypergraph:
    lines = _data_lines(fh)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise FormatError("empty hypergraph file") from None
    vals = _ints(header, lineno)
    if len(vals) != 2:
        raise FormatError(f"line {lineno}: header must be 'n k'")
    n, k = vals
    edges = []
    for lineno, line in lines:
        vs = _ints(line, lineno)
        if len(vs) != k:
            raise FormatError(f"line {lineno}: expected {k} vertices, got {len(vs)}")
        if any(not 1 <= v <= n for v in vs):
            raise FormatError(f"line {lineno}: vertex out of range [1, {n}]")
        edges.append(vertices_to_mask(vs))
    try:
        return Hypergraph(n, k, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def write_coloring(c: Coloring, fh: TextIO) -> None:
    fh.write(f"{c.n} {c.k} {c.r}\n")
    for col in c.colors:
        fh.write(f"{col}\n")


def read_coloring(fh: TextIO) -> Coloring:
    lines = _data_lines(fh)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise FormatError("empty coloring file") from None
    vals = _ints(header, lineno)
    if len(vals) != 3:
        raise FormatError(f"line {lineno}: header must be 'n k r'")
    n, k, r = vals
    m = math.comb(n, k)
    compact: list[int] = []
    explicit: dict[int, int] = {}
    mode = None
    for lineno, line in lines:
        vs = _ints(line, lineno)
        if len(vs) == 1:
            kind = "compact"
        elif len(vs) == k + 1:
            kind = "explicit"
        else:
            raise FormatError(
                f"line {lineno}: expected 1 (compact) or {k + 1} (explicit) integers"
            )
        if mode is None:
            mode = kind
        elif mode != kind:
            raise FormatError(f"line {lineno}: cannot mix compact and explicit lines")
        if kind == "compact":
            compact.append(vs[0])
        else:
            *vertices, col = vs
            try:
                rank = colex_rank(vertices, n, k)
            except ValueError as exc:
                raise FormatError(f"line {lineno}: {exc}") from exc
            if rank in explicit:
                raise FormatError(f"line {lineno}: duplicate edge {vertices}")
            explicit[rank] = col
    if mode == "explicit":
        if len(explicit) != m:
            raise FormatError(f"explicit coloring lists {len(explicit)} of {m} edges")
        compact = [explicit[rank] for rank in range(m)]
    if len(compact) != m:
        raise FormatError(f"compact coloring lists {len(compact)} of {m} colors")
    try:
        return Coloring(n, k, r, compact)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def write_design(d: SteinerSystem, fh: TextIO) -> None:
    fh.write(f"{d.n} {d.h} {d.k}\n")
    for b in d.blocks:
        fh.write(" ".join(str(v) for v in mask_to_vertices(b)) + "\n")


def read_design(fh: TextIO) -> SteinerSystem:
    lines = _data_lines(fh)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise FormatError("empty design file") from None
    vals = _ints(header, lineno)
    if len(vals) != 3:
        raise FormatError(f"line {lineno}: header must be 'n h k'")
    n, h, k = vals
    blocks = []
    for lineno, line in lines:
        vs = _ints(line, lineno)
        if len(vs) != h:
            raise FormatError(f"line {lineno}: expected {h} vertices, got {len(vs)}")
        if any(not 1 <= v <= n for v in vs):
            raise FormatError(f"line {lineno}: vertex out of range [1, {n}]")
        blocks.append(vertices_to_mask(vs))
    return SteinerSystem(n=n, h=h, k=k, blocks=blocks)
