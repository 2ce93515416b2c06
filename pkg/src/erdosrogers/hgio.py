"""Hypergraph file formats: the .hg text format and a JSON object form.

Text format: line 1 is ``r n``; every subsequent non-empty line that does not
start with ``#`` is one edge given as r space-separated vertex ids.  The JSON
form is ``{"r": .., "n": .., "edges": [[..], ..]}``.  Both round-trip
losslessly; edges are always serialized in canonical (sorted) order.
"""

from __future__ import annotations

import json
from typing import Iterable, TextIO

from .errors import HgFormatError, InvalidParameterError
from .hypergraph import Hypergraph


def format_hg(h: Hypergraph) -> str:
    lines = [f"{h.r} {h.n}"]
    lines.extend(" ".join(str(v) for v in e) for e in h.edges)
    return "\n".join(lines) + "\n"


def parse_hg(text: str, first_line: int = 1) -> Hypergraph:
    """Parse the .hg text format; errors carry the 1-based offending line number."""
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise HgFormatError(first_line, "missing 'r n' header")
    header = lines[0].split()
    if len(header) != 2:
        raise HgFormatError(first_line, f"expected 'r n' header, got {lines[0]!r}")
    try:
        r, n = int(header[0]), int(header[1])
    except ValueError:
        raise HgFormatError(first_line, f"non-integer header fields in {lines[0]!r}")
    edges = []
    for offset, raw in enumerate(lines[1:], start=1):
        line_no = first_line + offset
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != r:
            raise HgFormatError(line_no, f"expected {r} vertex ids, got {len(parts)}")
        try:
            edge = tuple(int(p) for p in parts)
        except ValueError:
            raise HgFormatError(line_no, f"non-integer vertex id in {stripped!r}")
        if len(set(edge)) != r or min(edge) < 0 or max(edge) >= n:
            raise HgFormatError(
                line_no, f"edge {edge} is not {r} distinct vertices in 0..{n - 1}"
            )
        edges.append(edge)
    try:
        return Hypergraph(r, n, tuple(edges))
    except InvalidParameterError as exc:
        raise HgFormatError(first_line, str(exc))


def to_json_obj(h: Hypergraph) -> dict:
    return {"r": h.r, "n": h.n, "edges": [list(e) for e in h.edges]}


def from_json_obj(obj: dict) -> Hypergraph:
    try:
        return Hypergraph(
            int(obj["r"]), int(obj["n"]), tuple(tuple(e) for e in obj["edges"])
        )
    except (KeyError, TypeError) as exc:
        raise InvalidParameterError(f"malformed hypergraph JSON: {exc}")


def save_hg(h: Hypergraph, path: str) -> None:
    with open(path, "w") as f:
        if path.endswith(".json"):
            json.dump(to_json_obj(h), f, indent=2)
            f.write("\n")
        else:
            f.write(format_hg(h))


def load_hg(path: str) -> Hypergraph:
    with open(path) as f:
        text = f.read()
    if path.endswith(".json"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise HgFormatError(exc.lineno, f"invalid JSON: {exc.msg}")
        return from_json_obj(obj)
    return parse_hg(text)


def dump_hg_stream(hypergraphs: Iterable[Hypergraph], out: TextIO) -> int:
    """Write hypergraphs in .hg format separated by blank lines; returns the count."""
    count = 0
    for h in hypergraphs:
        if count:
            out.write("\n")
        out.write(format_hg(h))
        count += 1
    return count


def parse_hg_stream(text: str) -> list[Hypergraph]:
    """Parse blank-line-separated .hg blocks, tracking absolute line numbers."""
    result = []
    block: list[str] = []
    block_start = 1
    for line_no, raw in enumerate(text.splitlines() + [""], start=1):
        if raw.strip():
            if not block:
                block_start = line_no
            block.append(raw)
        elif block:
            result.append(parse_hg("\n".join(block), first_line=block_start))
            block = []
    return result
