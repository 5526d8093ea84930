"""graph6 and JSON edge-list serialization."""

from __future__ import annotations

import json
from typing import IO, Iterable, Iterator, List, Union

from .graph import Graph, GraphInputError

HEADER = b">>graph6<<"
_SHORT_MAX = 62
_MEDIUM_MAX = 258047
_LONG_MAX = 68719476735


class Graph6ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _encode_n(n: int) -> bytes:
    if n < 0:
        raise GraphInputError("negative vertex count")
    if n <= _SHORT_MAX:
        return bytes([n + 63])
    if n <= _MEDIUM_MAX:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= _LONG_MAX:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise GraphInputError(f"graph6 cannot encode n={n}")


def encode_graph6(g: Graph) -> bytes:
    """graph6 bytes (no header, no newline)."""
    out = bytearray(_encode_n(g.n))
    masks = g.masks
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = masks[j]
        for i in range(j):
            acc = (acc << 1) | ((row >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def _six(data: bytes, pos: int) -> int:
    c = data[pos]
    if not 63 <= c <= 126:
        raise Graph6ParseError(f"invalid graph6 character {chr(c)!r}", pos)
    return c - 63


def decode_graph6(data: Union[bytes, str]) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    base = 0
    if data.startswith(HEADER):
        base = len(HEADER)
        data = data[base:]
    if not data:
        raise Graph6ParseError("empty graph6 string", base)
    if data[0] == 126:
        if len(data) > 1 and data[1] == 126:
            if len(data) < 8:
                raise Graph6ParseError("truncated long-form header", base + len(data))
            n = 0
            for p in range(2, 8):
                n = (n << 6) | _six(data, p)
            pos = 8
        else:
            if len(data) < 4:
                raise Graph6ParseError("truncated medium-form header", base + len(data))
            n = 0
            for p in range(1, 4):
                n = (n << 6) | _six(data, p)
            pos = 4
    else:
        n = _six(data, 0)
        pos = 1
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - pos != need:
        raise Graph6ParseError(
            f"expected {need} edge bytes for n={n}, found {len(data) - pos}", base + pos
        )
    masks = [0] * n
    k = 0
    i, j = 0, 1
    for p in range(pos, pos + need):
        x = _six(data, p)
        for s in range(5, -1, -1):
            if k >= nbits:
                if (x >> s) & 1:
                    raise Graph6ParseError("nonzero padding bits", base + p)
                continue
            if (x >> s) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i = 0
                j += 1
    return Graph.from_masks(masks)


def to_graph6(g: Graph) -> str:
    return encode_graph6(g).decode("ascii")


def read_graph6_lines(stream: Iterable[Union[str, bytes]]) -> Iterator[Graph]:
    for line in stream:
        if isinstance(line, str):
            line = line.encode("ascii")
        line = line.strip()
        if line:
            yield decode_graph6(line)


def write_graph6_lines(graphs: Iterable[Graph], fh: IO[str]) -> None:
    for g in graphs:
        fh.write(to_graph6(g) + "\n")


def graph_from_json(obj: Union[str, dict]) -> Graph:
    """Build a graph from ``{"n": int, "edges": [[u, v], ...]}``."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        n = int(obj["n"])
        edges = [(int(u), int(v)) for u, v in obj["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphInputError(f"malformed edge-list JSON: {exc}") from None
    return Graph.from_edges(n, edges)


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def read_graphs(text: str) -> List[Graph]:
    """Parse either an edge-list JSON document or graph6 lines."""
    stripped = text.lstrip()
    if stripped.startswith("{") or stripped.startswith("["):
        obj = json.loads(stripped)
        if isinstance(obj, list):
            return [graph_from_json(o) for o in obj]
        return [graph_from_json(obj)]
    return list(read_graph6_lines(text.splitlines()))
