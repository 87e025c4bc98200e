"""graph6 and edge-list serialization, plus json-lines / csv report emission."""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, Iterator

from .graph import Graph, GraphError, build_from_edges

HEADER = ">>graph6<<"
MAX_G6_ORDER = 258047


class ParseError(ValueError):
    def __init__(self, message: str, offset: int | None = None, line: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"offset {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.offset = offset
        self.line = line


def _n_bytes(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= MAX_G6_ORDER:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise GraphError(f"order {n} exceeds graph6 limit {MAX_G6_ORDER}")


def write_graph6(G: Graph) -> str:
    n = G.n
    out = [_n_bytes(n)]
    rows = G.rows
    acc = 0
    nbits = 0
    for j in range(1, n):
        rj = rows[j]
        for i in range(j):
            acc = (acc << 1) | ((rj >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    s = line.rstrip("\r\n")
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise ParseError("empty graph6 record", 0)
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"illegal byte {ord(ch)}", pos)
    if ord(s[0]) < 126:
        n, pos = ord(s[0]) - 63, 1
    else:
        if len(s) < 4:
            raise ParseError("truncated order field", len(s))
        if ord(s[1]) == 126:
            raise ParseError("orders above 258047 are not supported", 1)
        n = ((ord(s[1]) - 63) << 12) | ((ord(s[2]) - 63) << 6) | (ord(s[3]) - 63)
        pos = 4
        if n <= 62:
            raise ParseError("non-canonical long order field", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[pos:]
    if len(body) < need:
        raise ParseError(f"truncated bit vector: need {need} bytes, have {len(body)}", len(s))
    if len(body) > need:
        raise ParseError("trailing garbage", pos + need)
    rows = [0] * n
    bit = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[bit // 6]) - 63
            if (byte >> (5 - bit % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
    if need and nbits % 6:
        pad = (ord(body[-1]) - 63) & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise ParseError("nonzero padding bits", pos + need - 1)
    return Graph(n, rows)


def iter_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse a stream of graph6 records; blank lines and a header line are skipped."""
    for lineno, raw in enumerate(lines, 1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line == HEADER:
            continue
        try:
            yield parse_graph6(line)
        except ParseError as exc:
            raise ParseError(str(exc), exc.offset, lineno) from None


def parse_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.replace("\r", "").split("\n")]
    lines = [(i, ln) for i, ln in enumerate(lines, 1) if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty edge list")

    def ints(lineno, ln):
        parts = ln.split()
        try:
            vals = [int(p) for p in parts]
        except ValueError:
            raise ParseError(f"expected two integers, got {ln!r}", line=lineno) from None
        if len(vals) != 2:
            raise ParseError(f"expected two integers, got {ln!r}", line=lineno)
        return vals

    n, m = ints(*lines[0])
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header declares {m} edges, found {len(body)}", line=lines[0][0])
    edges = []
    for lineno, ln in body:
        u, v = ints(lineno, ln)
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ParseError(f"bad edge ({u}, {v}) for n={n}", line=lineno)
        edges.append((u, v))
    return build_from_edges(n, edges)


def write_edge_list(G: Graph) -> str:
    edges = G.edges()
    return "\n".join([f"{G.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


def read_graphs(text: str, fmt: str = "auto") -> list[Graph]:
    """Read one edge-list graph or any number of graph6 records."""
    if fmt == "auto":
        first = next((ln for ln in text.splitlines() if ln.strip()), "")
        parts = first.split()
        fmt = "edges" if len(parts) == 2 and all(p.isdigit() for p in parts) else "g6"
    if fmt == "edges":
        return [parse_edge_list(text)]
    if fmt == "g6":
        return list(iter_graph6(text.splitlines()))
    raise ValueError(f"unknown graph format {fmt!r}")


def _as_dict(record) -> dict:
    return record.to_dict() if hasattr(record, "to_dict") else dict(record)


def write_report(records, fmt: str = "json-lines") -> str:
    """Serialize one report or a list of reports (dataclasses with to_dict)."""
    if not isinstance(records, (list, tuple)):
        records = [records]
    dicts = [_as_dict(r) for r in records]
    if fmt in ("json-lines", "json", "jsonl"):
        return "".join(json.dumps(d, sort_keys=False) + "\n" for d in dicts)
    if fmt == "csv":
        if not dicts:
            return ""
        fields = list(dicts[0])
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(fields)
        for d in dicts:
            w.writerow([_csv_cell(d[f]) for f in fields])
        return buf.getvalue()
    raise ValueError(f"unknown report format {fmt!r}")


def _csv_cell(v):
    if isinstance(v, str):
        return v
    if isinstance(v, float):
        return repr(v)
    return json.dumps(v)


def read_report(text: str, fmt: str = "json-lines") -> list[dict]:
    if fmt in ("json-lines", "json", "jsonl"):
        return [json.loads(ln) for ln in text.splitlines() if ln.strip()]
    if fmt == "csv":
        rows = list(csv.reader(io.StringIO(text)))
        if not rows:
            return []
        header, out = rows[0], []
        for row in rows[1:]:
            out.append({f: _csv_value(v) for f, v in zip(header, row)})
        return out
    raise ValueError(f"unknown report format {fmt!r}")


def _csv_value(v: str):
    try:
        return json.loads(v)
    except ValueError:
        pass
    return v
