"""Reading and writing graphs as graph6, DIMACS edge format, and plain edge lists.

graph6 follows the format description shipped with nauty (``formats.txt``):
a size prefix, then the upper triangle of the adjacency matrix packed
column by column into 6-bit groups offset by 63.
"""
from __future__ import annotations

from pathlib import Path

from .graph import Graph, GraphInputError

FORMATS = ("graph6", "dimacs", "edgelist")


class GraphFormatError(GraphInputError):
    def __init__(self, message: str, line: int | None = None, offset: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"offset {offset}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)
        self.line = line
        self.offset = offset


# -- graph6 ------------------------------------------------------------------


def _g6_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr((n >> s & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphFormatError(f"graph6 cannot encode n={n}")


def emit_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        col = g.nbr[j]
        for i in range(j):
            bits.append(col >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = val << 1 | b
        body.append(chr(val + 63))
    return _g6_size(g.n) + "".join(body)


def parse_graph6(text: str, line: int | None = None) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 string", line, 0)
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"invalid graph6 character {ch!r}", line, pos)
    vals = [ord(c) - 63 for c in s]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise GraphFormatError("truncated 8-byte size header", line, 0)
        n, pos = 0, 8
        for v in vals[2:8]:
            n = n << 6 | v
    else:
        if len(vals) < 4:
            raise GraphFormatError("truncated 4-byte size header", line, 0)
        n, pos = 0, 4
        for v in vals[1:4]:
            n = n << 6 | v
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) != need:
        raise GraphFormatError(f"expected {need} data bytes for n={n}, got {len(body)}", line, pos)
    nbr = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                nbr[i] |= 1 << j
                nbr[j] |= 1 << i
            k += 1
    if k % 6 and body[-1] & ((1 << (6 - k % 6)) - 1):
        raise GraphFormatError("non-zero padding bits", line, len(vals) - 1)
    return Graph(n, nbr)


# -- DIMACS ------------------------------------------------------------------


def emit_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> Graph:
    n = None
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if n is not None:
                raise GraphFormatError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise GraphFormatError("malformed header, expected 'p edge <n> <m>'", lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphFormatError("non-integer counts in header", lineno) from None
            if n < 0 or m < 0:
                raise GraphFormatError("negative counts in header", lineno)
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError("edge before 'p edge' header", lineno)
            if len(parts) != 3:
                raise GraphFormatError("malformed edge line", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError("non-integer vertex id", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"vertex out of range 1..{n}", lineno)
            if u == v:
                raise GraphFormatError(f"loop at vertex {u}", lineno)
            edges.add((min(u, v) - 1, max(u, v) - 1))
        else:
            raise GraphFormatError(f"unknown line type {parts[0]!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'p edge' header")
    return Graph.from_edges(n, sorted(edges))


# -- plain edge list ---------------------------------------------------------


def emit_edgelist(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


def parse_edgelist(text: str) -> Graph:
    n = None
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise GraphFormatError(f"non-integer token in {line!r}", lineno) from None
        if n is None:
            if len(nums) != 1 or nums[0] < 0:
                raise GraphFormatError("first line must be the vertex count", lineno)
            n = nums[0]
            continue
        if len(nums) != 2:
            raise GraphFormatError("edge lines need exactly two vertex ids", lineno)
        u, v = nums
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex out of range 0..{n - 1}", lineno)
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}", lineno)
        edges.add((min(u, v), max(u, v)))
    if n is None:
        raise GraphFormatError("missing vertex count")
    return Graph.from_edges(n, sorted(edges))


# -- dispatch ----------------------------------------------------------------


def parse_graph(text: str, format: str) -> Graph:
    if format == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise GraphFormatError(f"expected one graph6 line, got {len(lines)}")
        return parse_graph6(lines[0], 1)
    if format == "dimacs":
        return parse_dimacs(text)
    if format == "edgelist":
        return parse_edgelist(text)
    raise ValueError(f"unknown format {format!r}; choose from {FORMATS}")


def emit_graph(g: Graph, format: str) -> str:
    if format == "graph6":
        return emit_graph6(g) + "\n"
    if format == "dimacs":
        return emit_dimacs(g)
    if format == "edgelist":
        return emit_edgelist(g)
    raise ValueError(f"unknown format {format!r}; choose from {FORMATS}")


def parse_graph6_stream(text: str) -> list[Graph]:
    return [parse_graph6(ln, i) for i, ln in enumerate(text.splitlines(), 1) if ln.strip()]


def guess_format(text: str, path: str | None = None) -> str:
    if path:
        suffix = Path(path).suffix.lower()
        if suffix in (".g6", ".graph6"):
            return "graph6"
        if suffix in (".dimacs", ".col", ".gr"):
            return "dimacs"
        if suffix in (".el", ".edges", ".txt"):
            return "edgelist"
    for raw in text.splitlines():
        parts = raw.split()
        if not parts:
            continue
        if parts[0] in ("c", "p"):
            return "dimacs"
        if parts[0].lstrip("-").isdigit():
            return "edgelist"
        return "graph6"
    raise GraphFormatError("empty input")


def read_graph(path: str, format: str = "auto") -> Graph:
    text = Path(path).read_text()
    if format == "auto":
        format = guess_format(text, path)
    return parse_graph(text, format)
