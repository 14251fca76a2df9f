"""graph6 text format: 6 bits per byte, offset 63, upper triangle column-major.

The bit for pair (i, j) with i < j comes before the bit for (i', j') iff
j < j' or (j == j' and i < i').  ``emit_graph6(parse_graph6(s)) == s`` for
canonical inputs.
"""

from __future__ import annotations

from .errors import Graph6Error
from .graph import Graph

_HEADER = ">>graph6<<"


def _decode_size(data: bytes):
    """Return (n, number of header bytes consumed)."""
    if not data:
        raise Graph6Error("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise Graph6Error("truncated extended size")
        n = 0
        for byte in data[1:4]:
            n = (n << 6) | (byte - 63)
        return n, 4
    if len(data) < 8:
        raise Graph6Error("truncated extended size")
    n = 0
    for byte in data[2:8]:
        n = (n << 6) | (byte - 63)
    return n, 8


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (an optional '>>graph6<<' header is tolerated)."""
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):].strip()
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error("graph6 input is not ASCII") from exc
    for byte in data:
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte} outside graph6 range 63..126")
    n, offset = _decode_size(data)
    if n < 1:
        raise Graph6Error("graph6 size must be at least 1")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[offset:]
    if len(body) != nbytes:
        raise Graph6Error(
            f"expected {nbytes} data bytes for n={n}, got {len(body)}"
        )
    bits = []
    for byte in body:
        group = byte - 63
        for k in range(5, -1, -1):
            bits.append((group >> k) & 1)
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return Graph.from_edges(n, edges)


def emit_graph6(G: Graph) -> str:
    out = []
    n = G.n
    if n <= 62:
        out.append(n + 63)
    elif n <= 258047:
        out.append(126)
        for shift in (12, 6, 0):
            out.append(((n >> shift) & 63) + 63)
    else:
        out.extend([126, 126])
        for shift in (30, 24, 18, 12, 6, 0):
            out.append(((n >> shift) & 63) + 63)
    group = 0
    filled = 0
    for j in range(1, n):
        for i in range(j):
            group = (group << 1) | ((G.adj[i] >> j) & 1)
            filled += 1
            if filled == 6:
                out.append(group + 63)
                group = 0
                filled = 0
    if filled:
        out.append((group << (6 - filled)) + 63)
    return bytes(out).decode("ascii")
