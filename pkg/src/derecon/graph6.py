"""graph6 encoding and decoding.

Format (McKay): ``N(n)`` followed by the upper triangle of the adjacency
matrix in column-major order (``x(0,1), x(0,2), x(1,2), x(0,3), ...``),
packed big-endian into 6-bit groups, each offset by 63.
"""
from __future__ import annotations

from .graph import DomainError, Graph

HEADER = ">>graph6<<"


def _encode_order(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise DomainError(f"order {n} too large for graph6")


def _decode_order(s: str) -> tuple[int, int]:
    if not s:
        raise DomainError("empty graph6 string")
    if s[0] != "~":
        return ord(s[0]) - 63, 1
    if len(s) > 1 and s[1] == "~":
        chunk, start = s[2:8], 2
    else:
        chunk, start = s[1:4], 1
    if len(chunk) != (6 if start == 2 else 3):
        raise DomainError("truncated graph6 order field")
    n = 0
    for c in chunk:
        n = (n << 6) | (ord(c) - 63)
    return n, start + len(chunk)


def upper_triangle_bits(order: int, adj: list[int]) -> list[int]:
    return [(adj[j] >> i) & 1 for j in range(1, order) for i in range(j)]


def encode_bits(order: int, bits: list[int]) -> str:
    out = [_encode_order(order)]
    pad = (-len(bits)) % 6
    bits = bits + [0] * pad
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def encode(g: Graph) -> str:
    return encode_bits(g.order, upper_triangle_bits(g.order, g.adjacency()))


def decode(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    n, pos = _decode_order(s)
    body = s[pos:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise DomainError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}")
    bits = []
    for c in body:
        val = ord(c) - 63
        if not 0 <= val < 64:
            raise DomainError(f"invalid graph6 character {c!r}")
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise DomainError("nonzero graph6 padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)
