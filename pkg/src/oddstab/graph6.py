"""graph6 encoding and decoding.

Bits of the upper adjacency triangle are taken column by column
(``(0,1), (0,2), (1,2), (0,3), ...``), padded to a multiple of six and
written as printable bytes ``63 + value``.  All three size-prefix forms are
supported; the ``>>graph6<<`` header is accepted on input and never written.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .errors import GraphError
from .graph import Graph

HEADER = ">>graph6<<"


def _encode_size(n: int) -> str:
    if n < 0:
        raise GraphError("negative vertex count")
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(63 + ((n >> s) & 63)) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError(f"n={n} too large for graph6")


def encode(g: Graph) -> str:
    """Return the graph6 string of ``g`` (no header, no newline)."""
    n = g.n
    out = [_encode_size(n)]
    rows = g.rows
    acc = 0
    nbits = 0
    for j in range(1, n):
        rj = rows[j]
        for i in range(j):
            acc = (acc << 1) | (rj >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def _decode_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise GraphError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphError("truncated graph6 size prefix")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise GraphError("truncated graph6 size prefix")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    if n <= 62:
        raise GraphError(f"non-canonical graph6 size prefix for n={n}")
    return n, 4


def decode(text: str) -> Graph:
    """Parse one graph6 line; an optional ``>>graph6<<`` header is tolerated."""
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise GraphError("graph6 contains non-ASCII characters") from exc
    for b in data:
        if not 63 <= b <= 126:
            raise GraphError(f"graph6 character {chr(b)!r} outside range 63..126")
    n, pos = _decode_size(data)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise GraphError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    rows = [0] * n
    bit = 0
    i, j = 0, 1
    for b in body:
        v = b - 63
        for shift in range(5, -1, -1):
            if bit >= nbits:
                if v & ((1 << (shift + 1)) - 1):
                    raise GraphError("graph6 padding bits are not zero")
                break
            if v >> shift & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
            i += 1
            if i == j:
                i = 0
                j += 1
    return Graph(n, tuple(rows))


def read_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode every non-blank line."""
    for line in lines:
        if line.strip():
            yield decode(line)


def write_lines(graphs: Iterable[Graph], fh: TextIO) -> None:
    for g in graphs:
        fh.write(encode(g) + "\n")
