"""Text formats: plain edge lists ("n m" header, then "u v" lines) and graph6.

graph6 layout:

* order N: one byte N+63 when N <= 62, else '~' followed by three bytes
  holding N as 18 bits, six bits per byte, each byte plus 63;
* adjacency: upper triangle bits taken column by column,
  (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...; padded with zero bits
  to a multiple of six; each six-bit group, most significant first,
  written as one byte value + 63.

Optional header ">>graph6<<" is accepted on input and never written.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .graph import Graph, GraphError, make_graph

HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~"] + [chr(((n >> s) & 63) + 63) for s in (12, 6, 0)]
    bits = []
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise GraphError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise GraphError(f"invalid graph6 character in {text!r}")
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise GraphError("graph6 orders above 258047 are not supported")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphError(f"graph6 body length {len(body)} does not match order {n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return make_graph(n, edges)


def to_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines()]
    rows = [r for r in rows if r and not r[0].startswith("#")]
    if not rows:
        raise GraphError("edge list is empty")
    try:
        n, m = (int(x) for x in rows[0])
        edges = [(int(u), int(v)) for u, v in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise GraphError(f"header promises {m} edges, found {len(edges)}")
    return make_graph(n, edges)


def read_graphs(path: str | Path) -> list[Graph]:
    """Read a file holding either one edge list or one graph6 string per line."""
    text = Path(path).read_text()
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphError(f"{path}: no graphs")
    first = lines[0].split()
    if len(first) == 2 and all(tok.isdigit() for tok in first):
        return [from_edge_list(text)]
    return [from_graph6(ln) for ln in lines]


def read_graph(path: str | Path) -> Graph:
    graphs = read_graphs(path)
    if len(graphs) != 1:
        raise GraphError(f"{path}: expected one graph, found {len(graphs)}")
    return graphs[0]


def write_graph6(path: str | Path, graphs: Iterable[Graph]) -> int:
    count = 0
    with open(path, "w") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + "\n")
            count += 1
    return count


def iter_graph6(path: str | Path) -> Iterator[Graph]:
    with open(path) as fh:
        for line in fh:
            if line.strip():
                yield from_graph6(line)
