"""Simple undirected graphs on at most 64 vertices, stored as adjacency bitmasks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 64


class GraphError(ValueError):
    """Raised for malformed graph input (loops, bad endpoints, order overflow)."""


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    edge_count: int = field(compare=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency row count differs from n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} has bits outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        rows = tuple(rows)
        return cls(len(rows), rows, sum(r.bit_count() for r in rows) // 2)

    @classmethod
    def _trusted(cls, rows: tuple[int, ...]) -> "Graph":
        # Hot-path constructor for rows already known to be valid.
        g = object.__new__(cls)
        object.__setattr__(g, "n", len(rows))
        object.__setattr__(g, "adj", rows)
        object.__setattr__(g, "edge_count", sum(r.bit_count() for r in rows) // 2)
        return g

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return neighbors(self, v).bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def add_edge(self, u: int, v: int) -> "Graph":
        """Return a copy with edge uv added."""
        _check_pair(self.n, u, v)
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph.from_rows(rows)

    def remove_vertex(self, v: int) -> "Graph":
        """Induced subgraph on V - {v}, with labels above v shifted down by one."""
        _check_vertex(self, v)
        low = (1 << v) - 1
        rows = []
        for u in range(self.n):
            if u == v:
                continue
            row = self.adj[u]
            rows.append((row & low) | (row >> (v + 1) << v))
        return Graph.from_rows(rows)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex u renamed perm[u]."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling is not a permutation of the vertex set")
        rows = [0] * self.n
        for u in range(self.n):
            row = 0
            for w in iter_bits(self.adj[u]):
                row |= 1 << perm[w]
            rows[perm[u]] = row
        return Graph.from_rows(rows)

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n
        return Graph.from_rows(list(self.adj) + [row << shift for row in other.adj])

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for order {g.n}")


def _check_pair(n: int, u: int, v: int) -> None:
    if u == v:
        raise GraphError(f"loop at vertex {u}")
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if not 0 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
    rows = [0] * n
    for e in edges:
        u, v = e
        _check_pair(n, u, v)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph.from_rows(rows)


def neighbors(g: Graph, v: int) -> int:
    """Neighbor set of v as a bitmask."""
    _check_vertex(g, v)
    return g.adj[v]


def empty_graph(n: int) -> Graph:
    return make_graph(n, [])


def complete_graph(r: int) -> Graph:
    if not 1 <= r <= MAX_ORDER:
        raise GraphError(f"complete graph order {r} outside 1..{MAX_ORDER}")
    full = (1 << r) - 1
    return Graph.from_rows([full ^ (1 << v) for v in range(r)])


def cycle_graph(r: int) -> Graph:
    if not 3 <= r <= MAX_ORDER:
        raise GraphError(f"cycle length {r} outside 3..{MAX_ORDER}")
    return make_graph(r, [(i, (i + 1) % r) for i in range(r)])


def path_graph(r: int) -> Graph:
    if not 1 <= r <= MAX_ORDER:
        raise GraphError(f"path order {r} outside 1..{MAX_ORDER}")
    return make_graph(r, [(i, i + 1) for i in range(r - 1)])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    return blowup(complete_graph(len(sizes)), sizes)


def turan_parts(n: int, r: int) -> list[int]:
    q, extra = divmod(n, r)
    return [q + 1] * extra + [q] * (r - extra)


def turan_graph(n: int, r: int) -> Graph:
    """Balanced complete r-partite graph; larger parts come first, each part a contiguous label range."""
    if r < 2 or n < r:
        raise GraphError(f"Turan graph needs n >= r >= 2, got n={n}, r={r}")
    return complete_multipartite(turan_parts(n, r))


def blowup(pattern: Graph, sizes: Sequence[int]) -> Graph:
    """Replace vertex i of `pattern` by an independent set of sizes[i] vertices.

    Blown-up vertices get contiguous labels in pattern-vertex order. Two of them
    are adjacent exactly when their originals are adjacent in `pattern`.
    """
    sizes = list(sizes)
    if len(sizes) != pattern.n:
        raise GraphError(f"need {pattern.n} part sizes, got {len(sizes)}")
    if any(s < 1 for s in sizes):
        raise GraphError("part sizes must be positive")
    total = sum(sizes)
    if total > MAX_ORDER:
        raise GraphError(f"blowup order {total} exceeds {MAX_ORDER}")
    starts = [0]
    for s in sizes:
        starts.append(starts[-1] + s)
    part_mask = [((1 << sizes[i]) - 1) << starts[i] for i in range(pattern.n)]
    rows = []
    for i in range(pattern.n):
        row = 0
        for j in iter_bits(pattern.adj[i]):
            row |= part_mask[j]
        rows.extend([row] * sizes[i])
    return Graph.from_rows(rows)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return make_graph(10, outer + spokes + inner)
