"""Isomorph-free generation of small graphs and reproducible random graph streams.

Classes on n vertices are built from the classes on n - 1 vertices by adding
vertex n - 1 with every possible neighbour mask and keeping one graph per
canonical form. This reaches every class, because deleting the last vertex
of any n-vertex graph leaves a graph isomorphic to some stored representative.
Forbidden-subgraph filters are applied level by level: an F-free graph stays
F-free after deleting a vertex, so non-free parents never need extending.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .canon import CanonicalForm, canonical_form, canonical_graph
from .graph import Graph, GraphError, make_graph
from .hom import Pattern, as_pattern, is_free, is_free_through

MAX_EXHAUSTIVE_ORDER = 9

# Non-isomorphic graphs on n = 0..9 vertices (OEIS A000088).
CLASS_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668)


class OrderCapExceeded(ValueError):
    """Requested order is above the exhaustive-generation cap."""


@dataclass
class GraphStream:
    """A described stream of graphs; iterate it to generate."""

    order: int
    mode: str  # "isomorphism-classes" | "labeled" | "random"
    family: tuple[Pattern, ...] = ()
    seed: int | None = None
    count: int | None = None
    p: float | None = None
    _source: object = field(default=None, repr=False)

    def __iter__(self) -> Iterator[Graph]:
        return iter(self._source())

    def describe(self) -> dict:
        out = {"order": self.order, "mode": self.mode,
               "forbidden": [f.graph.edges() for f in self.family]}
        if self.mode == "random":
            out.update(seed=self.seed, count=self.count, p=self.p)
        return out


def _check_cap(n: int, cap: int) -> None:
    if n < 0:
        raise GraphError(f"order {n} is negative")
    if n > min(cap, MAX_EXHAUSTIVE_ORDER):
        raise OrderCapExceeded(f"order {n} exceeds the exhaustive cap {min(cap, MAX_EXHAUSTIVE_ORDER)}")


def _extend_level(parents: Sequence[Graph], family: Sequence[Pattern]) -> list[Graph]:
    n = parents[0].n + 1
    new_bit = 1 << (n - 1)
    seen: dict[CanonicalForm, Graph] = {}
    for parent in parents:
        base = parent.adj
        for mask in range(1 << (n - 1)):
            rows = tuple(row | new_bit if mask >> i & 1 else row for i, row in enumerate(base)) + (mask,)
            child = Graph._trusted(rows)
            if family and not is_free_through(child, family, n - 1):
                continue
            cf = canonical_form(child)
            if cf not in seen:
                seen[cf] = child
    ranked = sorted(seen.items(), key=lambda item: (item[1].edge_count, item[0].cert))
    return [canonical_graph(g) for _, g in ranked]


_cache: dict[tuple, list[Graph]] = {}


def _level(n: int, family: tuple[Pattern, ...]) -> list[Graph]:
    key = (n, tuple((f.graph.n, f.graph.adj) for f in family))
    if key in _cache:
        return _cache[key]
    if n == 0:
        graphs = [make_graph(0, [])]
    elif n == 1:
        g = make_graph(1, [])
        graphs = [g] if is_free(g, family) else []
    else:
        parents = _level(n - 1, family)
        graphs = _extend_level(parents, family) if parents else []
    _cache[key] = graphs
    return graphs


def all_graphs(n: int, cap: int = MAX_EXHAUSTIVE_ORDER) -> GraphStream:
    """One canonical representative per isomorphism class on n vertices.

    Representatives come sorted by edge count, then certificate.
    """
    _check_cap(n, cap)
    return GraphStream(n, "isomorphism-classes", (), _source=lambda: _level(n, ()))


def all_graphs_filtered(n: int, family: Sequence[Graph | Pattern],
                        cap: int = MAX_EXHAUSTIVE_ORDER) -> GraphStream:
    """Representatives of the classes on n vertices containing no member of `family`."""
    _check_cap(n, cap)
    fam = tuple(as_pattern(f) for f in family)
    return GraphStream(n, "isomorphism-classes", fam, _source=lambda: _level(n, fam))


def labeled_graphs(n: int) -> GraphStream:
    """Every labeled graph on n vertices, by counting through edge masks (n <= 7)."""
    if not 0 <= n <= 7:
        raise OrderCapExceeded(f"labeled enumeration supports n <= 7, got {n}")
    pairs = [(i, j) for j in range(1, n) for i in range(j)]

    def gen():
        for mask in range(1 << len(pairs)):
            yield make_graph(n, [pairs[b] for b in range(len(pairs)) if mask >> b & 1])

    return GraphStream(n, "labeled", _source=gen)


def random_graphs(n: int, p: float, seed: int, count: int) -> GraphStream:
    """`count` Erdos-Renyi G(n, p) samples, reproducible from `seed`."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability {p} outside [0, 1]")
    pairs = [(i, j) for j in range(1, n) for i in range(j)]

    def gen():
        rng = random.Random(seed)
        for _ in range(count):
            yield make_graph(n, [e for e in pairs if rng.random() < p])

    return GraphStream(n, "random", seed=seed, count=count, p=p, _source=gen)
