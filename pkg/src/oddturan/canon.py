"""Canonical labeling by colour refinement plus individualisation search.

The certificate is the lexicographically largest upper-triangle adjacency
string over all labelings reachable from the search tree's leaves. Leaves
are labelings compatible with the equitable partitions produced along the
way, so relabeling the input never changes the certificate.

Swapping two vertices with identical neighbourhoods (apart from each other)
that sit in the same cell is an automorphism fixing every individualised
vertex, so only one vertex per such twin class is branched on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, iter_bits


@dataclass(frozen=True, order=True)
class CanonicalForm:
    cert: bytes

    def hex(self) -> str:
        return self.cert.hex()


def _refine(adj: tuple[int, ...], cells: list[int]) -> list[int]:
    """Split cells (vertex masks, ordered) until the partition is equitable."""
    while True:
        out = []
        changed = False
        for cell in cells:
            if cell & (cell - 1) == 0:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], int] = {}
            for v in iter_bits(cell):
                row = adj[v]
                sig = tuple((row & c).bit_count() for c in cells)
                groups[sig] = groups.get(sig, 0) | (1 << v)
            if len(groups) == 1:
                out.append(cell)
            else:
                changed = True
                out.extend(groups[k] for k in sorted(groups))
        cells = out
        if not changed:
            return cells


def _encode(adj: tuple[int, ...], order: list[int]) -> int:
    """Upper-triangle bits, column by column, of the graph relabeled so order[i] -> i."""
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def _twin_representatives(adj: tuple[int, ...], cell: int) -> list[int]:
    reps: list[int] = []
    for v in iter_bits(cell):
        for u in reps:
            both = (1 << u) | (1 << v)
            if adj[u] & ~both == adj[v] & ~both:
                break
        else:
            reps.append(v)
    return reps


def canonical_labeling(g: Graph) -> tuple[list[int], int]:
    """Return (order, code): order[i] is the vertex placed at position i."""
    adj = g.adj
    if g.n == 0:
        return [], 0
    best_code = -1
    best_order: list[int] = []

    def search(cells: list[int]) -> None:
        nonlocal best_code, best_order
        target = -1
        for idx, c in enumerate(cells):
            if c & (c - 1):
                target = idx
                break
        if target < 0:
            order = [c.bit_length() - 1 for c in cells]
            code = _encode(adj, order)
            if code > best_code:
                best_code, best_order = code, order
            return
        cell = cells[target]
        for v in _twin_representatives(adj, cell):
            bit = 1 << v
            split = cells[:target] + [bit, cell ^ bit] + cells[target + 1:]
            search(_refine(adj, split))

    # Initial cells by degree, ascending.
    by_deg: dict[int, int] = {}
    for v in range(g.n):
        d = adj[v].bit_count()
        by_deg[d] = by_deg.get(d, 0) | (1 << v)
    search(_refine(adj, [by_deg[d] for d in sorted(by_deg)]))
    return best_order, best_code


def canonical_form(g: Graph) -> CanonicalForm:
    _, code = canonical_labeling(g)
    nbits = g.n * (g.n - 1) // 2
    return CanonicalForm(bytes([g.n]) + code.to_bytes((nbits + 7) // 8, "big"))


def canonical_graph(g: Graph) -> Graph:
    """The representative of g's isomorphism class fixed by the canonical labeling."""
    order, _ = canonical_labeling(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.edge_count != b.edge_count:
        return False
    return canonical_form(a) == canonical_form(b)
