"""Independent brute-force oracles. None of these touch the backtracking engine
or the canonical labeler."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product

import numpy as np

from oddturan.graph import Graph


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=bool)
    for u, v in g.edges():
        a[u, v] = a[v, u] = True
    return a


@lru_cache(maxsize=None)
def _all_maps(n: int, k: int) -> np.ndarray:
    if n == 0:
        return np.zeros((0, k), dtype=np.int8)
    return np.array(list(product(range(n), repeat=k)), dtype=np.int8).reshape(-1, k)


@lru_cache(maxsize=None)
def _injective_mask(n: int, k: int) -> np.ndarray:
    maps = np.sort(_all_maps(n, k), axis=1)
    if k < 2:
        return np.ones(len(maps), dtype=bool)
    return np.all(np.diff(maps, axis=1) != 0, axis=1)


def naive_counts(q: Graph, g: Graph) -> tuple[int, int]:
    """(hom, inj) by testing every one of the v(g) ** v(q) maps."""
    if q.n == 0:
        return 1, 1
    maps = _all_maps(g.n, q.n)
    if len(maps) == 0:
        return 0, 0
    a = adjacency_matrix(g)
    ok = np.ones(len(maps), dtype=bool)
    for u, v in q.edges():
        ok &= a[maps[:, u], maps[:, v]]
    return int(ok.sum()), int((ok & _injective_mask(g.n, q.n)).sum())


def naive_inj_perm(q: Graph, g: Graph) -> int:
    """inj by walking every injective map (itertools.permutations)."""
    edges = q.edges()
    return sum(1 for p in permutations(range(g.n), q.n)
               if all(g.has_edge(p[u], p[v]) for u, v in edges))


def naive_degrees(q: Graph, g: Graph) -> list[int]:
    edges = q.edges()
    deg = [0] * g.n
    for p in permutations(range(g.n), q.n):
        if all(g.has_edge(p[u], p[v]) for u, v in edges):
            for w in p:
                deg[w] += 1
    return deg


def closed_walks(g: Graph, length: int) -> int:
    """trace(A^length) = hom(C_length, g)."""
    a = adjacency_matrix(g).astype(object)
    m = np.identity(g.n, dtype=object)
    for _ in range(length):
        m = m.dot(a)
    return int(np.trace(m))


def brute_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.edge_count != b.edge_count:
        return False
    eb = set(frozenset(e) for e in b.edges())
    ea = a.edges()
    return any(all(frozenset((p[u], p[v])) in eb for u, v in ea) for p in permutations(range(a.n)))


def brute_colorable(g: Graph, h: Graph) -> bool:
    edges = g.edges()
    return any(all(h.has_edge(c[u], c[v]) for u, v in edges)
               for c in product(range(h.n), repeat=g.n))


def brute_distance(g: Graph, h: Graph) -> int:
    edges = g.edges()
    return min(sum(1 for u, v in edges if not h.has_edge(c[u], c[v]))
               for c in product(range(h.n), repeat=g.n))


def cycle_edge_masks(n: int, length: int) -> list[int]:
    """All `length`-cycles of K_n as masks over the column-ordered pair index."""
    index = {}
    for j in range(1, n):
        for i in range(j):
            index[(i, j)] = len(index)
    out = set()
    for verts in combinations(range(n), length):
        first = verts[0]
        for rest in permutations(verts[1:]):
            if rest[0] > rest[-1]:
                continue
            cyc = (first,) + rest
            mask = 0
            for t in range(length):
                u, v = sorted((cyc[t], cyc[(t + 1) % length]))
                mask |= 1 << index[(u, v)]
            out.add(mask)
    return sorted(out)


def clique_edge_masks(n: int, k: int) -> list[int]:
    index = {}
    for j in range(1, n):
        for i in range(j):
            index[(i, j)] = len(index)
    return [sum(1 << index[(u, v)] for u, v in combinations(verts, 2))
            for verts in combinations(range(n), k)]


def labeled_extremum(n: int, copy_masks: list[int], aut: int,
                     forbidden_masks: list[int]) -> tuple[int, list[int]]:
    """Max of aut * (number of copies) over labeled graphs on n vertices
    containing none of the forbidden edge sets.

    Vectorised over all 2^(n choose 2) edge masks. Returns the maximum and
    the masks attaining it.
    """
    pairs = n * (n - 1) // 2
    graphs = np.arange(1 << pairs, dtype=np.int64)
    free = np.ones(len(graphs), dtype=bool)
    for f in forbidden_masks:
        free &= (graphs & f) != f
    copies = np.zeros(len(graphs), dtype=np.int64)
    for c in copy_masks:
        copies += (graphs & c) == c
    copies = np.where(free, copies, -1)
    best = int(copies.max())
    return aut * best, [int(m) for m in np.flatnonzero(copies == best)]


def graph_from_pair_mask(n: int, mask: int) -> Graph:
    from oddturan.graph import make_graph
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    return make_graph(n, [pairs[b] for b in range(len(pairs)) if mask >> b & 1])
