"""Exact homomorphism and injective-homomorphism counting by bitmask backtracking.

Pattern vertices are placed in a fixed order. The candidate set for the next
vertex is the intersection of the host neighbourhoods of its already-placed
pattern neighbours (minus used host vertices for injective maps). The last
level is never expanded: its candidate count is added directly. Injective
searches only visit maps that are increasing on each class of twin pattern
vertices and scale the result back up.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .graph import Graph, GraphError, iter_bits

COUNTER_BITS = 64
COUNTER_LIMIT = 1 << COUNTER_BITS


class CountOverflow(ArithmeticError):
    """A count does not fit in an unsigned 64-bit counter."""


class BudgetExceeded(RuntimeError):
    """An exhaustive search would exceed its configured map budget."""


def _checked(value: int, what: str) -> int:
    if value >= COUNTER_LIMIT:
        raise CountOverflow(f"{what} = {value} exceeds the {COUNTER_BITS}-bit counter")
    return value


def placement_order(q: Graph) -> list[int]:
    """Greedy order: most already-placed neighbours, then higher degree, then lower index."""
    placed = 0
    order = []
    for _ in range(q.n):
        best = None
        best_key = None
        for v in range(q.n):
            if placed >> v & 1:
                continue
            key = ((q.adj[v] & placed).bit_count(), q.adj[v].bit_count(), -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        placed |= 1 << best
    return order


def _back_positions(q: Graph, order: Sequence[int]) -> list[tuple[int, ...]]:
    pos = {v: i for i, v in enumerate(order)}
    return [tuple(sorted(pos[u] for u in iter_bits(q.adj[v]) if pos[u] < i))
            for i, v in enumerate(order)]


def _twin_links(q: Graph, order: Sequence[int]) -> tuple[list[int], int]:
    """For injective search: link each position to the previous position of a twin.

    Twins (vertices with equal neighbourhoods apart from each other) can be
    permuted freely by automorphisms, so an injective map may be required to
    send each twin class to increasing host labels. Returns the links and the
    number of maps each such sorted map stands for.
    """
    reps: list[int] = []
    cls = {}
    for v in range(q.n):
        for u in reps:
            both = (1 << u) | (1 << v)
            if q.adj[u] & ~both == q.adj[v] & ~both:
                cls[v] = u
                break
        else:
            reps.append(v)
            cls[v] = v
    last_pos: dict[int, int] = {}
    links = []
    sizes: dict[int, int] = {}
    for i, v in enumerate(order):
        c = cls[v]
        links.append(last_pos.get(c, -1))
        last_pos[c] = i
        sizes[c] = sizes.get(c, 0) + 1
    mult = 1
    for size in sizes.values():
        mult *= factorial(size)
    return links, mult


def _count(q: Graph, order: Sequence[int], host: Graph, injective: bool,
           roots: int | None = None) -> int:
    k = q.n
    if k == 0:
        return 1
    links, mult = _twin_links(q, order) if injective else ([-1] * k, 1)
    back = _back_positions(q, order)
    hadj = host.adj
    full = host.vertex_mask()
    img = [0] * k
    last = k - 1

    def rec(depth: int, used: int) -> int:
        cand = full
        for j in back[depth]:
            cand &= hadj[img[j]]
        if injective:
            cand &= ~used
            if links[depth] >= 0:
                cand &= -(2 << img[links[depth]])
        if depth == 0 and roots is not None:
            cand &= roots
        if depth == last:
            return cand.bit_count()
        total = 0
        while cand:
            low = cand & -cand
            img[depth] = low.bit_length() - 1
            total += rec(depth + 1, used | low)
            cand ^= low
        return total

    return rec(0, 0) * mult


def _count_worker(args) -> int:
    return _count(*args)


def _split_roots(n: int, workers: int) -> list[int]:
    chunks = [0] * workers
    for v in range(n):
        chunks[v % workers] |= 1 << v
    return [c for c in chunks if c]


def falling_factorial(m: int, s: int) -> int:
    out = 1
    for i in range(s):
        out *= m - i
    return max(out, 0)


@dataclass(frozen=True)
class Pattern:
    """A pattern graph with its placement order and automorphism count.

    Isolated vertices are split off into `isolated`; counts over them are
    closed-form (n ** s maps, falling factorial for injective ones), so only
    `core` is searched. `order` indexes `core`.
    """

    graph: Graph
    core: Graph
    order: tuple[int, ...]
    isolated: int
    aut_count: int

    @classmethod
    def of(cls, q: Graph) -> "Pattern":
        keep = [v for v in range(q.n) if q.adj[v]]
        core = q
        for v in reversed(range(q.n)):
            if not q.adj[v]:
                core = core.remove_vertex(v)
        order = tuple(placement_order(core))
        isolated = q.n - len(keep)
        aut = _count(core, order, core, True) * falling_factorial(isolated, isolated)
        return cls(q, core, order, isolated, aut)

    @property
    def n(self) -> int:
        return self.graph.n

    def __repr__(self):
        return f"Pattern(n={self.graph.n}, edges={self.graph.edges()}, aut={self.aut_count})"


def as_pattern(q: Graph | Pattern) -> Pattern:
    return q if isinstance(q, Pattern) else Pattern.of(q)


def _isolated_factor(q: Pattern, n: int, injective: bool) -> int:
    if injective:
        return falling_factorial(n - q.core.n, q.isolated)
    return n ** q.isolated


def _run(q: Pattern, g: Graph, injective: bool, workers: int) -> int:
    factor = _isolated_factor(q, g.n, injective)
    if factor == 0:
        return 0
    if workers <= 1 or g.n < 2 or q.core.n < 2:
        return _count(q.core, q.order, g, injective) * factor
    jobs = [(q.core, q.order, g, injective, roots) for roots in _split_roots(g.n, workers)]
    with ProcessPoolExecutor(max_workers=len(jobs)) as pool:
        return sum(pool.map(_count_worker, jobs)) * factor


def count_hom(q: Graph | Pattern, g: Graph, workers: int = 1) -> int:
    """Number of edge-preserving maps V(q) -> V(g)."""
    return _checked(_run(as_pattern(q), g, False, workers), "hom")


def count_inj(q: Graph | Pattern, g: Graph, workers: int = 1) -> int:
    """Number of injective edge-preserving maps V(q) -> V(g)."""
    return _checked(_run(as_pattern(q), g, True, workers), "inj")


def copy_count(q: Graph | Pattern, g: Graph) -> int:
    """Unlabeled copies of q in g: inj(q, g) / |Aut(q)|."""
    q = as_pattern(q)
    total = count_inj(q, g)
    copies, rem = divmod(total, q.aut_count)
    if rem:
        raise AssertionError(f"|Aut| = {q.aut_count} does not divide inj = {total}")
    return copies


@dataclass(frozen=True)
class DegreeProfile:
    per_vertex: tuple[int, ...]
    total: int

    @property
    def min(self) -> int:
        return min(self.per_vertex) if self.per_vertex else 0

    @property
    def max(self) -> int:
        return max(self.per_vertex) if self.per_vertex else 0

    @property
    def sum(self) -> int:
        return sum(self.per_vertex)

    @property
    def n(self) -> int:
        return len(self.per_vertex)

    @property
    def avg(self) -> Fraction:
        """Average Q-degree, exact. Zero for the empty host."""
        return Fraction(self.sum, self.n) if self.per_vertex else Fraction(0)


def q_degree_profile(q: Graph | Pattern, g: Graph) -> DegreeProfile:
    """Per-vertex count of injective homomorphisms whose image contains the vertex."""
    q = as_pattern(q)
    core_deg, core_total = _core_degrees(q, g)
    n, k, s = g.n, q.core.n, q.isolated
    # maps avoiding v: core maps avoiding v, times placements of the isolated
    # vertices among the n - 1 - k remaining host vertices
    with_all = falling_factorial(n - k, s)
    without = falling_factorial(n - 1 - k, s)
    total = _checked(core_total * with_all, "inj")
    deg = tuple(_checked(total - (core_total - d) * without, "Q-degree") for d in core_deg)
    return DegreeProfile(deg, total)


def _core_degrees(q: Pattern, g: Graph) -> tuple[list[int], int]:
    k = q.core.n
    deg = [0] * g.n
    if k == 0:
        return deg, 1
    back = _back_positions(q.core, q.order)
    links, mult = _twin_links(q.core, q.order)
    hadj = g.adj
    full = g.vertex_mask()
    img = [0] * k
    last = k - 1
    # hits[used] = number of completed maps whose first k-1 images are `used`
    hits: dict[int, int] = {}

    def rec(depth: int, used: int) -> int:
        cand = full & ~used
        for j in back[depth]:
            cand &= hadj[img[j]]
        if links[depth] >= 0:
            cand &= -(2 << img[links[depth]])
        if depth == last:
            c = cand.bit_count()
            if c:
                hits[used] = hits.get(used, 0) + c
                for w in iter_bits(cand):
                    deg[w] += 1
            return c
        total = 0
        while cand:
            low = cand & -cand
            img[depth] = low.bit_length() - 1
            total += rec(depth + 1, used | low)
            cand ^= low
        return total

    total = rec(0, 0)
    for used, c in hits.items():
        for u in iter_bits(used):
            deg[u] += c
    return [d * mult for d in deg], total * mult


def find_embedding(q: Graph | Pattern, g: Graph, injective: bool = True,
                   required: int | None = None) -> list[int] | None:
    """First (injective) homomorphism found, as a list image[v] for pattern vertex v.

    With `required` set, the image must meet that host vertex mask.
    """
    if isinstance(q, Pattern) and not q.isolated:
        qg, order = q.graph, q.order
    else:
        qg = q.graph if isinstance(q, Pattern) else q
        order = placement_order(qg)
    k = qg.n
    if k == 0:
        return [] if not required else None
    back = _back_positions(qg, order)
    links = _twin_links(qg, order)[0] if injective else [-1] * k
    hadj = g.adj
    full = g.vertex_mask()
    img = [0] * k

    def rec(depth: int, used: int) -> bool:
        if depth == k:
            return required is None or bool(used & required)
        cand = full
        for j in back[depth]:
            cand &= hadj[img[j]]
        if injective:
            cand &= ~used
            if links[depth] >= 0:
                cand &= -(2 << img[links[depth]])
        while cand:
            low = cand & -cand
            img[depth] = low.bit_length() - 1
            if rec(depth + 1, used | low):
                return True
            cand ^= low
        return False

    if not rec(0, 0):
        return None
    out = [0] * k
    for i, v in enumerate(order):
        out[v] = img[i]
    return out


def is_free(g: Graph, family: Iterable[Graph | Pattern]) -> bool:
    """True iff g contains no member of `family` as a (not necessarily induced) subgraph."""
    for f in family:
        f = as_pattern(f)
        if f.n <= g.n and find_embedding(f, g) is not None:
            return False
    return True


def is_free_through(g: Graph, family: Sequence[Pattern], v: int) -> bool:
    """True iff no member of `family` embeds in g using vertex v."""
    req = 1 << v
    for f in family:
        if f.n <= g.n and find_embedding(f, g, required=req) is not None:
            return False
    return True


def is_colorable(g: Graph, h: Graph) -> tuple[bool, list[int] | None]:
    """Whether g admits a homomorphism into h, plus one such map when it does."""
    if g.n == 0:
        return True, []
    witness = find_embedding(g, h, injective=False)
    return witness is not None, witness


def count_bad_edges(g: Graph, h: Graph, coloring: Sequence[int]) -> int:
    """Edges of g whose endpoints are sent to a non-edge of h."""
    return sum(1 for u, v in g.edges() if not h.has_edge(coloring[u], coloring[v]))


DEFAULT_MAP_BUDGET = 10 ** 8


def edit_distance_to_colorable(g: Graph, h: Graph,
                               budget: int = DEFAULT_MAP_BUDGET) -> tuple[int, list[int]]:
    """Fewest edges of g to delete so the rest maps homomorphically into h.

    Equals the minimum over all maps V(g) -> V(h) of the number of g-edges
    sent to non-edges of h. Exhaustive branch and bound; refuses to start when
    v(h) ** v(g) exceeds `budget`.
    """
    if g.n == 0:
        return 0, []
    if h.n == 0:
        raise GraphError("target graph has no vertices")
    if h.n ** g.n > budget:
        raise BudgetExceeded(f"{h.n}^{g.n} maps exceed the search budget {budget}")
    order = placement_order(g)
    back = _back_positions(g, order)
    hadj = h.adj
    k = g.n
    img = [0] * k
    best = g.edge_count  # everything to one vertex deletes every edge
    best_img = [0] * k

    def rec(depth: int, cost: int) -> None:
        nonlocal best, best_img
        if depth == k:
            if cost < best:
                best, best_img = cost, img[:]
            return
        for x in range(h.n):
            row = hadj[x]
            extra = 0
            for j in back[depth]:
                if not row >> img[j] & 1:
                    extra += 1
            if cost + extra < best:
                img[depth] = x
                rec(depth + 1, cost + extra)
                if best == 0:
                    return

    rec(0, 0)
    coloring = [0] * k
    for i, v in enumerate(order):
        coloring[v] = best_img[i]
    return best, coloring
