"""Exhaustive small-n experiments: extremal values, degree-stability scans,
vertex-extendability checks and edge-distance measurements.

No claim is made about large-n behaviour. Scans report what the finite
search finds: critical ratios and counterexample inventories.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Sequence

from .canon import canonical_graph
from .enumerate import MAX_EXHAUSTIVE_ORDER, all_graphs_filtered
from .formats import to_graph6
from .graph import Graph, cycle_graph, turan_graph
from .hom import (DEFAULT_MAP_BUDGET, Pattern, as_pattern, count_inj,
                  edit_distance_to_colorable, is_colorable, is_free, q_degree_profile)

WITNESS_CAP = 32


def _map(fn: Callable, items: Sequence, workers: int) -> list:
    # Order-preserving, so results do not depend on scheduling.
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def normalized_ratio(min_degree: int, n: int, k: int, extremal: int) -> Fraction:
    """min Q-degree * n / (v(Q) * inj(n, Q, F)); zero when the extremal value is zero."""
    if extremal == 0:
        return Fraction(0)
    return Fraction(min_degree * n, k * extremal)


@dataclass
class ExtremalResult:
    n: int
    pattern: Pattern
    family: tuple[Pattern, ...]
    value: int
    witnesses: list[Graph]
    witness_count: int
    graphs_scanned: int

    @property
    def copies(self) -> int:
        return self.value // self.pattern.aut_count

    @property
    def density(self) -> Fraction:
        """Unlabeled copies over C(n, v(Q)): the finite-n generalized Turan density."""
        total = comb(self.n, self.pattern.n)
        return Fraction(self.copies, total) if total else Fraction(0)


def _inj_row(args) -> int:
    q, g = args
    return count_inj(q, g)


def extremal_search(n: int, q: Graph | Pattern, family: Iterable[Graph | Pattern],
                    cap: int = MAX_EXHAUSTIVE_ORDER, witness_cap: int = WITNESS_CAP,
                    workers: int = 1) -> ExtremalResult:
    """Maximum of inj(Q, G) over F-free G on n vertices, with the maximizing classes."""
    q = as_pattern(q)
    fam = tuple(as_pattern(f) for f in family)
    graphs = list(all_graphs_filtered(n, fam, cap=cap))
    values = _map(_inj_row, [(q, g) for g in graphs], workers)
    best = max(values, default=0)
    winners = [g for g, v in zip(graphs, values) if v == best]
    return ExtremalResult(n, q, fam, best, winners[:witness_cap], len(winners), len(graphs))


def density_trend(ns: Iterable[int], q: Graph | Pattern, family: Iterable[Graph | Pattern],
                  cap: int = MAX_EXHAUSTIVE_ORDER, workers: int = 1) -> list[ExtremalResult]:
    """Extremal results for each n, for eyeballing how the finite density moves with n."""
    q = as_pattern(q)
    fam = tuple(as_pattern(f) for f in family)
    return [extremal_search(n, q, fam, cap=cap, witness_cap=0, workers=workers) for n in ns]


def turan_degree_reference(n: int, r: int) -> Fraction:
    """Average C5-degree of the Turan graph T(n, r), exact."""
    if n < 5 or r < 3:
        raise ValueError(f"reference degree needs n >= 5 and r >= 3, got n={n}, r={r}")
    return q_degree_profile(cycle_graph(5), turan_graph(n, r)).avg


@dataclass
class ScanRow:
    graph: Graph
    inj: int
    min_degree: int
    ratio: Fraction
    colorable: bool


@dataclass
class StabilityScanResult:
    n: int
    pattern: Pattern
    family: tuple[Pattern, ...]
    target: Graph
    extremal_value: int
    rows: list[ScanRow]

    @property
    def critical_ratio(self) -> Fraction | None:
        """Largest ratio of a graph that is not target-colorable; None if there is none."""
        bad = [r.ratio for r in self.rows if not r.colorable]
        return max(bad) if bad else None

    @property
    def counterexamples(self) -> list[ScanRow]:
        """Non-colorable graphs reaching ratio 1 or attaining the extremal value."""
        return [r for r in self.rows if not r.colorable
                and (r.ratio >= 1 or (self.extremal_value and r.inj == self.extremal_value))]

    @property
    def extremal_rows(self) -> list[ScanRow]:
        return [r for r in self.rows if r.inj == self.extremal_value]

    def colorable_above(self, threshold: Fraction) -> bool:
        return all(r.colorable for r in self.rows if r.ratio > threshold)


def _scan_row(args) -> tuple[int, int, bool]:
    q, h, g = args
    prof = q_degree_profile(q, g)
    ok, _ = is_colorable(g, h)
    return prof.total, prof.min, ok


def degree_stability_scan(n: int, q: Graph | Pattern, family: Iterable[Graph | Pattern],
                          target: Graph, cap: int = MAX_EXHAUSTIVE_ORDER,
                          workers: int = 1) -> StabilityScanResult:
    """Normalized minimum Q-degree and target-colorability of every F-free graph on n vertices."""
    q = as_pattern(q)
    fam = tuple(as_pattern(f) for f in family)
    graphs = list(all_graphs_filtered(n, fam, cap=cap))
    stats = _map(_scan_row, [(q, target, g) for g in graphs], workers)
    extremal = max((s[0] for s in stats), default=0)
    rows = [ScanRow(g, inj, mn, normalized_ratio(mn, n, q.n, extremal), ok)
            for g, (inj, mn, ok) in zip(graphs, stats)]
    rows.sort(key=lambda r: (-r.ratio, to_graph6(r.graph)))
    return StabilityScanResult(n, q, fam, target, extremal, rows)


@dataclass
class ExtendabilityResult:
    graph: Graph
    vertex: int
    pattern: Pattern
    family: tuple[Pattern, ...]
    target: Graph
    ratio: Fraction
    extremal_value: int
    free: bool
    min_degree: int
    degree_ok: bool
    deleted_colorable: bool
    conclusion_holds: bool

    @property
    def hypothesis_met(self) -> bool:
        return self.free and self.degree_ok and self.deleted_colorable

    @property
    def violated(self) -> bool:
        return self.hypothesis_met and not self.conclusion_holds


def vertex_extendability_check(g: Graph, v: int, q: Graph | Pattern,
                               family: Iterable[Graph | Pattern], target: Graph,
                               ratio: Fraction, extremal_value: int | None = None,
                               min_degree: int | None = None,
                               colorable: bool | None = None) -> ExtendabilityResult:
    """Evaluate hypothesis and conclusion of the vertex-extension property at (G, v).

    Hypothesis: G is F-free, min Q-degree * n >= ratio * v(Q) * inj(n, Q, F),
    and G - v is target-colorable. Conclusion: G is target-colorable.
    `extremal_value`, `min_degree` and `colorable` may be supplied to skip
    recomputation in batch scans.
    """
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for order {g.n}")
    q = as_pattern(q)
    fam = tuple(as_pattern(f) for f in family)
    ratio = Fraction(ratio)
    if extremal_value is None:
        extremal_value = extremal_search(g.n, q, fam).value
    if min_degree is None:
        min_degree = q_degree_profile(q, g).min
    if colorable is None:
        colorable = is_colorable(g, target)[0]
    degree_ok = min_degree * g.n >= ratio * q.n * extremal_value
    deleted_ok = is_colorable(g.remove_vertex(v), target)[0]
    return ExtendabilityResult(g, v, q, fam, target, ratio, extremal_value,
                               is_free(g, fam), min_degree, degree_ok, deleted_ok, colorable)


@dataclass
class ExtendabilityScan:
    n: int
    pattern: Pattern
    family: tuple[Pattern, ...]
    target: Graph
    ratio: Fraction
    extremal_value: int
    graphs_scanned: int
    met: list[ExtendabilityResult] = field(default_factory=list)

    @property
    def violations(self) -> list[ExtendabilityResult]:
        return [r for r in self.met if not r.conclusion_holds]


def vertex_extendability_scan(n: int, q: Graph | Pattern, family: Iterable[Graph | Pattern],
                              target: Graph, ratio: Fraction,
                              cap: int = MAX_EXHAUSTIVE_ORDER) -> ExtendabilityScan:
    """Run the check at every vertex of every F-free graph on n vertices; keep hypothesis-met cases."""
    q = as_pattern(q)
    fam = tuple(as_pattern(f) for f in family)
    ratio = Fraction(ratio)
    graphs = list(all_graphs_filtered(n, fam, cap=cap))
    profiles = [q_degree_profile(q, g) for g in graphs]
    extremal = max((p.total for p in profiles), default=0)
    scan = ExtendabilityScan(n, q, fam, target, ratio, extremal, len(graphs))
    for g, prof in zip(graphs, profiles):
        if prof.min * n < ratio * q.n * extremal:
            continue
        ok = is_colorable(g, target)[0]
        for v in range(n):
            res = vertex_extendability_check(g, v, q, fam, target, ratio, extremal,
                                             prof.min, ok)
            if res.hypothesis_met:
                scan.met.append(res)
    return scan


@dataclass
class EdgeStabilityReport:
    n: int
    pattern: Pattern
    family: tuple[Pattern, ...]
    target: Graph
    near: Fraction
    extremal_value: int
    distances: list[tuple[Graph, int, int]]  # (graph, inj, distance)

    @property
    def max_distance(self) -> int:
        return max((d for _, _, d in self.distances), default=0)

    @property
    def normalized_max(self) -> Fraction:
        return Fraction(self.max_distance, self.n * self.n) if self.n else Fraction(0)

    @property
    def histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(d for _, _, d in self.distances).items()))


def _distance_row(args) -> tuple[int, int]:
    q, h, g, budget = args
    return count_inj(q, g), edit_distance_to_colorable(g, h, budget)[0]


def edge_stability_measure(n: int, q: Graph | Pattern, family: Iterable[Graph | Pattern],
                           target: Graph, near: Fraction, cap: int = MAX_EXHAUSTIVE_ORDER,
                           budget: int = DEFAULT_MAP_BUDGET, workers: int = 1) -> EdgeStabilityReport:
    """Edit distance to target-colorability over F-free graphs with inj(Q, G) >= near * inj(n, Q, F)."""
    q = as_pattern(q)
    fam = tuple(as_pattern(f) for f in family)
    near = Fraction(near)
    graphs = list(all_graphs_filtered(n, fam, cap=cap))
    injs = [count_inj(q, g) for g in graphs]
    extremal = max(injs, default=0)
    chosen = [g for g, v in zip(graphs, injs) if v >= near * extremal]
    rows = _map(_distance_row, [(q, target, g, budget) for g in chosen], workers)
    return EdgeStabilityReport(n, q, fam, target, near, extremal,
                               [(g, i, d) for g, (i, d) in zip(chosen, rows)])


def witness_includes(result: ExtremalResult, g: Graph) -> bool:
    """Whether g's isomorphism class is among the reported witnesses."""
    rep = canonical_graph(g)
    return any(w == rep for w in result.witnesses)
