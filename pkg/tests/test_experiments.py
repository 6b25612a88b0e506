from fractions import Fraction

import pytest

from oddturan.canon import canonical_form
from oddturan.enumerate import all_graphs_filtered
from oddturan.graph import blowup, complete_graph, cycle_graph, empty_graph, make_graph, turan_graph
from oddturan.hom import count_inj, is_colorable, is_free, q_degree_profile
from oddturan.experiments import (degree_stability_scan, edge_stability_measure, extremal_search,
                                  normalized_ratio, turan_degree_reference,
                                  vertex_extendability_check, vertex_extendability_scan,
                                  witness_includes)

from oracles import (brute_colorable, brute_distance, brute_isomorphic, clique_edge_masks,
                     cycle_edge_masks, graph_from_pair_mask, labeled_extremum, naive_degrees,
                     naive_inj_perm)


def test_extremal_pentagon(C5, K3):
    res = extremal_search(5, C5, [K3])
    value, masks = labeled_extremum(5, cycle_edge_masks(5, 5), 10, cycle_edge_masks(5, 3))
    assert res.value == value == 10
    assert all(brute_isomorphic(graph_from_pair_mask(5, m), C5) for m in masks)
    assert res.witness_count == 1 and witness_includes(res, C5)
    assert res.copies == 1 and res.density == Fraction(1, 1)


def test_extremal_k4_free(C5, K4):
    res = extremal_search(5, C5, [K4])
    value, masks = labeled_extremum(5, cycle_edge_masks(5, 5), 10, clique_edge_masks(5, 4))
    assert res.value == value == 40
    t = turan_graph(5, 3)
    assert all(brute_isomorphic(graph_from_pair_mask(5, m), t) for m in masks)
    assert res.witness_count == 1 and witness_includes(res, t)


def test_extremal_too_small(C5, K4):
    res = extremal_search(4, C5, [K4])
    assert res.value == 0 and res.density == 0
    assert res.witness_count == 10  # all K4-free classes on 4 vertices tie at 0


def test_extremal_witnesses_attain_value(C5, K3):
    for n in range(5, 8):
        res = extremal_search(n, C5, [K3])
        for w in res.witnesses:
            assert count_inj(C5, w) == res.value and is_free(w, [K3]) and w.n == n
        assert all(count_inj(C5, g) <= res.value for g in all_graphs_filtered(n, [K3]))


def test_witness_cap(C5, K4):
    res = extremal_search(4, C5, [K4], witness_cap=3)
    assert len(res.witnesses) == 3 and res.witness_count == 10


def test_turan_reference(C5):
    assert turan_degree_reference(5, 3) == Fraction(5 * naive_inj_perm(C5, turan_graph(5, 3)), 5) == 40
    assert turan_degree_reference(6, 3) == Fraction(sum(naive_degrees(C5, turan_graph(6, 3))), 6) == 200
    ref7 = turan_degree_reference(7, 3)
    assert ref7 == Fraction(3000, 7)
    # at n = 7 the reference equals 5 * inj(7, C5, K4) / 7 exactly
    value, _ = labeled_extremum(7, cycle_edge_masks(7, 5), 10, clique_edge_masks(7, 4))
    assert value == 600 == extremal_search(7, C5, [complete_graph(4)]).value
    assert ref7 == Fraction(5 * value, 7)
    with pytest.raises(ValueError):
        turan_degree_reference(4, 3)


def test_normalized_ratio():
    assert normalized_ratio(50, 6, 5, 240) == Fraction(1, 4)
    assert normalized_ratio(7, 5, 5, 0) == 0


def test_scan_k4_free_five(C5, K3, K4):
    scan = degree_stability_scan(5, C5, [K4], K3)
    assert scan.extremal_value == 40 and len(scan.rows) == 29
    assert all(brute_colorable(r.graph, K3) == r.colorable for r in scan.rows)
    assert scan.critical_ratio is None and scan.counterexamples == []
    top = scan.rows[0]
    assert top.ratio == 1 and brute_isomorphic(top.graph, turan_graph(5, 3))


def test_scan_k4_free_six_wheel(C5, K3, K4):
    scan = degree_stability_scan(6, C5, [K4], K3)
    bad = [r for r in scan.rows if not r.colorable]
    wheel = make_graph(6, [(i, (i + 1) % 5) for i in range(5)] + [(i, 5) for i in range(5)])
    assert len(bad) == 1 and brute_isomorphic(bad[0].graph, wheel)
    assert bad[0].min_degree == min(naive_degrees(C5, wheel)) == 50
    assert scan.critical_ratio == Fraction(50 * 6, 5 * 240) == Fraction(1, 4)
    assert scan.colorable_above(scan.critical_ratio)


def test_scan_c7_c5_free_seven():
    c7 = cycle_graph(7)
    scan = degree_stability_scan(7, c7, [cycle_graph(5)], c7)
    assert scan.extremal_value == 28 and len(scan.rows) == 251
    # The extremal graph is Hamiltonian in two ways and contains a triangle,
    # so every vertex has C7-degree 28 (ratio 1) and it is not C7-colorable.
    assert scan.critical_ratio == 1
    [cx] = scan.counterexamples
    assert count_inj(complete_graph(3), cx.graph) > 0
    assert not is_colorable(cx.graph, c7)[0]


def test_scan_ratio_one_is_colorable_or_listed(C5, K3):
    for n in (5, 6, 7):
        scan = degree_stability_scan(n, C5, [K3], C5)
        listed = {id(r) for r in scan.counterexamples}
        for r in scan.rows:
            if r.ratio >= 1 or r.inj == scan.extremal_value:
                assert r.colorable or id(r) in listed


def test_scan_workers_agree(C5, K3, K4):
    a = degree_stability_scan(6, C5, [K4], K3)
    b = degree_stability_scan(6, C5, [K4], K3, workers=2)
    assert [(canonical_form(r.graph), r.ratio, r.colorable) for r in a.rows] == \
           [(canonical_form(r.graph), r.ratio, r.colorable) for r in b.rows]


def test_extendability_turan(C5, K3, K4):
    res = vertex_extendability_check(turan_graph(6, 3), 0, C5, [K4], K3, Fraction(0))
    assert res.hypothesis_met and res.conclusion_holds
    assert res.extremal_value == 240


def test_extendability_isolated_vertex(C5, K3):
    g = C5.disjoint_union(empty_graph(1))
    res = vertex_extendability_check(g, 5, C5, [K3], C5, Fraction(1, 2))
    assert res.min_degree == 0
    assert res.conclusion_holds and res.deleted_colorable and res.free
    assert not res.hypothesis_met


def test_extendability_recomputation(C5, K3, K4):
    g = make_graph(6, [(i, (i + 1) % 5) for i in range(5)] + [(i, 5) for i in range(5)])
    res = vertex_extendability_check(g, 5, C5, [K4], K3, Fraction(1, 4))
    assert res.free == is_free(g, [K4])
    assert res.min_degree == q_degree_profile(C5, g).min == 50
    assert res.deleted_colorable == brute_colorable(g.remove_vertex(5), K3) is True
    assert res.conclusion_holds == brute_colorable(g, K3) is False
    assert res.violated
    with pytest.raises(ValueError):
        vertex_extendability_check(g, 6, C5, [K4], K3, Fraction(0))


@pytest.mark.parametrize("q, fam, h, ratio", [
    (cycle_graph(5), [complete_graph(4)], complete_graph(3), Fraction(1, 4)),
    (cycle_graph(5), [complete_graph(4)], complete_graph(3), Fraction(1, 5)),
    (cycle_graph(5), [complete_graph(4)], complete_graph(3), Fraction(3, 10)),
    (cycle_graph(5), [complete_graph(3)], cycle_graph(5), Fraction(0)),
])
def test_extendability_batch_agrees_with_scan(q, fam, h, ratio):
    n = 6
    batch = vertex_extendability_scan(n, q, fam, h, ratio)
    scan = degree_stability_scan(n, q, fam, h)
    from_batch = {(canonical_form(r.graph), r.vertex) for r in batch.violations}
    from_scan = set()
    for row in scan.rows:
        if row.colorable or row.ratio < ratio:
            continue
        for v in range(n):
            if is_colorable(row.graph.remove_vertex(v), h)[0]:
                from_scan.add((canonical_form(row.graph), v))
    assert {c for c, _ in from_batch} == {c for c, _ in from_scan}
    for r in batch.met:
        assert r.hypothesis_met and r.free


def test_edge_stability(C5, K3, K4):
    rep = edge_stability_measure(5, C5, [K4], K3, Fraction(1))
    assert rep.histogram == {0: 1} and rep.extremal_value == 40
    rep = edge_stability_measure(5, C5, [K4], K3, Fraction(0))
    assert rep.histogram == {0: 29} and rep.max_distance == 0
    rep = edge_stability_measure(5, C5, [K3], C5, Fraction(9, 10))
    assert rep.histogram == {0: 1}
    rep = edge_stability_measure(6, C5, [K4], K3, Fraction(0))
    assert rep.max_distance == max(brute_distance(g, K3) for g in all_graphs_filtered(6, [K4])) == 1
    assert rep.normalized_max == Fraction(1, 36)


def test_pentagon_blowup_at_five(C5, K3):
    res = extremal_search(5, C5, [K3])
    assert witness_includes(res, blowup(C5, [1] * 5))
