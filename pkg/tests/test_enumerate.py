import pytest

from oddturan.canon import canonical_form
from oddturan.enumerate import (CLASS_COUNTS, OrderCapExceeded, all_graphs, all_graphs_filtered,
                                labeled_graphs, random_graphs)
from oddturan.graph import complete_graph, cycle_graph, turan_graph
from oddturan.hom import is_free


def labeled_dedup(n, family=()):
    reps = {}
    for g in labeled_graphs(n):
        if is_free(g, family):
            reps.setdefault(canonical_form(g), g)
    return set(reps)


@pytest.mark.parametrize("n", range(0, 7))
def test_counts_match_labeled_dedup(n):
    certs = [canonical_form(g) for g in all_graphs(n)]
    assert len(certs) == len(set(certs)) == CLASS_COUNTS[n]
    if n <= 6:
        assert set(certs) == labeled_dedup(n)


def test_examples():
    assert len(list(all_graphs(1))) == 1
    assert len(list(all_graphs(4))) == 11
    assert len(list(all_graphs(5))) == 34


def test_n7_no_duplicates():
    graphs = list(all_graphs(7))
    assert len({canonical_form(g) for g in graphs}) == len(graphs) == 1044


def test_filtered_triangle_free_on_three():
    graphs = list(all_graphs_filtered(3, [complete_graph(3)]))
    assert sorted(g.edge_count for g in graphs) == [0, 1, 2]


def test_filtered_no_edges():
    graphs = list(all_graphs_filtered(4, [complete_graph(2)]))
    assert len(graphs) == 1 and graphs[0].edge_count == 0


@pytest.mark.parametrize("n, family", [
    (5, [complete_graph(4)]),
    (6, [complete_graph(3)]),
    (6, [cycle_graph(5)]),
    (5, [complete_graph(3), cycle_graph(5)]),
])
def test_filtered_matches_oracle(n, family):
    graphs = list(all_graphs_filtered(n, family))
    certs = {canonical_form(g) for g in graphs}
    assert len(certs) == len(graphs)
    assert all(is_free(g, family) for g in graphs)
    assert certs == labeled_dedup(n, family)


def test_k4_free_on_five_contains_turan():
    certs = {canonical_form(g) for g in all_graphs_filtered(5, [complete_graph(4)])}
    assert len(certs) == 29  # 34 minus K4 plus a vertex of degree 0..4
    assert canonical_form(turan_graph(5, 3)) in certs


def test_cap():
    with pytest.raises(OrderCapExceeded):
        all_graphs(10)
    with pytest.raises(OrderCapExceeded):
        all_graphs_filtered(7, [], cap=6)


def test_random_graphs():
    assert all(g.edge_count == 0 for g in random_graphs(6, 0.0, seed=1, count=20))
    assert all(g.edge_count == 15 for g in random_graphs(6, 1.0, seed=1, count=20))
    a = list(random_graphs(8, 0.4, seed=42, count=30))
    b = list(random_graphs(8, 0.4, seed=42, count=30))
    assert a == b
    assert a != list(random_graphs(8, 0.4, seed=43, count=30))
    with pytest.raises(ValueError):
        random_graphs(5, 1.5, seed=0, count=1)
