from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.carving.bounds import tw_bounds_from_cw
from src.carving.decomposition import (
    CarvingDecomposition,
    CarvingError,
    SolverCapExceeded,
    is_bond,
)
from src.carving.exact import exact_carving_width
from src.carving.heuristic import caterpillar, heuristic_carving
from src.carving.oracle import binary_tree_splits, brute_force_carving_width, graph_census
from src.carving.treewidth import exact_treewidth
from src.diagram.embedding import subdivide_to_simple
from src.diagram.model import Diagram

"""Unit tests for carving decompositions, the exact solver and its references."""

CENSUS = list(graph_census(5))


@pytest.mark.parametrize(("n", "count"), [(1, 1), (2, 1), (3, 1), (4, 3), (5, 15), (6, 105)])
def test_binary_tree_counts(n: int, count: int) -> None:
    # (2n-5)!! unrooted binary trees on n labelled leaves
    assert len(binary_tree_splits(n)) == count


@pytest.mark.parametrize(
    ("graph", "expected"),
    [
        (nx.cycle_graph(6), 2),
        (nx.path_graph(4), 2),
        (nx.star_graph(3), 3),
        (nx.complete_graph(4), 4),
        (nx.complete_graph(5), 6),
    ],
)
def test_exact_width_known_graphs(graph: nx.Graph, expected: int) -> None:
    w, dec = exact_carving_width(graph)
    assert w == expected
    assert dec.width == expected


def test_exact_witness_is_deterministic() -> None:
    for g in [*CENSUS, nx.complete_graph(5), nx.petersen_graph()]:
        w1, d1 = exact_carving_width(g)
        w2, d2 = exact_carving_width(g.copy())
        assert w1 == w2
        assert d1.to_dict() == d2.to_dict()


def test_exact_returns_heuristic_witness_when_optimal() -> None:
    tree = nx.balanced_tree(2, 3)
    w, dec = exact_carving_width(tree)
    assert w == heuristic_carving(tree).width
    assert dec.to_dict() == heuristic_carving(tree).to_dict()


def test_exact_matches_oracle_on_census() -> None:
    for g in CENSUS:
        w, dec = exact_carving_width(g)
        assert w == brute_force_carving_width(g), sorted(g.edges)
        assert dec.width == w


def test_bond_width_matches_oracle_on_biconnected_census() -> None:
    for g in CENSUS:
        if g.number_of_nodes() >= 3 and nx.is_biconnected(g):
            w, dec = exact_carving_width(g, bond_only=True)
            assert w == brute_force_carving_width(g, bond_only=True)
            assert is_bond(dec)


def test_trefoil_exact_width_matches_oracle(trefoil: Diagram) -> None:
    sg = subdivide_to_simple(trefoil)
    w, dec = exact_carving_width(sg, bond_only=True)
    assert w == brute_force_carving_width(sg, bond_only=True)
    assert is_bond(dec)
    assert dec.leaf_count == sg.vertex_count
    # every vertex of degree 4 forces width >= 4
    assert w >= 4


def test_exact_cap_exceeded() -> None:
    with pytest.raises(SolverCapExceeded, match="cap is 4"):
        exact_carving_width(nx.cycle_graph(6), cap=4)


def test_bond_rejects_cut_vertex() -> None:
    bowtie = nx.Graph([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    with pytest.raises(CarvingError, match="cut vertex"):
        exact_carving_width(bowtie, bond_only=True)


def test_disconnected_rejected() -> None:
    g = nx.Graph([(0, 1), (2, 3)])
    with pytest.raises(CarvingError, match="not connected"):
        heuristic_carving(g)
    with pytest.raises(CarvingError, match="not connected"):
        exact_carving_width(g)


def test_heuristic_is_upper_bound() -> None:
    for g in CENSUS:
        assert heuristic_carving(g).width >= brute_force_carving_width(g)


def test_heuristic_exact_on_trees() -> None:
    tree = nx.balanced_tree(2, 3)
    assert heuristic_carving(tree).width == max(d for _, d in tree.degree)


def test_caterpillar_leaf_order() -> None:
    g = nx.cycle_graph(5)
    dec = caterpillar([0, 1, 2, 3, 4], list(g.edges), 5)
    assert dec.leaf_count == 5
    assert dec.width == 2


def test_middle_sets_are_cuts() -> None:
    g = nx.complete_graph(4)
    _, dec = exact_carving_width(g)
    for c in dec.tree_edges:
        side = dec.side(c)
        cut = {i for i, (u, v) in enumerate(dec.graph_edges) if (u in side) != (v in side)}
        assert dec.middle(c) == frozenset(cut)


def test_dict_round_trip_keeps_width() -> None:
    _, dec = exact_carving_width(nx.complete_graph(5))
    again = CarvingDecomposition.from_dict(dec.to_dict())
    assert again.width == dec.width
    assert again.parent == dec.parent


def test_from_dict_rejects_foreign_schema() -> None:
    with pytest.raises(CarvingError, match="unsupported"):
        CarvingDecomposition.from_dict({"schema": "carving/v0"})


@pytest.mark.parametrize(("graph", "tw"), [(nx.cycle_graph(5), 2), (nx.complete_graph(5), 4)])
def test_exact_treewidth(graph: nx.Graph, tw: int) -> None:
    assert exact_treewidth(graph) == tw


def test_tw_interval_contains_true_treewidth() -> None:
    for g in CENSUS:
        if g.number_of_nodes() < 3:
            continue
        cw = brute_force_carving_width(g)
        d = max(deg for _, deg in g.degree)
        assert tw_bounds_from_cw(cw, d).contains(exact_treewidth(g))


def test_tw_bounds_reject_zero() -> None:
    with pytest.raises(CarvingError):
        tw_bounds_from_cw(0, 4)


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=3, max_value=8), st.integers(min_value=0, max_value=2**20))
def test_exact_never_exceeds_heuristic(n: int, seed: int) -> None:
    g = nx.gnp_random_graph(n, 0.6, seed=seed)
    if not nx.is_connected(g):
        return
    w, _ = exact_carving_width(g)
    assert w <= heuristic_carving(g).width
