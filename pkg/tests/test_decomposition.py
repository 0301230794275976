import pytest

from pafp import PafpInstance, normalize
from pafp.decomposition import (
    PathDecomposition,
    UndirectedGraph,
    build_bfs_bags,
    reachable_union_graph,
    union_constraint_graph,
    verify_decomposition,
    width_bound,
)
from pafp.generators import random_dag_instance, random_digraph_instance
from pafp.layering import layer_profile, union_digraph

from .conftest import FIG1_ARCS, S, closure


def test_fig1_union_constraint_graph(fig1):
    g = union_constraint_graph(fig1)
    assert len(g.edges) == 8
    assert g.vertices == frozenset(range(1, 7))


def test_no_pairs_gives_underlying_graph(fig1_core):
    g = union_constraint_graph(fig1_core)
    assert g.edges == {frozenset(a) for a in FIG1_ARCS}


def test_restrict_to_source(fig1):
    g = union_constraint_graph(fig1, {S})
    assert g.vertices == {S}
    assert g.edges == frozenset()


def test_fig1_bags(fig1):
    decomp = build_bfs_bags(fig1)
    assert verify_decomposition(reachable_union_graph(fig1), decomp) is None
    assert all(len(bag) <= 6 for bag in decomp.bags)
    assert decomp.width <= 5
    assert width_bound(fig1) == 5


def test_normalized_fig1_bags(fig1):
    inst = normalize(fig1).instance
    decomp = build_bfs_bags(inst)
    assert verify_decomposition(reachable_union_graph(inst), decomp) is None
    assert width_bound(inst) == 19
    assert decomp.width <= 19


def test_single_vertex_reach():
    inst = PafpInstance.build(2, [], 1, 2)
    decomp = build_bfs_bags(inst)
    assert decomp.bags == (frozenset({1}),)
    assert decomp.width == 0
    assert verify_decomposition(reachable_union_graph(inst), decomp) is None


def test_deleted_bag_reported(fig1):
    decomp = build_bfs_bags(fig1)
    graph = reachable_union_graph(fig1)
    assert decomp.bags == ({1, 2, 3, 4}, {2, 3, 4, 5, 6}, {5, 6})
    assert "vertex 1" in verify_decomposition(graph, PathDecomposition(decomp.bags[1:]))
    assert "edge {2,5}" in verify_decomposition(graph, PathDecomposition(decomp.bags[::2]))
    # the last bag is redundant here
    assert verify_decomposition(graph, PathDecomposition(decomp.bags[:2])) is None


def test_violation_messages():
    graph = UndirectedGraph(frozenset({1, 2, 3}), frozenset({frozenset({1, 2}), frozenset({2, 3})}))
    assert "vertex 3" in verify_decomposition(graph, PathDecomposition((frozenset({1, 2}),)))
    gap = PathDecomposition((frozenset({1, 2}), frozenset({3}), frozenset({2, 3})))
    assert "contiguous" in verify_decomposition(graph, gap)
    missing_edge = PathDecomposition((frozenset({1, 2}), frozenset({3})))
    assert "edge {2,3}" in verify_decomposition(graph, missing_edge)
    stray = PathDecomposition((frozenset({1, 2, 3, 4}),))
    assert "vertex 4" in verify_decomposition(graph, stray)


def test_empty_graph_empty_bags():
    empty = UndirectedGraph(frozenset(), frozenset())
    assert verify_decomposition(empty, PathDecomposition(())) is None
    assert PathDecomposition(()).width == -1


def _check(inst):
    decomp = build_bfs_bags(inst)
    assert verify_decomposition(reachable_union_graph(inst), decomp) is None
    assert decomp.width <= width_bound(inst)


@pytest.mark.parametrize("seed", range(150))
def test_random_dags(seed):
    inst = random_dag_instance(2 + seed % 10, 0.3, seed % 7, seed)
    _check(inst)
    _check(normalize(inst).instance)


@pytest.mark.parametrize("seed", range(100))
def test_random_digraphs_with_cycles(seed):
    _check(random_digraph_instance(3 + seed % 8, 0.25, seed % 6, seed))


@pytest.mark.parametrize("seed", range(100))
def test_reach_monotone_and_induced(seed):
    inst = random_digraph_instance(3 + seed % 8, 0.2, seed % 6, seed)
    r_g = layer_profile(inst.graph, inst.source).reachable
    h = union_digraph(inst)
    r_h = layer_profile(h, inst.source).reachable
    assert r_g <= r_h
    # independent check of R_H via transitive closure
    reach = closure(h.n, h.arcs)
    assert r_h == {inst.source} | {v for v in h.vertices if reach[inst.source - 1, v - 1]}
    big = reachable_union_graph(inst)
    small = union_constraint_graph(inst, r_g)
    assert small.edges == {e for e in big.edges if e <= r_g}
