import random

import networkx as nx
import pytest

from checkerboard.catalog import (
    checkerboard_graphs, checkerboard_trees, plane_skeletons, plane_trees, random_graph, random_tree, tree_shape,
)
from checkerboard.moves import cycle_graph, path_graph, star
from checkerboard.planegraph import canonical_code, validate


# unlabelled plane trees and free trees by vertex count, from the standard tables
PLANE_TREES = [1, 1, 1, 2, 3, 6, 14, 34]
FREE_TREES = [1, 1, 1, 2, 3, 6, 11, 23]


@pytest.mark.parametrize("n", range(1, 9))
def test_plane_tree_counts(n):
    assert len(plane_trees(n)) == PLANE_TREES[n - 1]


@pytest.mark.parametrize("n", range(1, 9))
def test_tree_shapes_count_free_trees(n):
    assert len({tree_shape(t) for t in plane_trees(n)}) == FREE_TREES[n - 1]


def test_tree_shape_agrees_with_networkx():
    for n in range(2, 9):
        trees = plane_trees(n)
        for a in trees:
            for b in trees:
                ga = nx.Graph([(t, h) for _, t, h in a.edges])
                gb = nx.Graph([(t, h) for _, t, h in b.edges])
                assert (tree_shape(a) == tree_shape(b)) == nx.is_isomorphic(ga, gb)


def test_tree_shape_rejects_cycles():
    with pytest.raises(ValueError):
        tree_shape(cycle_graph(3))
    assert tree_shape(path_graph(3)) == tree_shape(star(2))


def test_frozen_counts():
    assert [len(checkerboard_trees(n)) for n in range(1, 7)] == [1, 1, 3, 8, 32, 136]
    assert [len(plane_skeletons(n)) for n in range(1, 7)] == [1, 1, 2, 5, 15, 71]
    assert [len(checkerboard_graphs(n)) for n in range(1, 7)] == [1, 1, 5, 15, 79, 509]


def test_catalog_entries_are_valid_and_distinct():
    for n in range(1, 7):
        gs = checkerboard_graphs(n)
        assert all(validate(g).valid and g.is_connected() and g.n_vertices() == n for g in gs)
        assert len({canonical_code(g) for g in gs}) == len(gs)


def test_oriented_tree_count_by_burnside():
    # orbits of 2^(n-1) edge orientations under the plane symmetries of each tree
    for n in range(2, 7):
        total = 0
        for t in plane_trees(n):
            codes = set()
            for mask in range(2 ** (n - 1)):
                edges = [((e, h, v) if mask >> i & 1 else (e, v, h)) for i, (e, v, h) in enumerate(t.edges)]
                from checkerboard.planegraph import CheckerboardGraph

                codes.add(canonical_code(CheckerboardGraph(t.vertices, edges, t.rotations, t.outer)))
            total += len(codes)
        assert total == len(checkerboard_trees(n))


def test_random_generators_are_valid():
    rng = random.Random(2)
    for _ in range(200):
        n = rng.randint(1, 9)
        t = random_tree(n, rng)
        assert t.is_tree() and t.n_vertices() == n
        g = random_graph(n, rng)
        assert validate(g).valid and g.is_connected() and g.n_vertices() == n
