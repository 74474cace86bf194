import pytest

from checkerboard.braidword import linking_graph
from checkerboard.coxeter import InvalidGraph
from checkerboard.invariants import components_from_monodromy, monodromy_matrix
from checkerboard.moves import cycle_graph, path_graph, star
from checkerboard.openbook import boundary_count, build_surface, destabilization_sequence, summarize, surface_summary
from checkerboard.oracle import component_count
from checkerboard.planegraph import CheckerboardGraph, validate
from conftest import random_prime_words

POINT = CheckerboardGraph([1], [], {1: []})
ONE_EDGE = CheckerboardGraph([1, 2], [(1, 1, 2)], {1: [1], 2: [1]})


def test_build_surface_examples():
    s = build_surface(POINT)
    assert (len(s.annuli), len(s.rectangles), len(s.caps)) == (1, 0, 0)
    s = build_surface(ONE_EDGE)
    assert (len(s.annuli), len(s.rectangles), len(s.caps)) == (2, 1, 0)
    assert s.rectangles[0].sign == 1
    s = build_surface(cycle_graph(3))
    assert (len(s.annuli), len(s.rectangles)) == (3, 3)
    assert [c.colour for c in s.caps] == ["black"]


def test_boundary_count_examples():
    assert boundary_count(build_surface(POINT)) == 2
    assert boundary_count(build_surface(ONE_EDGE)) == 1
    assert boundary_count(build_surface(linking_graph("1 2 1 2 1"))) == 2


def test_summary_examples():
    assert summarize(build_surface(ONE_EDGE)).to_json() == {
        "euler_characteristic": -1, "boundary_components": 1, "betti1": 2, "genus": 1, "link_components": 1,
    }
    for n in range(1, 7):
        s = surface_summary(path_graph(n))
        assert (s.euler_characteristic, s.betti1) == (1 - n, n)
    s = surface_summary(cycle_graph(3))
    assert (s.euler_characteristic, s.betti1) == (-2, 3)


def test_disconnected_or_invalid_graphs_are_rejected():
    with pytest.raises(InvalidGraph):
        build_surface(CheckerboardGraph([1, 2], [], {1: [], 2: []}))


def test_boundary_matches_permutation_cycles():
    for w in random_prime_words(300, seed=21):
        assert surface_summary(linking_graph(w)).boundary_components == component_count(w)


def test_boundary_matches_monodromy_fixed_space(small_graphs):
    for g in small_graphs:
        mu = surface_summary(g).boundary_components
        assert mu == components_from_monodromy(monodromy_matrix(g))


def test_destabilization_examples():
    assert destabilization_sequence(ONE_EDGE) == (1, 2)
    order = destabilization_sequence(star(4))
    # the centre goes once only one leaf is left
    assert 0 in order[-2:] and sorted(order) == [0, 1, 2, 3, 4]
    assert sorted(destabilization_sequence(cycle_graph(3))) == [1, 2, 3]


def test_destabilization_prefixes_stay_checkerboard(small_graphs):
    for g in small_graphs:
        order = destabilization_sequence(g)
        assert sorted(order) == sorted(g.vertices)
        cur = g
        for v in order[:-1]:
            cur = cur.without_vertex(v)
            assert cur.is_connected() and validate(cur).valid
