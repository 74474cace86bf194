import json
import random
from collections import defaultdict

import networkx as nx
import pytest
from networkx.algorithms.isomorphism import DiGraphMatcher

from checkerboard.braidword import BraidWord, linking_graph, linking_graph_with_bricks
from checkerboard.catalog import checkerboard_graphs, plane_skeletons
from checkerboard.moves import cycle_graph, path_graph, star
from checkerboard.planegraph import (
    CheckerboardGraph, Condition1Violation, EmptyGraph, GraphError, canonical_code, colouring, faces, find_witness,
    mirror, reverse_all_edges, to_dot, topological_order, validate, verify_witness,
)
from conftest import graphs_up_to, random_prime_words

ONE_EDGE = CheckerboardGraph([1, 2], [(1, 1, 2)], {1: [1], 2: [1]})


def shuffled(g, rng):
    """Same plane graph with fresh vertex and edge ids and a different outer dart on the same face."""
    vs = list(g.vertices)
    new = rng.sample(range(100, 100 + 3 * len(vs)), len(vs))
    vmap = dict(zip(vs, new))
    es = [e for e, _, _ in g.edges]
    emap = dict(zip(es, rng.sample(range(500, 500 + 3 * len(es) + 1), len(es))))
    h = g.relabeled(vmap, emap)
    if g.outer_walk():
        d = rng.choice(g.outer_walk())
        h = h.with_outer((emap[d[0]], vmap[d[1]]))
    return h


def dart_graph(g):
    """Combinatorial map as a coloured digraph: plane isomorphism becomes digraph isomorphism."""
    dg = nx.DiGraph()
    outer = g.outer_darts()
    for d in g.darts():
        dg.add_node(d, fwd=g.is_forward(d), outer=d in outer)
    for d in g.darts():
        dg.add_edge(d, g.succ(d), kind="succ")
        dg.add_edge(d, g.twin(d), kind="twin")
    return dg


def nx_plane_isomorphic(a, b, oriented=True):
    if a.n_edges() != b.n_edges() or a.n_vertices() != b.n_vertices():
        return False
    if a.n_edges() == 0:
        return True
    def nm(x, y):
        return x["outer"] == y["outer"] and (not oriented or x["fwd"] == y["fwd"])
    # in unoriented mode a dart may map to either direction, so forward flags are ignored
    gm = DiGraphMatcher(dart_graph(a), dart_graph(b), node_match=nm, edge_match=lambda x, y: x["kind"] == y["kind"])
    return gm.is_isomorphic()


# -- structure -------------------------------------------------------------------

@pytest.mark.parametrize("edges, rotation, outer", [
    ([(1, 1, 1)], {1: [1, 1]}, None),
    ([(1, 1, 2), (2, 2, 1)], {1: [1, 2], 2: [1, 2]}, None),
    ([(1, 1, 2)], {1: [], 2: [1]}, None),
    ([(1, 1, 2)], {1: [1], 2: [1]}, (1, 3)),
    ([(1, 1, 5)], {1: [1], 2: []}, None),
])
def test_structural_errors(edges, rotation, outer):
    with pytest.raises(GraphError):
        CheckerboardGraph([1, 2], edges, rotation, outer)


# -- faces -----------------------------------------------------------------------

def test_faces_of_small_graphs():
    fs = faces(ONE_EDGE)
    assert len(fs) == 1 and len(fs[0].walk) == 2 and not fs[0].bounded
    tri = cycle_graph(3)
    lengths = sorted((f.bounded, len(f.walk)) for f in faces(tri))
    assert lengths == [(False, 3), (True, 3)]
    fs = faces(star(4))
    assert len(fs) == 1 and len(fs[0].walk) == 8


def test_every_dart_in_one_face_and_euler(small_graphs):
    for g in small_graphs:
        walks = g.face_walks()
        darts = [d for w in walks for d in w]
        assert sorted(darts) == sorted(g.darts())
        f = len(walks) if g.n_edges() else 1
        assert g.n_vertices() - g.n_edges() + f == 2


def test_triangle_colours():
    assert list(colouring(cycle_graph(3, "black")).values()) == ["black"]
    assert list(colouring(reverse_all_edges(cycle_graph(3, "black"))).values()) == ["white"]
    assert list(colouring(cycle_graph(3, "white")).values()) == ["white"]


def test_black_face_runs_clockwise_in_the_drawing():
    # bounded walks keep the face on their right, so black means clockwise edges
    g, bricks = linking_graph_with_bricks("1 2 1 2 1")
    pos = {v: b.position for v, b in bricks.items()}
    (walk, colour), = colouring(g).items()
    arcs = [(t, h) for _, t, h in g.edges]
    area = 0
    for t, h in arcs:
        (x1, y1), (x2, y2) = pos[t], pos[h]
        area += x1 * (-y2) - x2 * (-y1)
    clockwise = area < 0
    assert clockwise == (colour == "black")


def test_incoherent_face_is_rejected():
    g = CheckerboardGraph([1, 2, 3], [(1, 1, 2), (2, 2, 3), (3, 1, 3)], {1: [3, 1], 2: [1, 2], 3: [2, 3]}, (1, 2))
    assert not validate(g).condition1
    with pytest.raises(Condition1Violation):
        colouring(g)


def test_chord_violates_condition_one():
    # the square 1-2-3-4 with chord 1-3 drawn inside: the outer 4-cycle face has a chord
    g = CheckerboardGraph(
        [1, 2, 3, 4],
        [(1, 1, 2), (2, 2, 3), (3, 3, 4), (4, 4, 1), (5, 1, 3)],
        {1: [4, 5, 1], 2: [1, 2], 3: [2, 5, 3], 4: [3, 4]},
        (1, 2),
    )
    rep = validate(g)
    assert not rep.condition1 and rep.face_problems


# -- validation -------------------------------------------------------------------

def test_trees_valid_with_empty_witness():
    for g in (ONE_EDGE, path_graph(5), path_graph(5, alternating=True), star(4)):
        rep = validate(g)
        assert rep.valid and rep.witness == ()


def test_triangle_witness_is_one_edge():
    rep = validate(cycle_graph(3))
    assert rep.valid and len(rep.witness) == 1
    for e in (1, 2, 3):
        assert verify_witness(cycle_graph(3), [e])


def test_slope_selection_is_a_witness():
    for w in random_prime_words(150, seed=4):
        g, bricks = linking_graph_with_bricks(w)
        positive = []
        for eid, t, h in g.edges:
            (x1, y1), (x2, y2) = bricks[t].position, bricks[h].position
            if x1 != x2 and -(y2 - y1) / (x2 - x1) > 0:
                positive.append(eid)
        assert verify_witness(g, positive)


def test_witness_reversal_is_acyclic(small_graphs):
    for g in small_graphs:
        sel = set(find_witness(g))
        arcs = [((h, t) if e in sel else (t, h)) for e, t, h in g.edges]
        assert topological_order(g.vertices, arcs) is not None


def test_random_linking_graphs_validate():
    rng = random.Random(8)
    for _ in range(1500):
        n = rng.randint(2, 6)
        w = BraidWord.of([rng.randint(1, n - 1) for _ in range(rng.randint(1, 16))], n)
        assert validate(linking_graph(w)).valid


def test_disconnected_linking_graph_has_an_outer_dart_per_component():
    g = linking_graph("1 1 1 2 2 2")
    assert len(g.components()) == 2 and len(g.outer_marks) == 2
    assert g.bounded_walks() == [] and validate(g).valid
    h = CheckerboardGraph.loads(g.dumps())
    assert h == g and isinstance(g.to_json()["outer"], list)


# -- codes -------------------------------------------------------------------------

def test_code_examples():
    other = CheckerboardGraph([7, 9], [(4, 7, 9)], {7: [4], 9: [4]})
    assert canonical_code(ONE_EDGE) == canonical_code(other)
    rev = reverse_all_edges(ONE_EDGE)
    assert canonical_code(rev, "unoriented") == canonical_code(ONE_EDGE, "unoriented")
    assert canonical_code(rev, "oriented", "also-mirror") == canonical_code(ONE_EDGE, "oriented", "also-mirror")
    with pytest.raises(EmptyGraph):
        canonical_code(CheckerboardGraph([], [], {}))


def test_same_unoriented_tree_different_orientation():
    a = linking_graph("1 1 1 2 2 1 1 2 3 2 2 2 3")
    b = linking_graph("1 1 1 2 2 1 1 3 2 4 3 3 3 4")
    assert canonical_code(a, "unoriented", "also-mirror") == canonical_code(b, "unoriented", "also-mirror")
    assert canonical_code(a, "oriented", "also-mirror") != canonical_code(b, "oriented", "also-mirror")


def test_code_invariant_under_relabelling(small_graphs):
    rng = random.Random(1)
    for g in small_graphs:
        assert canonical_code(shuffled(g, rng)) == canonical_code(g)


def test_code_matches_brute_force_isomorphism_up_to_six_vertices():
    buckets = defaultdict(list)
    for g in graphs_up_to(6):
        key = (g.n_vertices(), g.n_edges(), tuple(sorted(g.degree(v) for v in g.vertices)), len(g.face_walks()))
        buckets[key].append(g)
    pairs = 0
    for group in buckets.values():
        for i, a in enumerate(group):
            for b in group[i + 1:]:
                assert nx_plane_isomorphic(a, b) == (canonical_code(a) == canonical_code(b))
                pairs += 1
    assert pairs > 1000


@pytest.mark.parametrize("n", [7, 8])
def test_distinct_unoriented_codes_are_not_isomorphic(n):
    rng = random.Random(n)
    skel = plane_skeletons(n)
    buckets = defaultdict(list)
    for g in skel:
        buckets[(g.n_edges(), tuple(sorted(g.degree(v) for v in g.vertices)), len(g.face_walks()))].append(g)
    checked = 0
    groups = [grp for grp in buckets.values() if len(grp) > 1]
    for _ in range(150):
        a, b = rng.sample(rng.choice(groups), 2)
        assert not nx_plane_isomorphic(a, b, oriented=False)
        assert nx_plane_isomorphic(a, shuffled(a, rng), oriented=False)
        assert canonical_code(shuffled(a, rng), "unoriented") == canonical_code(a, "unoriented")
        checked += 1
    assert checked == 150


def test_mirror_and_reversal():
    for g in graphs_up_to(5):
        assert mirror(mirror(g)) == g
        assert reverse_all_edges(reverse_all_edges(g)) == g
    assert sorted(path_graph(6).bridges()) == [1, 2, 3, 4, 5]


# -- serialization ----------------------------------------------------------------------

def test_json_round_trip(small_graphs):
    for g in small_graphs:
        h = CheckerboardGraph.from_json(json.loads(json.dumps(g.to_json())))
        assert h == g and canonical_code(h) == canonical_code(g)


def test_json_schema_shape():
    data = ONE_EDGE.to_json()
    assert data == {
        "vertices": [{"id": 1, "rotation": [{"edge": 1, "dir": "fwd"}]}, {"id": 2, "rotation": [{"edge": 1, "dir": "rev"}]}],
        "edges": [{"id": 1, "tail": 1, "head": 2}],
        "outer": {"edge": 1, "dir": "fwd"},
    }


def test_dot_export_mentions_slopes_and_faces():
    g, bricks = linking_graph_with_bricks("1 2 1 2 1")
    dot = to_dot(g, {v: b.position for v, b in bricks.items()})
    assert dot.startswith("digraph") and "slope" in dot and "colour" in dot
