"""Graph moves that preserve (or predictably change) the associated link, and family generators.

Moves return new graphs; inputs are never modified.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable

from .braidword import BraidWord
from .planegraph import CheckerboardGraph, Dart, GraphError, reverse_all_edges, reverse_edges


class NotABridge(GraphError):
    pass


class NotACutVertex(GraphError):
    pass


class InvalidVertexCover(GraphError):
    pass


def reverse_bridge(g: CheckerboardGraph, eid: int) -> CheckerboardGraph:
    if not g.is_bridge(eid):
        raise NotABridge(f"edge {eid} is not a bridge")
    return reverse_edges(g, [eid])


def reverse_all(g: CheckerboardGraph) -> CheckerboardGraph:
    return reverse_all_edges(g)


def bridge_sides(g: CheckerboardGraph, eid: int) -> tuple[set[int], set[int]]:
    """Vertex sets of the tail side and head side of a bridge."""
    if not g.is_bridge(eid):
        raise NotABridge(f"edge {eid} is not a bridge")
    t, h = g.endpoints(eid)
    comps = g.components(removed_edges=[eid])
    tail_side = next(c for c in comps if t in c)
    head_side = next(c for c in comps if h in c)
    return tail_side, head_side


def reflect_component_and_reverse(g: CheckerboardGraph, eid: int, side: str = "head") -> CheckerboardGraph:
    """Reverse the bridge ``eid`` and mirror the component of ``g - eid`` on ``side`` ("head" or "tail")."""
    tail_side, head_side = bridge_sides(g, eid)
    flip = head_side if side == "head" else tail_side
    rotation = {}
    for v in g.vertices:
        rot = g.rotation(v)
        if v in flip:
            # cyclic orders only: reversing keeps the bridge in its corner
            rot = tuple(reversed(rot))
        rotation[v] = rot
    edges = [((e, h, t) if e == eid else (e, t, h)) for e, t, h in g.edges]
    # the bridge lies on the unbounded face before and after
    t, _ = g.endpoints(eid)
    return CheckerboardGraph(g.vertices, edges, rotation, (eid, t))


def _branches_at(g: CheckerboardGraph, v: int) -> list[list[int]]:
    """Contiguous blocks of the rotation at ``v``, one per component of ``g - v``."""
    comps = g.components(removed_vertices=[v])
    which = {}
    for i, comp in enumerate(comps):
        for w in comp:
            which[w] = i
    rot = g.rotation(v)
    labels = [which[g.other(e, v)] for e in rot]
    if len(set(labels)) < 2:
        raise NotACutVertex(f"vertex {v} is not a cut vertex")
    # start at a block boundary
    start = next(i for i in range(len(rot)) if labels[i] != labels[i - 1])
    rot = rot[start:] + rot[:start]
    labels = labels[start:] + labels[:start]
    blocks: list[list[int]] = []
    for e, lab in zip(rot, labels):
        if blocks and which[g.other(blocks[-1][-1], v)] == lab:
            blocks[-1].append(e)
        else:
            blocks.append([e])
    if len(blocks) != len(set(labels)):
        raise GraphError(f"branches at vertex {v} are not contiguous in the rotation")
    return blocks


def cut_vertex_mutants(g: CheckerboardGraph, v: int) -> list[CheckerboardGraph]:
    """All (k-1)! regluings of the k branches at ``v`` in different cyclic orders (first branch fixed)."""
    blocks = _branches_at(g, v)
    out = []
    first, rest = blocks[0], blocks[1:]
    for perm in permutations(range(len(rest))):
        order = [first] + [rest[i] for i in perm]
        rot = tuple(e for block in order for e in block)
        rotation = dict(g.rotations)
        rotation[v] = rot
        # the gap between the last block and the first is on the unbounded face
        outer: Dart = (order[0][0], v)
        out.append(CheckerboardGraph(g.vertices, g.edges, rotation, outer))
    return out


def tree_half_reverse(g: CheckerboardGraph, vertex_set: Iterable[int]) -> CheckerboardGraph:
    vs = set(vertex_set)
    if not g.is_tree():
        raise GraphError("half reversal is defined for checkerboard trees")
    for _, t, h in g.edges:
        if (t in vs) == (h in vs):
            raise InvalidVertexCover("the set must contain exactly one endpoint of every edge")
    rotation = {v: (tuple(reversed(g.rotation(v))) if v in vs else g.rotation(v)) for v in g.vertices}
    return CheckerboardGraph(g.vertices, g.edges, rotation, g.outer)


def bipartition(g: CheckerboardGraph) -> tuple[set[int], set[int]]:
    """Two colour classes of a tree (or any bipartite graph)."""
    colour = {}
    for comp in g.components():
        root = min(comp)
        colour[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for w in g.neighbours(v):
                if w not in colour:
                    colour[w] = 1 - colour[v]
                    stack.append(w)
    a = {v for v, c in colour.items() if c == 0}
    return a, set(g.vertices) - a


# -- generators ---------------------------------------------------------------

def torus_words(p: int, q: int) -> tuple[BraidWord, BraidWord]:
    """``(σ_1 ... σ_{p-1})^q`` and the alternative ``(σ_p ... σ_{p+q-1})(σ_{p-1} ... σ_{p+q-2}) ... (σ_1 ... σ_q)``."""
    if p < 2 or q < 2:
        raise ValueError("torus words need p, q >= 2")
    standard = BraidWord.of(list(range(1, p)) * q, p)
    alt = []
    for start in range(p, 0, -1):
        alt.extend(range(start, start + q))
    return standard, BraidWord.of(alt, p + q)


def conjugate_family(n: int) -> tuple[BraidWord, BraidWord]:
    """``σ_1 σ_2 σ_1^n σ_2 σ_1`` (a cycle) and its conjugate ``σ_1^2 σ_2 σ_1^n σ_2`` (a D_{n+2} tree)."""
    if n < 1:
        raise ValueError("n must be positive")
    cyc = [1, 2] + [1] * n + [2, 1]
    tree = [1, 1, 2] + [1] * n + [2]
    return BraidWord.of(cyc, 3), BraidWord.of(tree, 3)


def cycle_graph(n: int, colour: str = "black") -> CheckerboardGraph:
    """Coherently oriented n-cycle ``1 -> 2 -> ... -> n -> 1`` whose bounded face has ``colour``."""
    if n < 3:
        raise ValueError("a cycle needs at least three vertices")
    verts = list(range(1, n + 1))
    edges = [(i, i, i % n + 1) for i in verts]
    rotation = {v: (v - 1 if v > 1 else n, v) for v in verts}
    # black: bounded walk follows the edges, so the outer dart runs against edge 1
    outer = (1, 2) if colour == "black" else (1, 1)
    return CheckerboardGraph(verts, edges, rotation, outer)


def path_graph(n: int, alternating: bool = False) -> CheckerboardGraph:
    """Path ``1 - 2 - ... - n``, all edges pointing right, or alternating sink/source."""
    if n < 1:
        raise ValueError("a path needs at least one vertex")
    verts = list(range(1, n + 1))
    edges = []
    for i in range(1, n):
        if alternating and i % 2 == 0:
            edges.append((i, i + 1, i))
        else:
            edges.append((i, i, i + 1))
    rotation = {v: tuple(e for e in (v - 1, v) if 1 <= e < n) for v in verts}
    return CheckerboardGraph(verts, edges, rotation, None)


def star(k: int, outward: bool = True) -> CheckerboardGraph:
    """Centre 0 with leaves ``1..k`` placed counterclockwise."""
    if k < 1:
        raise ValueError("a star needs at least one leaf")
    edges = [(i, 0, i) if outward else (i, i, 0) for i in range(1, k + 1)]
    rotation = {0: tuple(range(1, k + 1))}
    rotation.update({i: (i,) for i in range(1, k + 1)})
    return CheckerboardGraph(range(k + 1), edges, rotation, None)


def plumb_along_bridge(g1: CheckerboardGraph, v1: int, g2: CheckerboardGraph, v2: int, reverse: bool = False) -> CheckerboardGraph:
    """Join two connected graphs by a new bridge from ``v1`` to ``v2``, inserted into unbounded corners.

    Vertex and edge ids of ``g2`` are shifted past those of ``g1``.
    """
    vshift = max(g1.vertices) + 1 - min(g2.vertices)
    eshift = max([e for e, _, _ in g1.edges] + [0]) + 1 - min([e for e, _, _ in g2.edges] + [1])
    h2 = g2.relabeled({v: v + vshift for v in g2.vertices}, {e: e + eshift for e, _, _ in g2.edges})
    w2 = v2 + vshift
    bridge = max([e for e, _, _ in g1.edges] + [e for e, _, _ in h2.edges] + [0]) + 1
    rotation = dict(g1.rotations)
    rotation.update(h2.rotations)
    for graph, v in ((g1, v1), (h2, w2)):
        rotation[v] = _insert_in_outer_corner(graph, v, bridge)
    edges = g1.edges + h2.edges + [((bridge, w2, v1) if reverse else (bridge, v1, w2))]
    return CheckerboardGraph(list(g1.vertices) + list(h2.vertices), edges, rotation, (bridge, v1))


def _insert_in_outer_corner(g: CheckerboardGraph, v: int, new_edge: int) -> tuple[int, ...]:
    rot = g.rotation(v)
    if len(rot) == 0:
        return (new_edge,)
    outer = g.outer_darts()
    # an outgoing outer dart d = (e, v) has its corner just before e in the rotation
    for i, e in enumerate(rot):
        if (e, v) in outer:
            return rot[:i] + (new_edge,) + rot[i:]
    raise GraphError(f"vertex {v} is not on the unbounded face")
