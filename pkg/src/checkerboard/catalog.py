"""Exhaustive and random plane graphs for exercising the pipeline.

Skeletons are plane graphs with no orientation yet. Every valid checkerboard
graph arises from a plane spanning tree by repeatedly drawing a chord through
the unbounded face, so the exhaustive lists grow trees leaf by leaf and then
close them under chord insertion. Intermediate graphs whose bounded faces are
not induced cycles, or cannot be coloured alternately, are pruned: later
chords never repair them.
"""

from __future__ import annotations

import random
from itertools import product
from typing import Iterator

from .planegraph import CheckerboardGraph, Dart, canonical_code, validate


def _corners(g: CheckerboardGraph, v: int) -> range:
    return range(max(1, g.degree(v)))


def _add_leaf(g: CheckerboardGraph, v: int, pos: int) -> CheckerboardGraph:
    new_v = max(g.vertices) + 1
    new_e = max((e for e, _, _ in g.edges), default=0) + 1
    rotation = dict(g.rotations)
    rot = g.rotation(v)
    rotation[v] = rot[:pos] + (new_e,) + rot[pos:]
    rotation[new_v] = (new_e,)
    return CheckerboardGraph(list(g.vertices) + [new_v], g.edges + [(new_e, v, new_v)], rotation, (new_e, v))


def plane_trees(n: int) -> list[CheckerboardGraph]:
    """Plane trees on ``n`` vertices up to orientation-preserving plane isomorphism, edges unoriented."""
    level = [CheckerboardGraph([1], [], {1: ()})]
    for _ in range(n - 1):
        seen: dict[bytes, CheckerboardGraph] = {}
        for g in level:
            for v in g.vertices:
                for pos in _corners(g, v):
                    h = _add_leaf(g, v, pos)
                    seen.setdefault(canonical_code(h, "unoriented"), h)
        level = list(seen.values())
    return level


def _face_pattern_ok(g: CheckerboardGraph) -> bool:
    """Bounded faces are induced cycles and admit an alternating colouring."""
    walks = g.bounded_walks()
    for walk in walks:
        verts = [d[1] for d in walk]
        if len(set(verts)) != len(verts) or len(verts) < 3:
            return False
        vs = set(verts)
        boundary = {d[0] for d in walk}
        for eid, t, h in g.edges:
            if t in vs and h in vs and eid not in boundary:
                return False
    return _face_colour_classes(g) is not None


def _face_colour_classes(g: CheckerboardGraph):
    """Group bounded faces into edge-connected classes with a parity per face, or None if odd."""
    walks = g.bounded_walks()
    dart_face = {d: i for i, w in enumerate(walks) for d in w}
    parity: dict[int, int] = {}
    classes = []
    for start in range(len(walks)):
        if start in parity:
            continue
        parity[start] = 0
        members = [start]
        stack = [start]
        while stack:
            f = stack.pop()
            for d in walks[f]:
                nb = dart_face.get(g.twin(d))
                if nb is None:
                    continue
                if nb not in parity:
                    parity[nb] = 1 - parity[f]
                    members.append(nb)
                    stack.append(nb)
                elif parity[nb] == parity[f]:
                    return None
        classes.append(members)
    return walks, parity, classes


def _insert_chord(g: CheckerboardGraph, walk: tuple[Dart, ...], i: int, j: int) -> list[CheckerboardGraph]:
    """Chord between the corners before outer darts ``walk[i]`` and ``walk[j]``; both sides as outer face."""
    u, v = walk[i][1], walk[j][1]
    new_e = max(e for e, _, _ in g.edges) + 1
    rotation = dict(g.rotations)
    for x, d in ((u, walk[i]), (v, walk[j])):
        rot = rotation[x]
        k = rot.index(d[0])
        rotation[x] = rot[:k] + (new_e,) + rot[k:]
    edges = g.edges + [(new_e, u, v)]
    return [CheckerboardGraph(g.vertices, edges, rotation, (new_e, u)),
            CheckerboardGraph(g.vertices, edges, rotation, (new_e, v))]


def chord_extensions(g: CheckerboardGraph) -> Iterator[CheckerboardGraph]:
    walk = g.outer_walk()
    if walk is None:
        return
    m = len(walk)
    for i in range(m):
        for j in range(i + 1, m):
            u, v = walk[i][1], walk[j][1]
            if u == v or g.has_edge(u, v):
                continue
            for h in _insert_chord(g, walk, i, j):
                if _face_pattern_ok(h):
                    yield h


def plane_skeletons(n: int) -> list[CheckerboardGraph]:
    """Connected plane graphs on ``n`` vertices whose bounded faces are alternately colourable induced cycles."""
    seen: dict[bytes, CheckerboardGraph] = {}
    frontier = []
    for t in plane_trees(n):
        code = canonical_code(t, "unoriented")
        if code not in seen:
            seen[code] = t
            frontier.append(t)
    while frontier:
        nxt = []
        for g in frontier:
            for h in chord_extensions(g):
                code = canonical_code(h, "unoriented")
                if code not in seen:
                    seen[code] = h
                    nxt.append(h)
        frontier = nxt
    return list(seen.values())


def checkerboard_orientations(skeleton: CheckerboardGraph, bridges: bool = True) -> Iterator[CheckerboardGraph]:
    """Orientations making every bounded face coherent; bridges take both directions unless ``bridges`` is False."""
    walks, parity, classes = _face_colour_classes(skeleton)
    bridge_ids = skeleton.bridges()
    choices_b = list(product((0, 1), repeat=len(bridge_ids))) if bridges else [(0,) * len(bridge_ids)]
    for colours in product((0, 1), repeat=len(classes)):
        forward: dict[int, bool] = {}
        for cls, c in zip(classes, colours):
            for f in cls:
                black = (parity[f] ^ c) == 0
                for eid, origin in walks[f]:
                    # black faces: edges run along the walk
                    forward[eid] = (skeleton.tail(eid) == origin) == black
        for flips in choices_b:
            edges = []
            for eid, t, h in skeleton.edges:
                if eid in forward:
                    keep = forward[eid]
                else:
                    keep = flips[bridge_ids.index(eid)] == 0
                edges.append((eid, t, h) if keep else (eid, h, t))
            yield CheckerboardGraph(skeleton.vertices, edges, skeleton.rotations, skeleton.outer)


def checkerboard_graphs(n: int, bridges: bool = True) -> list[CheckerboardGraph]:
    """Valid connected checkerboard graphs on ``n`` vertices up to oriented plane isomorphism."""
    if n == 1:
        return [CheckerboardGraph([1], [], {1: ()})]
    seen: dict[bytes, CheckerboardGraph] = {}
    for sk in plane_skeletons(n):
        for g in checkerboard_orientations(sk, bridges):
            code = canonical_code(g)
            if code not in seen and validate(g).valid:
                seen[code] = g
    return list(seen.values())


def checkerboard_trees(n: int) -> list[CheckerboardGraph]:
    """All oriented plane trees on ``n`` vertices up to oriented plane isomorphism."""
    if n == 1:
        return [CheckerboardGraph([1], [], {1: ()})]
    seen: dict[bytes, CheckerboardGraph] = {}
    for t in plane_trees(n):
        for g in checkerboard_orientations(t):
            seen.setdefault(canonical_code(g), g)
    return list(seen.values())


# -- random instances -----------------------------------------------------------

def random_tree(n: int, rng: random.Random) -> CheckerboardGraph:
    g = CheckerboardGraph([1], [], {1: ()})
    for _ in range(n - 1):
        v = rng.choice(g.vertices)
        g = _add_leaf(g, v, rng.randrange(max(1, g.degree(v))))
    edges = [((e, t, h) if rng.random() < 0.5 else (e, h, t)) for e, t, h in g.edges]
    return CheckerboardGraph(g.vertices, edges, g.rotations, g.outer)


def random_graph(n: int, rng: random.Random, chords: int | None = None, tries: int = 50) -> CheckerboardGraph:
    """Random valid connected checkerboard graph on ``n`` vertices (a tree if no chord attempt succeeds)."""
    if chords is None:
        chords = rng.randrange(0, n)
    for _ in range(tries):
        g = random_tree(n, rng)
        for _ in range(chords):
            ext = list(chord_extensions(g))
            if not ext:
                break
            g = rng.choice(ext)
        options = list(checkerboard_orientations(g, bridges=False))
        rng.shuffle(options)
        for h in options:
            h = _flip_random_bridges(h, rng)
            if validate(h).valid:
                return h
    return random_tree(n, rng)


def _flip_random_bridges(g: CheckerboardGraph, rng: random.Random) -> CheckerboardGraph:
    bridges = set(g.bridges())
    edges = [((e, h, t) if e in bridges and rng.random() < 0.5 else (e, t, h)) for e, t, h in g.edges]
    return CheckerboardGraph(g.vertices, edges, g.rotations, g.outer)


def tree_shape(g: CheckerboardGraph) -> str:
    """Canonical string of the abstract (unembedded, unoriented) tree, rooted at its centre."""
    if not g.is_tree():
        raise ValueError("not a tree")
    adj = {v: set(g.neighbours(v)) for v in g.vertices}
    # peel leaves to find the centre (one vertex or one edge)
    layer = [v for v in adj if len(adj[v]) <= 1]
    remaining = set(adj)
    degree = {v: len(adj[v]) for v in adj}
    while len(remaining) > 2:
        nxt = []
        for v in layer:
            remaining.discard(v)
            for w in adj[v]:
                if w in remaining:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
        layer = nxt
    centres = sorted(remaining)

    def encode(v, parent) -> str:
        return "(" + "".join(sorted(encode(w, v) for w in adj[v] if w != parent)) + ")"

    if len(centres) == 1:
        return encode(centres[0], None)
    a, b = centres
    return "".join(sorted((encode(a, b), encode(b, a))))
