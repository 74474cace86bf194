"""Oriented plane graphs as rotation systems.

A dart is a pair ``(edge_id, origin_vertex)``. The rotation at a vertex lists
the ids of its incident edges in counterclockwise order. Faces are traced with
``next(h) = succ(twin(h))`` where ``succ`` is the counterclockwise successor at
the origin of ``twin(h)``; with this rule every face lies to the right of its
walk, so bounded faces are walked clockwise and the unbounded face
anticlockwise. A bounded face is therefore black (clockwise boundary
orientation) exactly when every edge points along the walk, and white when
every edge points against it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence

Dart = tuple[int, int]


class GraphError(ValueError):
    pass


class EmptyGraph(GraphError):
    pass


class Condition1Violation(GraphError):
    pass


class CheckerboardGraph:
    """Immutable oriented plane graph with designated darts on the unbounded face.

    ``outer`` is one dart, or one dart per connected component with edges; any
    component left unmarked gets the tail dart of its lowest edge.
    """

    __slots__ = ("_vertices", "_edges", "_rotation", "_outer", "_cache")

    def __init__(
        self,
        vertices: Iterable[int],
        edges: Iterable[tuple[int, int, int]],
        rotation: Mapping[int, Sequence[int]],
        outer: Dart | Sequence[Dart] | None = None,
    ):
        self._vertices = tuple(sorted(set(vertices)))
        self._edges = {eid: (t, h) for eid, t, h in edges}
        self._rotation = {v: tuple(rotation.get(v, ())) for v in self._vertices}
        if outer is None:
            marks: list[Dart] = []
        elif len(outer) == 2 and isinstance(outer[0], int):
            marks = [tuple(outer)]
        else:
            marks = [tuple(d) for d in outer]
        self._outer: tuple[Dart, ...] = tuple(marks)
        self._cache: dict = {}
        self._check_structure()
        self._outer = self._one_mark_per_component(marks)

    # -- structure ---------------------------------------------------------
    def _check_structure(self):
        vs = set(self._vertices)
        seen_pairs = set()
        incident: dict[int, list[int]] = {v: [] for v in vs}
        for eid, (t, h) in self._edges.items():
            if t not in vs or h not in vs:
                raise GraphError(f"edge {eid} has an endpoint outside the vertex set")
            if t == h:
                raise GraphError(f"edge {eid} is a loop")
            key = frozenset((t, h))
            if key in seen_pairs:
                raise GraphError(f"parallel edge {eid} between {t} and {h}")
            seen_pairs.add(key)
            incident[t].append(eid)
            incident[h].append(eid)
        for v in vs:
            rot = self._rotation[v]
            if sorted(rot) != sorted(incident[v]) or len(set(rot)) != len(rot):
                raise GraphError(f"rotation at vertex {v} does not list each incident edge once")
        for eid, origin in self._outer:
            if eid not in self._edges or origin not in self._edges[eid]:
                raise GraphError("outer dart is not a dart of the graph")

    def _one_mark_per_component(self, marks: Sequence[Dart]) -> tuple[Dart, ...]:
        comps = self.components()
        if len(comps) == 1 and marks:
            return (marks[0],)
        which = {v: i for i, c in enumerate(comps) for v in c}
        chosen: dict[int, Dart] = {}
        for d in marks:
            chosen.setdefault(which[d[1]], d)
        for eid in sorted(self._edges):
            t = self._edges[eid][0]
            chosen.setdefault(which[t], (eid, t))
        return tuple(chosen[i] for i in sorted(chosen, key=lambda i: min(comps[i])))

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def edges(self) -> list[tuple[int, int, int]]:
        return [(eid, t, h) for eid, (t, h) in sorted(self._edges.items())]

    @property
    def outer(self) -> Dart | None:
        """The marked outer dart (of the component with the lowest vertex when disconnected)."""
        return self._outer[0] if self._outer else None

    @property
    def outer_marks(self) -> tuple[Dart, ...]:
        return self._outer

    def rotation(self, v: int) -> tuple[int, ...]:
        return self._rotation[v]

    @property
    def rotations(self) -> dict[int, tuple[int, ...]]:
        return dict(self._rotation)

    def n_vertices(self) -> int:
        return len(self._vertices)

    def n_edges(self) -> int:
        return len(self._edges)

    def endpoints(self, eid: int) -> tuple[int, int]:
        return self._edges[eid]

    def tail(self, eid: int) -> int:
        return self._edges[eid][0]

    def head(self, eid: int) -> int:
        return self._edges[eid][1]

    def other(self, eid: int, v: int) -> int:
        t, h = self._edges[eid]
        return h if v == t else t

    def degree(self, v: int) -> int:
        return len(self._rotation[v])

    def neighbours(self, v: int) -> list[int]:
        return [self.other(e, v) for e in self._rotation[v]]

    def edge_between(self, u: int, v: int) -> int | None:
        return self._adjacency().get((u, v))

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._adjacency()

    def _adjacency(self) -> dict[tuple[int, int], int]:
        adj = self._cache.get("adj")
        if adj is None:
            adj = {}
            for eid, (t, h) in self._edges.items():
                adj[(t, h)] = eid
                adj[(h, t)] = eid
            self._cache["adj"] = adj
        return adj

    # -- darts -----------------------------------------------------------
    def darts(self) -> list[Dart]:
        return [(eid, v) for v in self._vertices for eid in self._rotation[v]]

    def dart_head(self, d: Dart) -> int:
        return self.other(d[0], d[1])

    def twin(self, d: Dart) -> Dart:
        return (d[0], self.dart_head(d))

    def is_forward(self, d: Dart) -> bool:
        """True when the dart runs from the tail of its edge to the head."""
        return self._edges[d[0]][0] == d[1]

    def succ(self, d: Dart) -> Dart:
        return (self._rotation_successor(d[1], d[0], 1), d[1])

    def pred(self, d: Dart) -> Dart:
        return (self._rotation_successor(d[1], d[0], -1), d[1])

    def _rotation_successor(self, v: int, eid: int, step: int) -> int:
        pos = self._position()
        rot = self._rotation[v]
        return rot[(pos[(eid, v)] + step) % len(rot)]

    def _position(self) -> dict[Dart, int]:
        pos = self._cache.get("pos")
        if pos is None:
            pos = {(eid, v): i for v in self._vertices for i, eid in enumerate(self._rotation[v])}
            self._cache["pos"] = pos
        return pos

    def face_next(self, d: Dart) -> Dart:
        return self.succ(self.twin(d))

    # -- faces -------------------------------------------------------------
    def face_walks(self) -> list[tuple[Dart, ...]]:
        walks = self._cache.get("walks")
        if walks is None:
            walks = []
            seen: set[Dart] = set()
            for d in self.darts():
                if d in seen:
                    continue
                walk = []
                cur = d
                while cur not in seen:
                    seen.add(cur)
                    walk.append(cur)
                    cur = self.face_next(cur)
                walks.append(tuple(walk))
            self._cache["walks"] = walks
        return walks

    def outer_walk(self) -> tuple[Dart, ...] | None:
        """Walk of the unbounded face through the primary outer dart."""
        walks = self.outer_walks()
        return walks[0] if walks else None

    def outer_walks(self) -> list[tuple[Dart, ...]]:
        """One unbounded-face walk per component with edges."""
        marks = self._outer
        return [w for m in marks for w in self.face_walks() if m in w]

    def bounded_walks(self) -> list[tuple[Dart, ...]]:
        outer = self.outer_darts()
        return [w for w in self.face_walks() if w[0] not in outer]

    def outer_darts(self) -> frozenset[Dart]:
        cached = self._cache.get("outer_darts")
        if cached is None:
            cached = frozenset(d for w in self.outer_walks() for d in w)
            self._cache["outer_darts"] = cached
        return cached

    # -- connectivity ------------------------------------------------------
    def components(self, removed_vertices: Iterable[int] = (), removed_edges: Iterable[int] = ()) -> list[set[int]]:
        rv, re_ = set(removed_vertices), set(removed_edges)
        left = [v for v in self._vertices if v not in rv]
        seen: set[int] = set()
        comps = []
        for s in left:
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            seen.add(s)
            while stack:
                v = stack.pop()
                for eid in self._rotation[v]:
                    if eid in re_:
                        continue
                    w = self.other(eid, v)
                    if w in rv or w in seen:
                        continue
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return len(self._vertices) > 0 and len(self.components()) == 1

    def is_tree(self) -> bool:
        return self.is_connected() and self.n_edges() == self.n_vertices() - 1

    def bridges(self) -> list[int]:
        """Edges lying on no cycle (Tarjan low-link)."""
        disc: dict[int, int] = {}
        low: dict[int, int] = {}
        out: list[int] = []
        counter = [0]

        def dfs(root):
            stack = [(root, None, iter(self._rotation[root]))]
            disc[root] = low[root] = counter[0]
            counter[0] += 1
            while stack:
                v, via, it = stack[-1]
                advanced = False
                for eid in it:
                    if eid == via:
                        continue
                    w = self.other(eid, v)
                    if w not in disc:
                        disc[w] = low[w] = counter[0]
                        counter[0] += 1
                        stack.append((w, eid, iter(self._rotation[w])))
                        advanced = True
                        break
                    low[v] = min(low[v], disc[w])
                if not advanced:
                    stack.pop()
                    if stack:
                        parent = stack[-1][0]
                        low[parent] = min(low[parent], low[v])
                        if low[v] > disc[parent]:
                            out.append(via)

        for v in self._vertices:
            if v not in disc:
                dfs(v)
        return sorted(out)

    def is_bridge(self, eid: int) -> bool:
        return eid in set(self.bridges())

    def cut_vertices(self) -> list[int]:
        base = len(self.components())
        return [v for v in self._vertices if len(self.components(removed_vertices=[v])) > base]

    # -- derived graphs ---------------------------------------------------
    def induced(self, keep: Iterable[int]) -> "CheckerboardGraph":
        """Subgraph induced on ``keep``; rotations are restricted, outer dart re-chosen on the old unbounded face."""
        keep = set(keep)
        edges = [(eid, t, h) for eid, (t, h) in self._edges.items() if t in keep and h in keep]
        kept_edges = {e[0] for e in edges}
        rotation = {v: [e for e in self._rotation[v] if e in kept_edges] for v in keep}
        sub = CheckerboardGraph(keep, edges, rotation, None)
        return sub.with_outer(_outer_after_deletion(self, sub))

    def without_vertex(self, v: int) -> "CheckerboardGraph":
        return self.induced(set(self._vertices) - {v})

    def with_outer(self, outer: Dart | Sequence[Dart] | None) -> "CheckerboardGraph":
        return CheckerboardGraph(self._vertices, self.edges, self._rotation, outer)

    def relabeled(self, vmap: Mapping[int, int], emap: Mapping[int, int] | None = None) -> "CheckerboardGraph":
        emap = emap or {e: e for e in self._edges}
        edges = [(emap[eid], vmap[t], vmap[h]) for eid, (t, h) in self._edges.items()]
        rotation = {vmap[v]: [emap[e] for e in rot] for v, rot in self._rotation.items()}
        outer = [(emap[e], vmap[v]) for e, v in self._outer]
        return CheckerboardGraph(vmap.values(), edges, rotation, outer)

    # -- serialization ----------------------------------------------------
    def to_json(self) -> dict:
        def ref(d: Dart) -> dict:
            return {"edge": d[0], "dir": "fwd" if self.is_forward(d) else "rev"}

        return {
            "vertices": [{"id": v, "rotation": [ref((e, v)) for e in self._rotation[v]]} for v in self._vertices],
            "edges": [{"id": eid, "tail": t, "head": h} for eid, t, h in self.edges],
            "outer": _outer_json([ref(d) for d in self._outer]),
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "CheckerboardGraph":
        edges = [(int(e["id"]), int(e["tail"]), int(e["head"])) for e in data["edges"]]
        ends = {eid: (t, h) for eid, t, h in edges}

        def origin(ref) -> int:
            t, h = ends[int(ref["edge"])]
            if ref["dir"] == "fwd":
                return t
            if ref["dir"] == "rev":
                return h
            raise GraphError(f"bad dart direction {ref['dir']!r}")

        rotation = {}
        for vert in data["vertices"]:
            v = int(vert["id"])
            rot = []
            for ref in vert["rotation"]:
                if origin(ref) != v:
                    raise GraphError(f"rotation of vertex {v} lists a dart that does not start there")
                rot.append(int(ref["edge"]))
            rotation[v] = rot
        outer_ref = data.get("outer")
        if outer_ref is None:
            outer = None
        elif isinstance(outer_ref, list):
            outer = [(int(r["edge"]), origin(r)) for r in outer_ref]
        else:
            outer = (int(outer_ref["edge"]), origin(outer_ref))
        return cls([int(v["id"]) for v in data["vertices"]], edges, rotation, outer)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=False)

    @classmethod
    def loads(cls, text: str) -> "CheckerboardGraph":
        return cls.from_json(json.loads(text))

    def __eq__(self, other):
        if not isinstance(other, CheckerboardGraph):
            return NotImplemented
        return (
            self._vertices == other._vertices
            and self._edges == other._edges
            and all(_same_cycle(self._rotation[v], other._rotation[v]) for v in self._vertices)
            and self.outer_darts() == other.outer_darts()
        )

    def __hash__(self):
        return hash((self._vertices, tuple(sorted(self._edges.items()))))

    def __repr__(self):
        return f"CheckerboardGraph(V={self.n_vertices()}, E={self.n_edges()})"


def _outer_json(refs: list[dict]):
    """A single reference for connected graphs, a list when several components carry one."""
    if not refs:
        return None
    return refs[0] if len(refs) == 1 else refs


def _same_cycle(a: Sequence, b: Sequence) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    try:
        k = b.index(a[0])
    except ValueError:
        return False
    return tuple(a) == tuple(b[k:]) + tuple(b[:k])


def _outer_after_deletion(old: CheckerboardGraph, sub: CheckerboardGraph) -> list[Dart]:
    """Darts of ``sub`` on the face containing the old unbounded region, best first.

    Deleting edges only merges faces, so any surviving dart of an old outer walk
    still bounds the unbounded region. Next come corners next to deleted outer
    darts; the constructor keeps the first candidate in each component.
    """
    outer = [d for w in old.outer_walks() for d in w]
    marks = [d for d in outer if d[0] in sub._edges]
    for d in outer:
        v = d[1]
        if v not in sub._rotation or not sub._rotation[v]:
            continue
        rot = old.rotation(v)
        i = rot.index(d[0])
        for k in range(1, len(rot) + 1):
            e = rot[(i + k) % len(rot)]
            if e in sub._edges:
                marks.append((e, v))
                break
    return marks


# -- faces and colouring --------------------------------------------------------

@dataclass(frozen=True)
class Face:
    walk: tuple[Dart, ...]
    bounded: bool
    colour: str | None  # "black", "white" or None

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(d[1] for d in self.walk)

    def __len__(self):
        return len(self.walk)


def _face_status(g: CheckerboardGraph, walk: Sequence[Dart]) -> tuple[str | None, str | None]:
    """Return ``(colour, problem)`` for a bounded face walk."""
    verts = [d[1] for d in walk]
    if len(set(verts)) != len(verts) or len(verts) < 3:
        return None, "boundary walk is not a simple cycle"
    on_cycle = set(verts)
    k = len(verts)
    for i, v in enumerate(verts):
        for w in g.neighbours(v):
            if w in on_cycle and w != verts[(i + 1) % k] and w != verts[(i - 1) % k]:
                return None, f"chord {v}-{w}: boundary cycle is not induced"
    fwd = [g.is_forward(d) for d in walk]
    if all(fwd):
        return "black", None
    if not any(fwd):
        return "white", None
    return None, "boundary cycle is not coherently oriented"


def faces(g: CheckerboardGraph) -> list[Face]:
    out = []
    outer = g.outer_darts()
    for walk in g.face_walks():
        bounded = walk[0] not in outer
        colour = _face_status(g, walk)[0] if bounded else None
        out.append(Face(walk, bounded, colour))
    if not g.edges:
        out.append(Face((), False, None))
    return out


def bounded_faces(g: CheckerboardGraph) -> list[Face]:
    return [f for f in faces(g) if f.bounded]


def colouring(g: CheckerboardGraph) -> dict[tuple[Dart, ...], str]:
    """Colour of every bounded face, keyed by its walk."""
    out = {}
    for walk in g.bounded_walks():
        colour, problem = _face_status(g, walk)
        if problem:
            raise Condition1Violation(problem)
        out[walk] = colour
    return out


# -- validation ---------------------------------------------------------------

@dataclass
class ValidationReport:
    condition1: bool
    condition2: bool
    face_problems: list[tuple[tuple[int, ...], str]] = field(default_factory=list)
    witness: tuple[int, ...] | None = None

    @property
    def valid(self) -> bool:
        return self.condition1 and self.condition2

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "condition1": self.condition1,
            "condition2": self.condition2,
            "face_problems": [{"face": list(f), "problem": p} for f, p in self.face_problems],
            "witness": None if self.witness is None else list(self.witness),
        }


def is_acyclic(vertices: Iterable[int], arcs: Iterable[tuple[int, int]]) -> bool:
    return topological_order(vertices, arcs) is not None


def topological_order(vertices: Iterable[int], arcs: Iterable[tuple[int, int]]) -> list[int] | None:
    vertices = list(vertices)
    indeg = {v: 0 for v in vertices}
    out: dict[int, list[int]] = {v: [] for v in vertices}
    for a, b in arcs:
        out[a].append(b)
        indeg[b] += 1
    ready = sorted(v for v in vertices if indeg[v] == 0)
    order = []
    while ready:
        v = ready.pop(0)
        order.append(v)
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
        ready.sort()
    return order if len(order) == len(vertices) else None


def find_witness(g: CheckerboardGraph) -> tuple[int, ...] | None:
    """First edge selection meeting every bounded face once whose reversal leaves no directed cycle.

    Faces are visited breadth-first and each face tries its edges in ascending
    id order, abandoning a branch as soon as the already decided edges close a
    directed cycle. Deterministic; ``None`` when condition 2 fails.
    """
    walks = g.bounded_walks()
    face_edges = [tuple(sorted(d[0] for d in w)) for w in walks]
    edge_faces: dict[int, list[int]] = {}
    for i, es in enumerate(face_edges):
        for e in es:
            edge_faces.setdefault(e, []).append(i)
    # order faces so that decided edges grow as a connected region
    order = _face_order(face_edges, edge_faces)
    fixed_arcs = [(t, h) for eid, t, h in g.edges if eid not in edge_faces]
    vertices = g.vertices
    ends = {eid: (t, h) for eid, t, h in g.edges}

    count = [0] * len(walks)
    selected: list[int] = []
    decided: set[int] = set()

    def arcs_decided():
        sel = set(selected)
        arcs = list(fixed_arcs)
        for e in decided:
            t, h = ends[e]
            arcs.append((h, t) if e in sel else (t, h))
        return arcs

    def search(pos: int) -> bool:
        if pos == len(order):
            return is_acyclic(vertices, arcs_decided())
        fi = order[pos]
        newly = [e for e in face_edges[fi] if e not in decided]
        if count[fi] == 1:
            decided.update(newly)
            ok = is_acyclic(vertices, arcs_decided()) and search(pos + 1)
            if not ok:
                decided.difference_update(newly)
            return ok
        for e in newly:
            if any(count[f] for f in edge_faces[e]):
                continue
            selected.append(e)
            for f in edge_faces[e]:
                count[f] += 1
            decided.update(newly)
            if is_acyclic(vertices, arcs_decided()) and search(pos + 1):
                return True
            decided.difference_update(newly)
            for f in edge_faces[e]:
                count[f] -= 1
            selected.pop()
        return False

    if search(0):
        return tuple(sorted(selected))
    return None


def _face_order(face_edges, edge_faces) -> list[int]:
    n = len(face_edges)
    order: list[int] = []
    seen: set[int] = set()
    for start in range(n):
        if start in seen:
            continue
        queue = [start]
        seen.add(start)
        while queue:
            f = queue.pop(0)
            order.append(f)
            for e in face_edges[f]:
                for f2 in edge_faces[e]:
                    if f2 not in seen:
                        seen.add(f2)
                        queue.append(f2)
    return order


def validate(g: CheckerboardGraph) -> ValidationReport:
    problems = []
    for walk in g.bounded_walks():
        _, problem = _face_status(g, walk)
        if problem:
            problems.append((tuple(d[1] for d in walk), problem))
    if problems:
        return ValidationReport(False, False, problems, None)
    witness = find_witness(g)
    return ValidationReport(True, witness is not None, [], witness)


def is_valid(g: CheckerboardGraph) -> bool:
    return validate(g).valid


def verify_witness(g: CheckerboardGraph, selection: Iterable[int]) -> bool:
    sel = set(selection)
    for walk in g.bounded_walks():
        if sum(1 for d in walk if d[0] in sel) != 1:
            return False
    arcs = [((h, t) if eid in sel else (t, h)) for eid, t, h in g.edges]
    return is_acyclic(g.vertices, arcs)


# -- whole-graph operations ---------------------------------------------------

def mirror(g: CheckerboardGraph) -> CheckerboardGraph:
    """Reflect the drawing: every rotation is reversed; the unbounded face is now to the right of the twin dart."""
    rotation = {v: tuple(reversed(g.rotation(v))) for v in g.vertices}
    outer = [g.twin(d) for d in g.outer_marks]
    return CheckerboardGraph(g.vertices, g.edges, rotation, outer)


def reverse_all_edges(g: CheckerboardGraph) -> CheckerboardGraph:
    edges = [(eid, h, t) for eid, t, h in g.edges]
    return CheckerboardGraph(g.vertices, edges, g.rotations, g.outer_marks)


def reverse_edges(g: CheckerboardGraph, eids: Iterable[int]) -> CheckerboardGraph:
    flip = set(eids)
    edges = [((eid, h, t) if eid in flip else (eid, t, h)) for eid, t, h in g.edges]
    return CheckerboardGraph(g.vertices, edges, g.rotations, g.outer_marks)


# -- canonical codes ------------------------------------------------------------

def _code_from(g: CheckerboardGraph, start: Dart, oriented: bool, outer: frozenset[Dart]) -> tuple:
    label = {start[1]: 0}
    entry = {start[1]: start}
    queue = [start[1]]
    code: list[int] = []
    qi = 0
    while qi < len(queue):
        v = queue[qi]
        qi += 1
        first = entry[v]
        deg = g.degree(v)
        code.append(-1 - deg)
        d = first
        for _ in range(deg):
            w = g.dart_head(d)
            if w not in label:
                label[w] = len(label)
                entry[w] = g.twin(d)
                queue.append(w)
            code.append(label[w])
            code.append((1 if g.is_forward(d) else 2) if oriented else 0)
            code.append(1 if d in outer else 0)
            d = g.succ(d)
    return tuple(code)


def canonical_code(g: CheckerboardGraph, mode: str = "oriented", reflect: str = "as-is") -> bytes:
    """Isomorphism-invariant byte code of a connected plane graph.

    ``mode`` is ``"oriented"`` or ``"unoriented"``; ``reflect`` is ``"as-is"`` or
    ``"also-mirror"``. The code is the minimum, over every starting dart (and over
    the mirror image when requested), of a breadth-first traversal that follows
    rotations from each vertex's entry dart.
    """
    if g.n_vertices() == 0:
        raise EmptyGraph("canonical code of the empty graph")
    if not g.is_connected():
        raise GraphError("canonical_code needs a connected graph")
    if mode not in ("oriented", "unoriented"):
        raise ValueError(f"unknown mode {mode!r}")
    if reflect not in ("as-is", "also-mirror"):
        raise ValueError(f"unknown reflect option {reflect!r}")
    oriented = mode == "oriented"
    if g.n_edges() == 0:
        best: tuple = (-1,)
    else:
        candidates = [g] if reflect == "as-is" else [g, mirror(g)]
        best = None
        for h in candidates:
            outer = h.outer_darts()
            for d in h.darts():
                c = _code_from(h, d, oriented, outer)
                if best is None or c < best:
                    best = c
    tag = f"{mode}/{reflect}:"
    return tag.encode() + ",".join(map(str, best)).encode()


def isomorphic(g1: CheckerboardGraph, g2: CheckerboardGraph, mode: str = "oriented", reflect: str = "as-is") -> bool:
    return canonical_code(g1, mode, reflect) == canonical_code(g2, mode, reflect)


# -- DOT export ---------------------------------------------------------------

def to_dot(g: CheckerboardGraph, positions: Mapping[int, tuple[float, float]] | None = None, name: str = "G") -> str:
    lines = [f"digraph {name} {{"]
    for v in g.vertices:
        attr = ""
        if positions and v in positions:
            x, y = positions[v]
            attr = f' [pos="{float(x):g},{-float(y):g}!"]'
        lines.append(f"  v{v}{attr};")
    for eid, t, h in g.edges:
        note = ""
        if positions and t in positions and h in positions:
            (x1, y1), (x2, y2) = positions[t], positions[h]
            if x1 == x2:
                note = " // slope vertical"
            else:
                slope = -(y2 - y1) / (x2 - x1)
                note = f" // slope {'positive' if slope > 0 else 'negative'}"
        lines.append(f'  v{t} -> v{h} [label="e{eid}"];{note}')
    try:
        col = colouring(g)
    except Condition1Violation:
        col = {}
    for walk, c in col.items():
        lines.append(f"  // face {' '.join('v%d' % d[1] for d in walk)} colour {c}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def iter_selections(g: CheckerboardGraph) -> Iterator[tuple[int, ...]]:
    """Every edge set meeting each bounded face exactly once (no acyclicity filter)."""
    walks = g.bounded_walks()
    face_edges = [sorted({d[0] for d in w}) for w in walks]
    seen = set()
    for choice in product(*face_edges):
        sel = tuple(sorted(set(choice)))
        if sel in seen:
            continue
        if all(sum(1 for e in fe if e in sel) == 1 for fe in face_edges):
            seen.add(sel)
            yield sel
