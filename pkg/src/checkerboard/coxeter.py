"""Twist orders for checkerboard graphs.

Acyclic orientations are stored as the set of edge ids whose checkerboard
orientation is reversed. The correspondence between acyclic orientations and
vertex enumerations (up to swapping adjacent entries that share no edge) is
the one used to pick a canonical Coxeter element.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .planegraph import CheckerboardGraph, GraphError, topological_order, validate


class CyclicResult(GraphError):
    pass


class NotASink(GraphError):
    pass


class InvalidGraph(GraphError):
    pass


@dataclass(frozen=True)
class AcyclicOrientation:
    graph: CheckerboardGraph
    reversed_edges: frozenset[int]

    def arcs(self) -> list[tuple[int, int]]:
        return [((h, t) if eid in self.reversed_edges else (t, h)) for eid, t, h in self.graph.edges]

    def arc(self, eid: int) -> tuple[int, int]:
        t, h = self.graph.endpoints(eid)
        return (h, t) if eid in self.reversed_edges else (t, h)

    def is_acyclic(self) -> bool:
        return topological_order(self.graph.vertices, self.arcs()) is not None

    def sinks(self) -> list[int]:
        out = {v: 0 for v in self.graph.vertices}
        for a, _ in self.arcs():
            out[a] += 1
        return [v for v, k in out.items() if k == 0]

    def key(self) -> frozenset[int]:
        return self.reversed_edges


def orientation_from_selection(g: CheckerboardGraph, selection: Iterable[int]) -> AcyclicOrientation:
    o = AcyclicOrientation(g, frozenset(selection))
    if not o.is_acyclic():
        raise CyclicResult("reversing the selected edges leaves a directed cycle")
    return o


def orientation_from_enumeration(g: CheckerboardGraph, enumeration: Sequence[int]) -> AcyclicOrientation:
    """Orient every edge toward its endpoint of higher index."""
    index = {v: i for i, v in enumerate(enumeration)}
    rev = frozenset(eid for eid, t, h in g.edges if index[t] > index[h])
    return AcyclicOrientation(g, rev)


def enumeration_from_orientation(o: AcyclicOrientation) -> tuple[int, ...]:
    """Emit all current sources in ascending id, delete them, repeat."""
    g = o.graph
    indeg = {v: 0 for v in g.vertices}
    succ: dict[int, list[int]] = {v: [] for v in g.vertices}
    for a, b in o.arcs():
        indeg[b] += 1
        succ[a].append(b)
    layer = sorted(v for v in g.vertices if indeg[v] == 0)
    out: list[int] = []
    while layer:
        out.extend(layer)
        nxt = []
        for v in layer:
            for w in succ[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    nxt.append(w)
        layer = sorted(nxt)
    if len(out) != len(g.vertices):
        raise CyclicResult("orientation has a directed cycle")
    return tuple(out)


def witness_orientation(g: CheckerboardGraph) -> AcyclicOrientation:
    report = validate(g)
    if not report.valid:
        raise InvalidGraph("graph is not a checkerboard graph")
    return orientation_from_selection(g, report.witness or ())


def twist_order(g: CheckerboardGraph) -> tuple[int, ...]:
    if not g.is_connected():
        raise InvalidGraph("twist order needs a connected graph")
    return enumeration_from_orientation(witness_orientation(g))


def verify_enumeration(g: CheckerboardGraph, enumeration: Sequence[int]) -> bool:
    """Check that each bounded face is met as a rotation of its oriented boundary cycle.

    The oriented boundary runs clockwise around black faces and anticlockwise
    around white ones, so in both cases the required order follows the edge
    orientations.
    """
    if sorted(enumeration) != list(g.vertices):
        return False
    index = {v: i for i, v in enumerate(enumeration)}
    for walk in g.bounded_walks():
        cycle = [d[1] for d in walk]
        if not all(g.is_forward(d) for d in walk):
            if all(not g.is_forward(d) for d in walk):
                cycle = cycle[::-1]
            else:
                return False
        seen = sorted(cycle, key=index.__getitem__)
        k = cycle.index(seen[0])
        if seen != cycle[k:] + cycle[:k]:
            return False
    return True


def face_cycles(g: CheckerboardGraph) -> list[list[tuple[int, int]]]:
    """Bounded-face boundaries as closed vertex walks ``[(u, v), ...]`` in walk order."""
    return [[(d[1], g.dart_head(d)) for d in walk] for walk in g.bounded_walks()]


def flow_difference(o: AcyclicOrientation | CheckerboardGraph, cycles=None) -> tuple[int, ...]:
    """Signed edge count of the orientation around each oriented boundary cycle.

    Each cycle is traversed in the direction of the checkerboard orientation of
    its face; passing a CheckerboardGraph evaluates the checkerboard orientation
    itself.
    """
    if isinstance(o, CheckerboardGraph):
        o = AcyclicOrientation(o, frozenset())
    g = o.graph
    if cycles is None:
        cycles = []
        for walk in g.bounded_walks():
            steps = [(d[1], g.dart_head(d)) for d in walk]
            if not g.is_forward(walk[0]):
                steps = [(b, a) for a, b in reversed(steps)]
            cycles.append(steps)
    arcs = set(o.arcs())
    return tuple(sum(1 if (a, b) in arcs else -1 for a, b in cyc) for cyc in cycles)


def push_down(o: AcyclicOrientation, v: int) -> AcyclicOrientation:
    if v not in o.sinks():
        raise NotASink(f"vertex {v} is not a sink")
    rev = set(o.reversed_edges)
    for eid in o.graph.rotation(v):
        rev ^= {eid}
    return AcyclicOrientation(o.graph, frozenset(rev))


def push_down_certificate(o1: AcyclicOrientation, o2: AcyclicOrientation, limit: int = 200000) -> list[int] | None:
    """Breadth-first search for a sequence of sink push-downs from ``o1`` to ``o2``."""
    target = o2.key()
    start = o1.key()
    if start == target:
        return []
    parent: dict[frozenset[int], tuple[frozenset[int], int] | None] = {start: None}
    queue = deque([o1])
    while queue and len(parent) < limit:
        cur = queue.popleft()
        for v in cur.sinks():
            nxt = push_down(cur, v)
            k = nxt.key()
            if k in parent:
                continue
            parent[k] = (cur.key(), v)
            if k == target:
                path = []
                while parent[k] is not None:
                    prev, step = parent[k]
                    path.append(step)
                    k = prev
                return path[::-1]
            queue.append(nxt)
    return None


def same_coxeter_class(o1: AcyclicOrientation, o2: AcyclicOrientation, certify: bool | None = None):
    """Compare flow differences; on graphs with at most ten vertices also search for push-downs.

    Returns ``(same, certificate)`` where the certificate is a push-down sequence
    or ``None``.
    """
    same = flow_difference(o1) == flow_difference(o2)
    if certify is None:
        certify = o1.graph.n_vertices() <= 10
    cert = None
    if same and certify:
        cert = push_down_certificate(o1, o2)
        if cert is None:
            raise AssertionError("equal flow differences but no push-down sequence found")
    return same, cert
