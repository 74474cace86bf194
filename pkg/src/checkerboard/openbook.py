"""Combinatorial pages of checkerboard open books.

The page is a neighbourhood of the union of core curves, one per vertex, with
one transverse crossing per edge, capped by one disc per bounded face. Its
boundary is traced on the ribbon graph of the crossings: the core curve of a
vertex meets its crossings in rotation order, and at a crossing where the
tail's curve meets the head's curve positively the four arc ends sit in the
counterclockwise order (tail out, head out, tail in, head in).
"""

from __future__ import annotations

from dataclasses import dataclass

from .coxeter import InvalidGraph
from .planegraph import CheckerboardGraph, GraphError, colouring, validate


class NoPeelableVertex(GraphError):
    pass


@dataclass(frozen=True)
class Annulus:
    vertex: int
    rectangles: tuple[int, ...]


@dataclass(frozen=True)
class Rectangle:
    edge: int
    tail: int
    head: int
    sign: int = 1


@dataclass(frozen=True)
class Cap:
    face: tuple[int, ...]
    colour: str


@dataclass(frozen=True)
class SurfaceComplex:
    graph: CheckerboardGraph
    annuli: tuple[Annulus, ...]
    rectangles: tuple[Rectangle, ...]
    caps: tuple[Cap, ...]


@dataclass(frozen=True)
class SurfaceSummary:
    euler_characteristic: int
    boundary_components: int
    betti1: int
    genus: int

    @property
    def link_components(self) -> int:
        return self.boundary_components

    def to_json(self) -> dict:
        return {
            "euler_characteristic": self.euler_characteristic,
            "boundary_components": self.boundary_components,
            "betti1": self.betti1,
            "genus": self.genus,
            "link_components": self.link_components,
        }


def build_surface(g: CheckerboardGraph, check: bool = True) -> SurfaceComplex:
    if not g.is_connected():
        raise InvalidGraph("page construction needs a connected graph")
    if check and not validate(g).valid:
        raise InvalidGraph("graph is not a checkerboard graph")
    annuli = tuple(Annulus(v, g.rotation(v)) for v in g.vertices)
    rects = tuple(Rectangle(eid, t, h, 1) for eid, t, h in g.edges)
    caps = tuple(Cap(tuple(d[1] for d in walk), c) for walk, c in colouring(g).items())
    return SurfaceComplex(g, annuli, rects, caps)


# dart roles at a crossing, in counterclockwise order
TAIL_OUT, HEAD_OUT, TAIL_IN, HEAD_IN = range(4)


def ribbon_boundary_circles(s: SurfaceComplex) -> int:
    """Number of boundary circles of the thickened union of core curves (before capping)."""
    g = s.graph
    if not s.rectangles:
        return 2 * len(s.annuli)
    # alpha: along each core curve, the out-end at one crossing joins the in-end at the next
    alpha: dict[tuple[int, int], tuple[int, int]] = {}
    for ann in s.annuli:
        v = ann.vertex
        rot = ann.rectangles
        for i, eid in enumerate(rot):
            nxt = rot[(i + 1) % len(rot)]
            out_role = TAIL_OUT if g.tail(eid) == v else HEAD_OUT
            in_role = TAIL_IN if g.tail(nxt) == v else HEAD_IN
            alpha[(eid, out_role)] = (nxt, in_role)
            alpha[(nxt, in_role)] = (eid, out_role)
    seen = set()
    circles = 0
    for start in alpha:
        if start in seen:
            continue
        circles += 1
        cur = start
        while cur not in seen:
            seen.add(cur)
            eid, role = alpha[cur]
            cur = (eid, (role + 1) % 4)
    return circles


def boundary_count(s: SurfaceComplex) -> int:
    if len(s.annuli) == 1 and not s.rectangles:
        return 2
    return ribbon_boundary_circles(s) - len(s.caps)


def summarize(s: SurfaceComplex) -> SurfaceSummary:
    if len(s.annuli) == 1 and not s.rectangles:
        chi = 0
    else:
        chi = -len(s.rectangles) + len(s.caps)
    mu = boundary_count(s)
    betti1 = 1 - chi
    genus = (2 - chi - mu) // 2
    return SurfaceSummary(chi, mu, betti1, genus)


def surface_summary(g: CheckerboardGraph) -> SurfaceSummary:
    return summarize(build_surface(g))


def destabilization_sequence(g: CheckerboardGraph) -> tuple[int, ...]:
    """Peel vertices on the unbounded face, lowest id first, keeping a connected checkerboard graph."""
    if not g.is_connected() or not validate(g).valid:
        raise InvalidGraph("destabilization needs a connected checkerboard graph")
    order = []
    cur = g
    while cur.n_vertices() > 1:
        on_outer = sorted({d[1] for d in cur.outer_walk() or ()})
        for v in on_outer:
            rest = cur.without_vertex(v)
            if rest.is_connected() and validate(rest).valid:
                order.append(v)
                cur = rest
                break
        else:
            raise NoPeelableVertex(f"no peelable vertex among {on_outer}")
    order.extend(cur.vertices)
    return tuple(order)
