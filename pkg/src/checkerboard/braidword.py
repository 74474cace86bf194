"""Positive braid words, brick diagrams and oriented linking graphs.

Drawing frame: x is the column index (rightward), y the word position
(downward). A brick in column ``i`` spanning positions ``(a, b)`` is drawn at
``(i, (a + b) / 2)``. Vertical edges point down; edges between neighbouring
columns point up, i.e. toward the brick that starts earlier.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Sequence

from .planegraph import CheckerboardGraph


class BraidParseError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.letters and self.strands < 2:
            raise ValueError("a nonempty braid word needs at least two strands")
        for x in self.letters:
            if not 1 <= x <= self.strands - 1:
                raise ValueError(f"letter {x} outside 1..{self.strands - 1}")

    @classmethod
    def of(cls, letters: Iterable[int], strands: int | None = None) -> "BraidWord":
        letters = tuple(int(x) for x in letters)
        if strands is None:
            strands = 1 + max(letters, default=1)
        return cls(strands, letters)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(map(str, self.letters))

    def used_columns(self) -> set[int]:
        return set(self.letters)

    def uses_all_generators(self) -> bool:
        return self.used_columns() == set(range(1, self.strands))


@dataclass(frozen=True, order=True)
class Brick:
    column: int
    start: int
    end: int

    @property
    def position(self) -> tuple[Fraction, Fraction]:
        return Fraction(self.column), Fraction(self.start + self.end, 2)


@dataclass(frozen=True)
class BrickDiagram:
    word: BraidWord
    bricks: tuple[Brick, ...]

    def __len__(self):
        return len(self.bricks)


_FORCE = re.compile(r"^\s*n\s*=\s*([^;]*);(.*)$", re.S)


def parse_braid(text: str) -> BraidWord:
    """Parse ``"1 2 1 2"``, ``"1,2,1"`` or ``"n=4; 1 1"``."""
    forced = None
    m = _FORCE.match(text)
    if m:
        try:
            forced = int(m.group(1))
        except ValueError:
            raise BraidParseError(f"bad strand count {m.group(1)!r}") from None
        text = m.group(2)
    tokens = [t for t in re.split(r"[\s,]+", text.strip()) if t]
    letters = []
    for tok in tokens:
        try:
            x = int(tok)
        except ValueError:
            raise BraidParseError(f"non-integer token {tok!r}") from None
        if x <= 0:
            raise BraidParseError(f"letter {x} is not a positive generator")
        letters.append(x)
    needed = 1 + max(letters, default=1)
    if forced is not None:
        if forced < needed:
            raise BraidParseError(f"strand count {forced} is smaller than {needed}")
        return BraidWord(forced, tuple(letters))
    return BraidWord(needed, tuple(letters))


def as_word(word) -> BraidWord:
    if isinstance(word, BraidWord):
        return word
    if isinstance(word, str):
        return parse_braid(word)
    return BraidWord.of(word)


def brick_diagram(word) -> BrickDiagram:
    word = as_word(word)
    last: dict[int, int] = {}
    bricks = []
    for pos, col in enumerate(word.letters, start=1):
        if col in last:
            bricks.append(Brick(col, last[col], pos))
        last[col] = pos
    return BrickDiagram(word, tuple(sorted(bricks)))


def linked(b1: Brick, b2: Brick) -> bool:
    if b1.column == b2.column:
        return b1.end == b2.start or b2.end == b1.start
    if abs(b1.column - b2.column) != 1:
        return False
    a, b, c, d = b1.start, b1.end, b2.start, b2.end
    return a < c < b < d or c < a < d < b


def _edge_direction(b1: Brick, b2: Brick) -> tuple[Brick, Brick]:
    """Return ``(tail, head)`` for a linked pair."""
    if b1.column == b2.column:
        return (b1, b2) if b1.start < b2.start else (b2, b1)
    # neighbouring columns: point toward the brick that starts earlier (upward)
    return (b2, b1) if b1.start < b2.start else (b1, b2)


def _half(dx, dy) -> int:
    return 0 if dy > 0 or (dy == 0 and dx > 0) else 1


def _angle_cmp(u, v) -> int:
    """Counterclockwise angle order of plane vectors in the usual y-up frame."""
    hu, hv = _half(*u), _half(*v)
    if hu != hv:
        return hu - hv
    cross = u[0] * v[1] - u[1] * v[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def plane_graph_from_positions(
    positions: dict[int, tuple[Fraction, Fraction]], arcs: Sequence[tuple[int, int, int]]
) -> CheckerboardGraph:
    """Rotation system of a straight-line drawing; positions use y pointing down."""
    incident: dict[int, list[tuple[tuple, int]]] = {v: [] for v in positions}
    for eid, t, h in arcs:
        for v, w in ((t, h), (h, t)):
            (x1, y1), (x2, y2) = positions[v], positions[w]
            incident[v].append(((x2 - x1, y1 - y2), eid))
    rotation = {}
    for v, items in incident.items():
        items.sort(key=cmp_to_key(lambda p, q: _angle_cmp(p[0], q[0])))
        rotation[v] = [eid for _, eid in items]
    # per component, the leftmost-topmost vertex sees the unbounded face due west
    graph = CheckerboardGraph(positions.keys(), arcs, rotation, None)
    outer = []
    for comp in graph.components():
        if not any(incident[v] for v in comp):
            continue
        v0 = min(comp, key=lambda v: (positions[v][0], positions[v][1]))
        from_west = [((-vec[0], -vec[1]), eid) for vec, eid in incident[v0]]
        from_west.sort(key=cmp_to_key(lambda p, q: _angle_cmp(p[0], q[0])))
        outer.append((from_west[0][1], v0))
    return CheckerboardGraph(positions.keys(), arcs, rotation, outer)


def linking_graph_with_bricks(word) -> tuple[CheckerboardGraph, dict[int, Brick]]:
    diagram = brick_diagram(word)
    bricks = diagram.bricks
    ids = {b: i + 1 for i, b in enumerate(bricks)}
    arcs = []
    eid = 0
    by_col: dict[int, list[Brick]] = {}
    for b in bricks:
        by_col.setdefault(b.column, []).append(b)
    for i, b1 in enumerate(bricks):
        for b2 in by_col.get(b1.column, []) + by_col.get(b1.column + 1, []):
            if b2 <= b1 or not linked(b1, b2):
                continue
            t, h = _edge_direction(b1, b2)
            eid += 1
            arcs.append((eid, ids[t], ids[h]))
    positions = {ids[b]: b.position for b in bricks}
    return plane_graph_from_positions(positions, arcs), {i: b for b, i in ids.items()}


def linking_graph(word) -> CheckerboardGraph:
    return linking_graph_with_bricks(word)[0]


def brick_positions(word) -> dict[int, tuple[Fraction, Fraction]]:
    return {i: b.position for i, b in linking_graph_with_bricks(word)[1].items()}


def is_prime(word) -> bool:
    g = linking_graph(word)
    return g.n_vertices() > 0 and g.is_connected()
