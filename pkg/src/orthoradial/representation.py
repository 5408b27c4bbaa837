"""Angle assignments and rotation arithmetic.

The angle of a dart ``d`` sits at ``head(d)`` inside the face to the right of
``d`` and spans from ``d`` to the next dart of that face.  A vertex of degree
one has a single angle of 360.
"""

from __future__ import annotations

import enum
from collections import deque
from typing import Iterable, Mapping, Sequence

from .errors import NotAPath, NotClosed, NotIncident, PreconditionsUnchecked, RepresentationError
from .plane_graph import DartRef, FaceKind, PlaneGraph

ANGLES = (90, 180, 270, 360)

EXPECTED_FACE_ROTATION = {
    FaceKind.REGULAR: 4,
    FaceKind.OUTER: 0,
    FaceKind.CENTRAL: 0,
    FaceKind.OUTER_AND_CENTRAL: -4,
}


class Direction(enum.IntEnum):
    RIGHT = 0
    DOWN = 1
    LEFT = 2
    UP = 3

    @property
    def vertical(self) -> bool:
        return self % 2 == 1

    @property
    def horizontal(self) -> bool:
        return self % 2 == 0

    def opposite(self) -> "Direction":
        return Direction((self + 2) % 4)


class OrthoRadialRepresentation:
    """A plane graph together with one angle per dart."""

    __slots__ = ("graph", "angles", "_potential", "_pair_cache")

    def __init__(self, graph: PlaneGraph, angles: Sequence[int]) -> None:
        angles = tuple(int(a) for a in angles)
        if len(angles) != graph.num_darts:
            raise RepresentationError(
                f"expected {graph.num_darts} angles, got {len(angles)}"
            )
        for d, a in enumerate(angles):
            if a not in ANGLES:
                raise RepresentationError(f"angle {a} of dart {graph.dart_key(d)} not in {ANGLES}")
            if a == 360 and graph.degree(graph.head(d)) != 1:
                raise RepresentationError(
                    f"angle 360 at {graph.head(d)!r}, which has degree {graph.degree(graph.head(d))}"
                )
        self.graph = graph
        self.angles = angles
        self._potential: tuple[int, ...] | None = None
        self._pair_cache: dict[tuple[int, int], int] = {}

    @classmethod
    def from_mapping(cls, graph: PlaneGraph, angles: Mapping[DartRef, int]) -> "OrthoRadialRepresentation":
        values = [None] * graph.num_darts
        for ref, a in angles.items():
            values[graph.dart(ref)] = a
        missing = [graph.dart_key(d) for d, a in enumerate(values) if a is None]
        if missing:
            raise RepresentationError(f"no angle for darts {missing}")
        return cls(graph, values)

    @classmethod
    def from_directions(cls, graph: PlaneGraph, directions: Mapping[DartRef, int] | Sequence[int]) -> "OrthoRadialRepresentation":
        """Derive the angles implied by a direction for every dart.

        ``directions`` may list one direction per dart or give any subset of
        darts containing at least one dart of each edge.
        """
        dirs = _dart_directions(graph, directions)
        angles = []
        for d in range(graph.num_darts):
            turn = (dirs[d ^ 1] - dirs[graph.succ(d)]) % 4
            angles.append(360 if turn == 0 else 90 * turn)
        return cls(graph, angles)

    # -- rotations ------------------------------------------------------------

    def angle(self, d: int) -> int:
        return self.angles[d]

    def turn(self, d: int) -> int:
        """Rotation between ``d`` and the next dart of its face."""
        return 2 - self.angles[d] // 90

    def rot_pair(self, d1: int, d2: int) -> int:
        """Rotation at the shared vertex of ``d1`` followed by ``d2``.

        Sweeps counter-clockwise from ``twin(d1)`` to ``d2`` (the region to
        the right of the two darts); a U-turn gives -2.
        """
        cached = self._pair_cache.get((d1, d2))
        if cached is not None:
            return cached
        g = self.graph
        if g.head(d1) != g.tail(d2):
            raise NotIncident(f"{g.dart_key(d1)} does not end where {g.dart_key(d2)} starts")
        alpha = 0
        o = d1 ^ 1
        while True:
            alpha += self.angles[o ^ 1]
            o = g.rot_prev(o)
            if o == d2:
                break
        value = self._pair_cache[(d1, d2)] = 2 - alpha // 90
        return value

    def rot_path(self, darts: Sequence[int]) -> int:
        g = self.graph
        for a, b in zip(darts, darts[1:]):
            if g.head(a) != g.tail(b):
                raise NotAPath(f"{g.dart_key(a)} and {g.dart_key(b)} are not consecutive")
        return sum(self.rot_pair(a, b) for a, b in zip(darts, darts[1:]))

    def rot_cycle(self, darts: Sequence[int]) -> int:
        g = self.graph
        if not darts or g.head(darts[-1]) != g.tail(darts[0]):
            raise NotClosed("dart sequence is not closed")
        seen = set()
        for d in darts:
            if d in seen:
                raise NotClosed(f"dart {g.dart_key(d)} used twice")
            seen.add(d)
        return self.rot_path(darts) + self.rot_pair(darts[-1], darts[0])

    def face_rotation(self, f: int) -> int:
        return sum(self.turn(d) for d in self.graph.faces[f].boundary)

    def houses(self, f: int) -> list[tuple[int, int]]:
        """The ``(dart, angle)`` pairs describing face ``f``."""
        return [(d, self.angles[d]) for d in self.graph.faces[f].boundary]

    def angle_sum(self, v: str) -> int:
        return sum(self.angles[o ^ 1] for o in self.graph.out_darts(v))

    def satisfies_local_conditions(self) -> bool:
        g = self.graph
        if any(self.angle_sum(v) != 360 for v in g.vertices):
            return False
        return all(
            self.face_rotation(f.id) == EXPECTED_FACE_ROTATION[f.kind] for f in g.faces
        )

    # -- directions -------------------------------------------------------------

    def potentials(self) -> tuple[int, ...]:
        """Integer rotation from the reference dart to every dart.

        Computed along a breadth-first spanning tree of dart transitions;
        only meaningful modulo 4, and only when the angle and face sums hold.
        """
        if self._potential is None:
            if not self.satisfies_local_conditions():
                raise PreconditionsUnchecked(
                    "directions need angle sums of 360 and correct face rotations"
                )
            g = self.graph
            pot: list[int | None] = [None] * g.num_darts
            pot[g.reference_dart] = 0
            queue = deque([g.reference_dart])
            while queue:
                d = queue.popleft()
                for nxt in g.out_darts(g.head(d)):
                    value = pot[d] + self.rot_pair(d, nxt)
                    if pot[nxt] is None:
                        pot[nxt] = value
                        queue.append(nxt)
                    elif (pot[nxt] - value) % 4:
                        raise RepresentationError("inconsistent edge directions")
            self._potential = tuple(pot)
        return self._potential

    def direction(self, d: int) -> Direction:
        return Direction(self.potentials()[d] % 4)

    def directions(self) -> tuple[Direction, ...]:
        return tuple(Direction(p % 4) for p in self.potentials())

    def with_angles(self, changes: Mapping[int, int]) -> "OrthoRadialRepresentation":
        angles = list(self.angles)
        for d, a in changes.items():
            angles[d] = a
        return OrthoRadialRepresentation(self.graph, angles)

    def __repr__(self) -> str:
        return f"OrthoRadialRepresentation({self.graph!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrthoRadialRepresentation):
            return NotImplemented
        return self.angles == other.angles and self.graph == other.graph

    def __hash__(self) -> int:
        return hash((self.graph, self.angles))


def edge_direction(rep: OrthoRadialRepresentation, d: DartRef) -> Direction:
    return rep.direction(rep.graph.dart(d))


def _dart_directions(graph: PlaneGraph, directions) -> list[int]:
    dirs: list[int | None] = [None] * graph.num_darts
    items: Iterable
    if isinstance(directions, Mapping):
        items = ((graph.dart(k), v) for k, v in directions.items())
    else:
        if len(directions) != graph.num_darts:
            raise RepresentationError("need one direction per dart")
        items = enumerate(directions)
    for d, v in items:
        v = int(v) % 4
        for dd, vv in ((d, v), (d ^ 1, (v + 2) % 4)):
            if dirs[dd] is not None and dirs[dd] != vv:
                raise RepresentationError(f"conflicting directions for {graph.dart_key(dd)}")
            dirs[dd] = vv
    missing = [graph.dart_key(d) for d, v in enumerate(dirs) if v is None]
    if missing:
        raise RepresentationError(f"no direction for {missing}")
    return dirs  # type: ignore[return-value]
