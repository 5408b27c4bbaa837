"""Plane graphs given by a rotation system.

Every undirected edge ``i`` contributes two darts, ``2*i`` (declared
orientation ``u -> v``) and ``2*i + 1`` (``v -> u``), so ``twin(d) == d ^ 1``.
Darts are written ``"name+"`` / ``"name-"`` in files and error messages.

Conventions
-----------
* ``rotation[v]`` lists the darts leaving ``v`` in clockwise order as seen in
  the drawing.
* The face to the right of a dart ``d`` continues with the dart that precedes
  ``twin(d)`` in the clockwise order around ``head(d)``.  Regular and central
  faces are therefore traced clockwise and the outer face counter-clockwise.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence, Union

from .errors import (
    AmbiguousEndpoint,
    BadDesignation,
    BadReferenceDart,
    DegreeExceeded,
    Disconnected,
    GraphError,
    InvalidRotation,
    NonPlanarRotation,
    NotACycle,
    NotAPath,
    NotOnContainer,
    NotSimple,
)

DartRef = Union[int, str]
Endpoint = Union[int, str]  # dart id or vertex id

MAX_DEGREE = 4


class FaceKind(enum.Enum):
    REGULAR = "regular"
    OUTER = "outer"
    CENTRAL = "central"
    OUTER_AND_CENTRAL = "outer-and-central"


@dataclass(frozen=True)
class Dart:
    id: int
    tail: str
    head: str
    twin: int
    edge: str


@dataclass(frozen=True)
class Face:
    id: int
    boundary: tuple[int, ...]
    kind: FaceKind

    def __len__(self) -> int:
        return len(self.boundary)


class PlaneGraph:
    """Immutable connected plane graph with designated special faces.

    Use :func:`build_plane_graph` to construct instances.
    """

    __slots__ = (
        "vertices",
        "edges",
        "darts",
        "rotation",
        "faces",
        "outer_face",
        "central_face",
        "reference_dart",
        "_face_of",
        "_succ",
        "_pos",
        "_edge_index",
        "_vertex_index",
        "_dual",
    )

    def __init__(
        self,
        vertices: tuple[str, ...],
        edges: tuple[tuple[str, str, str], ...],
        rotation: Mapping[str, tuple[int, ...]],
        faces: tuple[Face, ...],
        face_of: tuple[int, ...],
        succ: tuple[int, ...],
        outer_face: int,
        central_face: int,
        reference_dart: int,
    ) -> None:
        self.vertices = vertices
        self.edges = edges
        self.darts = tuple(
            Dart(2 * i + s, (u, v)[s], (v, u)[s], (2 * i + s) ^ 1, name)
            for i, (name, u, v) in enumerate(edges)
            for s in (0, 1)
        )
        self.rotation = MappingProxyType(dict(rotation))
        self.faces = faces
        self.outer_face = outer_face
        self.central_face = central_face
        self.reference_dart = reference_dart
        self._face_of = face_of
        self._succ = succ
        pos = [0] * len(self.darts)
        for v, order in rotation.items():
            for k, d in enumerate(order):
                pos[d] = k
        self._pos = tuple(pos)
        self._edge_index = MappingProxyType({name: i for i, (name, _, _) in enumerate(edges)})
        self._vertex_index = MappingProxyType({v: i for i, v in enumerate(vertices)})
        dual: dict[int, list[tuple[int, int]]] = {f.id: [] for f in faces}
        for i in range(len(edges)):
            f, h = face_of[2 * i], face_of[2 * i + 1]
            dual[f].append((h, i))
            dual[h].append((f, i))
        self._dual = MappingProxyType({f: tuple(a) for f, a in dual.items()})

    # -- basic accessors ------------------------------------------------------

    @property
    def num_darts(self) -> int:
        return len(self.darts)

    @property
    def outer_and_central(self) -> bool:
        return self.outer_face == self.central_face

    def tail(self, d: int) -> str:
        return self.darts[d].tail

    def head(self, d: int) -> str:
        return self.darts[d].head

    @staticmethod
    def twin(d: int) -> int:
        return d ^ 1

    def edge_name(self, d: int) -> str:
        return self.edges[d >> 1][0]

    def edge_index(self, name: str) -> int:
        return self._edge_index[name]

    def has_vertex(self, v: str) -> bool:
        return v in self._vertex_index

    def vertex_index(self, v: str) -> int:
        return self._vertex_index[v]

    def degree(self, v: str) -> int:
        return len(self.rotation[v])

    def out_darts(self, v: str) -> tuple[int, ...]:
        return self.rotation[v]

    def face_of(self, d: int) -> int:
        """Face lying locally to the right of ``d``."""
        return self._face_of[d]

    def succ(self, d: int) -> int:
        """Next dart on the face to the right of ``d``."""
        return self._succ[d]

    def rot_next(self, d: int) -> int:
        """Dart following ``d`` clockwise around ``tail(d)``."""
        order = self.rotation[self.darts[d].tail]
        return order[(self._pos[d] + 1) % len(order)]

    def rot_prev(self, d: int) -> int:
        order = self.rotation[self.darts[d].tail]
        return order[(self._pos[d] - 1) % len(order)]

    def dart_key(self, d: int) -> str:
        return self.edges[d >> 1][0] + ("-" if d & 1 else "+")

    def dart(self, ref: DartRef) -> int:
        """Resolve a dart id or a ``"name+"``/``"name-"`` key to a dart id."""
        if isinstance(ref, int):
            if not 0 <= ref < len(self.darts):
                raise KeyError(f"no dart {ref}")
            return ref
        if len(ref) < 2 or ref[-1] not in "+-":
            raise KeyError(f"malformed dart key {ref!r}")
        i = self._edge_index[ref[:-1]]
        return 2 * i + (ref[-1] == "-")

    def face_kind(self, f: int) -> FaceKind:
        return self.faces[f].kind

    def is_regular(self, f: int) -> bool:
        return self.faces[f].kind is FaceKind.REGULAR

    def dual_neighbours(self, f: int) -> tuple[tuple[int, int], ...]:
        """``(face, edge index)`` pairs across the edges bounding face ``f``."""
        return self._dual[f]

    def dual_edges(self) -> Iterable[tuple[int, int, int]]:
        """Yield ``(edge index, face right of +dart, face right of -dart)``."""
        for i in range(len(self.edges)):
            yield i, self._face_of[2 * i], self._face_of[2 * i + 1]

    def vertex_sequence(self, darts: Sequence[int]) -> list[str]:
        return path_vertices(self, darts)

    def __repr__(self) -> str:
        return (
            f"PlaneGraph(|V|={len(self.vertices)}, |E|={len(self.edges)}, "
            f"|F|={len(self.faces)}, outer={self.outer_face}, central={self.central_face})"
        )

    def _key(self) -> tuple:
        return (
            self.vertices,
            self.edges,
            tuple(self.rotation[v] for v in self.vertices),
            self.outer_face,
            self.central_face,
            self.reference_dart,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlaneGraph):
            return NotImplemented
        return self is other or self._key() == other._key()

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))


def build_plane_graph(
    vertices: Sequence[str],
    edges: Sequence[tuple[str, str, str]],
    rotation: Mapping[str, Sequence[str]],
    outer: DartRef,
    central: DartRef,
    reference: DartRef,
    outer_and_central: bool = False,
) -> PlaneGraph:
    """Validate a raw rotation system and derive its faces.

    ``rotation`` maps each vertex to the names of its incident edges in
    clockwise order; since self-loops are excluded an edge name identifies the
    dart leaving that vertex.  ``outer`` and ``central`` are darts having the
    respective face on their right, ``reference`` the reference dart.
    """
    vertices = tuple(vertices)
    if len(set(vertices)) != len(vertices):
        raise GraphError("duplicate vertex id")
    vset = set(vertices)
    edges = tuple((str(n), u, v) for n, u, v in edges)
    names: dict[str, int] = {}
    for i, (name, u, v) in enumerate(edges):
        if name in names:
            raise GraphError(f"duplicate edge name {name!r}")
        if u not in vset or v not in vset:
            raise GraphError(f"edge {name!r} has an unknown endpoint")
        if u == v:
            raise GraphError(f"edge {name!r} is a self-loop")
        names[name] = i
    if not edges:
        raise GraphError("graph needs at least one edge")

    rot: dict[str, tuple[int, ...]] = {}
    for v in vertices:
        order = rotation.get(v, ())
        if len(order) > MAX_DEGREE:
            raise DegreeExceeded(f"vertex {v!r} has degree {len(order)} > {MAX_DEGREE}")
        darts = []
        for name in order:
            if name not in names:
                raise InvalidRotation(f"rotation of {v!r} names unknown edge {name!r}")
            i = names[name]
            _, a, b = edges[i]
            if v == a:
                darts.append(2 * i)
            elif v == b:
                darts.append(2 * i + 1)
            else:
                raise InvalidRotation(f"edge {name!r} is not incident to {v!r}")
        if len(set(darts)) != len(darts):
            raise InvalidRotation(f"rotation of {v!r} repeats an edge")
        rot[v] = tuple(darts)
    unknown = set(rotation) - vset
    if unknown:
        raise InvalidRotation(f"rotation given for unknown vertices {sorted(unknown)}")
    listed = sorted(d for order in rot.values() for d in order)
    if listed != list(range(2 * len(edges))):
        raise InvalidRotation("rotation system does not list every edge at both endpoints")

    _check_connected(vertices, edges)

    succ, face_of, boundaries = _trace(edges, rot)

    if len(vertices) - len(edges) + len(boundaries) != 2:
        raise NonPlanarRotation(
            f"Euler's formula fails: |V|-|E|+|F| = "
            f"{len(vertices)}-{len(edges)}+{len(boundaries)} != 2"
        )

    probe = _Probe(edges, names)
    outer_d = probe.dart(outer, "outer")
    central_d = probe.dart(central, "central")
    ref_d = probe.dart(reference, "reference")
    of, cf = face_of[outer_d], face_of[central_d]
    if outer_and_central and of != cf:
        raise BadDesignation("outer-and-central flag set but the darts lie on different faces")
    if not outer_and_central and of == cf:
        raise BadDesignation("outer and central dart lie on the same face; set the outer-and-central flag")
    if face_of[ref_d ^ 1] != of:
        raise BadReferenceDart("the outer face must lie locally to the left of the reference dart")

    faces = []
    for fid, walk in enumerate(boundaries):
        if fid == of and fid == cf:
            kind = FaceKind.OUTER_AND_CENTRAL
        elif fid == of:
            kind = FaceKind.OUTER
        elif fid == cf:
            kind = FaceKind.CENTRAL
        else:
            kind = FaceKind.REGULAR
        faces.append(Face(fid, walk, kind))

    return PlaneGraph(
        vertices, edges, rot, tuple(faces), tuple(face_of), tuple(succ), of, cf, ref_d
    )


def _trace(edges, rot) -> tuple[list[int], list[int], list[tuple[int, ...]]]:
    dart_head = [edges[d >> 1][2 - (d & 1)] for d in range(2 * len(edges))]
    pos = {}
    for v, order in rot.items():
        for k, d in enumerate(order):
            pos[d] = k

    succ = [0] * (2 * len(edges))
    for d in range(2 * len(edges)):
        t = d ^ 1
        order = rot[dart_head[d]]
        succ[d] = order[(pos[t] - 1) % len(order)]

    face_of = [-1] * len(succ)
    boundaries: list[tuple[int, ...]] = []
    for start in range(len(succ)):
        if face_of[start] != -1:
            continue
        walk = []
        d = start
        while face_of[d] == -1:
            face_of[d] = len(boundaries)
            walk.append(d)
            d = succ[d]
        if d != start:  # pragma: no cover - succ is a permutation
            raise InvalidRotation("face tracing did not close")
        boundaries.append(tuple(walk))
    return succ, face_of, boundaries


def trace_faces(
    edges: Sequence[tuple[str, str, str]], rotation: Mapping[str, Sequence[str]]
) -> list[int]:
    """Face id of every dart for a rotation given by edge names, without any checks."""
    names = {e[0]: i for i, e in enumerate(edges)}
    rot = {}
    for v, order in rotation.items():
        rot[v] = tuple(2 * names[n] + (edges[names[n]][1] != v) for n in order)
    return _trace(tuple(edges), rot)[1]


class _Probe:
    def __init__(self, edges, names) -> None:
        self.edges = edges
        self.names = names

    def dart(self, ref: DartRef, what: str) -> int:
        if isinstance(ref, int):
            if not 0 <= ref < 2 * len(self.edges):
                raise BadDesignation(f"{what} dart {ref} does not exist")
            return ref
        if len(ref) < 2 or ref[-1] not in "+-" or ref[:-1] not in self.names:
            raise BadDesignation(f"{what} dart {ref!r} does not exist")
        return 2 * self.names[ref[:-1]] + (ref[-1] == "-")


def _check_connected(vertices, edges) -> None:
    adj: dict[str, list[str]] = {v: [] for v in vertices}
    for _, u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {vertices[0]}
    queue = deque(seen)
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    if len(seen) != len(vertices):
        raise Disconnected(f"{len(vertices) - len(seen)} vertices unreachable from {vertices[0]!r}")


# -- paths, cycles and subpaths -------------------------------------------------


def path_vertices(g: PlaneGraph, darts: Sequence[int]) -> list[str]:
    if not darts:
        return []
    return [g.tail(darts[0])] + [g.head(d) for d in darts]


def check_path(g: PlaneGraph, darts: Sequence[int]) -> None:
    """Raise :class:`NotAPath` unless ``darts`` form a simple path."""
    for a, b in zip(darts, darts[1:]):
        if g.head(a) != g.tail(b):
            raise NotAPath(f"{g.dart_key(a)} and {g.dart_key(b)} are not consecutive")
    verts = path_vertices(g, darts)
    if len(set(verts)) != len(verts):
        raise NotAPath("path visits a vertex twice")


def is_closed(g: PlaneGraph, darts: Sequence[int]) -> bool:
    return bool(darts) and all(
        g.head(a) == g.tail(b) for a, b in zip(darts, tuple(darts[1:]) + (darts[0],))
    )


def check_simple_cycle(g: PlaneGraph, darts: Sequence[int]) -> None:
    if not is_closed(g, darts):
        raise NotACycle("dart sequence is not a closed walk")
    tails = [g.tail(d) for d in darts]
    if len(set(tails)) != len(tails) or len({d >> 1 for d in darts}) != len(darts):
        raise NotSimple("cycle repeats a vertex or an edge")


def reverse_path(darts: Sequence[int]) -> tuple[int, ...]:
    return tuple(d ^ 1 for d in reversed(darts))


def _positions(g: PlaneGraph, darts: Sequence[int], point: Endpoint, as_start: bool) -> list[int]:
    """Indices into ``darts`` matching ``point``.

    A dart id matches its own index.  A vertex matches the dart leaving it
    when used as a start point and the dart entering it as an end point.
    """
    if isinstance(point, int):
        return [i for i, d in enumerate(darts) if d == point]
    if as_start:
        return [i for i, d in enumerate(darts) if g.tail(d) == point]
    return [i for i, d in enumerate(darts) if g.head(d) == point]


def subpath(g: PlaneGraph, container: Sequence[int], start: Endpoint, end: Endpoint) -> tuple[int, ...]:
    """Inclusive directed subpath of a path, cycle or face boundary.

    ``start`` and ``end`` are either darts (the subpath starts with / ends
    with that dart) or vertices.  On closed containers the subpath wraps
    around; ``subpath(C, e, e)`` is the single dart ``e`` and for two vertices
    ``subpath(C, v, v)`` is empty.
    """
    container = tuple(container)
    if not container:
        raise NotOnContainer("empty container")
    closed = is_closed(g, container)
    si = _positions(g, container, start, True)
    ei = _positions(g, container, end, False)
    if not isinstance(start, int) and not closed and g.head(container[-1]) == start:
        si = si or [len(container)]
    if not isinstance(end, int) and not closed and g.tail(container[0]) == end:
        ei = ei or [-1]
    for what, pts, point in (("start", si, start), ("end", ei, end)):
        if not pts:
            raise NotOnContainer(f"{what} {point!r} is not on the container")
        if len(pts) > 1:
            raise AmbiguousEndpoint(f"{what} {point!r} occurs {len(pts)} times")
    i, j = si[0], ei[0]
    if not isinstance(start, int) and not isinstance(end, int) and start == end:
        return ()
    if closed:
        n = len(container)
        length = (j - i) % n + 1
        return tuple(container[(i + k) % n] for k in range(length))
    if j < i - 1:
        raise NotOnContainer("end point precedes start point on an open path")
    return container[i : j + 1]


# -- sides of a cycle -------------------------------------------------------------


@dataclass(frozen=True)
class CycleSides:
    right: frozenset[int]
    left: frozenset[int]
    interior: frozenset[int]
    exterior: frozenset[int]
    clockwise: bool
    essential: bool


def _flood(g: PlaneGraph, blocked: set[int], seeds: Iterable[int]) -> set[int]:
    seen = set(seeds)
    queue = deque(seen)
    while queue:
        f = queue.popleft()
        for h, i in g.dual_neighbours(f):
            if h not in seen and i not in blocked:
                seen.add(h)
                queue.append(h)
    return seen


def interior_faces(g: PlaneGraph, cycle: Sequence[int]) -> set[int]:
    """Faces to the right of a simple clockwise cycle, without checks."""
    return _flood(g, {d >> 1 for d in cycle}, (g.face_of(d) for d in cycle))


def cycle_sides(g: PlaneGraph, cycle: Sequence[int]) -> CycleSides:
    """Split the faces of ``g`` into the two sides of a simple cycle.

    The interior is the side without the outer face; the cycle is clockwise
    when its interior lies to its right, and essential when the central face
    is in its interior.
    """
    check_simple_cycle(g, cycle)
    blocked = {d >> 1 for d in cycle}
    right = _flood(g, blocked, (g.face_of(d) for d in cycle))
    left = _flood(g, blocked, (g.face_of(d ^ 1) for d in cycle))
    if right & left:  # pragma: no cover - impossible for plane graphs
        raise NotSimple("cycle does not separate the plane")
    clockwise = g.outer_face in left
    interior, exterior = (right, left) if clockwise else (left, right)
    return CycleSides(
        frozenset(right),
        frozenset(left),
        frozenset(interior),
        frozenset(exterior),
        clockwise,
        g.central_face in interior,
    )


def is_essential(g: PlaneGraph, cycle: Sequence[int]) -> bool:
    return cycle_sides(g, cycle).essential


def orient_clockwise(g: PlaneGraph, cycle: Sequence[int]) -> tuple[int, ...]:
    """Return ``cycle`` directed so that its interior lies to its right."""
    if cycle_sides(g, cycle).clockwise:
        return tuple(cycle)
    return reverse_path(cycle)


def rotate_to_min(cycle: Sequence[int]) -> tuple[int, ...]:
    k = min(range(len(cycle)), key=cycle.__getitem__)
    return tuple(cycle[k:]) + tuple(cycle[:k])
