"""Augment a valid representation until every face is a rectangle.

The work happens on a mutable :class:`Draft` that stores a direction for
every dart; angles are re-derived from the directions whenever a
representation is rebuilt.  Darts keep the ids ``2*i`` / ``2*i + 1`` of their
edge index ``i`` across rebuilds.

Turns along a face are read in an expanded form in which the 360 degree
angle at a degree-1 vertex counts as two left turns separated by a virtual
side of length zero (a *tip* side).  Every turn is then -1, 0 or +1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .cycles import (
    EssentialCycle,
    EssentialTester,
    labeling,
    make_essential_cycle,
    simple_loops,
)
from .errors import (
    CycleLimitExceeded,
    InternalInvariantBroken,
    NotACandidate,
    NotValid,
    PortOccupied,
)
from .plane_graph import FaceKind, PlaneGraph, build_plane_graph, rotate_to_min
from .representation import Direction, OrthoRadialRepresentation
from .validity import (
    DEFAULT_MAX_CYCLES,
    MonotoneKind,
    ValidityReport,
    validate,
)

# -- draft ---------------------------------------------------------------------------


class Namer:
    """Fresh vertex and edge names that avoid a set of taken names."""

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable[str] = ()) -> None:
        self.vertices = set(vertices)
        self.edges = set(edges)
        self._nv = 0
        self._ne = 0

    def vertex(self) -> str:
        while True:
            self._nv += 1
            name = f"_v{self._nv}"
            if name not in self.vertices:
                self.vertices.add(name)
                return name

    def edge(self) -> str:
        while True:
            self._ne += 1
            name = f"_e{self._ne}"
            if name not in self.edges:
                self.edges.add(name)
                return name


class Draft:
    """Mutable geometry-free description of a representation by directions."""

    def __init__(self, rep: OrthoRadialRepresentation, namer: Namer | None = None) -> None:
        g = rep.graph
        self.vertices = list(g.vertices)
        self.edges = [list(e) for e in g.edges]
        self.rotation = {v: list(g.out_darts(v)) for v in g.vertices}
        self.dirs = [int(x) for x in rep.directions()]
        self.outer = g.faces[g.outer_face].boundary[0]
        self.central = g.faces[g.central_face].boundary[0]
        self.reference = g.reference_dart
        self.outer_and_central = g.outer_and_central
        self.namer = namer or Namer(g.vertices, (e[0] for e in g.edges))
        self.namer.vertices.update(g.vertices)
        self.namer.edges.update(e[0] for e in g.edges)

    def tail(self, d: int) -> str:
        return self.edges[d >> 1][1 + (d & 1)]

    def head(self, d: int) -> str:
        return self.edges[d >> 1][2 - (d & 1)]

    def _sort(self, v: str) -> None:
        self.rotation[v].sort(key=lambda d: self.dirs[d])

    def add_vertex(self) -> str:
        v = self.namer.vertex()
        self.vertices.append(v)
        self.rotation[v] = []
        return v

    def add_edge(self, u: str, v: str, direction: int) -> int:
        """Insert an edge ``u -> v`` pointing in ``direction``; return its dart."""
        direction %= 4
        for x, dd in ((u, direction), (v, (direction + 2) % 4)):
            if any(self.dirs[o] == dd for o in self.rotation[x]):
                raise PortOccupied(f"vertex {x!r} already has an edge pointing {Direction(dd).name}")
        i = len(self.edges)
        self.edges.append([self.namer.edge(), u, v])
        self.dirs += [direction, (direction + 2) % 4]
        self.rotation[u].append(2 * i)
        self.rotation[v].append(2 * i + 1)
        self._sort(u)
        self._sort(v)
        return 2 * i

    def split(self, d: int) -> tuple[str, str]:
        """Subdivide the edge of dart ``d``; return the new vertex and edge name."""
        i = d >> 1
        name, a, b = self.edges[i]
        z = self.add_vertex()
        j = len(self.edges)
        new_name = self.namer.edge()
        self.edges[i] = [name, a, z]
        self.edges.append([new_name, z, b])
        self.dirs += [self.dirs[2 * i], self.dirs[2 * i + 1]]
        rot_b = self.rotation[b]
        rot_b[rot_b.index(2 * i + 1)] = 2 * j + 1
        self.rotation[z] = [2 * i + 1, 2 * j]
        self._sort(z)
        if self.reference == 2 * i:
            self.reference = 2 * j
        return z, new_name

    def dart_from(self, u: str, direction: int) -> int | None:
        for o in self.rotation[u]:
            if self.dirs[o] == direction % 4:
                return o
        return None

    def build(self) -> OrthoRadialRepresentation:
        rotation = {
            v: [self.edges[d >> 1][0] for d in self.rotation[v]] for v in self.vertices
        }
        g = build_plane_graph(
            self.vertices,
            [tuple(e) for e in self.edges],
            rotation,
            self.outer,
            self.central,
            self.reference,
            self.outer_and_central,
        )
        return OrthoRadialRepresentation.from_directions(g, self.dirs)


# -- expanded face walks ---------------------------------------------------------------


@dataclass(frozen=True)
class Side:
    """A dart of a face walk, or the tip side at the head of ``dart``."""

    dart: int
    tip: bool = False


def face_sides(rep: OrthoRadialRepresentation, f: int) -> tuple[list[Side], list[int]]:
    """Sides of face ``f`` and the turn after each side (expanded form)."""
    sides: list[Side] = []
    turns: list[int] = []
    for d in rep.graph.faces[f].boundary:
        t = rep.turn(d)
        sides.append(Side(d))
        if t == -2:
            turns.append(-1)
            sides.append(Side(d, True))
            turns.append(-1)
        else:
            turns.append(t)
    return sides, turns


def side_direction(dirs: Sequence[int], side: Side) -> int:
    return (dirs[side.dart] - (1 if side.tip else 0)) % 4


def count_left_turns(rep: OrthoRadialRepresentation) -> int:
    """Left turns over all regular faces; a degree-1 vertex counts twice."""
    total = 0
    for f in rep.graph.faces:
        if f.kind is FaceKind.REGULAR:
            for d in f.boundary:
                t = rep.turn(d)
                if t < 0:
                    total -= t
    return total


def is_rectangular(rep: OrthoRadialRepresentation) -> bool:
    """Regular faces have only right turns, outer and central faces no turns."""
    if not rep.satisfies_local_conditions():
        return False
    for f in rep.graph.faces:
        turns = [rep.turn(d) for d in f.boundary]
        if f.kind is FaceKind.REGULAR:
            if any(t < 0 for t in turns):
                return False
        elif any(turns):
            return False
    return True


@dataclass(frozen=True)
class LeftTurn:
    face: int
    index: int  # position of the turn in the expanded walk (after sides[index])
    vertex: str
    direction: Direction  # direction of the edge to insert

    @property
    def vertical(self) -> bool:
        return self.direction.vertical


def find_left_turn(rep: OrthoRadialRepresentation) -> LeftTurn | None:
    """A left turn on a regular face followed by two right turns, or ``None``."""
    dirs = rep.directions()
    for face in rep.graph.faces:
        if face.kind is not FaceKind.REGULAR:
            continue
        sides, turns = face_sides(rep, face.id)
        n = len(turns)
        for k in range(n):
            if turns[k] != -1:
                continue
            following = [turns[(k + j) % n] for j in range(1, n) if turns[(k + j) % n]]
            if following[:2] == [1, 1]:
                side = sides[k]
                return LeftTurn(
                    face.id,
                    k,
                    rep.graph.head(side.dart),
                    Direction(side_direction(dirs, side)),
                )
    return None


@dataclass(frozen=True)
class Candidate:
    position: int  # index into the expanded side list of the face
    side: Side

    def describe(self, g: PlaneGraph) -> str:
        if self.side.tip:
            return f"tip {g.head(self.side.dart)}"
        return g.dart_key(self.side.dart)


def candidates(rep: OrthoRadialRepresentation, lt: LeftTurn) -> list[Candidate]:
    """Sides after the left turn whose prefix rotation from ``u`` is 2, in face order."""
    sides, turns = face_sides(rep, lt.face)
    n = len(sides)
    out = []
    prefix = 0
    for j in range(1, n):
        pos = (lt.index + j) % n
        if j > 1:
            prefix += turns[(pos - 1) % n]
        if prefix == 2:
            out.append(Candidate(pos, sides[pos]))
    return out


# -- augmentation ----------------------------------------------------------------------------


@dataclass(frozen=True)
class Target:
    """Where the new edge from ``u`` ends.

    ``kind`` is ``"split"`` (new vertex on the edge of ``dart``), ``"tip"``
    (the degree-1 vertex at the head of ``dart``) or ``"vertex"`` (existing
    vertex ``vertex`` whose corner after ``dart`` on the face is free).
    """

    kind: str
    dart: int
    vertex: str | None = None

    def describe(self, g: PlaneGraph) -> str:
        if self.kind == "split":
            return f"split {g.dart_key(self.dart)}"
        if self.kind == "tip":
            return f"tip {g.head(self.dart)}"
        return f"vertex {self.vertex}"


def candidate_target(c: Candidate) -> Target:
    return Target("tip" if c.side.tip else "split", c.side.dart)


@dataclass
class Augmentation:
    base: OrthoRadialRepresentation
    left_turn: LeftTurn
    target: Target
    result: OrthoRadialRepresentation
    new_edge: str
    new_vertex: str | None = None
    split_edge: str | None = None
    split_piece: str | None = None


def _corner_has_port(rep: OrthoRadialRepresentation, dirs, corner: int, port: int) -> bool:
    """Whether ``port`` lies strictly inside the angle of dart ``corner``."""
    start = dirs[corner ^ 1]
    steps = rep.angle(corner) // 90
    return any((start - k) % 4 == port % 4 for k in range(1, steps))


def augment(
    rep: OrthoRadialRepresentation,
    lt: LeftTurn,
    target: Target | Candidate,
    namer: Namer | None = None,
    check: bool = True,
) -> Augmentation:
    """Insert an edge from the left turn ``lt`` to ``target``.

    For split and tip targets the target must be a candidate (prefix rotation
    2).  For an existing vertex the corner of the face after ``target.dart``
    must have a free port facing ``u``.
    """
    if isinstance(target, Candidate):
        target = candidate_target(target)
    g = rep.graph
    dirs = rep.directions()
    delta = int(lt.direction)
    if check and target.kind in ("split", "tip"):
        wanted = {c.side for c in candidates(rep, lt)}
        if Side(target.dart, target.kind == "tip") not in wanted:
            raise NotACandidate(f"{target.describe(g)} is not a candidate for the left turn at {lt.vertex}")
    draft = Draft(rep, namer)
    info: dict = {}
    if target.kind == "split":
        name = g.edge_name(target.dart)
        z, piece = draft.split(target.dart)
        info.update(new_vertex=z, split_edge=name, split_piece=piece)
    elif target.kind == "tip":
        z = g.head(target.dart)
        if g.degree(z) != 1:
            raise NotACandidate(f"{z!r} is not a degree-1 vertex")
    elif target.kind == "vertex":
        z = target.vertex
        if z is None or g.head(target.dart) != z:
            raise NotACandidate("vertex target must be the head of its corner dart")
        if not _corner_has_port(rep, dirs, target.dart, delta + 2):
            raise PortOccupied(f"no free port at {z!r} facing {lt.vertex!r}")
        if g.face_of(target.dart) != lt.face:
            raise NotACandidate("corner is not on the face of the left turn")
    else:
        raise ValueError(f"unknown target kind {target.kind!r}")
    if z == lt.vertex:
        raise NotACandidate("target coincides with the left-turn vertex")
    d = draft.add_edge(lt.vertex, z, delta)
    result = draft.build()
    return Augmentation(rep, lt, target, result, draft.edges[d >> 1][0], **info)


# -- outer and central triangles -------------------------------------------------------------


def central_boundary_cycle(rep: OrthoRadialRepresentation) -> EssentialCycle:
    """The simple essential cycle contained in the central face boundary."""
    g = rep.graph
    tester = EssentialTester(g)
    for loop in simple_loops(g, g.faces[g.central_face].boundary):
        if tester.orient(loop) is not None:
            return make_essential_cycle(g, loop)
    raise InternalInvariantBroken("central face boundary contains no essential cycle")


@dataclass
class TriangleInsertion:
    result: OrthoRadialRepresentation
    outer_vertices: tuple[str, str, str]
    central_vertices: tuple[str, str, str]
    hook_edge: str  # edge of the old central boundary that was split
    added_vertices: list[str]
    added_edges: list[str]
    split_pieces: dict[str, str]  # new piece -> edge it was split from


def _triangle(draft: Draft) -> tuple[tuple[str, str, str], list[int]]:
    a, b, c = (draft.add_vertex() for _ in range(3))
    darts = [draft.add_edge(a, b, 0), draft.add_edge(b, c, 0), draft.add_edge(c, a, 0)]
    return (a, b, c), darts


def rectangulate_outer_central(
    rep: OrthoRadialRepresentation, namer: Namer | None = None, strict: bool = True
) -> TriangleInsertion:
    """Enclose the graph in a triangle and place a triangle in the central face.

    The outer triangle hangs from a new vertex on the reference edge by an
    upward edge and carries the new reference edge.  The central triangle
    hangs below a new vertex on an edge of the central boundary labelled 0.
    With ``strict=False`` any edge of that boundary pointing right is used
    when no edge is labelled 0.
    """
    g0 = rep.graph
    draft = Draft(rep, namer)
    first_new_edge = len(draft.edges)
    pieces: dict[str, str] = {}
    added_vertices: list[str] = []

    ref_name = g0.edge_name(g0.reference_dart)
    y, piece = draft.split(g0.reference_dart)
    pieces[piece] = ref_name
    added_vertices.append(y)
    outer_vs, outer_darts = _triangle(draft)
    added_vertices += outer_vs
    draft.add_edge(y, outer_vs[0], Direction.UP)
    draft.reference = outer_darts[0]
    draft.outer = outer_darts[0] ^ 1
    if draft.outer_and_central:
        draft.central = outer_darts[0]
        draft.outer_and_central = False
    mid = draft.build()

    cycle = central_boundary_cycle(mid)
    lab = labeling(mid, cycle)
    dirs = mid.directions()
    choice = next((d for d, x in zip(cycle.darts, lab.values) if x == 0), None)
    if choice is None:
        if strict:
            raise InternalInvariantBroken("central boundary has no edge labelled 0")
        choice = next(d for d in cycle.darts if dirs[d] == Direction.RIGHT)
    hook_name = mid.graph.edge_name(choice)
    draft = Draft(mid, draft.namer)
    z, piece = draft.split(choice)
    pieces[piece] = pieces.get(hook_name, hook_name)
    added_vertices.append(z)
    central_vs, central_darts = _triangle(draft)
    added_vertices += central_vs
    draft.add_edge(z, central_vs[0], Direction.DOWN)
    draft.central = central_darts[0]
    result = draft.build()
    added_edges = [e[0] for e in draft.edges[first_new_edge:] if e[0] not in pieces]
    return TriangleInsertion(
        result, tuple(outer_vs), tuple(central_vs), hook_name, added_vertices, added_edges, pieces
    )


# -- resolving left turns ----------------------------------------------------------------------


class Case(enum.Enum):
    VERTICAL = "vertical"
    HORIZONTAL = "horizontal"


@dataclass
class Attempt:
    target: str
    valid: bool
    kinds: frozenset[MonotoneKind] = frozenset()


@dataclass
class StepRecord:
    face: int
    vertex: str
    case: Case
    direction: Direction
    candidates: list[str]
    attempts: list[Attempt]
    chosen: str
    fallback: bool
    left_turns_before: int
    left_turns_after: int
    notes: list[str] = field(default_factory=list)  # observations from the fallback search


def _essential_cycles_through(rep: OrthoRadialRepresentation, edge: int, limit: int | None):
    """Simple essential cycles containing ``edge``, oriented clockwise, lazily.

    A cycle is essential iff it crosses a fixed dual path from the central to
    the outer face an odd number of times, so the crossing parity is carried
    along the search.
    """
    g = rep.graph
    if g.outer_and_central:
        return
    tester = EssentialTester(g)
    index = {v: i for i, v in enumerate(g.vertices)}
    n = len(g.vertices)
    head = [index[g.head(d)] for d in range(g.num_darts)]
    outs = [[d for d in g.out_darts(v) if d >> 1 != edge] for v in g.vertices]
    crossing = [0] * len(g.edges)
    for i, _, _ in tester.steps:
        crossing[i] ^= 1
    a, b = index[g.tail(2 * edge)], head[2 * edge]

    found = 0
    path = [2 * edge]
    parity = [crossing[edge]]
    on_path = [False] * n
    on_path[a] = on_path[b] = True
    stack = [iter(outs[b])]
    while stack:
        d = next(stack[-1], None)
        if d is None:
            stack.pop()
            if len(path) > 1:
                on_path[head[path.pop()]] = False
                parity.pop()
            continue
        w = head[d]
        odd = parity[-1] ^ crossing[d >> 1]
        if w == a:
            if odd:
                oriented = tester.orient(path + [d])
                found += 1
                if limit is not None and found > limit:
                    raise CycleLimitExceeded(f"more than {limit} essential cycles through new edge")
                yield EssentialCycle(rotate_to_min(oriented))
        elif not on_path[w]:
            path.append(d)
            parity.append(odd)
            on_path[w] = True
            stack.append(iter(outs[w]))


def check_augmentation(
    aug: Augmentation, max_cycles: int | None = DEFAULT_MAX_CYCLES, full: bool = False
) -> ValidityReport:
    """Validate an augmented representation.

    The base is valid and adding or subdividing edges leaves the labels of
    old cycles unchanged, so only cycles through the new edge are checked
    unless ``full`` is set.
    """
    rep = aug.result
    if full:
        return validate(rep, max_cycles=max_cycles)
    edge = rep.graph.edge_index(aug.new_edge)
    cycles = _essential_cycles_through(rep, edge, max_cycles)
    return validate(rep, max_cycles=max_cycles, certificates=1, cycles=cycles)


def _kinds(report: ValidityReport) -> frozenset[MonotoneKind]:
    return frozenset(c.kind for c in report.monotone_cycles)


def resolve_left_turn(
    rep: OrthoRadialRepresentation,
    lt: LeftTurn,
    namer: Namer | None = None,
    checked: bool = True,
    max_cycles: int | None = DEFAULT_MAX_CYCLES,
    full_checks: bool = False,
) -> tuple[Augmentation, StepRecord]:
    """Remove the left turn ``lt`` by one validity-preserving edge insertion.

    Vertical insertions take the first candidate without validation unless
    ``full_checks`` is set.  Horizontal insertions try
    the candidates in face order and fall back to connecting ``u`` directly
    to an end of a gap between two consecutive candidates.  With
    ``checked=False`` nothing is validated and the first candidate is used.
    """
    g = rep.graph
    cands = candidates(rep, lt)
    if not cands:
        raise InternalInvariantBroken(f"no candidate for the left turn at {lt.vertex!r}")
    before = count_left_turns(rep)
    case = Case.VERTICAL if lt.vertical else Case.HORIZONTAL
    attempts: list[Attempt] = []
    notes: list[str] = []
    chosen: Augmentation | None = None
    fallback = False

    def attempt(target: Target, verify: bool = True) -> Augmentation | None:
        try:
            aug = augment(rep, lt, target, namer, check=False)
        except (PortOccupied, NotACandidate):
            attempts.append(Attempt(target.describe(g), False))
            return None
        if not checked or not verify:
            attempts.append(Attempt(target.describe(g), True))
            return aug
        report = check_augmentation(aug, max_cycles, full_checks)
        if report.inconclusive:
            raise InternalInvariantBroken(f"validation inconclusive: {report.message}")
        attempts.append(Attempt(target.describe(g), report.valid, _kinds(report)))
        return aug if report.valid else None

    if case is Case.VERTICAL or not checked:
        # a vertical insertion to the first candidate is always valid, so it
        # is only re-validated on request
        chosen = attempt(candidate_target(cands[0]), verify=full_checks)
        if chosen is None:
            raise InternalInvariantBroken(
                f"first candidate for vertical insertion at {lt.vertex!r} is not valid"
            )
    else:
        for c in cands:
            chosen = attempt(candidate_target(c))
            if chosen is not None:
                break
        if chosen is None:
            chosen = _fallback(rep, lt, cands, attempts, attempt, notes)
            fallback = True
    if chosen is None:
        raise InternalInvariantBroken(f"no valid augmentation for the left turn at {lt.vertex!r}")
    after = count_left_turns(chosen.result)
    if after >= before:
        raise InternalInvariantBroken("left-turn count did not decrease")
    record = StepRecord(
        lt.face,
        lt.vertex,
        case,
        lt.direction,
        [c.describe(g) for c in cands],
        attempts,
        chosen.target.describe(g),
        fallback,
        before,
        after,
        notes,
    )
    return chosen, record


def _fallback(rep, lt, cands, attempts, attempt, notes) -> Augmentation | None:
    g = rep.graph
    kinds = [a.kinds for a in attempts]
    first, last = kinds[0], kinds[-1]
    if lt.direction == Direction.RIGHT:
        if MonotoneKind.INCREASING in first:
            raise InternalInvariantBroken("first candidate created an increasing cycle")
        if MonotoneKind.DECREASING in last:
            raise InternalInvariantBroken("last candidate created a decreasing cycle")
    else:
        notes.append(
            f"left-pointing insertion: first candidate {sorted(k.value for k in first)}, "
            f"last candidate {sorted(k.value for k in last)}"
        )
    pairs = list(zip(range(len(cands)), range(1, len(cands))))

    def pattern(i: int, j: int) -> bool:
        return MonotoneKind.DECREASING in kinds[i] and MonotoneKind.INCREASING in kinds[j]

    ordered = [p for p in pairs if pattern(*p)] + [p for p in pairs if not pattern(*p)]
    sides, _ = face_sides(rep, lt.face)
    for i, j in ordered:
        c1, c2 = cands[i], cands[j]
        w_corner = c1.side.dart
        if c2.side.tip:
            v_corner = c2.side.dart
        else:
            prev = sides[(c2.position - 1) % len(sides)]
            v_corner = prev.dart
        for corner in (w_corner, v_corner):
            z = g.head(corner)
            aug = attempt(Target("vertex", corner, z))
            if aug is not None:
                if not pattern(i, j):
                    notes.append("direct connection found outside a decreasing/increasing pair")
                return aug
    return None


# -- full pipeline ------------------------------------------------------------------------------


@dataclass
class RectangulationResult:
    rect_rep: OrthoRadialRepresentation
    added_vertices: list[str]
    added_edges: list[str]
    edge_origin: dict[str, str | None]
    steps: list[StepRecord]
    triangles: TriangleInsertion
    intermediates: list[OrthoRadialRepresentation] = field(default_factory=list)

    @property
    def left_turn_counts(self) -> list[int]:
        if not self.steps:
            return []
        return [self.steps[0].left_turns_before] + [s.left_turns_after for s in self.steps]


def rectangulate(
    rep: OrthoRadialRepresentation,
    max_cycles: int | None = DEFAULT_MAX_CYCLES,
    checked: bool = True,
    keep_intermediates: bool = False,
    full_checks: bool = False,
    on_step: Callable[[OrthoRadialRepresentation, StepRecord], None] | None = None,
    assume_valid: bool = False,
) -> RectangulationResult:
    """Augment ``rep`` until all faces are rectangles.

    ``checked=False`` skips every validity check and takes the first option
    at each step; it is meant for probing invalid inputs and never raises
    :class:`NotValid`.  ``assume_valid`` skips only the initial validation.
    """
    g0 = rep.graph
    if checked and not assume_valid:
        report = validate(rep, max_cycles=max_cycles)
        if not report.valid:
            raise NotValid(f"representation is {report.status.value}", report)
    namer = Namer(g0.vertices, (e[0] for e in g0.edges))
    tri = rectangulate_outer_central(rep, namer, strict=checked)
    current = tri.result
    if checked:
        report = validate(current, max_cycles=max_cycles)
        if not report.valid:
            raise InternalInvariantBroken("triangle insertion broke validity")
    origin: dict[str, str | None] = {name: name for name, _, _ in g0.edges}
    for piece, src in tri.split_pieces.items():
        origin[piece] = origin.get(src)  # None when the split edge was itself added
    for name in tri.added_edges:
        origin[name] = None
    added_vertices = list(tri.added_vertices)
    intermediates = [current] if keep_intermediates else []
    steps: list[StepRecord] = []
    while True:
        lt = find_left_turn(current)
        if lt is None:
            break
        aug, record = resolve_left_turn(
            current, lt, namer, checked=checked, max_cycles=max_cycles, full_checks=full_checks
        )
        if aug.new_vertex is not None:
            added_vertices.append(aug.new_vertex)
            origin[aug.split_piece] = origin[aug.split_edge]
        origin[aug.new_edge] = None
        current = aug.result
        steps.append(record)
        if keep_intermediates:
            intermediates.append(current)
        if on_step is not None:
            on_step(current, record)
    if not is_rectangular(current):
        raise InternalInvariantBroken("rectangulation finished with a non-rectangular face")
    added_edges = [name for name, src in origin.items() if src is None]
    return RectangulationResult(
        current, added_vertices, added_edges, origin, steps, tri, intermediates
    )
