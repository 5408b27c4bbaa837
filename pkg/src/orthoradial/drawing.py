"""Integer ortho-radial drawings: coordinates from flows and back.

A drawing lives on a cylinder of circumference ``K``.  A vertex sits at
column ``x`` (``0 <= x < K``) on circle ``y >= 1``; larger ``y`` lies
further from the centre.  Horizontal edges run along circles (``RIGHT`` is
clockwise), vertical edges along rays (``UP`` points outwards).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .cycles import DEFAULT_MAX_CYCLES
from .errors import GraphError, InconsistentClosure, InternalInvariantBroken, NotValid
from .flows import (
    Circulation,
    InfeasibilityCertificate,
    build_networks,
    feasible_circulation,
    lengths_from_flows,
)
from .plane_graph import build_plane_graph, trace_faces
from .rectangulation import RectangulationResult, rectangulate
from .representation import Direction, OrthoRadialRepresentation
from .validity import ValidityReport, validate

STEP = {
    Direction.RIGHT: (1, 0),
    Direction.DOWN: (0, -1),
    Direction.LEFT: (-1, 0),
    Direction.UP: (0, 1),
}


@dataclass(frozen=True)
class EdgeGeometry:
    tail: str
    head: str
    direction: Direction  # direction from tail to head
    length: int


@dataclass
class Drawing:
    circumference: int
    coords: dict[str, tuple[int, int]]
    edges: dict[str, EdgeGeometry]
    reference: str | None = None  # dart key of the reference dart, if known
    added_vertices: list[str] = field(default_factory=list)
    added_edges: list[str] = field(default_factory=list)
    origin: dict[str, str] = field(default_factory=dict)  # subdivision piece -> original edge

    def endpoint(self, name: str) -> tuple[int, int]:
        """Position reached by walking edge ``name`` from its tail."""
        e = self.edges[name]
        x, y = self.coords[e.tail]
        dx, dy = STEP[e.direction]
        return (x + dx * e.length) % self.circumference, y + dy * e.length


@dataclass
class DrawResult:
    drawing: Drawing
    augmented: Drawing
    rectangulation: RectangulationResult
    ver: Circulation
    rad: Circulation
    report: ValidityReport


def assign_coordinates(
    rep: OrthoRadialRepresentation, ver: Circulation, rad: Circulation
) -> Drawing:
    """Place the vertices of a rectangular representation using edge lengths."""
    g = rep.graph
    dirs = rep.directions()
    k, lengths = lengths_from_flows(rep, ver, rad)
    if k < 1:
        raise InconsistentClosure("circumference must be positive")
    root = g.tail(g.reference_dart)
    pos: dict[str, tuple[int, int]] = {root: (0, 0)}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        x, y = pos[v]
        for d in g.out_darts(v):
            dx, dy = STEP[dirs[d]]
            n = lengths[d >> 1]
            p = ((x + dx * n) % k, y + dy * n)
            w = g.head(d)
            if w not in pos:
                pos[w] = p
                queue.append(w)
            elif pos[w] != p:
                raise InconsistentClosure(f"edge {g.edge_name(d)!r} does not close up")
    low = min(y for _, y in pos.values())
    coords = {v: (pos[v][0], pos[v][1] - low + 1) for v in g.vertices}
    edges = {
        name: EdgeGeometry(u, v, dirs[2 * i], lengths[i]) for i, (name, u, v) in enumerate(g.edges)
    }
    return Drawing(k, coords, edges, reference=g.dart_key(g.reference_dart))


def draw_pipeline(
    rep: OrthoRadialRepresentation,
    max_cycles: int | None = DEFAULT_MAX_CYCLES,
    full_checks: bool = False,
) -> DrawResult:
    """Validate, rectangulate, solve both networks and place the vertices."""
    report = validate(rep, max_cycles=max_cycles, certificates=1)
    if not report.valid:
        raise NotValid(f"representation is {report.status.value}", report)
    res = rectangulate(rep, max_cycles=max_cycles, full_checks=full_checks, assume_valid=True)
    nver, nrad = build_networks(res.rect_rep)
    ver = feasible_circulation(nver)
    rad = feasible_circulation(nrad)
    if isinstance(ver, InfeasibilityCertificate) or isinstance(rad, InfeasibilityCertificate):
        raise InternalInvariantBroken("a valid rectangulation produced an infeasible network")
    full = assign_coordinates(res.rect_rep, ver, rad)
    full.added_vertices = list(res.added_vertices)
    full.added_edges = list(res.added_edges)
    full.origin = {p: o for p, o in res.edge_origin.items() if o is not None and p != o}
    drawing = compact(restrict(full, rep, res))
    return DrawResult(drawing, full, res, ver, rad, report)


def draw(rep: OrthoRadialRepresentation, max_cycles: int | None = DEFAULT_MAX_CYCLES) -> Drawing:
    """A compact drawing of ``rep``; raises :class:`NotValid` for invalid input."""
    return draw_pipeline(rep, max_cycles=max_cycles).drawing


def restrict(full: Drawing, rep: OrthoRadialRepresentation, res: RectangulationResult) -> Drawing:
    """Drop helper edges and merge subdivided edges back into the input edges."""
    g = rep.graph
    pieces: dict[str, list[str]] = {}
    for piece, src in res.edge_origin.items():
        if src is not None:
            pieces.setdefault(src, []).append(piece)
    edges = {}
    for name, u, v in g.edges:
        chain = pieces[name]
        directions = {full.edges[p].direction for p in chain}
        if len(directions) != 1:
            raise InternalInvariantBroken(f"pieces of edge {name!r} are not collinear")
        edges[name] = EdgeGeometry(u, v, full.edges[name].direction, sum(full.edges[p].length for p in chain))
    coords = {v: full.coords[v] for v in g.vertices}
    return Drawing(full.circumference, coords, edges, reference=g.dart_key(g.reference_dart))


def compact(drawing: Drawing) -> Drawing:
    """Remove columns and circles that carry no vertex.

    Only the cyclic order of the columns and the order of the circles
    matter for the representation, so squeezing them keeps it unchanged.
    The columns are rotated so that the tail of the reference dart stays in
    column 0.
    """
    xs = sorted({x for x, _ in drawing.coords.values()})
    ys = sorted({y for _, y in drawing.coords.values()})
    k = len(xs)
    shift = 0
    if drawing.reference is not None:
        # keep the tail of the reference dart in column 0
        e = drawing.edges[drawing.reference[:-1]]
        root = e.tail if drawing.reference[-1] == "+" else e.head
        shift = xs.index(drawing.coords[root][0])
    col = {x: (i - shift) % k for i, x in enumerate(xs)}
    row = {y: i + 1 for i, y in enumerate(ys)}
    coords = {v: (col[x], row[y]) for v, (x, y) in drawing.coords.items()}
    edges = {}
    for name, e in drawing.edges.items():
        (x0, y0), (x1, y1) = coords[e.tail], coords[e.head]
        if e.direction.vertical:
            length = abs(y1 - y0)
        elif e.direction == Direction.RIGHT:
            length = (x1 - x0) % k or k
        else:
            length = (x0 - x1) % k or k
        edges[name] = EdgeGeometry(e.tail, e.head, e.direction, length)
    return Drawing(k, coords, edges, drawing.reference, list(drawing.added_vertices),
                   list(drawing.added_edges), dict(drawing.origin))


# -- drawing -> representation ------------------------------------------------------------------


def extract_representation(
    drawing: Drawing, reference: str | None = None
) -> OrthoRadialRepresentation:
    """Read the ortho-radial representation off a drawing.

    Outer and central faces are found with rays through half-integer
    columns: the face above the outermost horizontal edge crossing a ray is
    the outer face, the face below the innermost one the central face.  If
    some ray meets no horizontal edge, the two faces coincide.  Without an
    explicit ``reference`` (or the one stored in the drawing) the reference
    dart is the clockwise dart of the outermost edge bounding the outer face,
    preferring edges that are not bridges: a path leaving the head of a
    bridge may have to turn back along it, and that U-turn shifts labels.
    """
    k = drawing.circumference
    vertices = list(drawing.coords)
    edge_list = [(name, e.tail, e.head) for name, e in drawing.edges.items()]
    dirs = []
    for e in drawing.edges.values():
        dirs += [e.direction, e.direction.opposite()]
    out: dict[str, list[int]] = {v: [] for v in vertices}
    for i, (_, u, v) in enumerate(edge_list):
        out[u].append(2 * i)
        out[v].append(2 * i + 1)
    rotation = {}
    for v, darts in out.items():
        darts.sort(key=lambda d: dirs[d])
        if len({dirs[d] for d in darts}) != len(darts):
            raise GraphError(f"two edges leave {v!r} in the same direction")
        rotation[v] = [edge_list[d >> 1][0] for d in darts]
    face_of = trace_faces(edge_list, rotation)

    top: dict[int, tuple[int, int]] = {}
    bottom: dict[int, tuple[int, int]] = {}
    for i, (name, e) in enumerate(drawing.edges.items()):
        if e.direction.vertical:
            continue
        r = 2 * i if e.direction == Direction.RIGHT else 2 * i + 1
        start = drawing.coords[edge_list[i][1 + (r & 1)]][0]
        y = drawing.coords[e.tail][1]
        for s in range(e.length):
            c = (start + s) % k
            if c not in top or y > top[c][0]:
                top[c] = (y, r)
            if c not in bottom or y < bottom[c][0]:
                bottom[c] = (y, r)
    if not top:
        raise GraphError("drawing has no horizontal edge")
    outer_faces = {face_of[r ^ 1] for _, r in top.values()}
    central_faces = {face_of[r] for _, r in bottom.values()}
    if len(outer_faces) != 1 or len(central_faces) != 1:
        raise GraphError("rays disagree on the outer or central face")
    both = outer_faces == central_faces
    if len(top) < k and not both:
        raise GraphError("an empty ray requires a single outer-and-central face")
    outer_d = next(r ^ 1 for _, r in top.values())
    central_d = next(r for _, r in bottom.values())
    of = face_of[outer_d]

    reference = reference or drawing.reference
    if reference is None:
        best = None
        for i, (name, e) in enumerate(drawing.edges.items()):
            if e.direction.vertical:
                continue
            r = 2 * i if e.direction == Direction.RIGHT else 2 * i + 1
            if face_of[r ^ 1] != of:
                continue
            x, y = drawing.coords[edge_list[i][1 + (r & 1)]]
            key = (face_of[r] == face_of[r ^ 1], -y, x, i)
            if best is None or key < best[0]:
                best = (key, r)
        reference = name_of(edge_list, best[1])
    g = build_plane_graph(
        vertices,
        edge_list,
        rotation,
        outer=name_of(edge_list, outer_d),
        central=name_of(edge_list, central_d),
        reference=reference,
        outer_and_central=both,
    )
    return OrthoRadialRepresentation.from_directions(g, dirs)


def name_of(edge_list, d: int) -> str:
    return edge_list[d >> 1][0] + ("-" if d & 1 else "+")
