"""Brute-force reference implementations used to cross-check the library.

Everything here is written from the definitions, independently of the
cycle, labeling, validity and rectangulation modules.  Only the plain data
types (plane graphs, angle tuples, drawings) are shared.  The drawing
pipeline itself is called solely as the system under test in
:func:`exhaustive_equivalence`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

import networkx as nx

from .drawing import Drawing, EdgeGeometry, draw
from .errors import BoundExceeded, NotValid
from .plane_graph import PlaneGraph
from .representation import Direction, OrthoRadialRepresentation

DEFAULT_BOUND = 24
TURN = {0: 0, 1: 1, 2: -2, 3: -1}  # direction change -> rotation
# unit lattice step per direction, kept separate from the drawing module
STEP = {Direction.RIGHT: (1, 0), Direction.DOWN: (0, -1), Direction.LEFT: (-1, 0), Direction.UP: (0, 1)}


# -- cycles -----------------------------------------------------------------------------------


def _sides(g: PlaneGraph, darts: Sequence[int]) -> tuple[set[int], set[int]]:
    """Faces right and left of a simple cycle, by flooding the dual."""
    cut = {d >> 1 for d in darts}
    adj: dict[int, set[int]] = {}
    for i in range(len(g.edges)):
        if i in cut:
            continue
        f, h = g.face_of(2 * i), g.face_of(2 * i + 1)
        adj.setdefault(f, set()).add(h)
        adj.setdefault(h, set()).add(f)

    def flood(seeds):
        seen = set(seeds)
        todo = list(seen)
        while todo:
            for h in adj.get(todo.pop(), ()):
                if h not in seen:
                    seen.add(h)
                    todo.append(h)
        return seen

    return flood(g.face_of(d) for d in darts), flood(g.face_of(d ^ 1) for d in darts)


def _canonical(darts: Sequence[int]) -> tuple[int, ...]:
    k = darts.index(min(darts))
    return tuple(darts[k:]) + tuple(darts[:k])


def brute_cycles(g: PlaneGraph, bound: int = DEFAULT_BOUND) -> list[tuple[int, ...]]:
    """All simple essential cycles as clockwise dart tuples, sorted.

    Cycles are found on the graph with every edge subdivided (so parallel
    edges become ordinary cycles) and kept when the central face and the
    outer face end up on different sides.
    """
    if len(g.edges) > bound:
        raise BoundExceeded(f"{len(g.edges)} edges exceed the oracle bound {bound}")
    if g.outer_face == g.central_face:
        return []
    h = nx.Graph()
    for i, (_, u, v) in enumerate(g.edges):
        h.add_edge(("v", u), ("e", i))
        h.add_edge(("e", i), ("v", v))
    found = set()
    for cyc in nx.simple_cycles(h):
        if cyc[0][0] != "v":
            cyc = cyc[1:] + cyc[:1]
        verts = cyc[0::2]
        mids = cyc[1::2]
        darts = []
        for k, (_, i) in enumerate(mids):
            u = verts[k][1]
            darts.append(2 * i if g.edges[i][1] == u else 2 * i + 1)
        right, left = _sides(g, darts)
        if g.central_face in right and g.outer_face in left:
            found.add(_canonical(darts))
        elif g.central_face in left and g.outer_face in right:
            found.add(_canonical([d ^ 1 for d in reversed(darts)]))
    return sorted(found, key=lambda c: (len(c), c))


# -- angles, directions and labels ------------------------------------------------------------


def angle_sums_ok(rep: OrthoRadialRepresentation) -> bool:
    g = rep.graph
    total = {v: 0 for v in g.vertices}
    for d in range(g.num_darts):
        total[g.head(d)] += rep.angles[d]
    return all(t == 360 for t in total.values())


def face_rotations_ok(rep: OrthoRadialRepresentation) -> bool:
    g = rep.graph
    for f in g.faces:
        r = sum((180 - rep.angles[d]) // 90 for d in f.boundary)
        if f.id == g.outer_face and f.id == g.central_face:
            want = -4
        elif f.id in (g.outer_face, g.central_face):
            want = 0
        else:
            want = 4
        if r != want:
            return False
    return True


def oracle_directions(rep: OrthoRadialRepresentation) -> list[int] | None:
    """Direction of every dart from the angles, or ``None`` if inconsistent.

    Going clockwise around a vertex from one out-dart to the next, the
    direction grows by the angle between them divided by 90.
    """
    g = rep.graph
    dirs: list[int | None] = [None] * g.num_darts
    todo: list[int] = []

    def settle(d: int, value: int) -> bool:
        if dirs[d] is None:
            dirs[d] = value
            todo.append(d)
            return True
        return dirs[d] == value

    settle(g.reference_dart, 0)
    while todo:
        o = todo.pop()
        if not settle(o ^ 1, (dirs[o] + 2) % 4):
            return None
        order = g.rotation[g.tail(o)]
        k = order.index(o)
        value = dirs[o]
        for step in range(1, len(order) + 1):
            nxt = order[(k + step) % len(order)]
            value = (value + rep.angles[nxt ^ 1] // 90) % 4
            if not settle(nxt, value):
                return None
    return dirs  # type: ignore[return-value]


def path_rotation(dirs: Sequence[int], darts: Sequence[int]) -> int:
    return sum(TURN[(b_dir - a_dir) % 4] for a_dir, b_dir in zip(
        (dirs[d] for d in darts), (dirs[d] for d in darts[1:])
    ))


def elementary_paths(
    g: PlaneGraph, cycle: Sequence[int], limit: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Simple paths from the head of the reference dart to the cycle that avoid
    its interior and touch it only at their last vertex.

    Paths using the reference edge are listed only if no other path exists.
    """
    s = g.head(g.reference_dart)
    on_cycle = {g.tail(d) for d in cycle}
    if s in on_cycle:
        yield ()
        return
    right, _ = _sides(g, cycle)
    cyc_edges = {d >> 1 for d in cycle}
    count = 0
    for avoid_ref in (True, False):
        banned = cyc_edges | ({g.reference_dart >> 1} if avoid_ref else set())
        path: list[int] = []
        seen = {s}

        def extend(v):
            for d in reversed(g.rotation[v]):
                w = g.head(d)
                if (d >> 1) in banned or g.face_of(d) in right or w in seen:
                    continue
                path.append(d)
                if w in on_cycle:
                    yield tuple(path)
                else:
                    seen.add(w)
                    yield from extend(w)
                    seen.discard(w)
                path.pop()

        for p in extend(s):
            count += 1
            yield p
            if limit is not None and count >= limit:
                return
        if count:
            return


def oracle_labels(
    rep: OrthoRadialRepresentation, cycle: Sequence[int], path: Sequence[int], dirs: Sequence[int]
) -> tuple[int, ...]:
    """Labels of the cycle darts induced by ``path``, summed turn by turn."""
    g = rep.graph
    v = g.head(path[-1]) if path else g.head(g.reference_dart)
    k = next(i for i, d in enumerate(cycle) if g.tail(d) == v)
    n = len(cycle)
    labels = [0] * n
    walk = [g.reference_dart, *path]
    for j in range(n):
        walk.append(cycle[(k + j) % n])
        labels[(k + j) % n] = _walk_rotation(g, dirs, walk)
    return tuple(labels)


def _walk_rotation(g: PlaneGraph, dirs: Sequence[int], walk: Sequence[int]) -> int:
    total = 0
    for a, b in zip(walk, walk[1:]):
        if b == a ^ 1:
            total -= 2  # turning back
        else:
            total += TURN[(dirs[b] - dirs[a]) % 4]
    return total


@dataclass
class OracleVerdict:
    valid: bool
    cond1: bool
    cond2: bool
    monotone: list[tuple[tuple[int, ...], tuple[int, ...]]] = field(default_factory=list)


def oracle_validity(rep: OrthoRadialRepresentation, bound: int = DEFAULT_BOUND) -> OracleVerdict:
    c1, c2 = angle_sums_ok(rep), face_rotations_ok(rep)
    if not (c1 and c2):
        return OracleVerdict(False, c1, c2)
    dirs = oracle_directions(rep)
    if dirs is None:
        return OracleVerdict(False, c1, False)
    verdict = OracleVerdict(True, c1, c2)
    for cyc in brute_cycles(rep.graph, bound):
        path = next(elementary_paths(rep.graph, cyc, limit=1))
        labels = oracle_labels(rep, cyc, path, dirs)
        if any(x != 0 for x in labels) and (all(x >= 0 for x in labels) or all(x <= 0 for x in labels)):
            verdict.monotone.append((cyc, labels))
            verdict.valid = False
    return verdict


# -- geometry ---------------------------------------------------------------------------------


@dataclass
class GeometryReport:
    crossings: list[str] = field(default_factory=list)
    angle_mismatches: list[str] = field(default_factory=list)
    direction_mismatches: list[str] = field(default_factory=list)
    length_mismatches: list[str] = field(default_factory=list)
    designation_mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (
            self.crossings
            or self.angle_mismatches
            or self.direction_mismatches
            or self.length_mismatches
            or self.designation_mismatches
        )


def _lattice_points(drawing: Drawing, e: EdgeGeometry) -> list[tuple[int, int]]:
    x, y = drawing.coords[e.tail]
    dx, dy = STEP[e.direction]
    return [((x + dx * s) % drawing.circumference, y + dy * s) for s in range(e.length + 1)]


def check_drawing(drawing: Drawing, rep: OrthoRadialRepresentation) -> GeometryReport:
    """Check that ``drawing`` is a planar drawing of ``rep`` on the cylinder.

    All coordinates are integers, so two axis-parallel edges can only meet
    in lattice points; comparing lattice points therefore decides every
    crossing, overlap and vertex-on-edge incidence exactly.
    """
    g = rep.graph
    rep_out = GeometryReport()
    k = drawing.circumference
    if set(drawing.coords) != set(g.vertices):
        rep_out.crossings.append("vertex sets differ")
        return rep_out
    names = {name for name, _, _ in g.edges}
    if set(drawing.edges) != names:
        rep_out.crossings.append("edge sets differ")
        return rep_out
    if k < 1 or any(y < 1 for _, y in drawing.coords.values()):
        rep_out.length_mismatches.append("coordinates out of range")
        return rep_out
    for v, (x, _) in drawing.coords.items():
        if not 0 <= x < k:
            rep_out.length_mismatches.append(f"column of {v!r} outside 0..{k - 1}")
    for name, u, v in g.edges:
        e = drawing.edges[name]
        if (e.tail, e.head) != (u, v):
            rep_out.length_mismatches.append(f"edge {name!r} has endpoints {e.tail!r}, {e.head!r}")
            continue
        if e.length < 1 or (e.direction.horizontal and e.length >= k):
            rep_out.length_mismatches.append(f"edge {name!r} has bad length {e.length}")
            continue
        x, y = drawing.coords[u]
        dx, dy = STEP[e.direction]
        if ((x + dx * e.length) % k, y + dy * e.length) != drawing.coords[v]:
            rep_out.length_mismatches.append(f"edge {name!r} does not reach {v!r}")
    if rep_out.length_mismatches:
        return rep_out

    # directions against the angles
    dirs = oracle_directions(rep)
    geo = []
    for name, _, _ in g.edges:
        d = drawing.edges[name].direction
        geo += [int(d), (int(d) + 2) % 4]
    if dirs is None:
        rep_out.direction_mismatches.append("angles do not determine consistent directions")
    else:
        for dart, (a, b) in enumerate(zip(geo, dirs)):
            if a != b:
                rep_out.direction_mismatches.append(
                    f"{g.dart_key(dart)} points {Direction(a).name}, expected {Direction(b).name}"
                )

    # angles and rotation at every vertex
    outs: dict[str, list[int]] = {v: [] for v in g.vertices}
    for dart in range(g.num_darts):
        outs[g.tail(dart)].append(dart)
    for v, ds in outs.items():
        ds.sort(key=lambda d: geo[d])
        if len({geo[d] for d in ds}) != len(ds):
            rep_out.crossings.append(f"two edges leave {v!r} in the same direction")
            continue
        order = g.rotation[v]
        k0 = order.index(ds[0])
        if list(order[k0:]) + list(order[:k0]) != ds:
            rep_out.angle_mismatches.append(f"clockwise order at {v!r} differs from the rotation")
        for j, o in enumerate(ds):
            prev = ds[j - 1]
            gap = (geo[o] - geo[prev]) % 4
            angle = 360 if len(ds) == 1 else 90 * gap
            if angle != rep.angles[o ^ 1]:
                rep_out.angle_mismatches.append(
                    f"angle at {v!r} before {g.dart_key(o)} is {angle}, expected {rep.angles[o ^ 1]}"
                )

    # crossings, overlaps, vertices on edges
    at: dict[tuple[int, int], list[str]] = {}
    for v, p in drawing.coords.items():
        at.setdefault(p, []).append(v)
    for p, vs in at.items():
        if len(vs) > 1:
            rep_out.crossings.append(f"vertices {sorted(vs)} share point {p}")
    users: dict[tuple[int, int], list[str]] = {}
    for name, e in drawing.edges.items():
        pts = _lattice_points(drawing, e)
        for p in pts[1:-1]:
            users.setdefault(p, []).append(name)
            if p in at:
                rep_out.crossings.append(f"vertex {at[p][0]!r} lies on edge {name!r}")
        if len(set(pts)) != len(pts):
            rep_out.crossings.append(f"edge {name!r} overlaps itself")
    for p, es in users.items():
        if len(es) > 1:
            rep_out.crossings.append(f"edges {sorted(es)} meet at {p}")

    # outer and central face via rays through half columns
    if not rep_out.crossings:
        _check_designations(drawing, rep, rep_out)
    return rep_out


def _check_designations(drawing: Drawing, rep: OrthoRadialRepresentation, out: GeometryReport) -> None:
    g = rep.graph
    k = drawing.circumference
    index = {name: i for i, (name, _, _) in enumerate(g.edges)}
    spans: dict[int, list[tuple[int, int]]] = {c: [] for c in range(k)}
    for name, e in drawing.edges.items():
        if e.direction.vertical:
            continue
        i = index[name]
        right = 2 * i if e.direction == Direction.RIGHT else 2 * i + 1
        start = drawing.coords[g.tail(right)][0]
        y = drawing.coords[e.tail][1]
        for s in range(e.length):
            spans[(start + s) % k].append((y, right))
    both = g.outer_face == g.central_face
    for c, hits in spans.items():
        if not hits:
            if not both:
                out.designation_mismatches.append(f"column {c}.5 meets no edge but the outer and central face differ")
            continue
        top = max(hits)[1]
        bottom = min(hits)[1]
        if g.face_of(top ^ 1) != g.outer_face:
            out.designation_mismatches.append(f"face above column {c}.5 is not the outer face")
        if g.face_of(bottom) != g.central_face:
            out.designation_mismatches.append(f"face below column {c}.5 is not the central face")


# -- brute-force drawings ----------------------------------------------------------------------


def _components(g: PlaneGraph, dirs: Sequence[int], vertical: bool) -> dict[str, int]:
    parent = {v: v for v in g.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for i, (_, u, v) in enumerate(g.edges):
        if (dirs[2 * i] % 2 == 1) == vertical:
            parent[find(u)] = find(v)
    roots = sorted({find(v) for v in g.vertices}, key=g.vertices.index)
    ids = {r: n for n, r in enumerate(roots)}
    return {v: ids[find(v)] for v in g.vertices}


def _weak_orders(n: int, less: Iterable[tuple[int, int]]) -> Iterator[list[int]]:
    """Rank vectors ``1..m`` over ``n`` items using every rank, with ``a < b`` for each pair."""
    preds: dict[int, set[int]] = {i: set() for i in range(n)}
    for a, b in less:
        preds[b].add(a)
    ranks = [0] * n

    def fill(left: frozenset[int], rank: int):
        if not left:
            yield list(ranks)
            return
        free = sorted(i for i in left if not preds[i] & left)
        for size in range(1, len(free) + 1):
            for group in itertools.combinations(free, size):
                for i in group:
                    ranks[i] = rank
                yield from fill(left - set(group), rank + 1)

    yield from fill(frozenset(range(n)), 1)


def _cyclic_positions(n: int) -> Iterator[tuple[int, list[int]]]:
    """Column vectors over ``n`` items with item 0 in column 0, using every column."""
    for order in _weak_orders(n, ()):
        if order[0] != 1:
            continue
        yield max(order), [r - 1 for r in order]


def brute_drawing(rep: OrthoRadialRepresentation, bound: int = 8) -> Drawing | None:
    """Search all compact drawings of ``rep``; ``None`` if there is none.

    Only the cyclic order of columns and the order of circles matter, so it
    suffices to try every weak order of the vertical and horizontal
    components.  ``bound`` limits the number of components per axis.
    """
    g = rep.graph
    dirs = oracle_directions(rep)
    if dirs is None or not angle_sums_ok(rep) or not face_rotations_ok(rep):
        return None
    vcomp = _components(g, dirs, vertical=True)  # share a column
    hcomp = _components(g, dirs, vertical=False)  # share a circle
    nv, nh = max(vcomp.values()) + 1, max(hcomp.values()) + 1
    if nv > bound or nh > bound:
        raise BoundExceeded(f"{nv} columns or {nh} circles exceed the search bound {bound}")
    less = set()
    for i, (_, u, v) in enumerate(g.edges):
        if dirs[2 * i] == Direction.UP:
            less.add((hcomp[u], hcomp[v]))
        elif dirs[2 * i] == Direction.DOWN:
            less.add((hcomp[v], hcomp[u]))
    if any(a == b for a, b in less):
        return None
    heights = list(_weak_orders(nh, less))
    for k, cols in _cyclic_positions(nv):
        for ranks in heights:
            coords = {v: (cols[vcomp[v]], ranks[hcomp[v]]) for v in g.vertices}
            edges = {}
            for i, (name, u, v) in enumerate(g.edges):
                d = Direction(dirs[2 * i])
                (x0, y0), (x1, y1) = coords[u], coords[v]
                if d.vertical:
                    length = abs(y1 - y0)
                elif d == Direction.RIGHT:
                    length = (x1 - x0) % k
                else:
                    length = (x0 - x1) % k
                edges[name] = EdgeGeometry(u, v, d, length)
            candidate = Drawing(k, coords, edges)
            if check_drawing(candidate, rep).ok:
                return candidate
    return None


# -- assignments and the equivalence driver -------------------------------------------------


def angle_assignments(g: PlaneGraph) -> Iterator[tuple[int, ...]]:
    """Every angle tuple with vertex sums of 360 and the required face rotations."""
    choices = []
    for v in g.vertices:
        into = [o ^ 1 for o in g.rotation[v]]
        if len(into) == 1:
            options = [(360,)]
        else:
            options = [
                combo
                for combo in itertools.product((90, 180, 270), repeat=len(into))
                if sum(combo) == 360
            ]
        choices.append((into, options))
    for pick in itertools.product(*(opts for _, opts in choices)):
        angles = [0] * g.num_darts
        for (into, _), combo in zip(choices, pick):
            for d, a in zip(into, combo):
                angles[d] = a
        rep = OrthoRadialRepresentation(g, angles)
        if face_rotations_ok(rep):
            yield tuple(angles)


@dataclass
class Counterexample:
    fixture: str
    angles: tuple[int, ...]
    reason: str


@dataclass
class EquivalenceReport:
    instances: int = 0
    valid: int = 0
    invalid: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def check_instance(name: str, rep: OrthoRadialRepresentation, report: EquivalenceReport, bound: int) -> None:
    """Compare validity with drawability for one representation."""
    from .validity import validate  # the system under test

    report.instances += 1
    main = validate(rep)
    verdict = oracle_validity(rep)
    bad = lambda why: report.counterexamples.append(Counterexample(name, rep.angles, why))  # noqa: E731
    if main.valid != verdict.valid:
        bad(f"library says {main.status.value}, oracle says {'valid' if verdict.valid else 'invalid'}")
        return
    if main.valid:
        report.valid += 1
        try:
            drawing = draw(rep)
        except Exception as exc:  # noqa: BLE001 - any failure is a counterexample
            bad(f"valid but drawing failed: {exc!r}")
            return
        geo = check_drawing(drawing, rep)
        if not geo.ok:
            bad(f"valid but the drawing is unsound: {geo}")
    else:
        report.invalid += 1
        found = brute_drawing(rep, bound)
        if found is not None:
            bad("invalid but a drawing exists")
            return
        try:
            draw(rep)
        except NotValid:
            pass
        else:
            bad("invalid but draw did not refuse")


def exhaustive_equivalence(
    fixtures: Mapping[str, OrthoRadialRepresentation | PlaneGraph] | OrthoRadialRepresentation,
    bound: int = 8,
    all_assignments: bool = True,
) -> EquivalenceReport:
    """Check valid <=> drawable over every admissible angle assignment.

    For each fixture graph every assignment satisfying the vertex sums and
    face rotations is tried (or only the given one when ``all_assignments``
    is false; bare graphs always get every assignment).  Valid instances
    must be drawn soundly by the library; invalid ones must have no drawing
    at all, which is decided by exhaustive search over compact drawings.
    """
    if isinstance(fixtures, OrthoRadialRepresentation):
        fixtures = {"instance": fixtures}
    report = EquivalenceReport()
    for name, item in fixtures.items():
        if isinstance(item, PlaneGraph):
            graph, single = item, None
        else:
            graph, single = item.graph, item
        if single is None or all_assignments:
            for angles in angle_assignments(graph):
                check_instance(name, OrthoRadialRepresentation(graph, angles), report, bound)
        else:
            check_instance(name, single, report, bound)
    return report
