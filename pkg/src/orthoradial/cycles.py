"""Essential cycles, elementary paths and cycle labelings."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import CycleLimitExceeded, NoCommonCentralFaceVertex, NotACycle
from .plane_graph import PlaneGraph, cycle_sides, interior_faces, rotate_to_min
from .representation import OrthoRadialRepresentation

DEFAULT_MAX_CYCLES = 100_000


@dataclass(frozen=True)
class EssentialCycle:
    """A simple cycle with the central face locally to its right."""

    darts: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.darts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.darts)

    def __contains__(self, d: object) -> bool:
        return d in self.darts

    @property
    def edges(self) -> frozenset[int]:
        return frozenset(d >> 1 for d in self.darts)

    def vertices(self, g: PlaneGraph) -> list[str]:
        return [g.tail(d) for d in self.darts]

    def entering(self, g: PlaneGraph, v: str) -> int:
        for d in self.darts:
            if g.head(d) == v:
                return d
        raise KeyError(v)

    def leaving(self, g: PlaneGraph, v: str) -> int:
        for d in self.darts:
            if g.tail(d) == v:
                return d
        raise KeyError(v)


@dataclass(frozen=True)
class CycleLabeling:
    cycle: EssentialCycle
    values: tuple[int, ...]
    path: tuple[int, ...] = field(default=())

    def __getitem__(self, d: int) -> int:
        return self.values[self.cycle.darts.index(d)]

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.cycle.darts, self.values))


# -- enumeration ------------------------------------------------------------------


def simple_cycles(g: PlaneGraph) -> Iterator[tuple[int, ...]]:
    """Every simple cycle of ``g`` exactly once, in one arbitrary direction.

    A cycle is reported from its smallest vertex (in vertex order) and in the
    direction whose first edge index is smaller than its last.
    """
    index = {v: i for i, v in enumerate(g.vertices)}
    head = [index[g.head(d)] for d in range(g.num_darts)]
    outs = [g.out_darts(v) for v in g.vertices]
    for r in range(len(g.vertices)):
        path: list[int] = []
        on_path = {r}
        stack = [iter(outs[r])]
        while stack:
            d = next(stack[-1], None)
            if d is None:
                stack.pop()
                if path:
                    on_path.discard(head[path.pop()])
                continue
            w = head[d]
            if w == r:
                if path and (path[0] >> 1) < (d >> 1):
                    yield tuple(path) + (d,)
            elif w > r and w not in on_path:
                path.append(d)
                on_path.add(w)
                stack.append(iter(outs[w]))


def _dual_crossing_path(g: PlaneGraph) -> list[tuple[int, int, int]]:
    """Edges crossed by a shortest dual path from the central to the outer face.

    Each entry is ``(edge, face before, face after)``.
    """
    parent: dict[int, tuple[int, int] | None] = {g.central_face: None}
    adj: dict[int, list[tuple[int, int]]] = {}
    for i, f, h in g.dual_edges():
        adj.setdefault(f, []).append((h, i))
        adj.setdefault(h, []).append((f, i))
    queue = deque([g.central_face])
    while queue:
        f = queue.popleft()
        if f == g.outer_face:
            break
        for h, i in adj.get(f, ()):
            if h not in parent:
                parent[h] = (f, i)
                queue.append(h)
    steps = []
    f = g.outer_face
    while parent[f] is not None:
        prev, i = parent[f]
        steps.append((i, prev, f))
        f = prev
    steps.reverse()
    return steps


class EssentialTester:
    """Fast essentiality test by crossing parity with a fixed dual path."""

    def __init__(self, g: PlaneGraph) -> None:
        self.g = g
        self.steps = [] if g.outer_and_central else _dual_crossing_path(g)

    def orient(self, cycle: Sequence[int]) -> tuple[int, ...] | None:
        """Return the cycle oriented clockwise if essential, else ``None``."""
        edges = {d >> 1: d for d in cycle}
        crossings = [(i, f) for i, f, _ in self.steps if i in edges]
        if len(crossings) % 2 == 0:
            return None
        i, before = crossings[0]
        if self.g.face_of(edges[i]) == before:
            return tuple(cycle)
        return tuple(d ^ 1 for d in reversed(cycle))


def enumerate_essential_cycles(
    g: PlaneGraph, max_cycles: int | None = DEFAULT_MAX_CYCLES
) -> list[EssentialCycle]:
    """All simple essential cycles, clockwise, in a deterministic order.

    Raises :class:`CycleLimitExceeded` once more than ``max_cycles`` essential
    cycles have been found.
    """
    if g.outer_and_central:
        return []
    tester = EssentialTester(g)
    found = []
    for cyc in simple_cycles(g):
        oriented = tester.orient(cyc)
        if oriented is None:
            continue
        found.append(EssentialCycle(rotate_to_min(oriented)))
        if max_cycles is not None and len(found) > max_cycles:
            raise CycleLimitExceeded(f"more than {max_cycles} essential cycles")
    found.sort(key=lambda c: (len(c.darts), c.darts))
    return found


def simple_loops(g: PlaneGraph, walk: Sequence[int]) -> list[tuple[int, ...]]:
    """Decompose a closed walk into simple cycles.

    Back-and-forth traversals of a single edge are dropped.
    """
    loops = []
    stack: list[int] = []
    pos = {g.tail(walk[0]): 0}
    for d in walk:
        stack.append(d)
        w = g.head(d)
        if w in pos:
            i = pos[w]
            loop = stack[i:]
            del stack[i:]
            for x in loop[:-1]:
                pos.pop(g.head(x), None)
            if len(loop) > 2 or (len(loop) == 2 and loop[0] >> 1 != loop[1] >> 1):
                loops.append(tuple(loop))
        else:
            pos[w] = len(stack)
    return loops


def make_essential_cycle(g: PlaneGraph, darts: Sequence[int]) -> EssentialCycle:
    """Validate ``darts`` as a simple essential cycle and orient it."""
    sides = cycle_sides(g, darts)
    if not sides.essential:
        raise NotACycle("cycle is not essential")
    if not sides.clockwise:
        darts = tuple(d ^ 1 for d in reversed(darts))
    return EssentialCycle(rotate_to_min(tuple(darts)))


# -- elementary paths and labels --------------------------------------------------------


def elementary_path(
    g: PlaneGraph, cycle: EssentialCycle, rng: random.Random | None = None
) -> tuple[int, ...]:
    """A path from the head of the reference dart to ``cycle`` in its exterior.

    The path meets the cycle only in its last vertex.  Without ``rng`` a
    breadth-first (shortest) path is returned; with ``rng`` a randomized
    depth-first search picks a random elementary path.
    """
    s = g.head(g.reference_dart)
    on_cycle = {g.tail(d) for d in cycle.darts}
    if s in on_cycle:
        return ()
    interior = interior_faces(g, cycle.darts)
    cyc_edges = cycle.edges
    ref_edge = g.reference_dart >> 1
    # Avoid the reference edge so that no U-turn follows the reference dart;
    # it is only used when there is no other way.
    for banned in (cyc_edges | {ref_edge}, cyc_edges):
        parent = _search(g, s, on_cycle, banned, interior, rng)
        if parent is not None:
            break
    else:  # pragma: no cover - graph is connected
        raise NotACycle("no elementary path reaches the cycle")
    end = parent.pop(_END)
    path = []
    v = end
    while parent[v] is not None:
        d = parent[v]
        path.append(d)
        v = g.tail(d)
    path.reverse()
    return tuple(path)


_END = "\0end"


def _search(g, s, on_cycle, banned, interior, rng) -> dict | None:
    """Parent darts of a search from ``s`` to the cycle, or ``None``."""

    def usable(d: int) -> bool:
        return (d >> 1) not in banned and g.face_of(d) not in interior

    parent: dict[str, int | None] = {s: None}
    frontier = deque([s])
    while frontier:
        if rng is None:
            v = frontier.popleft()
            outs = list(g.out_darts(v))
        else:
            v = frontier.pop()
            outs = list(g.out_darts(v))
            rng.shuffle(outs)
        for d in outs:
            w = g.head(d)
            if w in parent or not usable(d):
                continue
            parent[w] = d
            if w in on_cycle:
                parent[_END] = w
                return parent
            frontier.append(w)
    return None


def labeling(
    rep: OrthoRadialRepresentation,
    cycle: EssentialCycle,
    path: Sequence[int] | None = None,
    rng: random.Random | None = None,
) -> CycleLabeling:
    """Label every dart of ``cycle`` by the rotation from the reference dart.

    The label of ``e`` is the rotation of the reference dart, followed by the
    path, followed by the cycle from the path's end up to and including ``e``.
    """
    g = rep.graph
    if path is None:
        path = elementary_path(g, cycle, rng)
    path = tuple(path)
    v = g.head(path[-1]) if path else g.head(g.reference_dart)
    darts = cycle.darts
    k = next(i for i, d in enumerate(darts) if g.tail(d) == v)
    walk = (g.reference_dart,) + path + (darts[k],)
    values = [0] * len(darts)
    label = rep.rot_path(walk)
    n = len(darts)
    for j in range(n):
        i = (k + j) % n
        if j:
            label += rep.rot_pair(darts[i - 1], darts[i])
        values[i] = label
    return CycleLabeling(cycle, tuple(values), path)


# -- subgraph regions -----------------------------------------------------------------------


def region_of_faces(g: PlaneGraph, edges: set[int] | frozenset[int], seed: int) -> set[int]:
    """Faces of ``g`` inside the face of the subgraph ``edges`` containing ``seed``."""
    adj: dict[int, list[int]] = {}
    for i, f, h in g.dual_edges():
        if i in edges:
            continue
        adj.setdefault(f, []).append(h)
        adj.setdefault(h, []).append(f)
    seen = {seed}
    queue = deque([seed])
    while queue:
        f = queue.popleft()
        for h in adj.get(f, ()):
            if h not in seen:
                seen.add(h)
                queue.append(h)
    return seen


def central_face_darts(g: PlaneGraph, edges) -> list[int]:
    """Darts of the subgraph ``edges`` bounding its central face (on their right)."""
    region = region_of_faces(g, set(edges), g.central_face)
    return [d for i in sorted(edges) for d in (2 * i, 2 * i + 1) if g.face_of(d) in region]


def outer_face_darts(g: PlaneGraph, edges) -> list[int]:
    region = region_of_faces(g, set(edges), g.outer_face)
    return [d for i in sorted(edges) for d in (2 * i, 2 * i + 1) if g.face_of(d) in region]


@dataclass
class IntersectionCheck:
    vertices: list[str]
    mismatches: list[tuple[str, int, int]]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def labels_at_intersection_check(
    rep: OrthoRadialRepresentation,
    c1: EssentialCycle,
    c2: EssentialCycle,
    l1: CycleLabeling | None = None,
    l2: CycleLabeling | None = None,
) -> IntersectionCheck:
    """Check label agreement at common vertices on the central face of ``c1 + c2``.

    For such a vertex ``v`` with ``vw`` on ``c1`` and ``u1 v``, ``u2 v`` the
    darts entering ``v`` on the two cycles, the sums ``l1(u1 v) + rot(u1 v w)``
    and ``l2(u2 v) + rot(u2 v w)`` must agree; shared darts at ``v`` must carry
    equal labels.
    """
    g = rep.graph
    l1 = l1 or labeling(rep, c1)
    l2 = l2 or labeling(rep, c2)
    central_vertices = {g.tail(d) for d in central_face_darts(g, c1.edges | c2.edges)}
    common = [v for v in c1.vertices(g) if v in central_vertices and v in set(c2.vertices(g))]
    if not common:
        raise NoCommonCentralFaceVertex("cycles share no vertex on the central face of their union")
    mismatches = []
    for v in common:
        vw = c1.leaving(g, v)
        u1v = c1.entering(g, v)
        u2v = c2.entering(g, v)
        a = l1[u1v] + rep.rot_pair(u1v, vw)
        b = l2[u2v] + rep.rot_pair(u2v, vw)
        if a != b:
            mismatches.append((v, a, b))
        elif vw in c2 and l1[vw] != l2[vw]:
            mismatches.append((v, l1[vw], l2[vw]))
    return IntersectionCheck(common, mismatches)
