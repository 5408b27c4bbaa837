"""Executable checks of the rotation and labeling properties.

Each check instantiates one property on every cycle, path or cycle pair of
a representation satisfying the angle-sum and face-rotation conditions and
records violations.  The checks compute labels with the library and compare
them against the stated identities, using their own path enumeration.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .cycles import (
    CycleLabeling,
    EssentialCycle,
    enumerate_essential_cycles,
    labeling,
    region_of_faces,
)
from .oracle import elementary_paths
from .plane_graph import PlaneGraph, interior_faces
from .representation import OrthoRadialRepresentation
from .validity import CycleClass, check_condition1, check_condition2, classify_labels

CHECKS = (
    "split",
    "reverse",
    "detour",
    "essential-rotation",
    "label-difference",
    "one-equal-all-equal",
    "path-independence",
    "labels-at-intersection",
    "illegal-intersection",
    "alternative-cycle",
    "all-zero-neighbour",
)


@dataclass
class CheckTally:
    checked: int = 0
    violations: list[str] = field(default_factory=list)


@dataclass
class SuiteReport:
    tallies: dict[str, CheckTally] = field(default_factory=lambda: {c: CheckTally() for c in CHECKS})
    # configurations outside the proven hypotheses where the broad statement fails
    notes: list[str] = field(default_factory=list)

    def record(self, check: str, ok: bool, detail: str) -> None:
        t = self.tallies[check]
        t.checked += 1
        if not ok:
            t.violations.append(detail)

    def merge(self, other: "SuiteReport") -> None:
        for name, t in other.tallies.items():
            mine = self.tallies[name]
            mine.checked += t.checked
            mine.violations += t.violations
        self.notes += other.notes

    @property
    def checked(self) -> int:
        return sum(t.checked for t in self.tallies.values())

    @property
    def violations(self) -> list[str]:
        return [f"{name}: {v}" for name, t in self.tallies.items() for v in t.violations]

    @property
    def ok(self) -> bool:
        return not self.violations


# -- path helpers ------------------------------------------------------------------------------


def simple_paths_to(
    g: PlaneGraph, start: str, targets: set[str], limit: int, banned: frozenset[int] = frozenset()
) -> Iterator[tuple[int, ...]]:
    """Simple paths from ``start`` that meet ``targets`` only at their last vertex."""
    if start in targets:
        yield ()
        return
    path: list[int] = []
    seen = {start}
    count = 0

    def extend(v: str):
        nonlocal count
        for d in g.out_darts(v):
            w = g.head(d)
            if w in seen or (d >> 1) in banned:
                continue
            path.append(d)
            if w in targets:
                count += 1
                yield tuple(path)
            else:
                seen.add(w)
                yield from extend(w)
                seen.discard(w)
            path.pop()
            if count >= limit:
                return

    yield from itertools.islice(extend(start), limit)


def simple_paths_from(g: PlaneGraph, start: str, limit: int) -> Iterator[tuple[int, ...]]:
    """The first ``limit`` simple paths from ``start`` in depth-first order."""
    path: list[int] = []
    seen = {start}

    def extend(v: str):
        for d in g.out_darts(v):
            w = g.head(d)
            if w in seen:
                continue
            path.append(d)
            seen.add(w)
            yield tuple(path)
            yield from extend(w)
            seen.discard(w)
            path.pop()

    yield from itertools.islice(extend(start), limit)


def cycle_segment(cycle: Sequence[int], i: int, j: int) -> tuple[int, ...]:
    """Darts of the cycle from position ``i`` to position ``j`` inclusive, going forward."""
    n = len(cycle)
    return tuple(cycle[(i + k) % n] for k in range((j - i) % n + 1))


def side_of_path(g: PlaneGraph, into: int, out: int, other: int) -> str:
    """Whether ``other`` leaves the shared vertex left or right of the path ``into, out``."""
    order = g.rotation[g.head(into)]
    k = order.index(into ^ 1)
    n = len(order)
    clockwise = [order[(k + s) % n] for s in range(1, n)]
    before = clockwise[: clockwise.index(out)]
    return "left" if other in before else "right"


def labels_for_path(rep: OrthoRadialRepresentation, cycle: Sequence[int], path: Sequence[int]) -> list[int]:
    """Labels of ``cycle`` induced by an arbitrary path, by direct summation."""
    g = rep.graph
    v = g.head(path[-1]) if path else g.head(g.reference_dart)
    k = next(i for i, d in enumerate(cycle) if g.tail(d) == v)
    out = [0] * len(cycle)
    base = [g.reference_dart, *path]
    for j in range(len(cycle)):
        out[(k + j) % len(cycle)] = rep.rot_path(base + list(cycle_segment(cycle, k, k + j)))
    return out


def _edge_side(g: PlaneGraph, interior: set[int], edge: int) -> str:
    faces = {g.face_of(2 * edge) in interior, g.face_of(2 * edge + 1) in interior}
    if faces == {True}:
        return "interior"
    if faces == {False}:
        return "exterior"
    return "on"


def _union_central_region(g: PlaneGraph, c1: EssentialCycle, c2: EssentialCycle) -> set[int]:
    return region_of_faces(g, set(c1.edges | c2.edges), g.central_face)


def _central_vertices(g: PlaneGraph, region: set[int], edges) -> set[str]:
    return {g.tail(d) for i in edges for d in (2 * i, 2 * i + 1) if g.face_of(d) in region}


# -- individual checks -------------------------------------------------------------------------


def check_path_rotation(rep: OrthoRadialRepresentation, path: Sequence[int], out: SuiteReport) -> None:
    """Splitting, reversing and detours on one simple path."""
    g = rep.graph
    path = list(path)
    if len(path) < 2:
        return
    total = rep.rot_path(path)
    for k in range(len(path)):
        parts = rep.rot_path(path[: k + 1]) + rep.rot_path(path[k:])
        out.record("split", parts == total, f"path {path} split at {k}: {parts} != {total}")
    rev = [d ^ 1 for d in reversed(path)]
    out.record("reverse", rep.rot_path(rev) == -total, f"path {path} reversed")
    on_path = {d >> 1 for d in path}
    for i in range(len(path) - 1):
        into, nxt = path[i], path[i + 1]
        for o in g.out_darts(g.head(into)):
            if (o >> 1) in on_path:
                continue
            side = side_of_path(g, into, nxt, o)
            got = rep.rot_path(path[: i + 1] + [o]) + rep.rot_path([o ^ 1] + path[i + 1 :])
            want = total - 2 if side == "left" else total + 2
            out.record("detour", got == want, f"detour {g.dart_key(o)} {side} of {path}: {got} != {want}")


def check_cycle(
    rep: OrthoRadialRepresentation, cyc: EssentialCycle, lab: CycleLabeling, out: SuiteReport, path_limit: int
) -> None:
    g = rep.graph
    darts = cyc.darts
    n = len(darts)
    out.record("essential-rotation", rep.rot_cycle(darts) == 0, f"cycle {darts} has rotation {rep.rot_cycle(darts)}")
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            seg = cycle_segment(darts, i, j)
            got = rep.rot_path(seg)
            want = lab.values[j] - lab.values[i]
            out.record("label-difference", got == want, f"cycle {darts} from {i} to {j}: {got} != {want}")

    s = g.head(g.reference_dart)
    targets = {g.tail(d) for d in darts}
    base = list(lab.values)

    # any two paths: agreement on one edge forces agreement on all
    for p in simple_paths_to(g, s, targets, path_limit):
        values = labels_for_path(rep, darts, p)
        diffs = {a - b for a, b in zip(values, base)}
        ok = len(diffs) == 1 and diffs.pop() % 4 == 0
        out.record("one-equal-all-equal", ok, f"cycle {darts} path {p}: labels {values} vs {base}")

    # paths in the exterior all induce the same labels
    for p in elementary_paths(g, darts, limit=path_limit):
        values = labels_for_path(rep, darts, p)
        out.record("path-independence", values == base, f"cycle {darts} path {p}: {values} != {base}")


def check_pair(
    rep: OrthoRadialRepresentation,
    c1: EssentialCycle,
    l1: CycleLabeling,
    c2: EssentialCycle,
    l2: CycleLabeling,
    out: SuiteReport,
) -> None:
    g = rep.graph
    common = set(c1.vertices(g)) & set(c2.vertices(g))
    if not common:
        return
    region = _union_central_region(g, c1, c2)
    central = _central_vertices(g, region, c1.edges | c2.edges)
    lab1, lab2 = l1.as_dict(), l2.as_dict()
    inside1 = interior_faces(g, c1.darts)

    def on_face(edge: int) -> bool:
        return g.face_of(2 * edge) in region or g.face_of(2 * edge + 1) in region

    for v in sorted(common & central):
        u1v, vw = c1.entering(g, v), c1.leaving(g, v)
        u2v, vw2 = c2.entering(g, v), c2.leaving(g, v)
        a = lab1[u1v] + rep.rot_pair(u1v, vw)
        b = lab2[u2v] + rep.rot_pair(u2v, vw)
        # the identity is established when vw borders the central face of
        # c1 + c2; otherwise only the congruence mod 4 is guaranteed
        if on_face(vw >> 1):
            out.record("labels-at-intersection", a == b, f"vertex {v!r}: {a} != {b}")
        else:
            out.record("labels-at-intersection", (a - b) % 4 == 0, f"vertex {v!r}: {a} !~ {b} mod 4")
            if a != b:
                out.notes.append(f"labels-at-intersection off the central face at {v!r}: {a} != {b}")
        if vw in lab2:
            out.record("labels-at-intersection", lab1[vw] == lab2[vw], f"shared {g.dart_key(vw)} at {v!r}")

        if lab1[u1v] >= 0 and lab2[u2v] <= 0:
            side = _edge_side(g, inside1, u2v >> 1)
            out.record("illegal-intersection", side != "exterior", f"incoming {g.dart_key(u2v)} at {v!r} is {side}")
        if lab1[vw] >= 0 and lab2[vw2] <= 0:
            side = _edge_side(g, inside1, vw2 >> 1)
            # an interior vw2 is excluded only when it borders the central face
            if side != "interior" or on_face(vw2 >> 1):
                out.record("illegal-intersection", side != "interior", f"outgoing {g.dart_key(vw2)} at {v!r} is {side}")
            else:
                out.notes.append(f"illegal-intersection off the central face at {v!r}: {g.dart_key(vw2)} is interior")

    if all(x == 0 for x in l2.values):
        cls = classify_labels(l1.values)
        out.record(
            "all-zero-neighbour",
            cls in (CycleClass.ALL_ZERO, CycleClass.MIXED),
            f"cycle {c1.darts} is {cls.value} next to an all-zero cycle",
        )


def _as_cycle(g: PlaneGraph, darts: list[int]) -> tuple[int, ...] | None:
    """Order darts into one simple closed walk, or ``None`` if impossible."""
    by_tail: dict[str, int] = {}
    for d in darts:
        if g.tail(d) in by_tail:
            return None
        by_tail[g.tail(d)] = d
    start = darts[0]
    walk = [start]
    while True:
        nxt = by_tail.get(g.head(walk[-1]))
        if nxt is None:
            return None
        if nxt == start:
            break
        walk.append(nxt)
    return tuple(walk) if len(walk) == len(darts) else None


def check_alternative_cycles(
    rep: OrthoRadialRepresentation,
    cyc: EssentialCycle,
    lab: CycleLabeling,
    out: SuiteReport,
) -> None:
    """For every edge shared with a regular face, build the cycle avoiding it."""
    g = rep.graph
    lab_map = lab.as_dict()
    for f in g.faces:
        if f.id in (g.outer_face, g.central_face):
            continue
        face_cycle = _as_cycle(g, list(f.boundary))
        if face_cycle is None:
            continue  # faces with a non-simple boundary are not cycles
        face_edges = {d >> 1 for d in face_cycle}
        if face_edges == cyc.edges:
            continue
        for e in sorted(face_edges & cyc.edges):
            h_edges = set(cyc.edges | face_edges)
            outer_region = region_of_faces(g, h_edges, g.outer_face)
            on_outer = any(g.face_of(d) in outer_region for d in (2 * e, 2 * e + 1))
            if not on_outer:
                bounding = [d ^ 1 for i in h_edges for d in (2 * i, 2 * i + 1) if g.face_of(d) in outer_region]
            else:
                central_region = region_of_faces(g, h_edges, g.central_face)
                bounding = [d for i in h_edges for d in (2 * i, 2 * i + 1) if g.face_of(d) in central_region]
            alt = _as_cycle(g, bounding)
            detail = f"cycle {cyc.darts}, face {f.id}, edge {g.edges[e][0]!r}"
            if alt is None or e in {d >> 1 for d in alt}:
                out.record("alternative-cycle", False, f"{detail}: no simple cycle avoiding the edge")
                continue
            alt_cycle = EssentialCycle(alt)
            if rep.rot_cycle(alt) != 0 or g.central_face not in interior_faces(g, alt):
                out.record("alternative-cycle", False, f"{detail}: alternative is not essential")
                continue
            shared = [d for d in alt if d in lab_map]
            rest = [d for d in alt if d not in lab_map]
            on_face = all(d in f.boundary or (d ^ 1) in f.boundary for d in rest)
            alt_lab = labeling(rep, alt_cycle).as_dict()
            agree = all(alt_lab[d] == lab_map[d] for d in shared)
            out.record(
                "alternative-cycle",
                on_face and agree and _contiguous(alt, set(shared)),
                f"{detail}: on face {on_face}, labels agree {agree}",
            )


def _contiguous(cycle: Sequence[int], part: set[int]) -> bool:
    """Whether ``part`` is one contiguous stretch of the cycle."""
    flags = [d in part for d in cycle]
    if all(flags) or not any(flags):
        return True
    changes = sum(1 for a, b in zip(flags, flags[1:] + flags[:1]) if a != b)
    return changes == 2


# -- driver ------------------------------------------------------------------------------------


def check_representation(
    rep: OrthoRadialRepresentation,
    path_limit: int = 12,
    pair_limit: int | None = 400,
) -> SuiteReport:
    """Run every check on ``rep``; representations violating the local conditions are skipped."""
    out = SuiteReport()
    if check_condition1(rep) or check_condition2(rep):
        return out
    g = rep.graph
    cycles = enumerate_essential_cycles(g)
    labs = [labeling(rep, c) for c in cycles]
    for c, lab in zip(cycles, labs):
        check_cycle(rep, c, lab, out, path_limit)
        check_path_rotation(rep, lab.path, out)
        check_path_rotation(rep, c.darts, out)
        check_alternative_cycles(rep, c, lab, out)
    s = g.head(g.reference_dart)
    for p in simple_paths_from(g, s, path_limit * 4):
        check_path_rotation(rep, p, out)
    pairs = itertools.product(range(len(cycles)), repeat=2)
    for k, (i, j) in enumerate(pairs):
        if pair_limit is not None and k >= pair_limit:
            break
        check_pair(rep, cycles[i], labs[i], cycles[j], labs[j], out)
    return out
