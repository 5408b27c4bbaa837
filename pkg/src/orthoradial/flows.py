"""Circulation networks whose feasible flows are edge lengths.

``N_ver`` has a node per regular face and an arc across every vertical edge,
from the face left of its upward dart to the face on its right.  ``N_rad``
has a node per face, an arc across every horizontal edge from the face below
to the face above, and one extra arc from the outer to the central face.
Every arc has lower bound 1 and no upper bound.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Sequence

import networkx as nx

from .cycles import EssentialCycle, EssentialTester, labeling, make_essential_cycle, simple_loops
from .errors import InternalInvariantBroken, NotRectangular
from .representation import Direction, OrthoRadialRepresentation
from .rectangulation import is_rectangular
from .validity import MonotoneKind, classify_cycle

SPECIAL = -1  # edge tag of the outer -> central arc


@dataclass(frozen=True)
class Arc:
    tail: int
    head: int
    edge: int  # edge index crossed by the arc, or SPECIAL


@dataclass
class FlowNetwork:
    nodes: list[int]
    arcs: list[Arc]

    def arc_of_edge(self) -> dict[int, int]:
        return {a.edge: k for k, a in enumerate(self.arcs) if a.edge != SPECIAL}


@dataclass
class Circulation:
    network: FlowNetwork
    flow: list[int]

    def is_feasible(self) -> bool:
        if any(x < 1 for x in self.flow):
            return False
        balance = Counter()
        for a, x in zip(self.network.arcs, self.flow):
            balance[a.tail] -= x
            balance[a.head] += x
        return all(v == 0 for v in balance.values())


@dataclass
class InfeasibilityCertificate:
    """Nodes with an entering arc but no leaving arc."""

    network: FlowNetwork
    nodes: frozenset[int]
    entering: list[int] = field(default_factory=list)  # indices of arcs entering the set


def build_networks(rep: OrthoRadialRepresentation) -> tuple[FlowNetwork, FlowNetwork]:
    if not is_rectangular(rep):
        raise NotRectangular("every face must be a rectangle")
    g = rep.graph
    dirs = rep.directions()
    regular = [f.id for f in g.faces if g.is_regular(f.id)]
    ver_arcs, rad_arcs = [], []
    for i in range(len(g.edges)):
        d = 2 * i
        if dirs[d].vertical:
            up = d if dirs[d] == Direction.UP else d ^ 1
            ver_arcs.append(Arc(g.face_of(up ^ 1), g.face_of(up), i))
        else:
            right = d if dirs[d] == Direction.RIGHT else d ^ 1
            rad_arcs.append(Arc(g.face_of(right), g.face_of(right ^ 1), i))
    rad_arcs.append(Arc(g.outer_face, g.central_face, SPECIAL))
    nver = FlowNetwork(regular, ver_arcs)
    nrad = FlowNetwork([f.id for f in g.faces], rad_arcs)
    return nver, nrad


def feasible_circulation(net: FlowNetwork) -> Circulation | InfeasibilityCertificate:
    """Solve the lower-bounded circulation problem by a max-flow reduction."""
    if not net.arcs:
        return Circulation(net, [])
    multiplicity = Counter((a.tail, a.head) for a in net.arcs if a.tail != a.head)
    demand = Counter()
    for (t, h), m in multiplicity.items():
        demand[h] += m
        demand[t] -= m
    src, snk = ("source",), ("sink",)
    h = nx.DiGraph()
    h.add_nodes_from(net.nodes)
    h.add_node(src)
    h.add_node(snk)
    for t, hd in multiplicity:
        h.add_edge(t, hd)  # no capacity attribute: unbounded
    total = 0
    for v, b in demand.items():
        if b > 0:
            h.add_edge(src, v, capacity=b)
            total += b
        elif b < 0:
            h.add_edge(v, snk, capacity=-b)
    value, flow = nx.maximum_flow(h, src, snk)
    if value == total:
        extra = {(t, hd): flow[t][hd] for t, hd in multiplicity}
        out = []
        seen = set()
        for a in net.arcs:
            key = (a.tail, a.head)
            if a.tail == a.head:
                out.append(1)
            elif key in seen:
                out.append(1)
            else:
                seen.add(key)
                out.append(1 + extra[key])
        return Circulation(net, out)
    _, (reach, _) = nx.minimum_cut(h, src, snk)
    s_set = {v for v in reach if v != src}
    return _certificate(net, s_set)


def _certificate(net: FlowNetwork, s_set: set[int]) -> InfeasibilityCertificate:
    """Shrink a closed node set to a weakly connected part with an entering arc."""
    inside = [a for a in net.arcs if a.tail in s_set and a.head in s_set]
    parent = {v: v for v in s_set}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a in inside:
        parent[find(a.tail)] = find(a.head)
    components: dict[int, set[int]] = {}
    for v in s_set:
        components.setdefault(find(v), set()).add(v)
    for comp in sorted(components.values(), key=lambda c: sorted(c)):
        entering = [k for k, a in enumerate(net.arcs) if a.head in comp and a.tail not in comp]
        leaving = [a for a in net.arcs if a.tail in comp and a.head not in comp]
        if entering and not leaving:
            return InfeasibilityCertificate(net, frozenset(comp), entering)
    raise InternalInvariantBroken("max-flow cut did not yield an entering arc")  # pragma: no cover


# -- certificate -> monotone cycle ---------------------------------------------------------------


def _region(rep: OrthoRadialRepresentation, seed: int, blocked: frozenset[int]) -> set[int]:
    g = rep.graph
    adj: dict[int, list[int]] = {}
    for _, f, h in g.dual_edges():
        adj.setdefault(f, []).append(h)
        adj.setdefault(h, []).append(f)
    seen = {seed}
    queue = deque([seed])
    while queue:
        f = queue.popleft()
        for h in adj.get(f, ()):
            if h not in seen and h not in blocked:
                seen.add(h)
                queue.append(h)
    return seen


def _boundary_walks(rep: OrthoRadialRepresentation, darts: set[int], region_left: bool) -> list[list[int]]:
    """Trace the closed walks formed by boundary darts of a face region."""
    g = rep.graph
    edges = {d >> 1 for d in darts}
    step = g.rot_next if region_left else g.rot_prev
    remaining = set(darts)
    walks = []
    while remaining:
        start = min(remaining)
        walk = []
        d = start
        while d in remaining:
            remaining.discard(d)
            walk.append(d)
            o = step(d ^ 1)
            while (o >> 1) not in edges:
                o = step(o)
            d = o
        if d == start:
            walks.append(walk)
    return walks


def certificate_to_monotone_cycle(
    rep: OrthoRadialRepresentation, cert: InfeasibilityCertificate
) -> tuple[EssentialCycle, MonotoneKind]:
    """Turn an infeasible node set of ``N_ver`` into a monotone cycle.

    If an entering arc comes from the outer side, the outermost boundary of
    the face set is increasing; otherwise the innermost boundary is
    decreasing.  The classification is re-checked with the labeling engine.
    """
    g = rep.graph
    faces = cert.nodes
    outside = _region(rep, g.outer_face, faces)
    inner = _region(rep, g.central_face, faces)
    tries = []
    for k in cert.entering:
        arc = cert.network.arcs[k]
        if arc.tail in outside:
            tries.append((outside, MonotoneKind.INCREASING))
        elif arc.tail in inner:
            tries.append((inner, MonotoneKind.DECREASING))
    tries += [(outside, MonotoneKind.INCREASING), (inner, MonotoneKind.DECREASING)]
    for region, kind in tries:
        if kind is MonotoneKind.INCREASING:
            bdry = {d for d in range(g.num_darts) if g.face_of(d ^ 1) in region and g.face_of(d) not in region}
        else:
            bdry = {d for d in range(g.num_darts) if g.face_of(d) in region and g.face_of(d ^ 1) not in region}
        loops = [
            loop
            for walk in _boundary_walks(rep, bdry, kind is MonotoneKind.INCREASING)
            for loop in simple_loops(g, walk)
        ]
        tester = EssentialTester(g)
        for loop in loops:
            if tester.orient(loop) is None:
                continue
            cyc = make_essential_cycle(g, loop)
            if classify_cycle(labeling(rep, cyc)).kind is kind:
                return cyc, kind
    raise InternalInvariantBroken("no monotone boundary cycle found for the certificate")


# -- flows <-> lengths ---------------------------------------------------------------------------


def lengths_from_flows(
    rep: OrthoRadialRepresentation, ver: Circulation, rad: Circulation
) -> tuple[int, list[int]]:
    """Circumference and per-edge length from the two circulations."""
    lengths = [0] * len(rep.graph.edges)
    circumference = 0
    for circ in (ver, rad):
        for a, x in zip(circ.network.arcs, circ.flow):
            if a.edge == SPECIAL:
                circumference = x
            else:
                lengths[a.edge] = x
    return circumference, lengths


def flows_from_lengths(
    rep: OrthoRadialRepresentation, circumference: int, lengths: Sequence[int]
) -> tuple[Circulation, Circulation]:
    nver, nrad = build_networks(rep)
    ver = Circulation(nver, [lengths[a.edge] for a in nver.arcs])
    rad = Circulation(
        nrad, [circumference if a.edge == SPECIAL else lengths[a.edge] for a in nrad.arcs]
    )
    return ver, rad

