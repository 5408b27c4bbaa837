"""Named example representations and a random generator of drawable ones."""

from __future__ import annotations

import random
from typing import Callable, Sequence

from .drawing import Drawing, EdgeGeometry, extract_representation
from .plane_graph import PlaneGraph, build_plane_graph
from .representation import Direction, OrthoRadialRepresentation

R, D, L, U = Direction.RIGHT, Direction.DOWN, Direction.LEFT, Direction.UP


def from_edge_directions(
    vertices: Sequence[str],
    edges: Sequence[tuple[str, str, str, int]],
    outer: str,
    central: str,
    reference: str,
    outer_and_central: bool = False,
) -> OrthoRadialRepresentation:
    """Build a representation from one direction per edge (tail to head).

    The rotation at each vertex is the clockwise order of the directions.
    """
    dirs: dict[str, int] = {}
    out: dict[str, list[tuple[int, str]]] = {v: [] for v in vertices}
    for name, u, v, d in edges:
        dirs[name + "+"] = int(d)
        out[u].append((int(d), name))
        out[v].append(((int(d) + 2) % 4, name))
    rotation = {v: [n for _, n in sorted(items)] for v, items in out.items()}
    g = build_plane_graph(
        vertices,
        [(n, u, v) for n, u, v, _ in edges],
        rotation,
        outer,
        central,
        reference,
        outer_and_central,
    )
    return OrthoRadialRepresentation.from_directions(g, dirs)


def ring(prefix: str, n: int, edge_prefix: str | None = None) -> tuple[list[str], list[tuple[str, str, str, int]]]:
    """A clockwise cycle of ``n`` vertices on one circle."""
    ep = edge_prefix or prefix
    vs = [f"{prefix}{i}" for i in range(n)]
    es = [(f"{ep}{i}{(i + 1) % n}", vs[i], vs[(i + 1) % n], R) for i in range(n)]
    return vs, es


def triangle() -> OrthoRadialRepresentation:
    vs, es = ring("t", 3)
    return from_edge_directions(vs, es, outer="t01-", central="t01+", reference="t01+")


def bare_square() -> OrthoRadialRepresentation:
    """A 4-cycle not surrounding the centre; outer and central face coincide."""
    es = [("ab", "a", "b", R), ("bc", "b", "c", D), ("cd", "c", "d", L), ("da", "d", "a", U)]
    return from_edge_directions("abcd", es, outer="ab-", central="ab-", reference="ab+", outer_and_central=True)


def annulus() -> OrthoRadialRepresentation:
    ovs, oes = ring("o", 4)
    ivs, ies = ring("i", 4)
    spokes = [(f"s{k}", f"o{k}", f"i{k}", D) for k in range(4)]
    return from_edge_directions(ovs + ivs, oes + ies + spokes, outer="o01-", central="i01+", reference="o01+")


def nested_triangles() -> OrthoRadialRepresentation:
    avs, aes = ring("a", 3)
    bvs, bes = ring("b", 3)
    return from_edge_directions(
        avs + bvs, aes + bes + [("ab", "a0", "b0", D)], outer="a01-", central="b01+", reference="a01+"
    )


def spiral() -> OrthoRadialRepresentation:
    """A cycle that drops one layer per revolution: locally fine, not drawable."""
    es = [("s01", "s0", "s1", R), ("s12", "s1", "s2", D), ("s23", "s2", "s3", R), ("s30", "s3", "s0", R)]
    return from_edge_directions(["s0", "s1", "s2", "s3"], es, outer="s01-", central="s01+", reference="s01+")


def spiral_in_ring() -> OrthoRadialRepresentation:
    """The spiral hung below a horizontal ring by two spokes."""
    ovs, oes = ring("o", 4)
    es = [("s01", "s0", "s1", R), ("s12", "s1", "s2", D), ("s23", "s2", "s3", R), ("s30", "s3", "s0", R)]
    spokes = [("p0", "o0", "s0", D), ("p2", "o2", "s3", D)]
    return from_edge_directions(
        ovs + ["s0", "s1", "s2", "s3"], oes + es + spokes, outer="o01-", central="s01+", reference="o01+"
    )


def single_edge() -> OrthoRadialRepresentation:
    return from_edge_directions(["a", "b"], [("ab", "a", "b", R)], "ab+", "ab+", "ab+", True)


def l_shape() -> OrthoRadialRepresentation:
    """A ring with an L-shaped regular face hanging below it."""
    ovs, oes = ring("o", 4)
    es = [
        ("p0", "o0", "a", D),
        ("ab", "a", "b", R),
        ("bc", "b", "c", D),
        ("cd", "c", "d", R),
        ("p1", "d", "o2", U),
    ]
    return from_edge_directions(ovs + ["a", "b", "c", "d"], oes + es, outer="o01-", central="o23+", reference="o01+")


def staircase() -> OrthoRadialRepresentation:
    """A ring with a two-step staircase face below it."""
    ovs, oes = ring("o", 4)
    es = [
        ("p0", "o0", "a", D),
        ("ab", "a", "b", R),
        ("bc", "b", "c", D),
        ("cd", "c", "d", R),
        ("de", "d", "e", D),
        ("ef", "e", "f", R),
        ("p1", "f", "o3", U),
    ]
    return from_edge_directions(
        ovs + ["a", "b", "c", "d", "e", "f"], oes + es, outer="o01-", central="o30+", reference="o01+"
    )


def pendant_annulus() -> OrthoRadialRepresentation:
    """An annulus with a dangling edge inside one of its regular faces."""
    ovs, oes = ring("o", 4)
    ivs, ies = ring("i", 2)
    es = [("s0", "o0", "i0", D), ("s1", "o2", "i1", D), ("tip", "o1", "x", D)]
    return from_edge_directions(
        ovs + ivs + ["x"], oes + ies + es, outer="o01-", central="i01+", reference="o01+"
    )


def rectangular_spiral(rising: bool = False) -> OrthoRadialRepresentation:
    """A spiral band between two rings in which every regular face is a rectangle.

    The band drops (or, with ``rising``, climbs) one layer per revolution, so
    it is a monotone cycle although all local conditions hold.
    """
    ovs, oes = ring("o", 4)
    jvs, jes = ring("j", 2)
    step = U if rising else D
    band = [("s01", "s0", "s1", R), ("s12", "s1", "s2", step), ("s23", "s2", "s3", R), ("s30", "s3", "s0", R)]
    if rising:
        spokes = [("p0", "o0", "s0", D), ("p1", "o1", "s2", D), ("p2", "o2", "s3", D)]
        legs = [("q0", "s0", "j0", D), ("q1", "s1", "j1", D)]
    else:
        spokes = [("p0", "o0", "s0", D), ("p1", "o1", "s1", D), ("p2", "o2", "s3", D)]
        legs = [("q0", "s0", "j0", D), ("q1", "s2", "j1", D)]
    return from_edge_directions(
        ovs + ["s0", "s1", "s2", "s3"] + jvs,
        oes + band + jes + spokes + legs,
        outer="o01-",
        central="j01+",
        reference="o01+",
    )


NAMED: dict[str, Callable[[], OrthoRadialRepresentation]] = {
    "triangle": triangle,
    "bare-square": bare_square,
    "annulus": annulus,
    "nested-triangles": nested_triangles,
    "spiral": spiral,
    "spiral-in-ring": spiral_in_ring,
    "single-edge": single_edge,
    "l-shape": l_shape,
    "staircase": staircase,
    "pendant-annulus": pendant_annulus,
    "rect-spiral-down": rectangular_spiral,
    "rect-spiral-up": lambda: rectangular_spiral(rising=True),
}

INVALID = frozenset({"spiral", "spiral-in-ring", "rect-spiral-down", "rect-spiral-up"})


def fixture(name: str) -> OrthoRadialRepresentation:
    return NAMED[name]()


def named_fixtures() -> dict[str, OrthoRadialRepresentation]:
    return {name: make() for name, make in NAMED.items()}


# -- random drawable instances -------------------------------------------------------------------


def grid_drawing(columns: int, layers: int) -> Drawing:
    """The full cylinder grid with ``columns`` vertices per circle."""
    coords = {}
    edges = {}
    for y in range(1, layers + 1):
        for x in range(columns):
            coords[f"p{x}_{y}"] = (x, y)
    for y in range(1, layers + 1):
        for x in range(columns):
            edges[f"h{x}_{y}"] = EdgeGeometry(f"p{x}_{y}", f"p{(x + 1) % columns}_{y}", R, 1)
            if y < layers:
                edges[f"v{x}_{y}"] = EdgeGeometry(f"p{x}_{y}", f"p{x}_{y + 1}", U, 1)
    return Drawing(columns, coords, edges)


def _connected(vertices, edges: dict[str, EdgeGeometry]) -> bool:
    adj: dict[str, list[str]] = {v: [] for v in vertices}
    for e in edges.values():
        adj[e.tail].append(e.head)
        adj[e.head].append(e.tail)
    start = next(iter(adj))
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(adj)


def random_drawing(
    rng: random.Random,
    columns: int = 4,
    layers: int = 3,
    keep: float = 0.6,
    smooth: float = 0.5,
) -> Drawing:
    """A random connected subdrawing of a cylinder grid.

    Edges are removed one by one (keeping the drawing connected and at least
    one horizontal edge), isolated vertices dropped, and straight degree-2
    vertices smoothed away with probability ``smooth``.
    """
    if columns < 2:
        raise ValueError("need at least two columns")
    base = grid_drawing(columns, layers)
    edges = dict(base.edges)
    names = list(edges)
    rng.shuffle(names)
    for name in names:
        if rng.random() < keep:
            continue
        trial = {n: e for n, e in edges.items() if n != name}
        used = {v for e in trial.values() for v in (e.tail, e.head)}
        if trial and any(e.direction.horizontal for e in trial.values()) and _connected(used, trial):
            edges = trial
    used = {v for e in edges.values() for v in (e.tail, e.head)}
    coords = {v: p for v, p in base.coords.items() if v in used}
    drawing = Drawing(columns, coords, edges)
    for v in sorted(coords):
        if rng.random() < smooth:
            _smooth(drawing, v)
    return drawing


def _smooth(drawing: Drawing, v: str) -> None:
    inc = [(n, e) for n, e in drawing.edges.items() if v in (e.tail, e.head)]
    if len(inc) != 2:
        return
    (n1, e1), (n2, e2) = inc
    # orient as a -> v -> b
    if e1.head != v:
        e1 = EdgeGeometry(e1.head, e1.tail, e1.direction.opposite(), e1.length)
    if e2.tail != v:
        e2 = EdgeGeometry(e2.head, e2.tail, e2.direction.opposite(), e2.length)
    if e1.direction != e2.direction or e1.tail == e2.head:
        return
    if e1.length + e2.length >= drawing.circumference and e1.direction.horizontal:
        return
    del drawing.edges[n2]
    drawing.edges[n1] = EdgeGeometry(e1.tail, e2.head, e1.direction, e1.length + e2.length)
    del drawing.coords[v]


def random_representation(rng: random.Random, **kwargs) -> OrthoRadialRepresentation:
    return extract_representation(random_drawing(rng, **kwargs))


# -- small exhaustive corpus ---------------------------------------------------------------------


def canonical_code(g: PlaneGraph) -> tuple:
    """Isomorphism invariant of a plane graph with its designations.

    Darts are numbered in the order a search from the reference dart meets
    them through twins and clockwise successors; since the reference dart is
    fixed this numbering is canonical.
    """
    num = {g.reference_dart: 0}
    order = [g.reference_dart]
    for d in order:
        for n in (d ^ 1, g.rot_next(d)):
            if n not in num:
                num[n] = len(order)
                order.append(n)
    code = tuple((num[d ^ 1], num[g.rot_next(d)]) for d in order)
    outer = min(num[d] for d in g.faces[g.outer_face].boundary)
    central = min(num[d] for d in g.faces[g.central_face].boundary)
    return code, outer, central


def with_central_face(g: PlaneGraph, face: int) -> PlaneGraph:
    """Same graph, outer face and reference dart, with ``face`` as central face."""
    rotation = {v: [g.edge_name(d) for d in g.rotation[v]] for v in g.vertices}
    return build_plane_graph(
        g.vertices,
        g.edges,
        rotation,
        outer=g.dart_key(g.faces[g.outer_face].boundary[0]),
        central=g.dart_key(g.faces[face].boundary[0]),
        reference=g.dart_key(g.reference_dart),
        outer_and_central=face == g.outer_face,
    )


def small_graphs(max_edges: int = 8, samples: int = 100, seed: int = 0) -> dict[str, PlaneGraph]:
    """Distinct small plane graphs from random cylinder subgrids.

    Every face of every sampled graph is tried as the central face, so the
    corpus also holds designations that admit no drawing.
    """
    rng = random.Random(seed)
    seen: set[tuple] = set()
    out: dict[str, PlaneGraph] = {}
    shapes = [(2, 1), (3, 1), (4, 1), (2, 2), (3, 2), (4, 2), (2, 3), (3, 3)]
    for k in range(samples):
        columns, layers = shapes[k % len(shapes)]
        keep = rng.uniform(0.2, 0.8)
        drawing = random_drawing(rng, columns=columns, layers=layers, keep=keep, smooth=rng.random())
        if len(drawing.edges) > max_edges:
            continue
        base = extract_representation(drawing).graph
        for f in range(len(base.faces)):
            g = with_central_face(base, f)
            code = canonical_code(g)
            if code not in seen:
                seen.add(code)
                out[f"small-{len(out):03d}"] = g
    return out


def rectangular_fixtures(max_faces: int = 10) -> dict[str, OrthoRadialRepresentation]:
    """Rectangular instances with at most ``max_faces`` faces, valid and invalid.

    Cylinder grids, the rectangulations of the valid named fixtures and the
    two rectangular spirals.
    """
    from .rectangulation import is_rectangular, rectangulate

    out: dict[str, OrthoRadialRepresentation] = {}
    for columns in (2, 3, 4):
        for layers in (1, 2, 3):
            rep = extract_representation(grid_drawing(columns, layers))
            if len(rep.graph.faces) <= max_faces:
                out[f"grid-{columns}x{layers}"] = rep
    for name, rep in named_fixtures().items():
        if is_rectangular(rep):
            candidate = rep
        elif name in INVALID:
            continue
        else:
            candidate = rectangulate(rep).rect_rep
        if len(candidate.graph.faces) <= max_faces:
            out[name if candidate is rep else f"{name}-rectangulated"] = candidate
    return out
