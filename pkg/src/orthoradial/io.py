"""Text formats for representations and drawings.

Both formats are line based.  Each line is a keyword followed by
whitespace-separated fields; blank lines and ``#`` comments are ignored.
Serialization is canonical, so parsing a serialized file and serializing
again reproduces it byte for byte.  The grammar is described in
``docs/format.md``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .drawing import Drawing, EdgeGeometry
from .errors import GraphError, InstanceSemanticError, InstanceSyntaxError, RepresentationError
from .plane_graph import PlaneGraph, build_plane_graph
from .representation import Direction, OrthoRadialRepresentation

INSTANCE_HEADER = "orthoradial-instance 1"
DRAWING_HEADER = "orthoradial-drawing 1"


@dataclass
class Provenance:
    """Elements added by rectangulation and the input edge each piece came from."""

    added_vertices: list[str] = field(default_factory=list)
    added_edges: list[str] = field(default_factory=list)
    origin: dict[str, str] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return bool(self.added_vertices or self.added_edges or self.origin)


@dataclass
class Instance:
    rep: OrthoRadialRepresentation
    provenance: Provenance = field(default_factory=Provenance)

    @property
    def graph(self) -> PlaneGraph:
        return self.rep.graph


# -- shared tokenizer -------------------------------------------------------------------------


def _lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].split()
        if body:
            out.append((no, body))
    return out


def _expect_header(lines, header: str) -> None:
    if not lines:
        raise InstanceSyntaxError("empty file", 1)
    no, words = lines[0]
    if " ".join(words) != header:
        raise InstanceSyntaxError(f"expected header {header!r}", no)


def _arity(no: int, words: list[str], n: int) -> None:
    if len(words) != n:
        raise InstanceSyntaxError(f"{words[0]!r} takes {n - 1} field(s), got {len(words) - 1}", no)


def _int(no: int, token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise InstanceSyntaxError(f"expected an integer, got {token!r}", no) from None


def _dart_key(no: int, token: str) -> tuple[str, int]:
    if len(token) < 2 or token[-1] not in "+-":
        raise InstanceSyntaxError(f"dart {token!r} must end in '+' or '-'", no)
    return token[:-1], 0 if token[-1] == "+" else 1


def _body(lines, header: str) -> list[tuple[int, list[str]]]:
    _expect_header(lines, header)
    body = lines[1:]
    if not body or body[-1][1] != ["end"]:
        last = lines[-1][0]
        raise InstanceSyntaxError("file is truncated: missing 'end'", last + 1)
    for no, words in body[:-1]:
        if words == ["end"]:
            raise InstanceSyntaxError("content after 'end'", no)
    return body[:-1]


def _provenance(no: int, words: list[str], prov: Provenance) -> bool:
    key = words[0]
    if key == "added-vertex":
        _arity(no, words, 2)
        prov.added_vertices.append(words[1])
    elif key == "added-edge":
        _arity(no, words, 2)
        prov.added_edges.append(words[1])
    elif key == "origin":
        _arity(no, words, 3)
        prov.origin[words[1]] = words[2]
    else:
        return False
    return True


def _provenance_lines(prov: Provenance | None) -> list[str]:
    if not prov:
        return []
    out = [f"added-vertex {v}" for v in prov.added_vertices]
    out += [f"added-edge {e}" for e in prov.added_edges]
    out += [f"origin {p} {o}" for p, o in prov.origin.items()]
    return out


# -- instances --------------------------------------------------------------------------------


def parse_instance_file(text: str) -> Instance:
    """Parse an instance, keeping any provenance lines."""
    body = _body(_lines(text), INSTANCE_HEADER)
    vertices: list[str] = []
    edges: list[tuple[str, str, str]] = []
    rotation_keys: dict[str, tuple[int, list[str]]] = {}
    designation: dict[str, tuple[int, str]] = {}
    both = False
    angles: list[tuple[int, str, int]] = []
    prov = Provenance()
    for no, words in body:
        key = words[0]
        if key == "vertex":
            _arity(no, words, 2)
            vertices.append(words[1])
        elif key == "edge":
            _arity(no, words, 4)
            edges.append((words[1], words[2], words[3]))
        elif key == "rotation":
            if len(words) < 2:
                raise InstanceSyntaxError("'rotation' needs a vertex", no)
            if words[1] in rotation_keys:
                raise InstanceSemanticError(f"second rotation for {words[1]!r}", no)
            rotation_keys[words[1]] = (no, words[2:])
        elif key in ("outer", "central", "reference"):
            _arity(no, words, 2)
            if key in designation:
                raise InstanceSemanticError(f"second {key!r} line", no)
            _dart_key(no, words[1])
            designation[key] = (no, words[1])
        elif key == "outer-and-central":
            _arity(no, words, 1)
            both = True
        elif key == "angle":
            _arity(no, words, 3)
            _dart_key(no, words[1])
            angles.append((no, words[1], _int(no, words[2])))
        elif not _provenance(no, words, prov):
            raise InstanceSyntaxError(f"unknown keyword {key!r}", no)
    for key in ("outer", "central", "reference"):
        if key not in designation:
            raise InstanceSemanticError(f"missing {key!r} line", body[-1][0] if body else 1)

    ends = {name: (u, v) for name, u, v in edges}
    rotation: dict[str, list[str]] = {}
    for v, (no, darts) in rotation_keys.items():
        names = []
        for token in darts:
            name, side = _dart_key(no, token)
            if name not in ends:
                raise InstanceSemanticError(f"unknown edge {name!r} in rotation of {v!r}", no)
            if ends[name][side] != v:
                raise InstanceSemanticError(f"dart {token!r} does not leave {v!r}", no)
            names.append(name)
        rotation[v] = names
    first = body[0][0] if body else 1
    try:
        g = build_plane_graph(
            vertices,
            edges,
            rotation,
            outer=designation["outer"][1],
            central=designation["central"][1],
            reference=designation["reference"][1],
            outer_and_central=both,
        )
    except GraphError as exc:
        raise InstanceSemanticError(str(exc), first) from exc

    values: list[int | None] = [None] * g.num_darts
    for no, token, a in angles:
        name, side = _dart_key(no, token)
        if name not in ends:
            raise InstanceSemanticError(f"unknown edge {name!r}", no)
        d = 2 * g.edge_index(name) + side
        if values[d] is not None:
            raise InstanceSemanticError(f"second angle for {token!r}", no)
        if a not in (90, 180, 270, 360):
            raise InstanceSemanticError(f"angle {a} is not one of 90, 180, 270, 360", no)
        values[d] = a
    missing = [g.dart_key(d) for d, a in enumerate(values) if a is None]
    if missing:
        raise InstanceSemanticError(f"no angle for {', '.join(missing)}", body[-1][0] if body else 1)
    try:
        rep = OrthoRadialRepresentation(g, values)
    except RepresentationError as exc:
        raise InstanceSemanticError(str(exc), angles[0][0]) from exc
    return Instance(rep, prov)


def parse_instance(text: str) -> tuple[PlaneGraph, OrthoRadialRepresentation]:
    inst = parse_instance_file(text)
    return inst.graph, inst.rep


def serialize_instance(rep: OrthoRadialRepresentation, provenance: Provenance | None = None) -> str:
    g = rep.graph
    lines = [INSTANCE_HEADER]
    lines += [f"vertex {v}" for v in g.vertices]
    lines += [f"edge {name} {u} {v}" for name, u, v in g.edges]
    for v in g.vertices:
        lines.append(" ".join(["rotation", v, *(g.dart_key(d) for d in g.rotation[v])]))
    lines.append(f"outer {g.dart_key(g.faces[g.outer_face].boundary[0])}")
    lines.append(f"central {g.dart_key(g.faces[g.central_face].boundary[0])}")
    lines.append(f"reference {g.dart_key(g.reference_dart)}")
    if g.outer_face == g.central_face:
        lines.append("outer-and-central")
    lines += [f"angle {g.dart_key(d)} {a}" for d, a in enumerate(rep.angles)]
    lines += _provenance_lines(provenance)
    lines.append("end")
    return "\n".join(lines) + "\n"


def read_instance(path: str | Path) -> Instance:
    return parse_instance_file(Path(path).read_text())


def write_instance(path: str | Path, rep: OrthoRadialRepresentation, provenance: Provenance | None = None) -> None:
    Path(path).write_text(serialize_instance(rep, provenance))


# -- drawings ---------------------------------------------------------------------------------

_DIRECTION_NAMES = {d: d.name.lower() for d in Direction}
_DIRECTIONS = {v: k for k, v in _DIRECTION_NAMES.items()}


def parse_drawing(text: str) -> Drawing:
    body = _body(_lines(text), DRAWING_HEADER)
    k = None
    reference = None
    coords: dict[str, tuple[int, int]] = {}
    edges: dict[str, EdgeGeometry] = {}
    prov = Provenance()
    lines_of: dict[str, int] = {}
    for no, words in body:
        key = words[0]
        if key == "circumference":
            _arity(no, words, 2)
            k = _int(no, words[1])
            if k < 1:
                raise InstanceSemanticError("circumference must be positive", no)
        elif key == "reference":
            _arity(no, words, 2)
            _dart_key(no, words[1])
            reference = words[1]
        elif key == "vertex":
            _arity(no, words, 4)
            if words[1] in coords:
                raise InstanceSemanticError(f"duplicate vertex {words[1]!r}", no)
            coords[words[1]] = (_int(no, words[2]), _int(no, words[3]))
            lines_of[words[1]] = no
        elif key == "edge":
            _arity(no, words, 6)
            name, u, v, d, n = words[1:]
            if d not in _DIRECTIONS:
                raise InstanceSyntaxError(f"unknown direction {d!r}", no)
            if u not in coords or v not in coords:
                raise InstanceSemanticError(f"edge {name!r} has an unknown endpoint", no)
            if name in edges:
                raise InstanceSemanticError(f"duplicate edge {name!r}", no)
            length = _int(no, n)
            if length < 1:
                raise InstanceSemanticError(f"edge {name!r} has length {length} < 1", no)
            edges[name] = EdgeGeometry(u, v, _DIRECTIONS[d], length)
        elif not _provenance(no, words, prov):
            raise InstanceSyntaxError(f"unknown keyword {key!r}", no)
    if k is None:
        raise InstanceSemanticError("missing 'circumference' line", body[0][0] if body else 1)
    for v, (x, y) in coords.items():
        if not 0 <= x < k or y < 1:
            raise InstanceSemanticError(f"vertex {v!r} at ({x}, {y}) is off the cylinder", lines_of[v])
    return Drawing(k, coords, edges, reference, prov.added_vertices, prov.added_edges, prov.origin)


def serialize_drawing(drawing: Drawing) -> str:
    lines = [DRAWING_HEADER, f"circumference {drawing.circumference}"]
    if drawing.reference is not None:
        lines.append(f"reference {drawing.reference}")
    lines += [f"vertex {v} {x} {y}" for v, (x, y) in drawing.coords.items()]
    for name, e in drawing.edges.items():
        lines.append(f"edge {name} {e.tail} {e.head} {_DIRECTION_NAMES[e.direction]} {e.length}")
    lines += _provenance_lines(Provenance(drawing.added_vertices, drawing.added_edges, drawing.origin))
    lines.append("end")
    return "\n".join(lines) + "\n"


def read_drawing(path: str | Path) -> Drawing:
    return parse_drawing(Path(path).read_text())


def write_drawing(path: str | Path, drawing: Drawing) -> None:
    Path(path).write_text(serialize_drawing(drawing))
