from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orthoradial.errors import (
    BadDesignation,
    BadReferenceDart,
    DegreeExceeded,
    Disconnected,
    GraphError,
    InvalidRotation,
    NonPlanarRotation,
    NotSimple,
)
from orthoradial.fixtures import fixture, random_representation
from orthoradial.plane_graph import (
    FaceKind,
    build_plane_graph,
    check_simple_cycle,
    cycle_sides,
    is_essential,
    orient_clockwise,
    reverse_path,
    rotate_to_min,
    subpath,
)


def square(**kw):
    vs = ["a", "b", "c", "d"]
    es = [("ab", "a", "b"), ("bc", "b", "c"), ("cd", "c", "d"), ("da", "d", "a")]
    rot = {"a": ["ab", "da"], "b": ["bc", "ab"], "c": ["cd", "bc"], "d": ["da", "cd"]}
    args = dict(outer="ab-", central="ab+", reference="ab+")
    args.update(kw)
    return build_plane_graph(vs, es, rot, **args)


def test_square_has_two_faces():
    g = square()
    assert len(g.faces) == 2
    assert g.face_kind(g.outer_face) is FaceKind.OUTER
    assert g.face_kind(g.central_face) is FaceKind.CENTRAL
    assert len(g.vertices) - len(g.edges) + len(g.faces) == 2


def test_darts_and_twins():
    g = square()
    d = g.dart("ab+")
    assert g.tail(d) == "a" and g.head(d) == "b"
    assert g.twin(d) == d ^ 1 == g.dart("ab-")
    assert g.dart_key(d ^ 1) == "ab-"
    assert g.edge_name(d) == "ab"


def test_face_walk_is_closed():
    g = fixture("annulus").graph
    for f in g.faces:
        walk = f.boundary
        for a, b in zip(walk, walk[1:] + walk[:1]):
            assert g.head(a) == g.tail(b)
            assert g.succ(a) == b
            assert g.face_of(a) == f.id


def test_rot_next_and_prev_are_inverse():
    g = fixture("annulus").graph
    for v in g.vertices:
        for d in g.out_darts(v):
            assert g.rot_prev(g.rot_next(d)) == d


def test_degree_limit():
    vs = ["c", "a", "b", "d", "e", "f"]
    es = [(x, "c", x) for x in "abdef"] + [("ab", "a", "b")]
    rot = {"c": list("abdef")}
    with pytest.raises(DegreeExceeded):
        build_plane_graph(vs, es, rot, "a+", "a+", "a+")


def test_non_planar_rotation_rejected():
    # K4 with a rotation system of genus one
    vs = ["a", "b", "c", "d"]
    es = [("ab", "a", "b"), ("ac", "a", "c"), ("ad", "a", "d"), ("bc", "b", "c"), ("bd", "b", "d"), ("cd", "c", "d")]
    rot = {"a": ["ab", "ac", "ad"], "b": ["ab", "bc", "bd"], "c": ["ac", "bc", "cd"], "d": ["ad", "bd", "cd"]}
    with pytest.raises(NonPlanarRotation):
        build_plane_graph(vs, es, rot, "ab+", "ab-", "ab+")


def test_disconnected_rejected():
    vs = ["a", "b", "c", "d"]
    es = [("ab", "a", "b"), ("cd", "c", "d")]
    rot = {"a": ["ab"], "b": ["ab"], "c": ["cd"], "d": ["cd"]}
    with pytest.raises(Disconnected):
        build_plane_graph(vs, es, rot, "ab+", "ab+", "ab+", True)


def test_designation_errors():
    with pytest.raises(BadDesignation):
        square(central="ab-")
    with pytest.raises(BadDesignation):
        square(outer_and_central=True)
    with pytest.raises(BadReferenceDart):
        square(reference="ab-")


@pytest.mark.parametrize(
    "rot",
    [
        {"a": ["ab", "zz"], "b": ["ab"]},
        {"a": ["ab", "ab"], "b": ["ab"]},
        {"a": ["ab"], "b": [], "q": []},
    ],
)
def test_invalid_rotation(rot):
    with pytest.raises(InvalidRotation):
        build_plane_graph(["a", "b"], [("ab", "a", "b")], rot, "ab+", "ab+", "ab+", True)


def test_basic_graph_errors():
    with pytest.raises(GraphError):
        build_plane_graph(["a", "a"], [("ab", "a", "a")], {}, "ab+", "ab+", "ab+")
    with pytest.raises(GraphError):
        build_plane_graph(["a"], [("aa", "a", "a")], {"a": ["aa"]}, "aa+", "aa+", "aa+")
    with pytest.raises(GraphError):
        build_plane_graph(["a"], [], {}, "x+", "x+", "x+")


def test_structural_equality():
    assert square() == square()
    assert hash(square()) == hash(square())
    assert square() != fixture("triangle").graph


def test_cycle_helpers():
    g = fixture("annulus").graph
    ring = tuple(g.dart(k) for k in ("o01+", "o12+", "o23+", "o30+"))
    check_simple_cycle(g, ring)
    assert is_essential(g, ring)
    assert orient_clockwise(g, reverse_path(ring)) is not None
    sides = cycle_sides(g, ring)
    assert sides.essential and g.central_face in sides.interior
    assert rotate_to_min(ring[2:] + ring[:2]) == rotate_to_min(ring)
    part = subpath(g, ring, "o1", "o3")
    assert g.vertex_sequence(part) == ["o1", "o2", "o3"]


def test_repeated_vertex_is_not_simple():
    g = fixture("annulus").graph
    walk = [g.dart(k) for k in ("o01+", "o01-")]
    with pytest.raises(NotSimple):
        check_simple_cycle(g, walk)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_euler_formula_on_random_graphs(seed):
    g = random_representation(random.Random(seed), columns=3, layers=3).graph
    assert len(g.vertices) - len(g.edges) + len(g.faces) == 2
    assert sorted(d for f in g.faces for d in f.boundary) == list(range(g.num_darts))
