from __future__ import annotations

import pytest

from orthoradial.errors import NotIncident, PreconditionsUnchecked, RepresentationError
from orthoradial.fixtures import fixture, named_fixtures
from orthoradial.representation import Direction, OrthoRadialRepresentation


def test_direction_helpers():
    assert Direction.UP.vertical and Direction.RIGHT.horizontal
    assert Direction.LEFT.opposite() is Direction.RIGHT
    assert Direction.DOWN.opposite() is Direction.UP


def test_triangle_angles_and_rotations():
    rep = fixture("triangle")
    g = rep.graph
    assert set(rep.angles) == {180}
    assert rep.face_rotation(g.outer_face) == 0
    assert rep.face_rotation(g.central_face) == 0
    assert all(rep.direction(g.dart(k)) is Direction.RIGHT for k in ("t01+", "t12+", "t20+"))
    assert rep.direction(g.dart("t01-")) is Direction.LEFT


@pytest.mark.parametrize("name", sorted(named_fixtures()))
def test_named_fixtures_satisfy_local_conditions(name):
    rep = fixture(name)
    assert rep.satisfies_local_conditions()
    assert all(rep.angle_sum(v) == 360 for v in rep.graph.vertices)


def test_rot_pair_values():
    rep = fixture("annulus")
    g = rep.graph
    # heading right into o0, then down a spoke: a right turn
    into = g.dart("o30+")
    assert rep.rot_pair(into, g.dart("s0+")) == 1
    # heading left into o0, then down: a left turn
    assert rep.rot_pair(g.dart("o01-"), g.dart("s0+")) == -1
    assert rep.rot_pair(into, g.dart("o01+")) == 0
    assert rep.rot_pair(into, into ^ 1) == -2
    assert rep.rot_pair(g.dart("s0+"), g.dart("s0-")) == -2
    with pytest.raises(NotIncident):
        rep.rot_pair(g.dart("s0+"), g.dart("o01+"))


def test_regular_face_rotation_is_four():
    rep = fixture("annulus")
    g = rep.graph
    for f in g.faces:
        if g.is_regular(f.id):
            assert rep.face_rotation(f.id) == 4


def test_essential_cycle_rotation_is_zero():
    rep = fixture("annulus")
    g = rep.graph
    ring = [g.dart(k) for k in ("o01+", "o12+", "o23+", "o30+")]
    assert rep.rot_cycle(ring) == 0


def test_bad_angles_rejected():
    rep = fixture("triangle")
    with pytest.raises(RepresentationError):
        OrthoRadialRepresentation(rep.graph, [45] * rep.graph.num_darts)
    with pytest.raises(RepresentationError):
        OrthoRadialRepresentation(rep.graph, [180])
    with pytest.raises(RepresentationError):
        OrthoRadialRepresentation(rep.graph, [360] * rep.graph.num_darts)


def test_from_mapping_requires_every_dart():
    rep = fixture("triangle")
    with pytest.raises(RepresentationError):
        OrthoRadialRepresentation.from_mapping(rep.graph, {"t01+": 180})


def test_directions_need_local_conditions():
    rep = fixture("annulus")
    d = rep.graph.dart("s0+")
    broken = rep.with_angles({d: 90 if rep.angles[d] != 90 else 180})
    assert not broken.satisfies_local_conditions()
    with pytest.raises(PreconditionsUnchecked):
        broken.directions()


def test_equality_and_hash():
    a, b = fixture("annulus"), fixture("annulus")
    assert a == b and hash(a) == hash(b)
    assert a != fixture("triangle")
