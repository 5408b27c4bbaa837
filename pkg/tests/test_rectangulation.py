from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orthoradial.errors import NotValid
from orthoradial.fixtures import INVALID, fixture, named_fixtures, random_representation
from orthoradial.plane_graph import FaceKind
from orthoradial.rectangulation import (
    candidates,
    count_left_turns,
    find_left_turn,
    is_rectangular,
    rectangulate,
    rectangulate_outer_central,
)
from orthoradial.validity import validate

VALID = sorted(n for n in named_fixtures() if n not in INVALID)


def test_left_turn_counts():
    assert count_left_turns(fixture("annulus")) == 0
    assert count_left_turns(fixture("l-shape")) == 1
    assert count_left_turns(fixture("staircase")) == 2
    # a dangling edge gives a U-turn, counted twice
    assert count_left_turns(fixture("pendant-annulus")) == 2


def test_rectangularity():
    assert is_rectangular(fixture("annulus"))
    assert is_rectangular(fixture("triangle"))
    assert not is_rectangular(fixture("l-shape"))
    assert not is_rectangular(fixture("bare-square"))


def test_find_left_turn_on_l_shape():
    rep = fixture("l-shape")
    lt = find_left_turn(rep)
    assert lt is not None
    assert lt.vertex == "b"
    assert rep.graph.faces[lt.face].kind is FaceKind.REGULAR
    assert candidates(rep, lt)
    assert find_left_turn(fixture("annulus")) is None


def test_outer_and_central_triangles():
    rep = fixture("bare-square")
    tri = rectangulate_outer_central(rep)
    g = tri.result.graph
    assert not g.outer_and_central
    assert len(tri.outer_vertices) == len(tri.central_vertices) == 3
    assert validate(tri.result).valid
    outer = tri.result.face_rotation(g.outer_face)
    central = tri.result.face_rotation(g.central_face)
    assert outer == central == 0


@pytest.mark.parametrize("name", VALID)
def test_rectangulate_named(name):
    rep = fixture(name)
    res = rectangulate(rep, keep_intermediates=True)
    assert is_rectangular(res.rect_rep)
    assert all(validate(m).valid for m in res.intermediates)
    counts = res.left_turn_counts
    assert all(b < a for a, b in zip(counts, counts[1:]))
    # every original edge survives, possibly subdivided
    names = {n for n, _, _ in rep.graph.edges}
    assert names <= set(res.edge_origin.values())
    for piece, origin in res.edge_origin.items():
        assert origin is None or origin in names
    assert set(res.added_edges) == {p for p, o in res.edge_origin.items() if o is None}


@pytest.mark.parametrize("name", sorted(INVALID))
def test_rectangulate_refuses_invalid(name):
    with pytest.raises(NotValid) as info:
        rectangulate(fixture(name))
    assert info.value.report.monotone_cycles


def test_unchecked_rectangulation_still_terminates():
    res = rectangulate(fixture("spiral-in-ring"), checked=False)
    assert is_rectangular(res.rect_rep)
    assert not validate(res.rect_rep).valid


def test_step_records():
    seen = []
    res = rectangulate(fixture("staircase"), on_step=lambda rep, rec: seen.append(rec))
    assert seen == res.steps
    for rec in res.steps:
        assert rec.left_turns_after < rec.left_turns_before
        assert rec.fallback or any(rec.chosen.endswith(c) for c in rec.candidates)


def test_full_checks_agree():
    fast = rectangulate(fixture("l-shape"))
    full = rectangulate(fixture("l-shape"), full_checks=True)
    assert fast.rect_rep == full.rect_rep


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 100_000))
def test_rectangulate_random(seed):
    rep = random_representation(random.Random(seed), columns=3, layers=3)
    res = rectangulate(rep, keep_intermediates=True)
    assert is_rectangular(res.rect_rep)
    assert validate(res.rect_rep).valid
    counts = [count_left_turns(m) for m in res.intermediates]
    assert counts[-1] == 0
    assert all(b < a for a, b in zip(counts, counts[1:]))
