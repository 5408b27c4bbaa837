from __future__ import annotations

import random

import pytest

from orthoradial.cycles import (
    elementary_path,
    enumerate_essential_cycles,
    labeling,
    labels_at_intersection_check,
    make_essential_cycle,
    simple_cycles,
)
from orthoradial.errors import CycleLimitExceeded, NoCommonCentralFaceVertex
from orthoradial.fixtures import fixture, named_fixtures
from orthoradial.oracle import brute_cycles
from orthoradial.plane_graph import interior_faces
from orthoradial.validity import CycleClass, classify_labels

# essential cycle counts, frozen from the brute-force oracle
ESSENTIAL_COUNTS = {"triangle": 1, "bare-square": 0, "annulus": 16, "nested-triangles": 2, "spiral": 1}


@pytest.mark.parametrize("name", sorted(ESSENTIAL_COUNTS))
def test_essential_cycle_counts(name):
    g = fixture(name).graph
    assert len(enumerate_essential_cycles(g)) == ESSENTIAL_COUNTS[name]


@pytest.mark.parametrize("name", sorted(named_fixtures()))
def test_enumeration_matches_oracle(name):
    g = fixture(name).graph
    mine = sorted(c.darts for c in enumerate_essential_cycles(g))
    assert mine == sorted(brute_cycles(g))


def test_cycles_are_clockwise_with_centre_inside():
    g = fixture("annulus").graph
    for c in enumerate_essential_cycles(g):
        assert g.central_face in interior_faces(g, c.darts)
        assert g.outer_face not in interior_faces(g, c.darts)


def test_cycle_limit():
    g = fixture("annulus").graph
    with pytest.raises(CycleLimitExceeded):
        enumerate_essential_cycles(g, max_cycles=3)


def test_simple_cycles_include_faces():
    g = fixture("annulus").graph
    found = {frozenset(c) for c in simple_cycles(g)}
    for f in g.faces:
        if g.is_regular(f.id):
            assert frozenset(f.boundary) in found or frozenset(d ^ 1 for d in f.boundary) in found


def test_spiral_labels():
    rep = fixture("spiral")
    g = rep.graph
    (c,) = enumerate_essential_cycles(g)
    lab = labeling(rep, c)
    assert lab.path == ()
    assert dict(zip((g.dart_key(d) for d in c.darts), lab.values)) == {
        "s01+": 0,
        "s12+": 1,
        "s23+": 0,
        "s30+": 0,
    }


def test_annulus_labels_follow_directions():
    rep = fixture("annulus")
    for c in enumerate_essential_cycles(rep.graph):
        values = labeling(rep, c).values
        for d, x in zip(c.darts, values):
            # horizontal darts point right, down is +1 and up is -1
            assert x == {0: 0, 1: 1, 3: -1}[int(rep.direction(d))]
        assert classify_labels(values) in (CycleClass.ALL_ZERO, CycleClass.MIXED)


def test_elementary_path_stays_outside():
    rep = fixture("spiral-in-ring")
    g = rep.graph
    inner = make_essential_cycle(g, [g.dart(k) for k in ("s01+", "s12+", "s23+", "s30+")])
    inside = interior_faces(g, inner.darts)
    for seed in range(10):
        path = elementary_path(g, inner, random.Random(seed))
        assert g.tail(path[0]) == g.head(g.reference_dart)
        assert g.head(path[-1]) in inner.vertices(g)
        assert all(g.face_of(d) not in inside and g.face_of(d ^ 1) not in inside for d in path)
        assert labeling(rep, inner, path=path).values == (0, 1, 0, 0)


def test_labels_at_intersection():
    rep = fixture("annulus")
    g = rep.graph
    cycles = enumerate_essential_cycles(g)
    inner = next(c for c in cycles if {g.edge_name(d) for d in c.darts} == {"i01", "i12", "i23", "i30"})
    outer = next(c for c in cycles if {g.edge_name(d) for d in c.darts} == {"o01", "o12", "o23", "o30"})
    with pytest.raises(NoCommonCentralFaceVertex):
        labels_at_intersection_check(rep, inner, outer)
    mixed = next(c for c in cycles if "s0" in {g.edge_name(d) for d in c.darts})
    assert labels_at_intersection_check(rep, mixed, inner).ok
