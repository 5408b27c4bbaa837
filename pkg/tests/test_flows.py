from __future__ import annotations

import pytest

from orthoradial.cycles import labeling
from orthoradial.fixtures import fixture, rectangular_fixtures
from orthoradial.flows import (
    SPECIAL,
    Circulation,
    InfeasibilityCertificate,
    build_networks,
    certificate_to_monotone_cycle,
    feasible_circulation,
    flows_from_lengths,
    lengths_from_flows,
)
from orthoradial.validity import MonotoneKind, classify_labels, validate

RECTANGULAR = rectangular_fixtures()


def test_networks_cover_every_edge_once():
    rep = fixture("annulus")
    nver, nrad = build_networks(rep)
    ver_edges = [a.edge for a in nver.arcs]
    rad_edges = [a.edge for a in nrad.arcs if a.edge != SPECIAL]
    assert sorted(ver_edges + rad_edges) == list(range(len(rep.graph.edges)))
    assert [a.edge for a in nrad.arcs].count(SPECIAL) == 1
    dirs = rep.directions()
    assert all(dirs[2 * e].vertical for e in ver_edges)
    assert all(dirs[2 * e].horizontal for e in rad_edges)


@pytest.mark.parametrize("name", sorted(RECTANGULAR))
def test_feasibility_matches_validity(name):
    rep = RECTANGULAR[name]
    nver, nrad = build_networks(rep)
    ver = feasible_circulation(nver)
    assert isinstance(ver, Circulation) == validate(rep).valid
    rad = feasible_circulation(nrad)
    assert isinstance(rad, Circulation)
    assert rad.is_feasible()
    if isinstance(ver, Circulation):
        assert ver.is_feasible()
        assert all(x >= 1 for x in ver.flow)


@pytest.mark.parametrize("name, kind", [("rect-spiral-down", MonotoneKind.DECREASING), ("rect-spiral-up", MonotoneKind.INCREASING)])
def test_certificate_becomes_monotone_cycle(name, kind):
    rep = fixture(name)
    cert = feasible_circulation(build_networks(rep)[0])
    assert isinstance(cert, InfeasibilityCertificate)
    assert cert.entering
    cyc, got = certificate_to_monotone_cycle(rep, cert)
    assert got is kind
    assert classify_labels(labeling(rep, cyc).values).kind is kind


def test_lengths_round_trip():
    rep = RECTANGULAR["annulus"]
    nver, nrad = build_networks(rep)
    ver, rad = feasible_circulation(nver), feasible_circulation(nrad)
    k, lengths = lengths_from_flows(rep, ver, rad)
    ver2, rad2 = flows_from_lengths(rep, k, lengths)
    assert ver2.flow == ver.flow and rad2.flow == rad.flow
    assert ver2.is_feasible() and rad2.is_feasible()


def test_bad_flow_is_not_feasible():
    rep = RECTANGULAR["annulus"]
    nver, _ = build_networks(rep)
    ver = feasible_circulation(nver)
    broken = Circulation(nver, [x + (i == 0) for i, x in enumerate(ver.flow)])
    assert not broken.is_feasible()


def test_networks_need_rectangles():
    from orthoradial.errors import NotRectangular

    with pytest.raises(NotRectangular):
        build_networks(fixture("l-shape"))
