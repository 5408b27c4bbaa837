from __future__ import annotations

import random

import pytest

from orthoradial.fixtures import fixture, named_fixtures, random_representation, rectangular_fixtures
from orthoradial.invariants import CHECKS, SuiteReport, check_representation, cycle_segment

NAMED = sorted(named_fixtures())


@pytest.mark.parametrize("name", NAMED)
def test_named_fixtures_have_no_violations(name):
    report = check_representation(fixture(name))
    assert report.ok, report.violations


def test_every_check_runs_somewhere():
    total = SuiteReport()
    for rep in named_fixtures().values():
        total.merge(check_representation(rep))
    assert all(total.tallies[c].checked for c in CHECKS if c != "alternative-cycle")


def test_off_face_intersections_are_noted_not_failed():
    # the broad intersection statements fail away from the central face of the union
    report = check_representation(rectangular_fixtures()["grid-3x3"])
    assert report.ok
    assert any("labels-at-intersection off the central face" in n for n in report.notes)


def test_local_violations_skip_the_suite():
    rep = fixture("triangle")
    broken = type(rep)(rep.graph, (90,) + rep.angles[1:])
    assert check_representation(broken).checked == 0


def test_report_records_violations():
    report = SuiteReport()
    report.record("split", True, "")
    report.record("split", False, "boom")
    assert not report.ok
    assert report.violations == ["split: boom"]
    other = SuiteReport(notes=["n"])
    report.merge(other)
    assert report.tallies["split"].checked == 2 and report.notes == ["n"]


def test_cycle_segment_wraps():
    assert cycle_segment((1, 2, 3, 4), 2, 1) == (3, 4, 1, 2)
    assert cycle_segment((1, 2, 3, 4), 1, 1) == (2,)


@pytest.mark.parametrize("seed", range(5))
def test_random_representations(seed):
    rep = random_representation(random.Random(seed), columns=3, layers=2)
    assert check_representation(rep).ok
