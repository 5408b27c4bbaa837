from __future__ import annotations

import math
import re
import xml.etree.ElementTree as ET

import pytest

from orthoradial.drawing import draw
from orthoradial.fixtures import INVALID, fixture, named_fixtures
from orthoradial.render import UNIT, polar_point, render_svg, unrolled_point
from orthoradial.representation import Direction

NS = "{http://www.w3.org/2000/svg}"
VALID = sorted(n for n in named_fixtures() if n not in INVALID)


def edge_paths(svg: str) -> dict[str, str]:
    root = ET.fromstring(svg)
    return {p.get("data-edge"): p.get("d") for p in root.iter(f"{NS}path") if p.get("class") == "edge"}


def numbers(d: str) -> list[float]:
    return [float(t) for t in re.findall(r"-?\d+(?:\.\d+)?", d)]


@pytest.mark.parametrize("view", ["polar", "unrolled"])
@pytest.mark.parametrize("name", VALID)
def test_one_path_per_edge(name, view):
    d = draw(fixture(name))
    svg = render_svg(d, view)
    assert svg.count('class="edge"') == len(d.edges)
    assert set(edge_paths(svg)) == set(d.edges)


@pytest.mark.parametrize("name", VALID)
def test_polar_numerals_match_coordinates(name):
    d = draw(fixture(name))
    paths = edge_paths(render_svg(d, "polar"))
    for n, e in d.edges.items():
        nums = numbers(paths[n])
        sx, sy = polar_point(d, *d.coords[e.tail])
        tx, ty = polar_point(d, *d.coords[e.head])
        assert math.isclose(nums[0], sx, abs_tol=1e-6) and math.isclose(nums[1], sy, abs_tol=1e-6)
        assert math.isclose(nums[-2], tx, abs_tol=1e-6) and math.isclose(nums[-1], ty, abs_tol=1e-6)


def test_horizontal_edges_are_true_arcs():
    d = draw(fixture("annulus"))
    paths = edge_paths(render_svg(d, "polar"))
    for n, e in d.edges.items():
        if e.direction.horizontal:
            assert " A " in paths[n]
            r = numbers(paths[n])[2]
            assert math.isclose(r, d.coords[e.tail][1] * UNIT)
        else:
            assert " A " not in paths[n] and " L " in paths[n]


def test_triangle_is_one_circle():
    d = draw(fixture("triangle"))
    paths = edge_paths(render_svg(d, "polar"))
    radii = {numbers(p)[2] for p in paths.values()}
    assert radii == {UNIT}


def test_unrolled_width_and_wrap_markers():
    d = draw(fixture("annulus"))
    svg = render_svg(d, "unrolled")
    root = ET.fromstring(svg)
    for p in root.iter(f"{NS}path"):
        xs = numbers(p.get("d"))[0::2]
        assert all(0 <= x <= d.circumference * UNIT + 1e-6 for x in xs)
    wrapping = [
        n for n, e in d.edges.items()
        if e.direction is Direction.RIGHT and d.coords[e.tail][0] + e.length >= d.circumference
    ]
    marked = {r.get("data-edge") for r in root.iter(f"{NS}rect") if r.get("class") == "wrap"}
    assert marked == set(wrapping) and wrapping


def test_unrolled_numerals_match_coordinates():
    d = draw(fixture("l-shape"))
    top = max(y for _, y in d.coords.values())
    paths = edge_paths(render_svg(d, "unrolled"))
    for n, e in d.edges.items():
        nums = numbers(paths[n])
        assert (nums[0], nums[1]) == pytest.approx(unrolled_point(d, *d.coords[e.tail], top), abs=1e-6)
        assert (nums[-2], nums[-1]) == pytest.approx(unrolled_point(d, *d.coords[e.head], top), abs=1e-6)


def test_unknown_view():
    with pytest.raises(ValueError):
        render_svg(draw(fixture("triangle")), "sideways")
