"""Ortho-radial representations: validity, rectangulation and bend-free drawings."""

from __future__ import annotations

from .cycles import EssentialCycle, enumerate_essential_cycles, labeling
from .drawing import Drawing, draw, extract_representation
from .errors import NotValid, OrthoRadialError, ParseError
from .io import parse_drawing, parse_instance, serialize_drawing, serialize_instance
from .plane_graph import PlaneGraph, build_plane_graph
from .rectangulation import rectangulate
from .render import render_svg
from .representation import Direction, OrthoRadialRepresentation
from .validity import ValidityReport, validate

__all__ = [
    "Direction",
    "Drawing",
    "EssentialCycle",
    "NotValid",
    "OrthoRadialError",
    "OrthoRadialRepresentation",
    "ParseError",
    "PlaneGraph",
    "ValidityReport",
    "build_plane_graph",
    "draw",
    "enumerate_essential_cycles",
    "extract_representation",
    "labeling",
    "parse_drawing",
    "parse_instance",
    "rectangulate",
    "render_svg",
    "serialize_drawing",
    "serialize_instance",
    "validate",
]
