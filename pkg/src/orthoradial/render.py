"""SVG rendering of drawings, on concentric circles or on the unrolled cylinder.

Every edge becomes exactly one ``<path class="edge">``; grid lines, wrap
markers and vertices use other elements, so edges can be counted and their
numerals compared against the drawing.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import quoteattr

from .drawing import Drawing
from .representation import Direction

UNIT = 40.0
MARGIN = 20.0
VIEWS = ("polar", "unrolled")


def _num(value: float) -> str:
    text = f"{value:.9f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def polar_point(drawing: Drawing, x: float, y: float, unit: float = UNIT) -> tuple[float, float]:
    """Screen position of column ``x`` on circle ``y``; columns advance clockwise from the top."""
    theta = 2 * math.pi * x / drawing.circumference
    r = y * unit
    return r * math.sin(theta), -r * math.cos(theta)


def unrolled_point(drawing: Drawing, x: float, y: float, top: int, unit: float = UNIT) -> tuple[float, float]:
    return x * unit, (top - y) * unit


def render_svg(drawing: Drawing, view: str = "polar", unit: float = UNIT) -> str:
    if view == "polar":
        body, box = _polar(drawing, unit)
    elif view == "unrolled":
        body, box = _unrolled(drawing, unit)
    else:
        raise ValueError(f"unknown view {view!r}; expected one of {VIEWS}")
    x0, y0, w, h = box
    head = (
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{_num(x0)} {_num(y0)} {_num(w)} {_num(h)}" '
        f'width="{_num(w)}" height="{_num(h)}" data-view="{view}" '
        f'data-circumference="{drawing.circumference}">'
    )
    return "\n".join([head, *body, "</svg>"]) + "\n"


def _vertices(drawing: Drawing, place) -> list[str]:
    out = []
    for v, (x, y) in drawing.coords.items():
        px, py = place(x, y)
        out.append(
            f'<circle class="vertex" data-vertex={quoteattr(v)} cx="{_num(px)}" cy="{_num(py)}" r="3" />'
        )
    return out


def _polar(drawing: Drawing, unit: float) -> tuple[list[str], tuple[float, float, float, float]]:
    k = drawing.circumference
    top = max(y for _, y in drawing.coords.values())
    reach = (top + 0.5) * unit
    body = ['<g class="grid" stroke="#ccc" fill="none">']
    for y in range(1, top + 1):
        body.append(f'<circle cx="0" cy="0" r="{_num(y * unit)}" />')
    for x in range(k):
        px, py = polar_point(drawing, x, top + 0.5, unit)
        body.append(f'<line x1="0" y1="0" x2="{_num(px)}" y2="{_num(py)}" />')
    body.append("</g>")
    body.append('<g class="edges" stroke="black" fill="none" stroke-width="2">')
    for name, e in drawing.edges.items():
        x, y = drawing.coords[e.tail]
        hx, hy = drawing.coords[e.head]
        sx, sy = polar_point(drawing, x, y, unit)
        tx, ty = polar_point(drawing, hx, hy, unit)
        if e.direction.vertical:
            d = f"M {_num(sx)} {_num(sy)} L {_num(tx)} {_num(ty)}"
        else:
            r = y * unit
            large = 1 if 2 * e.length > k else 0
            sweep = 1 if e.direction == Direction.RIGHT else 0
            d = f"M {_num(sx)} {_num(sy)} A {_num(r)} {_num(r)} 0 {large} {sweep} {_num(tx)} {_num(ty)}"
        body.append(f'<path class="edge" data-edge={quoteattr(name)} d="{d}" />')
    body.append("</g>")
    body += _vertices(drawing, lambda x, y: polar_point(drawing, x, y, unit))
    return body, (-reach - MARGIN, -reach - MARGIN, 2 * (reach + MARGIN), 2 * (reach + MARGIN))


def _unrolled(drawing: Drawing, unit: float) -> tuple[list[str], tuple[float, float, float, float]]:
    k = drawing.circumference
    top = max(y for _, y in drawing.coords.values())

    def place(x: float, y: float) -> tuple[float, float]:
        return unrolled_point(drawing, x, y, top, unit)

    body = ['<g class="grid" stroke="#ccc" fill="none">']
    for y in range(1, top + 1):
        (ax, ay), (bx, by) = place(0, y), place(k, y)
        body.append(f'<line x1="{_num(ax)}" y1="{_num(ay)}" x2="{_num(bx)}" y2="{_num(by)}" />')
    for x in range(k + 1):
        (ax, ay), (bx, by) = place(x, 0.5), place(x, top + 0.5)
        dash = ' stroke-dasharray="4 3"' if x in (0, k) else ""
        body.append(f'<line x1="{_num(ax)}" y1="{_num(ay)}" x2="{_num(bx)}" y2="{_num(by)}"{dash} />')
    body.append("</g>")
    body.append('<g class="edges" stroke="black" fill="none" stroke-width="2">')
    markers = []
    for name, e in drawing.edges.items():
        x, y = drawing.coords[e.tail]
        hx, hy = drawing.coords[e.head]
        sx, sy = place(x, y)
        tx, ty = place(hx, hy)
        wraps = (e.direction == Direction.RIGHT and x + e.length >= k) or (
            e.direction == Direction.LEFT and x - e.length < 0
        )
        if not wraps:
            d = f"M {_num(sx)} {_num(sy)} L {_num(tx)} {_num(ty)}"
        else:
            # leave through one border of the strip and come back through the other
            out_x, in_x = (k, 0) if e.direction == Direction.RIGHT else (0, k)
            (ox, oy), (ix, iy) = place(out_x, y), place(in_x, y)
            d = (
                f"M {_num(sx)} {_num(sy)} L {_num(ox)} {_num(oy)} "
                f"M {_num(ix)} {_num(iy)} L {_num(tx)} {_num(ty)}"
            )
            for px, py in ((ox, oy), (ix, iy)):
                markers.append(
                    f'<rect class="wrap" data-edge={quoteattr(name)} x="{_num(px - 3)}" '
                    f'y="{_num(py - 3)}" width="6" height="6" fill="none" stroke="red" />'
                )
        body.append(f'<path class="edge" data-edge={quoteattr(name)} d="{d}" />')
    body.append("</g>")
    body += markers
    body += _vertices(drawing, place)
    width, height = k * unit, top * unit
    return body, (-MARGIN, -MARGIN, width + 2 * MARGIN, height + 2 * MARGIN)
