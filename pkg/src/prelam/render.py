"""SVG drawings of annotated laminations with straight chords in the unit disc."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .lamination import Decomposition, validate


@dataclass(frozen=True)
class RenderStyle:
    leaf_stroke: str = "#1a1a1a"
    root_stroke: str = "#b2182b"
    virtual_stroke: str = "#2166ac"
    shell_fill: str = "#c6dbef"
    star_fill: str = "#fdd49e"
    size: int = 512
    stroke_width: float = 1.0


def _xy(theta, c, r):
    a = 2 * math.pi * float(theta)
    return c + r * math.cos(a), c - r * math.sin(a)


def _f(v):
    return f"{v:.3f}"


def _face_path(face, c, r):
    els = face.boundary
    first = els[0]
    cur = first.a if hasattr(first, "a") else first.start
    x, y = _xy(cur, c, r)
    parts = [f"M{_f(x)},{_f(y)}"]
    for el in els:
        if hasattr(el, "a"):
            cur = el.other(cur)
            x, y = _xy(cur, c, r)
            parts.append(f"L{_f(x)},{_f(y)}")
        else:
            cur = el.end
            x, y = _xy(cur, c, r)
            large = 1 if el.length > 0.5 else 0
            parts.append(f"A{_f(r)},{_f(r)} 0 {large} 0 {_f(x)},{_f(y)}")
    return " ".join(parts) + " Z"


def render(al, style: RenderStyle = RenderStyle()) -> bytes:
    """Deterministic SVG 1.1 bytes: circle, shaded shells and stars, chords."""
    validate(al)
    d = Decomposition(al)
    n = style.size
    c = n / 2
    r = n / 2 - 8
    w = style.stroke_width
    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{n}" height="{n}" '
           f'viewBox="0 0 {n} {n}">',
           f'<circle class="boundary" cx="{_f(c)}" cy="{_f(c)}" r="{_f(r)}" fill="none" '
           f'stroke="{style.leaf_stroke}" stroke-width="{w}"/>']
    for i, s in enumerate(al.shells):
        out.append(f'<path class="shell" data-index="{i}" d="{_face_path(d.shell_face(s), c, r)}" '
                   f'fill="{style.shell_fill}" stroke="none"/>')
    for j, s in enumerate(al.stars):
        out.append(f'<path class="star" data-index="{j}" d="{_face_path(d.star_face(s), c, r)}" '
                   f'fill="{style.star_fill}" stroke="none"/>')

    def line(ch, cls, stroke, extra=""):
        x1, y1 = _xy(ch.a, c, r)
        x2, y2 = _xy(ch.b, c, r)
        out.append(f'<line class="{cls}" x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}" '
                   f'stroke="{stroke}" stroke-width="{w}"{extra}/>')

    for ch in al.leaves:
        line(ch, "leaf", style.leaf_stroke)
    for ch in al.roots:
        line(ch, "root", style.root_stroke, ' stroke-dasharray="6,4"')
    for ch in al.virtual:
        line(ch, "virtual", style.virtual_stroke, ' stroke-dasharray="2,3"')
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode()
