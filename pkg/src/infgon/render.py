"""Deterministic SVG, TikZ and text drawings of windows and friezes.

Line geometry puts the vertices on a horizontal axis and draws arcs as upper
semicircles; the fountain is a vertical ray to an accumulation marker.  Disc
geometry puts the vertices counterclockwise on a circle with the accumulation
point at the top and draws arcs as chords.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .frieze import FriezeArray
from .triangulation import TriangulationWindow

FORMATS = ("svg", "tikz", "text")
GEOMETRIES = ("line", "disc")


@dataclass(frozen=True)
class RenderSpec:
    format: str = "svg"
    geometry: str = "line"
    scale: float = 1.0
    labels: bool = True

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")
        if self.geometry not in GEOMETRIES:
            raise ValueError(f"geometry must be one of {GEOMETRIES}")
        if not self.scale > 0:
            raise ValueError("scale must be positive")


def _n(x: float) -> str:
    s = f"{x:.2f}"
    return "0.00" if s == "-0.00" else s


# -- geometry -------------------------------------------------------------------


def _line_layout(w: TriangulationWindow, spec: RenderSpec):
    unit = 40.0 * spec.scale
    margin = 20.0 * spec.scale
    span = w.hi - w.lo
    height = unit * span / 2 + 2 * margin + (unit if w.fountain is not None else 0)
    base = height - margin - (12.0 * spec.scale if spec.labels else 0)
    pos = {v: (margin + unit * (v - w.lo), base) for v in w.vertices}
    top = (None, margin)
    return pos, top, margin * 2 + unit * span, height + (12.0 * spec.scale if spec.labels else 0)


def _disc_layout(w: TriangulationWindow, spec: RenderSpec):
    radius = 120.0 * spec.scale
    margin = 30.0 * spec.scale
    cx = cy = radius + margin
    slots = w.hi - w.lo + 2
    pos = {}
    for v in w.vertices:
        theta = math.pi / 2 + 2 * math.pi * (v - w.lo + 1) / slots
        pos[v] = (cx + radius * math.cos(theta), cy - radius * math.sin(theta))
    top = (cx, cy - radius)
    return pos, top, 2 * cx, 2 * cy


# -- windows ----------------------------------------------------------------------


def render_window(w: TriangulationWindow, spec: RenderSpec = RenderSpec()) -> str:
    if spec.format == "text":
        return _window_text(w)
    if spec.format == "svg":
        return _window_svg(w, spec)
    return _window_tikz(w, spec)


def _window_text(w: TriangulationWindow) -> str:
    cols = {v: 3 * (v - w.lo) for v in w.vertices}
    width = cols[w.hi] + 1
    header = "".join(str(v).ljust(3) for v in w.vertices).rstrip()
    lines = []
    if w.fountain is not None:
        line = [" "] * width
        line[cols[w.fountain]] = "|"
        lines.append("".join(line).rstrip() + "  (" + str(w.fountain) + ",∞)")
    for x in sorted(w.diagonals, key=lambda x: (-x.length, x.a)):
        line = [" "] * width
        for c in range(cols[x.a], cols[x.b] + 1):
            line[c] = "-"
        line[cols[x.a]] = line[cols[x.b]] = "+"
        lines.append("".join(line).rstrip() + "  " + str(x))
    lines.append("".join("+" if c in cols.values() else "-" for c in range(width)))
    lines.append(header)
    return "\n".join(lines) + "\n"


def _window_svg(w: TriangulationWindow, spec: RenderSpec) -> str:
    line = spec.geometry == "line"
    pos, top, width, height = (_line_layout if line else _disc_layout)(w, spec)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_n(width)}" height="{_n(height)}" '
        f'viewBox="0 0 {_n(width)} {_n(height)}">',
        '<g fill="none" stroke="black" stroke-width="1.5">',
    ]
    for x in w.sorted_arcs:
        (x1, y1), (x2, y2) = pos[x.a], pos[x.b]
        if line and not x.is_boundary:
            r = (x2 - x1) / 2
            d = f"M {_n(x1)} {_n(y1)} A {_n(r)} {_n(r)} 0 0 1 {_n(x2)} {_n(y2)}"
        else:
            d = f"M {_n(x1)} {_n(y1)} L {_n(x2)} {_n(y2)}"
        kind = "boundary" if x.is_boundary else "arc"
        out.append(f'<path class="arc {kind}" data-arc="{x.a},{x.b}" d="{d}"/>')
    if w.fountain is not None:
        fx, fy = pos[w.fountain]
        tx, ty = (fx, top[1]) if line else top
        out.append(
            f'<path class="fountain" data-arc="{w.fountain},inf" stroke-dasharray="4 3" '
            f'd="M {_n(fx)} {_n(fy)} L {_n(tx)} {_n(ty)}"/>'
        )
        out.append(f'<circle class="accumulation" cx="{_n(tx)}" cy="{_n(ty)}" r="{_n(3 * spec.scale)}" fill="black"/>')
    out.append("</g>")
    if spec.labels:
        out.append(f'<g font-family="serif" font-size="{_n(12 * spec.scale)}" text-anchor="middle">')
        for v in w.vertices:
            x, y = pos[v]
            dy = 14 * spec.scale if line else 0
            out.append(f'<text class="label" x="{_n(x)}" y="{_n(y + dy)}">{v}</text>')
        if w.fountain is not None:
            tx, ty = (pos[w.fountain][0], top[1]) if line else top
            out.append(f'<text class="label infinity" x="{_n(tx)}" y="{_n(ty - 6 * spec.scale)}">∞</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _window_tikz(w: TriangulationWindow, spec: RenderSpec) -> str:
    line = spec.geometry == "line"
    s = spec.scale
    out = [f"\\begin{{tikzpicture}}[scale={_n(s)}]"]
    if line:
        coord = {v: (float(v - w.lo), 0.0) for v in w.vertices}
        top = None
    else:
        slots = w.hi - w.lo + 2
        coord = {}
        for v in w.vertices:
            theta = math.pi / 2 + 2 * math.pi * (v - w.lo + 1) / slots
            coord[v] = (3 * math.cos(theta), 3 * math.sin(theta))
        top = (0.0, 3.0)
    for x in w.sorted_arcs:
        (x1, y1), (x2, y2) = coord[x.a], coord[x.b]
        if line and not x.is_boundary:
            r = (x2 - x1) / 2
            out.append(f"  \\draw ({_n(x1)},{_n(y1)}) arc[start angle=180, end angle=0, radius={_n(r)}]; % {x}")
        else:
            out.append(f"  \\draw ({_n(x1)},{_n(y1)}) -- ({_n(x2)},{_n(y2)}); % {x}")
    if w.fountain is not None:
        fx, fy = coord[w.fountain]
        tx, ty = (fx, (w.hi - w.lo) / 2 + 1) if line else top
        out.append(f"  \\draw[dashed] ({_n(fx)},{_n(fy)}) -- ({_n(tx)},{_n(ty)}); % fountain")
        out.append(f"  \\fill ({_n(tx)},{_n(ty)}) circle[radius=0.06];")
    if spec.labels:
        for v in w.vertices:
            x, y = coord[v]
            anchor = "below" if line else "outer"
            if anchor == "outer":
                out.append(f"  \\node at ({_n(1.12 * x)},{_n(1.12 * y)}) {{${v}$}};")
            else:
                out.append(f"  \\node[below] at ({_n(x)},{_n(y)}) {{${v}$}};")
    out.append("\\end{tikzpicture}")
    return "\n".join(out) + "\n"


# -- friezes ----------------------------------------------------------------------


def render_frieze(f: FriezeArray, spec: RenderSpec = RenderSpec(format="text")) -> str:
    from .frieze import format_grid

    if spec.format == "text":
        return format_grid(f) + "\n"
    cells = []
    for i, a in enumerate(range(f.lo, f.hi)):
        for j, b in enumerate(range(a, f.hi + 1)):
            v = f.get(a, b)
            cells.append((i, i + j, "·" if v is None else str(v)))
    if spec.format == "svg":
        unit = 36.0 * spec.scale
        cols = f.hi - f.lo + 1
        width, height = unit * (cols + 1), unit * (f.hi - f.lo + 1)
        out = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{_n(width)}" height="{_n(height)}" '
            f'viewBox="0 0 {_n(width)} {_n(height)}">',
            f'<g font-family="monospace" font-size="{_n(12 * spec.scale)}" text-anchor="middle">',
        ]
        for row, col, text in cells:
            x, y = unit * (col + 1), unit * (row + 1)
            out.append(f'<text class="cell" data-row="{row}" x="{_n(x)}" y="{_n(y)}">{escape(text)}</text>')
        out.append("</g>")
        out.append("</svg>")
        return "\n".join(out) + "\n"
    out = [f"\\begin{{tikzpicture}}[x={_n(0.8 * spec.scale)}cm, y={_n(-0.6 * spec.scale)}cm]"]
    for row, col, text in cells:
        body = "\\cdot" if text == "·" else text.replace("*", " ")
        out.append(f"  \\node at ({col},{row}) {{${body}$}};")
    out.append("\\end{tikzpicture}")
    return "\n".join(out) + "\n"
