"""Colored lattice paths and their bijection with colored Schreier sets.

A path of height ``l`` is fixed by the columns of its up-moves
``c_1 < c_2 < ... < c_l``. It starts at ``(c_1, 0)``, steps up, runs right
to the next up column, and stops at ``(c_l, l)``. Paths with ``c_1 == l``
color the ``(c_1, 1)`` cell from the ``G_1`` palette; paths with
``c_1 > l`` use the ``G_2`` palette. The empty path stands for height 0 and
takes the ``G_2`` palette.
"""
from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .combinatorics import binomial
from .errors import DomainError
from .schreier import ColorClass, ColoredSchreierSet, CountQuery, enumerate_colored, max_size
from .sequences import GibonacciSeed

__all__ = [
    "PathClass",
    "ColoredLatticePath",
    "RenderFormat",
    "path_from_set",
    "set_from_path",
    "enumerate_paths",
    "count_monotone",
    "render_path",
    "render_paths",
    "SVG_PALETTE",
]


class PathClass(enum.Enum):
    START_EQUALS_HEIGHT = "start_equals_height"
    START_EXCEEDS_HEIGHT = "start_exceeds_height"

    def palette(self, seed: GibonacciSeed) -> int:
        return seed.g1 if self is PathClass.START_EQUALS_HEIGHT else seed.g2


_TO_PATH = {
    ColorClass.MIN_EQUALS_SIZE: PathClass.START_EQUALS_HEIGHT,
    ColorClass.MIN_EXCEEDS_SIZE: PathClass.START_EXCEEDS_HEIGHT,
}
_TO_SET = {v: k for k, v in _TO_PATH.items()}


@dataclass(frozen=True)
class ColoredLatticePath:
    up_columns: tuple[int, ...]
    grid_width: int
    path_class: PathClass
    color_index: int = 0

    def __post_init__(self):
        cols = tuple(self.up_columns)
        object.__setattr__(self, "up_columns", cols)
        if self.grid_width < 1:
            raise DomainError(f"grid width must be >= 1, got {self.grid_width}")
        if any(a >= b for a, b in zip(cols, cols[1:])):
            raise DomainError(f"up columns must be strictly increasing, got {list(cols)}")
        height = len(cols)
        if cols:
            if cols[0] < height:
                raise DomainError(f"path of height {height} cannot start at column {cols[0]}")
            if cols[-1] > self.grid_width:
                raise DomainError(f"up column {cols[-1]} lies outside width {self.grid_width}")
        expected = (
            PathClass.START_EQUALS_HEIGHT
            if cols and cols[0] == height
            else PathClass.START_EXCEEDS_HEIGHT
        )
        if self.path_class is not expected:
            raise DomainError(f"path {list(cols)} belongs to {expected.value}")
        if self.color_index < 0:
            raise DomainError(f"color index must be >= 0, got {self.color_index}")

    @property
    def height(self) -> int:
        return len(self.up_columns)

    @property
    def start(self) -> tuple[int, int] | None:
        return (self.up_columns[0], 0) if self.up_columns else None

    @property
    def colored_cell(self) -> tuple[int, int] | None:
        """``(column, row)`` of the colored cell, 1-indexed from the lower left."""
        return (self.up_columns[0], 1) if self.up_columns else None

    def vertices(self) -> list[tuple[int, int]]:
        """Corner points of the trace, from the start to the end point."""
        pts = []
        for j, c in enumerate(self.up_columns):
            pts.append((c, j))
            pts.append((c, j + 1))
        return pts

    def to_json(self) -> dict:
        return {
            "up_columns": list(self.up_columns),
            "grid_width": self.grid_width,
            "color_class": self.path_class.value,
            "color_index": self.color_index,
        }


def path_from_set(s: ColoredSchreierSet, n: int) -> ColoredLatticePath:
    if s.elements and s.elements[-1] > n:
        raise DomainError(f"element {s.elements[-1]} exceeds grid width {n}")
    return ColoredLatticePath(s.elements, n, _TO_PATH[s.color_class], s.color_index)


def set_from_path(p: ColoredLatticePath) -> ColoredSchreierSet:
    return ColoredSchreierSet(p.up_columns, _TO_SET[p.path_class], p.color_index)


def enumerate_paths(seed: GibonacciSeed, k: int, n: int) -> Iterator[ColoredLatticePath]:
    """All colored paths of height ``>= k`` in width ``n``, in Schreier-set order."""
    if n < 1:
        raise DomainError(f"grid width n must be >= 1, got n={n}")
    if not 0 <= k <= max_size(n):
        raise DomainError(f"k must lie in 0..{max_size(n)} for n={n}, got k={k}")
    for s in enumerate_colored(CountQuery(n, k, seed)):
        yield path_from_set(s, n)


def count_monotone(k: int, m: int) -> int:
    """Number of unit up/right paths from ``(0, 0)`` to ``(m, k)``."""
    if k < 0 or m < 0:
        raise DomainError(f"count_monotone needs k >= 0 and m >= 0, got k={k}, m={m}")
    return binomial(m + k, k)


class RenderFormat(enum.Enum):
    ASCII = "ascii"
    SVG = "svg"


def render_path(p: ColoredLatticePath, fmt: RenderFormat | str = RenderFormat.ASCII) -> str:
    return render_paths([p], fmt)


def render_paths(paths: Iterable[ColoredLatticePath], fmt: RenderFormat | str = RenderFormat.ASCII) -> str:
    paths = list(paths)
    fmt = RenderFormat(fmt)
    if fmt is RenderFormat.ASCII:
        return "\n".join(_ascii(p) for p in paths)
    return _svg(paths)


# ---------------------------------------------------------------- ascii

_CELL = 3


def _header(p: ColoredLatticePath) -> str:
    if not p.up_columns:
        return (
            f"empty path: height 0, width {p.grid_width}, "
            f"{p.path_class.value}, color {p.color_index}"
        )
    cols = ",".join(map(str, p.up_columns))
    return (
        f"path ups=[{cols}]: height {p.height}, width {p.grid_width}, "
        f"{p.path_class.value}, color {p.color_index}"
    )


def _ascii(p: ColoredLatticePath) -> str:
    n, height = p.grid_width, p.height
    if height == 0:
        return _header(p) + "\n"
    verticals = {(c, j + 1) for j, c in enumerate(p.up_columns)}
    horizontals = set()
    for j in range(height - 1):
        for x in range(p.up_columns[j], p.up_columns[j + 1]):
            horizontals.add((x, j + 1))
    corners = set(p.vertices())
    lines = [_header(p)]
    for y in range(height, -1, -1):
        row = []
        for x in range(n + 1):
            if (x, y) in corners:
                row.append("●")
            elif (x, y) in horizontals and (x - 1, y) in horizontals:
                row.append("━")
            else:
                row.append("┼")
            if x < n:
                row.append("━" * _CELL if (x, y) in horizontals else "─" * _CELL)
        lines.append("".join(row))
        if y == 0:
            break
        row = []
        for x in range(n + 1):
            row.append("┃" if (x, y) in verticals else "│")
            if x < n:
                if p.colored_cell == (x + 1, y):
                    row.append(f"{p.color_index:^{_CELL}}")
                else:
                    row.append(" " * _CELL)
        lines.append("".join(row))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- svg

SVG_PALETTE = (
    "#d62728",  # red
    "#1f77b4",  # blue
    "#2ca02c",  # green
    "#ff7f0e",  # orange
    "#9467bd",  # purple
    "#8c564b",  # brown
    "#e377c2",  # pink
    "#17becf",  # cyan
)
_UNIT = 20
_MARGIN = 10
_GAP = 20
_CAPTION = 16
_MIN_PANEL = 160


def _fmt(v: float) -> str:
    return f"{v:g}"


def _svg_panel(p: ColoredLatticePath, x0: int, rows: int) -> list[str]:
    n, height = p.grid_width, p.height

    def pt(x: int, y: int) -> tuple[int, int]:
        return x0 + x * _UNIT, _MARGIN + (rows - y) * _UNIT

    out = [f'<g class="lattice-path" data-color-class="{p.path_class.value}">']
    for y in range(height + 1):
        (ax, ay), (bx, by) = pt(0, y), pt(n, y)
        out.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" stroke="#bbbbbb" stroke-width="1"/>')
    if height:
        for x in range(n + 1):
            (ax, ay), (bx, by) = pt(x, 0), pt(x, height)
            out.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" stroke="#bbbbbb" stroke-width="1"/>')
        col, _ = p.colored_cell
        cx, cy = pt(col - 1, 1)
        fill = SVG_PALETTE[p.color_index % len(SVG_PALETTE)]
        out.append(f'<rect x="{cx}" y="{cy}" width="{_UNIT}" height="{_UNIT}" fill="{fill}" fill-opacity="0.6"/>')
        out.append(
            f'<text x="{_fmt(cx + _UNIT / 2)}" y="{_fmt(cy + _UNIT * 0.7)}" font-size="11" '
            f'text-anchor="middle">{p.color_index}</text>'
        )
        verts = p.vertices()
        sx, sy = pt(*verts[0])
        cmds = [f"M {sx} {sy}"]
        for (ax, ay), (bx, by) in zip(verts, verts[1:]):
            if ax == bx:
                cmds.append(f"V {pt(bx, by)[1]}")
            else:
                cmds.append(f"H {pt(bx, by)[0]}")
        d = " ".join(cmds)
    else:
        d = ""
    out.append(f'<path d="{d}" fill="none" stroke="#000000" stroke-width="3" stroke-linejoin="round"/>')
    caption = escape(_header(p).split(":")[0] + f", color {p.color_index}")
    ty = _MARGIN + rows * _UNIT + _CAPTION - 3
    out.append(f'<text x="{x0}" y="{ty}" font-size="10">{caption}</text>')
    out.append("</g>")
    return out


def _svg(paths: Sequence[ColoredLatticePath]) -> str:
    rows = max((p.height for p in paths), default=0)
    x = _MARGIN
    body = []
    for p in paths:
        body.extend(_svg_panel(p, x, rows))
        x += max(p.grid_width * _UNIT, _MIN_PANEL) + _GAP
    width = max(x - _GAP + _MARGIN, 2 * _MARGIN)
    height = 2 * _MARGIN + rows * _UNIT + _CAPTION
    head = [
        '<?xml version="1.0" encoding="UTF-8" standalone="yes"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
    ]
    return "\n".join(head + body + ["</svg>"]) + "\n"
