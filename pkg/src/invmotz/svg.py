"""Deterministic SVG rendering of (labelled) Motzkin paths.

The output is plain text assembled from integers only, so a given input and
package version always produce byte-identical files: a light unit grid, one
line segment per step, and the down-step labels as text near the step
midpoints.
"""

from __future__ import annotations

from .motzkin import LabelledPath, path_height, shape_of

UNIT = 40
MARGIN = 20


def render_path_svg(path: LabelledPath | str) -> str:
    shape = shape_of(path)
    labels = list(path.labels) if isinstance(path, LabelledPath) else []
    n = len(shape)
    top = max(path_height(shape), 1)
    width = n * UNIT + 2 * MARGIN
    height = top * UNIT + 2 * MARGIN

    def px(x_units: int) -> int:
        return MARGIN + x_units * UNIT

    def py(y_units: int) -> int:
        return MARGIN + (top - y_units) * UNIT

    grid = []
    for x in range(n + 1):
        grid.append(
            f'<line x1="{px(x)}" y1="{py(0)}" x2="{px(x)}" y2="{py(top)}"/>'
        )
    for y in range(top + 1):
        grid.append(
            f'<line x1="{px(0)}" y1="{py(y)}" x2="{px(n)}" y2="{py(y)}"/>'
        )

    segments = []
    texts = []
    h = 0
    label_iter = iter(labels)
    for i, ch in enumerate(shape):
        delta = 1 if ch == "U" else (-1 if ch == "D" else 0)
        x1, y1 = px(i), py(h)
        x2, y2 = px(i + 1), py(h + delta)
        segments.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
        if ch == "D" and labels:
            # midpoint of the segment, nudged away from the stroke
            tx = (x1 + x2) // 2 + 6
            ty = (y1 + y2) // 2 - 6
            texts.append(f'<text x="{tx}" y="{ty}">{next(label_iter)}</text>')
        h += delta

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<g class="grid" stroke="#cccccc" stroke-width="1">',
        *grid,
        "</g>",
        '<g class="path" stroke="#000000" stroke-width="2" stroke-linecap="round">',
        *segments,
        "</g>",
        '<g class="labels" font-family="monospace" font-size="14" fill="#aa0000">',
        *texts,
        "</g>",
        "</svg>",
        "",
    ]
    return "\n".join(lines)
