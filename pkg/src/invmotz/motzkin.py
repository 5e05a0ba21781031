"""Plain and labelled Motzkin paths.

A path shape is a string over the alphabet ``U`` (up, +1), ``H`` (horizontal,
0) and ``D`` (down, -1) whose running height never dips below zero and ends
at zero.  The height of a step is the larger y-coordinate of the step: the
height after an up step, the level of a horizontal step, the height before a
down step.

A labelled path attaches a positive integer to every down step, bounded by
that step's height.  Canonical text encoding: the label follows its ``D``
immediately, e.g. ``"UUD2D1"``; a text without any label parses as a plain
shape.  Labels are mandatory in the labelled form, even when equal to 1, so
encodings are unambiguous.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from dataclasses import dataclass

UP, HORIZONTAL, DOWN = "U", "H", "D"
UNITARY, MAXIMAL = "unitary", "maximal"

_DELTA = {"U": 1, "H": 0, "D": -1}
_SWAP = str.maketrans("UD", "DU")


def validate_shape(steps: str) -> str:
    """Check the nonnegative-height / zero-return invariants and return *steps*."""
    h = 0
    for pos, ch in enumerate(steps, start=1):
        if ch == "U":
            h += 1
        elif ch == "D":
            h -= 1
            if h < 0:
                raise ValueError(f"path dips below the axis at step {pos}")
        elif ch != "H":
            raise ValueError(f"unknown step {ch!r} at position {pos}")
    if h:
        raise ValueError(f"path ends at height {h}, not 0")
    return steps


def step_heights(steps: str) -> tuple[int, ...]:
    """Height of each step: after for U, level for H, before for D."""
    out = []
    h = 0
    for ch in steps:
        if ch == "U":
            h += 1
            out.append(h)
        elif ch == "H":
            out.append(h)
        else:
            out.append(h)
            h -= 1
    return tuple(out)


@dataclass(frozen=True)
class LabelledPath:
    """A Motzkin path shape plus one label per down step, left to right."""

    steps: str
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        validate_shape(self.steps)
        heights = step_heights(self.steps)
        downs = [i for i, ch in enumerate(self.steps) if ch == "D"]
        if len(downs) != len(self.labels):
            raise ValueError(
                f"expected {len(downs)} labels for {len(downs)} down steps, got {len(self.labels)}"
            )
        for idx, lab in zip(downs, self.labels):
            if not 1 <= lab <= heights[idx]:
                raise ValueError(
                    f"label {lab} out of range 1..{heights[idx]} at step {idx + 1}"
                )

    def __len__(self) -> int:
        return len(self.steps)

    def encode(self) -> str:
        it = iter(self.labels)
        return "".join(ch + (str(next(it)) if ch == "D" else "") for ch in self.steps)


def shape_of(p: LabelledPath | str) -> str:
    return p.steps if isinstance(p, LabelledPath) else p


def parse_path(text: str) -> LabelledPath | str:
    """Parse canonical path text.

    Returns a LabelledPath when the down steps carry labels, a plain shape
    string when none do.  A mix of labelled and bare down steps is rejected,
    as is a label on a non-down step.
    """
    steps = []
    labels = []
    downs = 0
    i = 0
    pos = 0
    while i < len(text):
        ch = text[i]
        i += 1
        pos += 1
        if ch not in "UHD":
            raise ValueError(f"unknown character {ch!r} at index {i}")
        digits = ""
        while i < len(text) and text[i].isdigit():
            digits += text[i]
            i += 1
        if digits and ch != "D":
            raise ValueError(f"label on {ch} step at step {pos}; only down steps carry labels")
        if ch == "D":
            downs += 1
            if digits:
                labels.append(int(digits))
        steps.append(ch)
    shape = validate_shape("".join(steps))
    if not labels:
        return shape
    if len(labels) != downs:
        raise ValueError("partial labelling: once any down step is labelled, all must be")
    return LabelledPath(shape, tuple(labels))


def encode_path(p: LabelledPath | str) -> str:
    return p.encode() if isinstance(p, LabelledPath) else p


def path_height(p: LabelledPath | str) -> int:
    shape = shape_of(p)
    return max(step_heights(shape), default=0)


def step_height(p: LabelledPath | str, i: int) -> int:
    """Height of the i-th step, 1-based."""
    shape = shape_of(p)
    if not 1 <= i <= len(shape):
        raise IndexError(f"step index {i} out of range 1..{len(shape)}")
    return step_heights(shape)[i - 1]


def _component_bounds(shape: str) -> list[tuple[int, int]]:
    bounds = []
    h = 0
    start = 0
    for i, ch in enumerate(shape):
        h += _DELTA[ch]
        if h == 0:
            bounds.append((start, i + 1))
            start = i + 1
    return bounds


def irreducible_components(p: LabelledPath | str) -> list[LabelledPath] | list[str]:
    """Split at every interior return to the axis; concatenation recovers the path.

    For labelled paths the labels travel with their down steps unchanged
    (heights inside a component are unchanged, so the label bound still
    holds).

    >>> irreducible_components("UDHUUDD")
    ['UD', 'H', 'UUDD']
    """
    shape = shape_of(p)
    bounds = _component_bounds(shape)
    if isinstance(p, str):
        return [shape[a:b] for a, b in bounds]
    out = []
    for a, b in bounds:
        k = shape[:a].count("D")
        m = shape[a:b].count("D")
        out.append(LabelledPath(shape[a:b], p.labels[k : k + m]))
    return out


def reflect(steps: str) -> str:
    """Mirror the shape across its vertical midline: reverse and swap U with D.

    Labels have no defined transport under this map, so it is shape-only.
    """
    return steps.translate(_SWAP)[::-1]


def is_dyck(p: LabelledPath | str) -> bool:
    return "H" not in shape_of(p)


def is_symmetric(p: LabelledPath | str) -> bool:
    """Whether the shape equals its own reflection (labels ignored)."""
    shape = shape_of(p)
    return shape == reflect(shape)


def relabel(shape: str, mode: str) -> LabelledPath:
    """Attach the unitary (all 1) or maximal (label = step height) labelling."""
    validate_shape(shape)
    if mode == UNITARY:
        labels = tuple(1 for ch in shape if ch == "D")
    elif mode == MAXIMAL:
        heights = step_heights(shape)
        labels = tuple(heights[i] for i, ch in enumerate(shape) if ch == "D")
    else:
        raise ValueError(f"unknown labelling mode {mode!r}")
    return LabelledPath(shape, labels)


def is_unitary(p: LabelledPath) -> bool:
    return all(lab == 1 for lab in p.labels)


def is_maximal(p: LabelledPath) -> bool:
    heights = step_heights(p.steps)
    downs = (heights[i] for i, ch in enumerate(p.steps) if ch == "D")
    return all(lab == h for lab, h in zip(p.labels, downs))


def labelling_count(shape: str) -> int:
    """Number of admissible labellings: the product of the down-step heights."""
    total = 1
    h = 0
    for ch in shape:
        if ch == "U":
            h += 1
        elif ch == "D":
            total *= h
            h -= 1
    return total


def shapes(n: int, *, dyck: bool = False) -> Iterator[str]:
    """Yield every Motzkin path shape of length n, lexicographically with U < H < D.

    ``dyck`` restricts to shapes without horizontal steps.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    buf: list[str] = []

    def rec(remaining: int, h: int) -> Iterator[str]:
        if remaining == 0:
            yield "".join(buf)
            return
        if h + 2 <= remaining:
            buf.append("U")
            yield from rec(remaining - 1, h + 1)
            buf.pop()
        if not dyck and h + 1 <= remaining:
            buf.append("H")
            yield from rec(remaining - 1, h)
            buf.pop()
        if h > 0:
            buf.append("D")
            yield from rec(remaining - 1, h - 1)
            buf.pop()

    yield from rec(n, 0)


def labelled_paths(n: int, *, dyck: bool = False) -> Iterator[LabelledPath]:
    """Yield every labelled path of length n: shapes in U < H < D order, then
    label vectors in ascending lexicographic order (leftmost down step most
    significant)."""
    for shape in shapes(n, dyck=dyck):
        heights = step_heights(shape)
        ranges = [range(1, heights[i] + 1) for i, ch in enumerate(shape) if ch == "D"]
        for combo in itertools.product(*ranges):
            yield LabelledPath(shape, combo)
