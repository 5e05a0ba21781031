"""Path-side membership tests for pattern-avoidance classes of involutions.

Each supported class (a base set of involutions plus a set of forbidden
patterns) comes with a structural test on labelled Motzkin paths that is
equivalent to membership of the corresponding involution in the class:

* avoid 4321        <=>  every label is 1 (unitary labelling)
* avoid 3412        <=>  every label equals its step height (maximal labelling)
* avoid 321         <=>  unitary and every horizontal step at height 0
* avoid 312         <=>  maximal and every component is U^aD^a or U^aHD^a
* avoid 4321 & 132  <=>  unitary and the shape is U^a H^b D^a H^c
* avoid 4321 & 213  <=>  unitary and the shape is H^c U^a H^b D^a
* avoid 4321 & 312  <=>  components among H, UD, UHD   (same class as 4321 & 231)
* avoid 3412 & 132  <=>  maximal and no up step after the U-prefix
* avoid 3412 & 213  <=>  maximal and all down steps form the suffix
* avoid 3412 & 321  <=>  components among H, UD
* avoid 3412 & 123  <=>  maximal and the shape peels, elevation by elevation,
                         down to at most two pyramid components
* avoid 3412 & 4321 <=>  height at most 1

Base refinements compose: the fixed-point-free base adds "no horizontal
steps"; the centrosymmetric base adds "shape symmetric", which is only sound
when the pattern part already pins the labelling (unitary, maximal, or a
height bound that forces every label).

Classes without a known structural test return None from
:func:`path_predicate`; callers fall back to brute-force filtering.
"""

from __future__ import annotations

import re
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from enum import Enum

from .biane import involution_to_path, path_to_involution
from .motzkin import (
    LabelledPath,
    encode_path,
    is_maximal,
    is_symmetric,
    is_unitary,
    labelled_paths,
    labelling_count,
    path_height,
    validate_shape,
)
from .permutations import Perm, avoids_all, involutions, validate_permutation


class Base(Enum):
    """Which involutions a class draws from."""

    ALL = "I"
    FIXED_POINT_FREE = "DI"
    CENTROSYMMETRIC = "CI"


def is_centrosymmetric(tau: Perm) -> bool:
    """Whether t(i) + t(n+1-i) = n+1 for every i."""
    n = len(tau)
    return all(tau[i] + tau[n - 1 - i] == n + 1 for i in range(n))


def in_base(tau: Perm, base: Base) -> bool:
    if base is Base.ALL:
        return True
    if base is Base.FIXED_POINT_FREE:
        return all(v != i for i, v in enumerate(tau, start=1))
    return is_centrosymmetric(tau)


def _pattern_from_compact(text: str) -> Perm:
    if not text.isdigit():
        raise ValueError(f"bad pattern {text!r}: expected digits like 4321")
    return validate_permutation(tuple(int(ch) for ch in text))


def _canonical_avoid(patterns: Iterable[Perm]) -> tuple[Perm, ...]:
    return tuple(sorted({validate_permutation(p) for p in patterns}, key=lambda p: (len(p), p)))


@dataclass(frozen=True)
class ClassDescriptor:
    """Names an involution class: base set plus deduplicated forbidden patterns."""

    base: Base
    avoid: tuple[Perm, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "avoid", _canonical_avoid(self.avoid))

    def text(self) -> str:
        return f"{self.base.value}:" + ",".join("".join(map(str, p)) for p in self.avoid)

    def __str__(self) -> str:
        return self.text()


def parse_class(text: str) -> ClassDescriptor:
    """Parse the ``I|DI|CI:p1,p2,...`` form, e.g. ``"I:4321,132"`` or ``"DI:"``."""
    base_text, sep, avoid_text = text.partition(":")
    base_text = base_text.strip()
    try:
        base = Base(base_text)
    except ValueError:
        raise ValueError(f"unknown base {base_text!r}: expected I, DI or CI") from None
    parts = [p.strip() for p in avoid_text.split(",") if p.strip()]
    return ClassDescriptor(base, tuple(_pattern_from_compact(p) for p in parts))


# Labelling requirements a pattern rule can impose.
_UNITARY, _MAXIMAL, _FORCED, _ANY = "unitary", "maximal", "forced", "any"


@dataclass(frozen=True)
class PathPredicate:
    """Shape test plus a labelling requirement; together the path-side class test."""

    shape_ok: Callable[[str], bool]
    labelling: str

    def matches(self, path: LabelledPath) -> bool:
        if not self.shape_ok(path.steps):
            return False
        if self.labelling == _UNITARY:
            return is_unitary(path)
        if self.labelling == _MAXIMAL:
            return is_maximal(path)
        return True

    def count_labellings(self, shape: str) -> int:
        """How many labellings of *shape* the predicate accepts."""
        if not self.shape_ok(shape):
            return 0
        if self.labelling == _ANY:
            return labelling_count(shape)
        if self.labelling == _FORCED:
            # shape_ok bounds the height, so every label is determined
            return labelling_count(shape)
        return 1


def _components(shape: str) -> list[str]:
    comps = []
    h = 0
    start = 0
    for i, ch in enumerate(shape):
        h += 1 if ch == "U" else (-1 if ch == "D" else 0)
        if h == 0:
            comps.append(shape[start : i + 1])
            start = i + 1
    return comps


def _is_pyramid(comp: str) -> bool:
    # U^aD^a or U^aHD^a
    m = len(comp)
    a = m // 2
    if m % 2:
        return comp == "U" * a + "H" + "D" * a
    return comp == "U" * a + "D" * a


def _no_h_above_ground(shape: str) -> bool:
    h = 0
    for ch in shape:
        if ch == "U":
            h += 1
        elif ch == "D":
            h -= 1
        elif h > 0:
            return False
    return True


def _pyramid_components(shape: str) -> bool:
    return all(_is_pyramid(c) for c in _components(shape))


def _components_within(allowed: frozenset[str]) -> Callable[[str], bool]:
    def check(shape: str) -> bool:
        return all(c in allowed for c in _components(shape))

    return check


def _height_at_most_one(shape: str) -> bool:
    return path_height(shape) <= 1


_RE_132_4321 = re.compile(r"U*H*D*H*\Z")
_RE_213_4321 = re.compile(r"H*U*H*D*\Z")
_RE_132_3412 = re.compile(r"U*[HD]*\Z")
_RE_213_3412 = re.compile(r"[UH]*D*\Z")


def _peels_to_pyramids(shape: str) -> bool:
    """Shape family of the involutions avoiding both 123 and 3412.

    Peel the outer U...D while the path is a single irreducible block; accept
    the empty path, a lone H, and exactly two pyramid components.  More than
    two components would force an increasing triple across components.
    """
    while True:
        comps = _components(shape)
        if not comps:
            return True
        if len(comps) == 1:
            if shape == "H":
                return True
            shape = shape[1:-1]
            continue
        if len(comps) == 2:
            return all(_is_pyramid(c) for c in comps)
        return False


def _always(shape: str) -> bool:
    return True


def _key(*compact: str) -> tuple[Perm, ...]:
    return _canonical_avoid(tuple(int(c) for c in p) for p in compact)


_PATTERN_RULES: dict[tuple[Perm, ...], tuple[Callable[[str], bool], str]] = {
    _key(): (_always, _ANY),
    _key("4321"): (_always, _UNITARY),
    _key("3412"): (_always, _MAXIMAL),
    _key("321"): (_no_h_above_ground, _UNITARY),
    _key("321", "4321"): (_no_h_above_ground, _UNITARY),
    _key("312"): (_pyramid_components, _MAXIMAL),
    _key("312", "3412"): (_pyramid_components, _MAXIMAL),
    _key("231", "3412"): (_pyramid_components, _MAXIMAL),
    _key("132", "4321"): (lambda s: _RE_132_4321.match(s) is not None, _UNITARY),
    _key("213", "4321"): (lambda s: _RE_213_4321.match(s) is not None, _UNITARY),
    _key("312", "4321"): (_components_within(frozenset({"H", "UD", "UHD"})), _FORCED),
    _key("231", "4321"): (_components_within(frozenset({"H", "UD", "UHD"})), _FORCED),
    _key("132", "3412"): (lambda s: _RE_132_3412.match(s) is not None, _MAXIMAL),
    _key("213", "3412"): (lambda s: _RE_213_3412.match(s) is not None, _MAXIMAL),
    _key("321", "3412"): (_components_within(frozenset({"H", "UD"})), _FORCED),
    _key("123", "3412"): (_peels_to_pyramids, _MAXIMAL),
    _key("3412", "4321"): (_height_at_most_one, _FORCED),
}


def path_predicate(c: ClassDescriptor) -> PathPredicate | None:
    """Structural path test for the class, or None when no test is known."""
    rule = _PATTERN_RULES.get(c.avoid)
    if rule is None:
        return None
    shape_ok, labelling = rule
    if c.base is Base.FIXED_POINT_FREE:
        inner = shape_ok
        shape_ok = lambda s, _inner=inner: "H" not in s and _inner(s)
    elif c.base is Base.CENTROSYMMETRIC:
        if labelling == _ANY:
            # a symmetric shape alone does not pin the involution
            return None
        inner = shape_ok
        shape_ok = lambda s, _inner=inner: is_symmetric(s) and _inner(s)
    return PathPredicate(shape_ok, labelling)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of exhaustively checking one class characterization at one size."""

    descriptor: ClassDescriptor
    n: int
    checked: int
    mismatches: int
    first_counterexample: str | None = None

    @property
    def ok(self) -> bool:
        return self.mismatches == 0


def verify_characterization(c: ClassDescriptor, n: int) -> VerificationReport:
    """Exhaustively test "path predicate  <=>  avoids patterns and lies in base" at size n.

    For the full involution base every labelled path of length n is checked;
    for the sparser bases the base set itself is enumerated (companion
    properties cover the implication from predicate to base membership).
    """
    pred = path_predicate(c)
    if pred is None:
        raise ValueError(f"unsupported class {c.text()!r}: no structural test")
    checked = 0
    mismatches = 0
    first = None
    if c.base is Base.ALL:
        for path in labelled_paths(n):
            tau = path_to_involution(path)
            checked += 1
            if pred.matches(path) != avoids_all(tau, c.avoid):
                mismatches += 1
                if first is None:
                    first = encode_path(path)
    else:
        fpf = c.base is Base.FIXED_POINT_FREE
        for tau in involutions(n, fixed_point_free=fpf, centrosymmetric=not fpf):
            path = involution_to_path(tau)
            checked += 1
            if pred.matches(path) != avoids_all(tau, c.avoid):
                mismatches += 1
                if first is None:
                    first = encode_path(path)
    return VerificationReport(c, n, checked, mismatches, first)
