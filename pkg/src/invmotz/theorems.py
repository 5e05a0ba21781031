"""Named, exhaustively checkable statements behind the ``verify`` command.

Each entry bundles a human description with a runner that re-checks the
statement at every size up to a bound and reports (size, objects checked,
mismatches).  A statement passes iff every row has zero mismatches.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass

from .avoidance import (
    Base,
    ClassDescriptor,
    is_centrosymmetric,
    parse_class,
    verify_characterization,
)
from .biane import path_to_involution, rc_reflection_agrees
from .counting import gen_involutions, motzkin, motzkin_prefix
from .motzkin import MAXIMAL, UNITARY, is_symmetric, relabel, shapes
from .permutations import avoids_all, contains_pattern, involutions


@dataclass(frozen=True)
class TheoremRow:
    n: int
    checked: int
    mismatches: int


@dataclass(frozen=True)
class Theorem:
    ident: str
    description: str
    base: Base
    runner: Callable[[int], Iterator[TheoremRow]]


def _characterization(cls_text: str) -> Callable[[int], Iterator[TheoremRow]]:
    descriptor = parse_class(cls_text)

    def run(n_max: int) -> Iterator[TheoremRow]:
        for n in range(n_max + 1):
            report = verify_characterization(descriptor, n)
            yield TheoremRow(n, report.checked, report.mismatches)

    return run


def _set_equality(base: Base, avoid_sets: list[tuple[tuple[int, ...], ...]]):
    """Pairwise-equal avoidance classes over the base set at every size."""

    def run(n_max: int) -> Iterator[TheoremRow]:
        for n in range(n_max + 1):
            members = [set() for _ in avoid_sets]
            checked = 0
            for tau in gen_involutions(n, base):
                checked += 1
                for bucket, patterns in zip(members, avoid_sets):
                    if avoids_all(tau, patterns):
                        bucket.add(tau)
            reference = members[0]
            mismatches = sum(len(reference ^ other) for other in members[1:])
            yield TheoremRow(n, checked, mismatches)

    return run


def _prefix_counts(n_max: int) -> Iterator[TheoremRow]:
    p4321, p3412 = (4, 3, 2, 1), (3, 4, 1, 2)
    for n in range(n_max + 1):
        checked = 0
        count4321 = 0
        count3412 = 0
        for tau in gen_involutions(n, Base.CENTROSYMMETRIC):
            checked += 1
            if not contains_pattern(tau, p4321):
                count4321 += 1
            if not contains_pattern(tau, p3412):
                count3412 += 1
        expected = motzkin_prefix(n // 2)
        mismatches = (count4321 != expected) + (count3412 != expected)
        yield TheoremRow(n, checked, mismatches)


def _motzkin_counts(n_max: int) -> Iterator[TheoremRow]:
    p4321, p3412 = (4, 3, 2, 1), (3, 4, 1, 2)
    for n in range(n_max + 1):
        checked = 0
        count4321 = 0
        count3412 = 0
        for tau in involutions(n):
            checked += 1
            if not contains_pattern(tau, p4321):
                count4321 += 1
            if not contains_pattern(tau, p3412):
                count3412 += 1
        expected = motzkin(n)
        mismatches = (count4321 != expected) + (count3412 != expected)
        yield TheoremRow(n, checked, mismatches)


def _rc_reflection(n_max: int) -> Iterator[TheoremRow]:
    for n in range(n_max + 1):
        checked = 0
        mismatches = 0
        for tau in involutions(n):
            checked += 1
            if not rc_reflection_agrees(tau):
                mismatches += 1
        yield TheoremRow(n, checked, mismatches)


def _symmetric_labellings_centro(n_max: int) -> Iterator[TheoremRow]:
    for n in range(n_max + 1):
        checked = 0
        mismatches = 0
        for shape in shapes(n):
            if not is_symmetric(shape):
                continue
            for mode in (UNITARY, MAXIMAL):
                checked += 1
                if not is_centrosymmetric(path_to_involution(relabel(shape, mode))):
                    mismatches += 1
        yield TheoremRow(n, checked, mismatches)


def _empty_4321_123(n_max: int) -> Iterator[TheoremRow]:
    patterns = ((4, 3, 2, 1), (1, 2, 3))
    for n in range(7, n_max + 1):
        checked = 0
        stragglers = 0
        for tau in involutions(n):
            checked += 1
            if avoids_all(tau, patterns):
                stragglers += 1
        yield TheoremRow(n, checked, stragglers)


def _theorem_list() -> list[Theorem]:
    I, DI, CI = Base.ALL, Base.FIXED_POINT_FREE, Base.CENTROSYMMETRIC
    p = lambda text: tuple(tuple(int(c) for c in part) for part in text.split(","))
    items = [
        Theorem(
            "thm-4321-unitary",
            "avoiding 4321 is equivalent to the unitary labelling",
            I,
            _characterization("I:4321"),
        ),
        Theorem(
            "thm-3412-maximal",
            "avoiding 3412 is equivalent to the maximal labelling",
            I,
            _characterization("I:3412"),
        ),
        Theorem(
            "prop-321",
            "avoiding 321: unitary labelling and all horizontal steps at height 0",
            I,
            _characterization("I:321"),
        ),
        Theorem(
            "prop-312",
            "avoiding 312: maximal labelling and pyramid components",
            I,
            _characterization("I:312"),
        ),
        Theorem(
            "thm-4321-132",
            "avoiding 4321 and 132: unitary and shape U^a H^b D^a H^c",
            I,
            _characterization("I:4321,132"),
        ),
        Theorem(
            "thm-4321-213",
            "avoiding 4321 and 213: unitary and shape H^c U^a H^b D^a",
            I,
            _characterization("I:4321,213"),
        ),
        Theorem(
            "thm-4321-312",
            "avoiding 4321 and 312: components among H, UD, UHD",
            I,
            _characterization("I:4321,312"),
        ),
        Theorem(
            "thm-3412-132",
            "avoiding 3412 and 132: maximal and no up step after the U-prefix",
            I,
            _characterization("I:3412,132"),
        ),
        Theorem(
            "thm-3412-213",
            "avoiding 3412 and 213: maximal and all down steps at the end",
            I,
            _characterization("I:3412,213"),
        ),
        Theorem(
            "thm-3412-321",
            "avoiding 3412 and 321: components among H, UD",
            I,
            _characterization("I:3412,321"),
        ),
        Theorem(
            "thm-3412-123",
            "avoiding 3412 and 123: maximal and the peelable pyramid family",
            I,
            _characterization("I:3412,123"),
        ),
        Theorem(
            "thm-3412-4321",
            "avoiding 3412 and 4321: height at most 1",
            I,
            _characterization("I:3412,4321"),
        ),
        Theorem(
            "di-321-eq-4321",
            "fixed-point-free involutions avoiding 321 and avoiding 4321 coincide",
            DI,
            _set_equality(DI, [p("321"), p("4321")]),
        ),
        Theorem(
            "i-4321-312-eq-231",
            "among involutions avoiding 4321, avoiding 312 equals avoiding 231",
            I,
            _set_equality(I, [p("4321,312"), p("4321,231")]),
        ),
        Theorem(
            "i-3412-312-eq-231-eq-312",
            "avoiding {3412,312}, {3412,231} and {312} give the same involutions",
            I,
            _set_equality(I, [p("3412,312"), p("3412,231"), p("312")]),
        ),
        Theorem(
            "ci-4321-321-eq-321",
            "centrosymmetric: avoiding {4321,321} equals avoiding {321}",
            CI,
            _set_equality(CI, [p("4321,321"), p("321")]),
        ),
        Theorem(
            "ci-3412-312-eq-312",
            "centrosymmetric: avoiding {3412,312} equals avoiding {312}",
            CI,
            _set_equality(CI, [p("3412,312"), p("312")]),
        ),
        Theorem(
            "eq1-prefix",
            "centrosymmetric 4321- and 3412-avoiders are counted by Motzkin prefixes",
            CI,
            _prefix_counts,
        ),
        Theorem(
            "motzkin-counts",
            "involutions avoiding 4321 (or 3412) are counted by Motzkin numbers",
            I,
            _motzkin_counts,
        ),
        Theorem(
            "rc-reflection",
            "the reverse-complement involution maps to the reflected path shape",
            I,
            _rc_reflection,
        ),
        Theorem(
            "sym-labelling-centro",
            "symmetric shapes with unitary or maximal labels give centrosymmetric involutions",
            CI,
            _symmetric_labellings_centro,
        ),
        Theorem(
            "empty-4321-123",
            "no involution of size above 6 avoids both 4321 and 123",
            I,
            _empty_4321_123,
        ),
    ]
    return items


THEOREMS: dict[str, Theorem] = {t.ident: t for t in _theorem_list()}
