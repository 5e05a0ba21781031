"""Shared exhaustive sweeps over involution classes, computed once per session.

The sweeps tally class sizes by filtering every involution of the base set,
evaluating pattern containment lazily (the expensive length-4 checks first,
the length-3 checks only for the sparse survivors).
"""

from __future__ import annotations

import pytest

from invmotz.counting import motzkin_prefix
from invmotz.permutations import contains_pattern, involutions

P = {
    "123": (1, 2, 3),
    "132": (1, 3, 2),
    "213": (2, 1, 3),
    "231": (2, 3, 1),
    "312": (3, 1, 2),
    "321": (3, 2, 1),
    "3412": (3, 4, 1, 2),
    "4321": (4, 3, 2, 1),
}


def _lazy_flags(tau):
    memo = {}

    def has(name: str) -> bool:
        flag = memo.get(name)
        if flag is None:
            flag = memo[name] = contains_pattern(tau, P[name])
        return flag

    return has


@pytest.fixture(scope="session")
def involution_class_counts():
    """counts[class_text][n] over the full involution base, n = 0..12."""
    n_max = 12
    names = [
        "I:4321",
        "I:3412",
        "I:4321,132",
        "I:4321,213",
        "I:4321,321",
        "I:4321,312",
        "I:4321,231",
        "I:4321,123",
        "I:3412,132",
        "I:3412,213",
        "I:3412,321",
        "I:3412,312",
        "I:3412,123",
        "I:3412,4321",
    ]
    counts = {name: [0] * (n_max + 1) for name in names}
    for n in range(n_max + 1):
        for tau in involutions(n):
            has = _lazy_flags(tau)
            a4321 = not has("4321")
            a3412 = not has("3412")
            if a4321:
                counts["I:4321"][n] += 1
                if not has("132"):
                    counts["I:4321,132"][n] += 1
                if not has("213"):
                    counts["I:4321,213"][n] += 1
                if not has("321"):
                    counts["I:4321,321"][n] += 1
                if not has("312"):
                    counts["I:4321,312"][n] += 1
                if not has("231"):
                    counts["I:4321,231"][n] += 1
                if not has("123"):
                    counts["I:4321,123"][n] += 1
            if a3412:
                counts["I:3412"][n] += 1
                if not has("132"):
                    counts["I:3412,132"][n] += 1
                if not has("213"):
                    counts["I:3412,213"][n] += 1
                if not has("321"):
                    counts["I:3412,321"][n] += 1
                if not has("312"):
                    counts["I:3412,312"][n] += 1
                if not has("123"):
                    counts["I:3412,123"][n] += 1
                if a4321:
                    counts["I:3412,4321"][n] += 1
    return counts


@pytest.fixture(scope="session")
def fixed_point_free_data():
    """Counts over the fixed-point-free base to n = 14, plus the 321/4321 sets to n = 12."""
    n_max = 14
    names = ["DI:4321", "DI:3412", "DI:3412,123", "DI:3412,312"]
    counts = {name: [0] * (n_max + 1) for name in names}
    sets_321 = {}
    sets_4321 = {}
    for n in range(n_max + 1):
        set321, set4321 = set(), set()
        for tau in involutions(n, fixed_point_free=True):
            has = _lazy_flags(tau)
            if not has("4321"):
                counts["DI:4321"][n] += 1
                if n <= 12:
                    set4321.add(tau)
            if not has("3412"):
                counts["DI:3412"][n] += 1
                if not has("123"):
                    counts["DI:3412,123"][n] += 1
                if not has("312"):
                    counts["DI:3412,312"][n] += 1
            if n <= 12 and not has("321"):
                set321.add(tau)
        if n <= 12:
            sets_321[n] = set321
            sets_4321[n] = set4321
    return {"counts": counts, "sets_321": sets_321, "sets_4321": sets_4321}


@pytest.fixture(scope="session")
def centrosymmetric_data():
    """Counts over the centrosymmetric base to n = 13."""
    n_max = 13
    names = [
        "CI:4321",
        "CI:3412",
        "CI:4321,132",
        "CI:4321,321",
        "CI:4321,312",
        "CI:3412,132",
        "CI:3412,321",
        "CI:3412,312",
        "CI:3412,123",
        "CI:3412,4321",
    ]
    counts = {name: [0] * (n_max + 1) for name in names}
    for n in range(n_max + 1):
        for tau in involutions(n, centrosymmetric=True):
            has = _lazy_flags(tau)
            a4321 = not has("4321")
            a3412 = not has("3412")
            if a4321:
                counts["CI:4321"][n] += 1
                if not has("132"):
                    counts["CI:4321,132"][n] += 1
                if not has("321"):
                    counts["CI:4321,321"][n] += 1
                if not has("312"):
                    counts["CI:4321,312"][n] += 1
            if a3412:
                counts["CI:3412"][n] += 1
                if not has("132"):
                    counts["CI:3412,132"][n] += 1
                if not has("321"):
                    counts["CI:3412,321"][n] += 1
                if not has("312"):
                    counts["CI:3412,312"][n] += 1
                if not has("123"):
                    counts["CI:3412,123"][n] += 1
                if a4321:
                    counts["CI:3412,4321"][n] += 1
    return counts
