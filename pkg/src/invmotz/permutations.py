"""Permutations in one-line notation, with the toolkit needed for involutions.

A permutation of {1..n} is represented as a plain tuple ``p`` where ``p[i-1]``
is the image of position ``i`` (one-line notation, 1-indexed throughout; the
empty tuple is the empty permutation).  An involution is a permutation equal
to its own inverse, i.e. every cycle has length at most two.

The module provides validation, the classical symmetry maps (reverse,
complement, reverse-complement, inverse), pattern containment by pruned
backtracking, decomposition into connected components, the excedance /
deficiency / fixed-point statistics, and exhaustive generators for
involutions (optionally fixed-point-free or centrosymmetric).
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence

Perm = tuple[int, ...]


def validate_permutation(values: Iterable[int]) -> Perm:
    """Check that *values* is a rearrangement of {1..n} and return it as a tuple.

    >>> validate_permutation([2, 4, 5, 3, 1, 7, 6])
    (2, 4, 5, 3, 1, 7, 6)
    >>> validate_permutation([])
    ()
    """
    p = tuple(values)
    n = len(p)
    seen = [False] * (n + 1)
    for pos, v in enumerate(p, start=1):
        if not 1 <= v <= n:
            raise ValueError(f"value {v} at position {pos} is outside 1..{n}")
        if seen[v]:
            raise ValueError(f"duplicate value {v} at position {pos}")
        seen[v] = True
    return p


def parse_permutation(text: str) -> Perm:
    """Parse the space-separated one-line form; the empty string is the empty permutation."""
    tokens = text.split()
    values = []
    for tok in tokens:
        try:
            values.append(int(tok))
        except ValueError:
            raise ValueError(f"bad token {tok!r} in permutation text") from None
    return validate_permutation(values)


def format_permutation(p: Sequence[int]) -> str:
    """One-line text form, e.g. ``"4 7 5 1 3 6 2 9 8"``; empty permutation gives ``""``."""
    return " ".join(str(v) for v in p)


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def is_involution(p: Sequence[int]) -> bool:
    return all(p[v - 1] == i for i, v in enumerate(p, start=1))


def as_involution(values: Iterable[int]) -> Perm:
    """Validate *values* as an involution; the error names the first witness position.

    >>> as_involution([4, 7, 5, 1, 3, 6, 2, 9, 8])
    (4, 7, 5, 1, 3, 6, 2, 9, 8)
    """
    p = validate_permutation(values)
    for i, v in enumerate(p, start=1):
        if p[v - 1] != i:
            raise ValueError(f"not an involution at i={i}: {i} -> {v} -> {p[v - 1]}")
    return p


def reverse(p: Sequence[int]) -> Perm:
    """Read the one-line form right to left.

    >>> reverse((2, 3, 1))
    (1, 3, 2)
    """
    return tuple(reversed(p))


def complement(p: Sequence[int]) -> Perm:
    """Replace each value v by n+1-v.

    >>> complement((2, 3, 1))
    (2, 1, 3)
    """
    n = len(p)
    return tuple(n + 1 - v for v in p)


def reverse_complement(p: Sequence[int]) -> Perm:
    """Compose reverse and complement; maps involutions to involutions."""
    n = len(p)
    return tuple(n + 1 - v for v in reversed(p))


def inverse(p: Sequence[int]) -> Perm:
    """Group inverse.

    >>> inverse((2, 3, 1))
    (3, 1, 2)
    """
    inv = [0] * len(p)
    for i, v in enumerate(p, start=1):
        inv[v - 1] = i
    return tuple(inv)


def contains_pattern(perm: Sequence[int], pattern: Sequence[int]) -> bool:
    """True iff some subsequence of *perm* is order-isomorphic to *pattern*.

    Pruned backtracking over candidate index prefixes; worst case O(n^k),
    which is fine for the pattern lengths (k <= 4) and sizes (n <= 16) this
    library targets.

    >>> contains_pattern((2, 7, 6, 1, 3, 5, 4), (4, 3, 2, 1))
    True
    >>> contains_pattern((4, 2, 9, 1, 10, 11, 7, 12, 3, 5, 6, 8), (4, 3, 2, 1))
    False
    """
    n, k = len(perm), len(pattern)
    if k == 0:
        return True
    if k > n:
        return False
    # rel[d][a] records whether slot d of the pattern must exceed slot a.
    rel = [tuple(pattern[d] > pattern[a] for a in range(d)) for d in range(k)]
    chosen = [0] * k
    last_slot = k - 1

    def extend(d: int, start: int) -> bool:
        rd = rel[d]
        for i in range(start, n - (k - d) + 1):
            v = perm[i]
            ok = True
            for a in range(d):
                if (v > chosen[a]) != rd[a]:
                    ok = False
                    break
            if ok:
                if d == last_slot:
                    return True
                chosen[d] = v
                if extend(d + 1, i + 1):
                    return True
        return False

    return extend(0, 0)


def pattern_witness(perm: Sequence[int], pattern: Sequence[int]) -> tuple[int, ...] | None:
    """First witness subsequence in lexicographic index order, as 1-based positions.

    Returns None when the pattern is not contained.  Intended for diagnostics;
    `contains_pattern` is the fast membership test.

    >>> pattern_witness((2, 7, 6, 1, 3, 5, 4), (4, 3, 2, 1))
    (2, 3, 6, 7)
    """
    n, k = len(perm), len(pattern)
    if k == 0:
        return ()
    if k > n:
        return None
    rel = [tuple(pattern[d] > pattern[a] for a in range(d)) for d in range(k)]
    chosen_vals = [0] * k
    chosen_idx = [0] * k

    def extend(d: int, start: int) -> bool:
        rd = rel[d]
        for i in range(start, n - (k - d) + 1):
            v = perm[i]
            if all((v > chosen_vals[a]) == rd[a] for a in range(d)):
                chosen_vals[d] = v
                chosen_idx[d] = i + 1
                if d == k - 1 or extend(d + 1, i + 1):
                    return True
        return False

    return tuple(chosen_idx) if extend(0, 0) else None


def avoids_all(perm: Sequence[int], patterns: Iterable[Sequence[int]]) -> bool:
    """True iff *perm* contains none of the *patterns* (vacuously true for none)."""
    return not any(contains_pattern(perm, q) for q in patterns)


def connected_components(p: Sequence[int]) -> list[Perm]:
    """Split into the finest interval decomposition with p(A_j) = A_j.

    Each block is renormalized to a permutation of {1..m}, so predicates can
    be reused on components; concatenating the blocks with offsets recovers p.
    Single pass: cut after position i whenever max(p[1..i]) == i.

    >>> connected_components((2, 4, 5, 3, 1, 7, 6))
    [(2, 4, 5, 3, 1), (2, 1)]
    >>> connected_components((2, 7, 6, 1, 3, 5, 4))
    [(2, 7, 6, 1, 3, 5, 4)]
    """
    comps = []
    start = 0
    running_max = 0
    for i, v in enumerate(p, start=1):
        if v > running_max:
            running_max = v
        if running_max == i:
            comps.append(tuple(v - start for v in p[start:i]))
            start = i
    return comps


def is_connected(p: Sequence[int]) -> bool:
    return len(connected_components(p)) == 1


def excedances(t: Sequence[int]) -> tuple[int, ...]:
    """Positions i with t(i) > i, in increasing order.

    >>> excedances((4, 7, 5, 1, 3, 6, 2, 9, 8))
    (1, 2, 3, 8)
    """
    return tuple(i for i, v in enumerate(t, start=1) if v > i)


def deficiencies(t: Sequence[int]) -> tuple[int, ...]:
    """Positions i with t(i) < i, in increasing order."""
    return tuple(i for i, v in enumerate(t, start=1) if v < i)


def fixed_points(t: Sequence[int]) -> tuple[int, ...]:
    """Positions i with t(i) = i, in increasing order."""
    return tuple(i for i, v in enumerate(t, start=1) if v == i)


def involutions(
    n: int,
    *,
    fixed_point_free: bool = False,
    centrosymmetric: bool = False,
) -> Iterator[Perm]:
    """Yield every involution of {1..n} exactly once, in one-line lexicographic order.

    ``fixed_point_free`` restricts to involutions without fixed points (empty
    for odd n); ``centrosymmetric`` to those with t(i) + t(n+1-i) = n+1 for
    all i.  Generation walks positions left to right, pairing the first free
    position with each admissible partner in increasing order; constraints
    are propagated (pair closure, and the mirrored pair in the
    centrosymmetric case), which yields lexicographic order directly.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    tau = [0] * (n + 1)  # 1-based; 0 marks unassigned

    def forced(i: int, v: int) -> dict[int, int] | None:
        pairs = [(i, v), (v, i)]
        if centrosymmetric:
            pairs += [(n + 1 - i, n + 1 - v), (n + 1 - v, n + 1 - i)]
        mapping: dict[int, int] = {}
        for a, b in pairs:
            if mapping.setdefault(a, b) != b:
                return None
        return mapping

    def place(i: int) -> Iterator[Perm]:
        while i <= n and tau[i]:
            i += 1
        if i > n:
            yield tuple(tau[1:])
            return
        for v in range(i, n + 1):
            if tau[v]:
                continue
            if fixed_point_free and v == i:
                continue
            mapping = forced(i, v)
            if mapping is None:
                continue
            if any(tau[a] not in (0, b) for a, b in mapping.items()):
                continue
            if fixed_point_free and any(a == b for a, b in mapping.items()):
                continue
            news = [a for a, b in mapping.items() if tau[a] == 0]
            for a in news:
                tau[a] = mapping[a]
            yield from place(i + 1)
            for a in news:
                tau[a] = 0

    yield from place(1)
