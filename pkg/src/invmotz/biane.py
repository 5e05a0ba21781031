"""The bijection between involutions and labelled Motzkin paths.

An involution of {1..n} maps to a path with one step per position i:
horizontal when t(i) = i, up when t(i) > i, down when t(i) < i.  Keep the
excedance positions in a list sorted increasingly; when position i closes a
pair (t(i) < i), the down step is labelled with the current rank of t(i) in
that list, and t(i) is removed.  At that moment the surviving excedances
below i are exactly the open up steps, and they occupy the first h slots of
the list where h is the height of the down step, so labels always satisfy
1 <= label <= height.

The inverse scan keeps the sorted list of open up-step positions: a down
step with label k closes the k-th smallest open position.  Consequently the
unitary labelling pairs each down step with the oldest open up step, and the
maximal labelling with the newest (well-nested matching).
"""

from __future__ import annotations

import bisect

from .motzkin import LabelledPath, reflect
from .permutations import Perm, as_involution, excedances, reverse_complement


def involution_to_path(tau: Perm) -> LabelledPath:
    """Image of an involution under the correspondence.

    >>> involution_to_path((4, 7, 5, 1, 3, 6, 2, 9, 8)).encode()
    'UUUD1D2HD1UD1'
    """
    tau = as_involution(tau)
    open_exc = list(excedances(tau))
    steps = []
    labels = []
    for i, v in enumerate(tau, start=1):
        if v == i:
            steps.append("H")
        elif v > i:
            steps.append("U")
        else:
            k = bisect.bisect_left(open_exc, v)
            open_exc.pop(k)
            steps.append("D")
            labels.append(k + 1)
    return LabelledPath("".join(steps), tuple(labels))


def path_to_involution(path: LabelledPath | str) -> Perm:
    """Inverse map; a plain shape is accepted only when it has no down steps.

    >>> path_to_involution(LabelledPath("UUUDDHDUD", (1, 2, 1, 1)))
    (4, 7, 5, 1, 3, 6, 2, 9, 8)
    """
    if isinstance(path, str):
        if "D" in path:
            raise ValueError("down steps need labels; got an unlabelled path")
        path = LabelledPath(path, ())
    n = len(path.steps)
    tau = [0] * n
    open_pos: list[int] = []
    label_iter = iter(path.labels)
    for i, ch in enumerate(path.steps, start=1):
        if ch == "H":
            tau[i - 1] = i
        elif ch == "U":
            open_pos.append(i)
        else:
            k = next(label_iter)
            if k > len(open_pos):
                raise ValueError(f"label {k} at step {i} exceeds {len(open_pos)} open positions")
            j = open_pos.pop(k - 1)
            tau[i - 1] = j
            tau[j - 1] = i
    return tuple(tau)


def rc_reflection_agrees(tau: Perm) -> bool:
    """Whether the path shape of the reverse-complement equals the reflected shape.

    This holds for every involution: position k of the original and position
    n+1-k of the reverse-complement swap the roles of up and down steps while
    horizontal steps stay horizontal.  Exposed as a named checkable property.
    """
    tau = as_involution(tau)
    lhs = involution_to_path(reverse_complement(tau)).steps
    rhs = reflect(involution_to_path(tau).steps)
    return lhs == rhs
