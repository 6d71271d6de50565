"""Sidon-set certification and the two-element collision-free gadget.

The gadget {-c, (h-1)c + u} plants u inside the h-fold sumset while all
sums of at most h gadget elements stay far apart; its three guarantees are
re-checked exactly at construction time rather than trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from . import repfn
from .errors import DegenerateError, InternalError, InvalidGadget
from .intset import FiniteIntSet


def first_collision(a: FiniteIntSet, h: int):
    """Two distinct h-multisets of elements of a with equal sum, or None."""
    if h < 1:
        raise ValueError("h must be >= 1")
    seen: dict[int, tuple[int, ...]] = {}
    for combo in combinations_with_replacement(a.elements, h):
        s = sum(combo)
        prev = seen.get(s)
        if prev is not None and prev != combo:
            return prev, combo
        seen.setdefault(s, combo)
    return None


def is_sidon(a: FiniteIntSet, h: int) -> bool:
    """True iff every h-fold sum has at most one unordered representation."""
    return first_collision(a, h) is None


def first_generalized_collision(a: FiniteIntSet, h: int):
    """Two distinct multisets of sizes r, r' <= h with equal sum, or None."""
    if h < 1:
        raise ValueError("h must be >= 1")
    seen: dict[int, tuple[int, tuple[int, ...]]] = {}
    for r in range(1, h + 1):
        for combo in combinations_with_replacement(a.elements, r):
            s = sum(combo)
            key = (r, combo)
            prev = seen.get(s)
            if prev is not None and prev != key:
                return prev, key
            seen.setdefault(s, key)
    return None


def is_generalized_sidon(a: FiniteIntSet, h: int) -> bool:
    """No collisions among sums of r <= h and r' <= h elements unless the
    sizes agree and the multisets match."""
    return first_generalized_collision(a, h) is None


@dataclass(frozen=True)
class GadgetParams:
    """Order, spread and target for the two-element gadget.

    Requires c > 2h|u|; violating parameters raise :class:`InvalidGadget`.
    """

    h: int
    c: int
    u: int

    def __post_init__(self):
        if self.h < 2:
            raise InvalidGadget("gadget order h must be >= 2")
        if self.c <= 2 * self.h * abs(self.u):
            raise InvalidGadget(
                f"need c > 2h|u| = {2 * self.h * abs(self.u)}, got c = {self.c}"
            )


def min_gap(a: FiniteIntSet, h: int) -> int:
    """Minimum distance between distinct values of the union of rA, r = 1..h."""
    if h < 1:
        raise ValueError("h must be >= 1")
    union: set[int] = set()
    for r in range(1, h + 1):
        union.update(repfn.sumset(r, a).elements)
    if len(union) < 2:
        raise DegenerateError("fewer than two distinct sums")
    ordered = sorted(union)
    return min(y - x for x, y in zip(ordered, ordered[1:]))


def gadget(p: GadgetParams) -> FiniteIntSet:
    """Build {-c, (h-1)c + u} and re-verify its three guarantees exactly."""
    d = FiniteIntSet([-p.c, (p.h - 1) * p.c + p.u])
    if p.u not in repfn.sumset(p.h, d):
        raise InternalError("gadget target u missing from its h-fold sumset")
    if not is_generalized_sidon(d, p.h):
        raise InternalError("gadget is not generalized Sidon at its order")
    if 2 * min_gap(d, p.h) <= p.c:
        raise InternalError("gadget sum gap is not greater than c/2")
    return d
