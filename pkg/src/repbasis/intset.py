"""Integer-set values, counting functions, and finite-window density ratios.

Two set representations are provided: ``FiniteIntSet`` (an explicit sorted
tuple of integers) and ``EventuallyPeriodicSet`` (a finite head on
``(-inf, n0]`` plus a union of residue classes mod ``m`` on ``(n0, +inf)``).
All values are immutable; every operation is a pure function.
"""

from __future__ import annotations

import json
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union


@dataclass(frozen=True)
class FiniteIntSet:
    """A finite set of integers stored as a strictly increasing tuple."""

    elements: tuple[int, ...]
    _members: frozenset[int] = field(repr=False, compare=False, default=frozenset())

    def __init__(self, elements: Iterable[int] = ()):
        elems = tuple(sorted(set(int(e) for e in elements)))
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "_members", frozenset(elems))

    def __contains__(self, n: int) -> bool:
        return n in self._members

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __or__(self, other: "FiniteIntSet") -> "FiniteIntSet":
        return FiniteIntSet(self.elements + other.elements)

    def __hash__(self) -> int:
        return hash(self.elements)

    def min(self) -> int:
        return self.elements[0]

    def max(self) -> int:
        return self.elements[-1]

    def count(self, y: int, x: int) -> int:
        """Number of elements in the closed interval [y, x]."""
        if y > x:
            return 0
        return bisect_right(self.elements, x) - bisect_left(self.elements, y)

    def shift(self, x: int) -> "FiniteIntSet":
        """Translate every element by x."""
        return FiniteIntSet(a + x for a in self.elements)

    def dilate(self, h: int) -> "FiniteIntSet":
        """Multiply every element by h (h >= 1)."""
        if h < 1:
            raise ValueError("dilation factor must be >= 1")
        return FiniteIntSet(h * a for a in self.elements)

    def __repr__(self) -> str:
        return "FiniteIntSet({%s})" % ", ".join(str(a) for a in self.elements)


@dataclass(frozen=True)
class EventuallyPeriodicSet:
    """Finite head below a threshold, periodic residue classes above it.

    Membership: ``n in head`` for ``n <= n0``, and ``n % m in residues`` for
    ``n > n0``.  The tail runs to +infinity only; two-sided periodicity is
    out of scope.
    """

    n0: int
    m: int
    residues: frozenset[int]
    head: FiniteIntSet

    def __init__(self, n0: int, m: int, residues: Iterable[int],
                 head: FiniteIntSet | Iterable[int] = ()):
        if m < 1:
            raise ValueError("modulus m must be positive")
        res = frozenset(int(t) for t in residues)
        if not res <= frozenset(range(m)):
            raise ValueError("residues must lie in [0, m)")
        if not isinstance(head, FiniteIntSet):
            head = FiniteIntSet(head)
        if len(head) and head.max() > n0:
            raise ValueError("head elements must be <= n0")
        object.__setattr__(self, "n0", int(n0))
        object.__setattr__(self, "m", int(m))
        object.__setattr__(self, "residues", res)
        object.__setattr__(self, "head", head)

    def __contains__(self, n: int) -> bool:
        if n <= self.n0:
            return n in self.head
        return n % self.m in self.residues

    def is_finite(self) -> bool:
        return not self.residues

    def min_element(self) -> int | None:
        """Smallest member, or None for the empty set."""
        if len(self.head):
            return self.head.min()
        if not self.residues:
            return None
        for n in range(self.n0 + 1, self.n0 + 1 + self.m):
            if n % self.m in self.residues:
                return n
        raise AssertionError("nonempty residue set with no tail member")

    def count(self, y: int, x: int) -> int:
        """Closed-form count of members in [y, x]; no tail enumeration."""
        if y > x:
            return 0
        total = self.head.count(y, min(x, self.n0))
        lo = max(y, self.n0 + 1)
        if lo <= x:
            for t in self.residues:
                # integers n in [lo, x] with n % m == t
                total += (x - t) // self.m - (lo - 1 - t) // self.m
        return total

    def members_in(self, y: int, x: int) -> FiniteIntSet:
        """Materialize the members lying in [y, x]."""
        return FiniteIntSet(n for n in range(y, x + 1) if n in self)


IntegerSet = Union[FiniteIntSet, EventuallyPeriodicSet]


@dataclass(frozen=True)
class DensityProfile:
    """Window ratios A(-x, x) / (2x + 1) at increasing sample points."""

    samples: tuple[tuple[int, Fraction], ...]

    def __post_init__(self):
        xs = [x for x, _ in self.samples]
        if xs != sorted(set(xs)) or any(x < 1 for x in xs):
            raise ValueError("sample points must be strictly increasing positive integers")
        if any(not 0 <= r <= 1 for _, r in self.samples):
            raise ValueError("ratios must lie in [0, 1]")


def count(a: IntegerSet, y: int, x: int) -> int:
    """card{n in a : y <= n <= x}; y > x yields 0."""
    return a.count(y, x)


def density_profile(a: IntegerSet, xs: Sequence[int]) -> DensityProfile:
    """Exact window ratios A(-x, x)/(2x+1) at each sample point x."""
    if not xs:
        raise ValueError("xs must be nonempty")
    samples = tuple((x, Fraction(a.count(-x, x), 2 * x + 1)) for x in xs)
    return DensityProfile(samples)


def shift(a: FiniteIntSet, x: int) -> FiniteIntSet:
    return a.shift(x)


def dilate(a: FiniteIntSet, h: int) -> FiniteIntSet:
    return a.dilate(h)


def naturals() -> EventuallyPeriodicSet:
    """The nonnegative integers as a periodic set."""
    return EventuallyPeriodicSet(n0=-1, m=1, residues={0})


def integer_window(lo: int, hi: int) -> FiniteIntSet:
    """All integers in [lo, hi] as a finite set."""
    if lo > hi:
        raise ValueError("window bounds out of order")
    return FiniteIntSet(range(lo, hi + 1))


# ---------------------------------------------------------------------------
# file formats: one integer per line with '#' comments; periodic sets as JSON


def parse_set_text(text: str) -> FiniteIntSet:
    elems = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            elems.append(int(line))
    return FiniteIntSet(elems)


def format_set_text(a: FiniteIntSet) -> str:
    lines = ["# format: 1"]
    lines.extend(str(e) for e in a.elements)
    return "\n".join(lines) + "\n"


def read_set_file(path) -> FiniteIntSet:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_set_text(fh.read())


def write_set_file(path, a: FiniteIntSet) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_set_text(a))


def periodic_to_json(a: EventuallyPeriodicSet) -> dict:
    return {
        "format": 1,
        "n0": a.n0,
        "m": a.m,
        "T": sorted(a.residues),
        "head": list(a.head.elements),
    }


def periodic_from_json(obj: dict) -> EventuallyPeriodicSet:
    return EventuallyPeriodicSet(
        n0=obj["n0"], m=obj["m"], residues=obj["T"], head=obj.get("head", ())
    )


def read_periodic_file(path) -> EventuallyPeriodicSet:
    with open(path, "r", encoding="utf-8") as fh:
        return periodic_from_json(json.load(fh))


def write_periodic_file(path, a: EventuallyPeriodicSet) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(periodic_to_json(a), fh, sort_keys=True)
        fh.write("\n")
