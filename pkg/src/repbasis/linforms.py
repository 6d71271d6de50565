"""Binary linear forms u1*x1 + u2*x2 and their unique-representation bases.

The one-step extension plants a prescribed value b into the form's image
by adjoining the pair (b*v1 + u2*t, b*v2 - u1*t), which evaluates to b for
every shift t.  Rather than deriving sufficient inequalities for t, the
implementation scans shifts outward from zero and certifies each candidate
by an exact recount, so the returned set provably satisfies the four-part
count contract.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator

from .errors import InternalError
from .intset import FiniteIntSet
from .repfn import RepTable, Window


def _bezout_min_v1(u1: int, u2: int) -> tuple[int, int]:
    """v1, v2 with u1*v1 + u2*v2 = 1 and |v1| minimal (ties -> positive)."""
    old_r, r = u1, u2
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    if old_r != 1:
        raise ValueError("coefficients must be coprime")
    x = old_s % u2
    v1 = min((x, x - u2), key=lambda v: (abs(v), -v))
    return v1, (1 - u1 * v1) // u2


@dataclass(frozen=True)
class BinaryForm:
    """Coprime positive coefficients u1 < u2 with a canonical unit pair."""

    u1: int
    u2: int
    v1: int
    v2: int

    def __init__(self, u1: int, u2: int):
        self._fill(u1, u2, allow_equal=False)

    def _fill(self, u1: int, u2: int, allow_equal: bool) -> None:
        if u1 < 1 or u2 < 1:
            raise ValueError("coefficients must be positive")
        if u1 > u2 or (u1 == u2 and not allow_equal):
            raise ValueError("coefficients must satisfy u1 < u2")
        if gcd(u1, u2) != 1:
            raise ValueError("coefficients must be coprime")
        v1, v2 = _bezout_min_v1(u1, u2)
        object.__setattr__(self, "u1", int(u1))
        object.__setattr__(self, "u2", int(u2))
        object.__setattr__(self, "v1", v1)
        object.__setattr__(self, "v2", v2)

    @classmethod
    def relaxed(cls, u1: int, u2: int) -> "BinaryForm":
        """Permit u1 == u2 == 1 (the plain-sumset boundary); diagnostics only."""
        self = object.__new__(cls)
        self._fill(u1, u2, allow_equal=True)
        return self

    def apply(self, x1: int, x2: int) -> int:
        return self.u1 * x1 + self.u2 * x2


def image(phi: BinaryForm, a1: FiniteIntSet, a2: FiniteIntSet | None = None) -> FiniteIntSet:
    """All values u1*a1 + u2*a2 over the two sets (a2 defaults to a1)."""
    if a2 is None:
        a2 = a1
    return FiniteIntSet(phi.apply(x, y) for x in a1.elements for y in a2.elements)


def rep_counts(phi: BinaryForm, a1: FiniteIntSet,
               a2: FiniteIntSet | None = None) -> dict[int, int]:
    """Ordered pair counts of the form over the full image, sparse."""
    if a2 is None:
        a2 = a1
    out: dict[int, int] = {}
    for x in a1.elements:
        base = phi.u1 * x
        for y in a2.elements:
            n = base + phi.u2 * y
            out[n] = out.get(n, 0) + 1
    return out


def rep(phi: BinaryForm, a1: FiniteIntSet, a2: FiniteIntSet,
        window: Window) -> RepTable:
    return RepTable.from_counts(rep_counts(phi, a1, a2), window)


def _signed_shifts(budget: int) -> Iterator[int]:
    yield 0
    for t in range(1, budget + 1):
        yield t
        yield -t


def _new_values(u1: int, u2: int, elems: tuple[int, ...], e1: int,
                e2: int) -> Iterator[int]:
    """Form values involving at least one of the two new elements."""
    for p in (e1, e2):
        for q in (e1, e2):
            yield u1 * p + u2 * q
    for x in elems:
        yield u1 * x + u2 * e1
        yield u1 * x + u2 * e2
        yield u1 * e1 + u2 * x
        yield u1 * e2 + u2 * x


def extend_once(phi: BinaryForm, a: FiniteIntSet, b: int,
                shift_budget: int = 500_000) -> FiniteIntSet:
    """Adjoin two elements so the form hits b exactly once more.

    The first shift t (smallest |t|, positive first) whose candidate pair
    passes the exact four-part recount wins: the count at b grows by one,
    counts on the old image are untouched, and every fresh image value has
    exactly one representation.  Termination within small t is typical;
    the budget is a bug trap, not a tuning knob.
    """
    base = rep_counts(phi, a, a)
    u1, u2, v1, v2 = phi.u1, phi.u2, phi.v1, phi.v2
    elems = a.elements
    for t in _signed_shifts(shift_budget):
        e1 = b * v1 + u2 * t
        e2 = b * v2 - u1 * t
        if e1 == e2 or e1 in a or e2 in a:
            continue
        # stream the values contributed by the new pair: exactly one may
        # land on b, none may land elsewhere on the old image, and no
        # fresh value may repeat
        hits_b = 0
        fresh: set[int] = set()
        ok = True
        for v in _new_values(u1, u2, elems, e1, e2):
            if v == b:
                hits_b += 1
                if hits_b > 1:
                    ok = False
                    break
            elif v in base or v in fresh:
                ok = False
                break
            else:
                fresh.add(v)
        if ok and hits_b == 1:
            return FiniteIntSet(elems + (e1, e2))
    raise InternalError("no admissible shift found within the budget")


def next_missing(phi: BinaryForm, a: FiniteIntSet) -> int:
    """Value of least absolute value outside the image (positive first)."""
    counts = rep_counts(phi, a, a)
    t = 0
    while True:
        if t not in counts:
            return t
        if -t not in counts:
            return -t
        t += 1


def urb_form_trace(phi: BinaryForm, steps: int) -> list[tuple[int | None, FiniteIntSet]]:
    """(target, set) after each extension, starting from {0, 1}."""
    if steps < 1:
        raise ValueError("steps must be >= 1")
    a = FiniteIntSet([0, 1])
    counts = rep_counts(phi, a, a)
    if len(counts) != 4 or any(v != 1 for v in counts.values()):
        raise InternalError("base set does not produce four distinct values")
    trace: list[tuple[int | None, FiniteIntSet]] = [(None, a)]
    for _ in range(steps - 1):
        b = next_missing(phi, a)
        a = extend_once(phi, a, b)
        counts = rep_counts(phi, a, a)
        if any(v > 1 for v in counts.values()):
            raise InternalError("a form value acquired two representations")
        trace.append((b, a))
    return trace


def urb_form(phi: BinaryForm, steps: int) -> FiniteIntSet:
    """Grow a set whose form counts stay <= 1 and fill values outward from 0."""
    return urb_form_trace(phi, steps)[-1][1]
