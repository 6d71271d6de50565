"""Exact representation functions and sumsets on explicit windows.

Fast paths: ordered counts by sparse convolution with squaring, unordered
and restricted counts by multiplicity-limited knapsack over sorted
elements.  The brute-force witnesses live in :mod:`repbasis.oracle`; the
generating-function cross-checks (:func:`gf_check`) go through
:mod:`repbasis.polyring` instead, so the three routes stay independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from . import polyring
from .errors import NoRootError, TruncationError
from .intset import EventuallyPeriodicSet, FiniteIntSet, IntegerSet

Window = tuple[int, int]


def _check_window(window: Window) -> Window:
    lo, hi = window
    if lo > hi:
        raise ValueError("window bounds out of order")
    return int(lo), int(hi)


@dataclass(frozen=True)
class RepTable:
    """Exact counts n -> value on the closed window [lo, hi]."""

    lo: int
    hi: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("window bounds out of order")
        if len(self.counts) != self.hi - self.lo + 1:
            raise ValueError("counts length does not match window")
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be nonnegative")

    def __getitem__(self, n: int) -> int:
        if not self.lo <= n <= self.hi:
            raise KeyError(f"{n} outside window [{self.lo}, {self.hi}]")
        return self.counts[n - self.lo]

    def items(self):
        for i, c in enumerate(self.counts):
            yield self.lo + i, c

    def to_json(self) -> dict:
        return {"format": 1, "lo": self.lo, "hi": self.hi, "counts": list(self.counts)}

    @staticmethod
    def from_json(obj: dict) -> "RepTable":
        return RepTable(int(obj["lo"]), int(obj["hi"]), tuple(int(c) for c in obj["counts"]))

    @staticmethod
    def from_counts(counts: dict[int, int], window: Window) -> "RepTable":
        lo, hi = _check_window(window)
        return RepTable(lo, hi, tuple(counts.get(n, 0) for n in range(lo, hi + 1)))


def sumset(h: int, a: FiniteIntSet) -> FiniteIntSet:
    """The h-fold sumset hA; by convention 0A = {0}."""
    if h < 0:
        raise ValueError("h must be nonnegative")
    cur = {0}
    for _ in range(h):
        cur = {s + e for s in cur for e in a.elements}
    return FiniteIntSet(cur)


def _convolve(p: dict[int, int], q: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            k = e1 + e2
            out[k] = out.get(k, 0) + c1 * c2
    return out


def ordered_counts(a: FiniteIntSet, h: int) -> dict[int, int]:
    """Full-support ordered h-tuple counts, sparse (sum -> count)."""
    if h < 1:
        raise ValueError("h must be >= 1")
    result = {0: 1}
    base = {e: 1 for e in a.elements}
    while h:
        if h & 1:
            result = _convolve(result, base)
        h >>= 1
        if h:
            base = _convolve(base, base)
    return result


def unordered_counts(a: FiniteIntSet, h: int) -> dict[int, int]:
    """Full-support weakly-increasing h-tuple counts, sparse."""
    if h < 1:
        raise ValueError("h must be >= 1")
    elems = a.elements
    if h == 2:
        out: dict[int, int] = {}
        for i, x in enumerate(elems):
            for y in elems[i:]:
                s = x + y
                out[s] = out.get(s, 0) + 1
        return out
    levels: list[dict[int, int]] = [{0: 1}] + [{} for _ in range(h)]
    for e in elems:
        snap = [list(levels[j].items()) for j in range(h)]
        for j in range(h):
            for s, cnt in snap[j]:
                acc = s
                for c in range(1, h - j + 1):
                    acc += e
                    lvl = levels[j + c]
                    lvl[acc] = lvl.get(acc, 0) + cnt
    return levels[h]


def restricted_counts(a: FiniteIntSet, h: int) -> dict[int, int]:
    """Full-support strictly-increasing h-tuple counts, sparse."""
    if h < 1:
        raise ValueError("h must be >= 1")
    levels: list[dict[int, int]] = [{0: 1}] + [{} for _ in range(h)]
    for e in a.elements:
        for j in range(h, 0, -1):
            src = levels[j - 1]
            if not src:
                continue
            tgt = levels[j]
            for s, cnt in src.items():
                k = s + e
                tgt[k] = tgt.get(k, 0) + cnt
    return levels[h]


def ordered(a: FiniteIntSet, h: int, window: Window) -> RepTable:
    """Counts of ordered h-tuples of elements of a summing to each n in window."""
    return RepTable.from_counts(ordered_counts(a, h), window)


def unordered(a: FiniteIntSet, h: int, window: Window) -> RepTable:
    """Counts of weakly increasing h-tuples (multisets) summing to each n."""
    return RepTable.from_counts(unordered_counts(a, h), window)


def restricted(a: FiniteIntSet, h: int, window: Window) -> RepTable:
    """Counts of strictly increasing h-tuples summing to each n."""
    return RepTable.from_counts(restricted_counts(a, h), window)


class GfCheckResult(NamedTuple):
    ordered_ok: bool
    unordered_ok: bool
    restricted_ok: bool

    def all_ok(self) -> bool:
        return self.ordered_ok and self.unordered_ok and self.restricted_ok


def gf_check(a: FiniteIntSet, h: int, window: Window) -> GfCheckResult:
    """Verify the generating-function identities on the window.

    (i) ordered counts match the coefficients of G^h; for h = 2 also
    (ii) unordered = (G^2 + G(z^2))/2 and (iii) restricted = (G^2 - G(z^2))/2.
    The second and third flags are vacuously true for h != 2.
    """
    lo, hi = _check_window(window)
    if h < 1:
        raise ValueError("h must be >= 1")
    g = polyring.from_set(a)
    gh = g ** h
    tab = ordered(a, h, window)
    ordered_ok = all(gh.coeff(n) == tab[n] for n in range(lo, hi + 1))
    unordered_ok = restricted_ok = True
    if h == 2:
        g2 = g * g
        gsq = g.substitute_square()
        plus = g2 + gsq
        minus = g2 - gsq
        utab = unordered(a, 2, window)
        rtab = restricted(a, 2, window)
        for n in range(lo, hi + 1):
            pc, mc = plus.coeff(n), minus.coeff(n)
            if pc % 2 or pc // 2 != utab[n]:
                unordered_ok = False
            if mc % 2 or mc // 2 != rtab[n]:
                restricted_ok = False
    return GfCheckResult(ordered_ok, unordered_ok, restricted_ok)


def reconstruct_ordered(table: RepTable, h: int) -> FiniteIntSet:
    """Invert an ordered count table back to its unique underlying set.

    The table must cover the full support of the function.  Raises
    :class:`NoRootError` when the window data is inconsistent with every
    0/1-coefficient root, and :class:`TruncationError` when the data is
    consistent inside the window but the candidate's sums escape past the
    upper edge (evidence the table was cut off).  Low-side cut-offs are not
    separately distinguishable and surface as :class:`NoRootError`.
    """
    if h < 1:
        raise ValueError("h must be >= 1")
    support = {n: c for n, c in table.items() if c}
    if not support:
        return FiniteIntSet()
    poly = polyring.LaurentPoly.from_dict(support)
    try:
        return polyring.hth_root_01(poly, h)
    except NoRootError:
        candidate = _window_consistent_root(support, table.lo, table.hi, h)
        if candidate is not None:
            raise TruncationError(
                "window data matches a set whose sums extend past the window edge"
            ) from None
        raise


def _window_consistent_root(support: dict[int, int], lo: int, hi: int,
                            h: int) -> FiniteIntSet | None:
    """Find a set explaining the counts inside [lo, hi] with sums escaping hi."""
    first = min(support)
    if first % h != 0 or support[first] != 1:
        return None
    a0 = first // h
    elements = [a0]
    q = polyring.from_set(FiniteIntSet(elements)) ** h
    base = (h - 1) * a0
    for n in range(a0 + 1, hi - base + 1):
        d = base + n
        residue = support.get(d, 0) - q.coeff(d)
        if residue == 0:
            continue
        if residue != h:
            return None
        elements.append(n)
        q = polyring.from_set(FiniteIntSet(elements)) ** h
    if any(q.coeff(n) != support.get(n, 0) for n in range(lo, hi + 1)):
        return None
    if q.max_exp() <= hi:
        # fully inside the window: the strict root extraction would have
        # succeeded, so this is not a truncation pattern
        return None
    return FiniteIntSet(elements)


@dataclass(frozen=True)
class DiracReport:
    """Window evidence about eventual constancy of the order-2 unordered counts."""

    window: Window
    finite_input: bool
    tail_start: int
    tail_constant: bool
    tail_value: int | None
    counts: RepTable

    @property
    def fires(self) -> bool:
        """True when the window shows non-constant counts on its tail half."""
        return not self.tail_constant


def dirac_diagnostic(a: IntegerSet, window: Window) -> DiracReport:
    """Report whether r_{A,2} looks eventually constant on the window.

    For an infinite input this is evidence only, never proof; finite sets
    are exempt from the non-constancy phenomenon and are flagged as such.
    """
    lo, hi = _check_window(window)
    if hi - lo + 1 < 3:
        raise ValueError("window length must be >= 3")
    if isinstance(a, EventuallyPeriodicSet):
        finite_input = a.is_finite()
        amin = a.min_element()
        mat = FiniteIntSet() if amin is None else a.members_in(amin, hi - amin)
    else:
        finite_input = True
        mat = a
    counts = RepTable.from_counts(
        unordered_counts(mat, 2) if len(mat) else {}, (lo, hi)
    )
    tail_start = lo + (hi - lo) // 2
    tail = [counts[n] for n in range(tail_start, hi + 1)]
    constant = len(set(tail)) == 1
    return DiracReport(
        window=(lo, hi),
        finite_input=finite_input,
        tail_start=tail_start,
        tail_constant=constant,
        tail_value=tail[0] if constant else None,
        counts=counts,
    )
