"""Brute-force enumeration witnesses.

Everything here counts by literal tuple enumeration, with no algebraic
shortcuts, so these routines can serve as ground truth for the fast paths
in :mod:`repbasis.repfn`.  Kept deliberately naive; do not optimize.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product
from math import factorial

from . import repfn
from .errors import BudgetError
from .intset import FiniteIntSet
from .repfn import RepTable, Window

DEFAULT_BUDGET = 10 ** 8


def _budget() -> int:
    raw = os.environ.get("REPBASIS_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


def _guard(a: FiniteIntSet, h: int) -> None:
    if h < 1:
        raise ValueError("h must be >= 1")
    if len(a) ** h > _budget():
        raise BudgetError(
            f"|A|^h = {len(a)}^{h} exceeds enumeration budget {_budget()}"
        )


def enum_ordered_counts(a: FiniteIntSet, h: int) -> dict[int, int]:
    _guard(a, h)
    out: dict[int, int] = {}
    for tup in product(a.elements, repeat=h):
        s = sum(tup)
        out[s] = out.get(s, 0) + 1
    return out


def enum_unordered_counts(a: FiniteIntSet, h: int) -> dict[int, int]:
    _guard(a, h)
    out: dict[int, int] = {}
    for tup in combinations_with_replacement(a.elements, h):
        s = sum(tup)
        out[s] = out.get(s, 0) + 1
    return out


def enum_restricted_counts(a: FiniteIntSet, h: int) -> dict[int, int]:
    _guard(a, h)
    out: dict[int, int] = {}
    for tup in combinations(a.elements, h):
        s = sum(tup)
        out[s] = out.get(s, 0) + 1
    return out


def enum_ordered_restricted_counts(a: FiniteIntSet, h: int) -> dict[int, int]:
    _guard(a, h)
    out: dict[int, int] = {}
    for tup in product(a.elements, repeat=h):
        if len(set(tup)) == h:
            s = sum(tup)
            out[s] = out.get(s, 0) + 1
    return out


def enum_ordered(a: FiniteIntSet, h: int, window: Window) -> RepTable:
    return RepTable.from_counts(enum_ordered_counts(a, h), window)


def enum_unordered(a: FiniteIntSet, h: int, window: Window) -> RepTable:
    return RepTable.from_counts(enum_unordered_counts(a, h), window)


def enum_restricted(a: FiniteIntSet, h: int, window: Window) -> RepTable:
    return RepTable.from_counts(enum_restricted_counts(a, h), window)


def enum_ordered_restricted(a: FiniteIntSet, h: int, window: Window) -> RepTable:
    return RepTable.from_counts(enum_ordered_restricted_counts(a, h), window)


@dataclass(frozen=True)
class Mismatch:
    mode: str
    n: int
    fast_value: int
    oracle_value: int


@dataclass(frozen=True)
class EquivalenceReport:
    ok: bool
    mismatch: Mismatch | None


def equivalence_suite(a: FiniteIntSet, h: int, window: Window,
                      fast=None) -> EquivalenceReport:
    """Check the fast counting paths against enumeration on the window.

    Covers the four counting modes plus the factorial law relating the
    ordered-restricted and restricted counts.  ``fast`` may override the
    checked implementations (used by the harness self-test); it maps mode
    name to a callable (a, h, window) -> RepTable.
    """
    lo, hi = window
    fns = {
        "ordered": repfn.ordered,
        "unordered": repfn.unordered,
        "restricted": repfn.restricted,
    }
    if fast:
        fns.update(fast)
    comparisons = [
        ("ordered", fns["ordered"](a, h, window), enum_ordered(a, h, window)),
        ("unordered", fns["unordered"](a, h, window), enum_unordered(a, h, window)),
        ("restricted", fns["restricted"](a, h, window), enum_restricted(a, h, window)),
    ]
    rtab = fns["restricted"](a, h, window)
    scaled = RepTable(lo, hi, tuple(factorial(h) * c for c in rtab.counts))
    comparisons.append(
        ("ordered_restricted", scaled, enum_ordered_restricted(a, h, window))
    )
    for mode, fast_tab, slow_tab in comparisons:
        for n in range(lo, hi + 1):
            if fast_tab[n] != slow_tab[n]:
                return EquivalenceReport(
                    ok=False,
                    mismatch=Mismatch(mode, n, fast_tab[n], slow_tab[n]),
                )
    return EquivalenceReport(ok=True, mismatch=None)
