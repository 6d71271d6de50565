"""Inverse constructions over the integers.

Two iterative builders live here.  The first grows a set whose order-2
unordered counts equal 1 on an ever-wider symmetric window while staying
at most 1 everywhere, with an optional sparsity budget coupled to the
spread parameter.  The second grows an order-h set realizing a prescribed
count function with finitely many zeros, by planting one scheduled target
per step through the two-element gadget from :mod:`repbasis.sidon`.

Every growth step re-checks the facts the underlying arguments guarantee;
a failed check raises :class:`InternalError` and indicates a bug, never an
expected outcome.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterator, Mapping

from . import oracle, repfn, sidon
from .errors import InternalError, SparsityError
from .intset import FiniteIntSet
from .sidon import GadgetParams

SparsityFn = Callable[[int], int]


@dataclass(frozen=True)
class TargetFn:
    """Prescribed count function: finite overrides on top of a default.

    Values are nonnegative ints, or None meaning "no finite bound".  The
    zero set must be finite, so a default of 0 is rejected and only
    overrides may vanish.
    """

    default: int | None
    overrides: tuple[tuple[int, int | None], ...]
    _map: dict = field(repr=False, compare=False, default_factory=dict)

    def __init__(self, default: int | None = 1,
                 overrides: Mapping[int, int | None] | None = None):
        if default == 0:
            raise ValueError("default 0 would give infinitely many zeros")
        for v in (default, *((overrides or {}).values())):
            if v is not None and (not isinstance(v, int) or v < 0):
                raise ValueError(f"target values must be None or ints >= 0, got {v!r}")
        items = tuple(sorted((int(n), v) for n, v in (overrides or {}).items()))
        object.__setattr__(self, "default", default)
        object.__setattr__(self, "overrides", items)
        object.__setattr__(self, "_map", dict(items))

    def value(self, n: int) -> int | None:
        return self._map.get(n, self.default)

    def zero_set(self) -> FiniteIntSet:
        return FiniteIntSet(n for n, v in self.overrides if v == 0)


def target_to_json(f: TargetFn) -> dict:
    def enc(v):
        return "inf" if v is None else v

    return {
        "format": 1,
        "default": enc(f.default),
        "overrides": {str(n): enc(v) for n, v in f.overrides},
    }


def target_from_json(obj: dict) -> TargetFn:
    def dec(v):
        return None if v == "inf" else int(v)

    overrides = {int(n): dec(v) for n, v in obj.get("overrides", {}).items()}
    return TargetFn(default=dec(obj["default"]), overrides=overrides)


def _spiral(limit: int) -> Iterator[int]:
    yield 0
    for t in range(1, limit + 1):
        yield -t
        yield t


def schedule_targets(f: TargetFn, k: int) -> tuple[int, ...]:
    """First k targets of the fair enumeration of f.

    Integers are swept in the order 0, -1, 1, -2, 2, ... with sweep s
    limited to |n| <= s; each sweep emits n at most once, until n has
    appeared value(n) times overall.  Unbounded values re-enter every
    sweep.  Deterministic in (f, k).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    zero_overrides = sum(1 for _, v in f.overrides if v == 0)
    out: list[int] = []
    emitted: Counter = Counter()
    sweep = 0
    while True:
        sweep += 1
        if sweep > k + zero_overrides + 2:
            raise InternalError("target schedule stalled")
        for n in _spiral(sweep):
            v = f.value(n)
            if v is None:
                out.append(n)
            elif emitted[n] < v:
                out.append(n)
                emitted[n] += 1
            if len(out) == k:
                return tuple(out)


# ---------------------------------------------------------------------------
# unique representation basis


@dataclass(frozen=True)
class UrbState:
    """State after reaching index k: the set plus the last step parameters."""

    k: int
    elements: FiniteIntSet
    d_k: int
    b_k: int | None
    c_k: int | None


def urb_initial() -> UrbState:
    return UrbState(k=1, elements=FiniteIntSet([0, 1]), d_k=1, b_k=None, c_k=None)


def _choose_spread(d: int, need: int, phi: SparsityFn | None,
                   doubling_budget: int = 4000) -> int:
    """Smallest c >= d with phi(c) >= need; phi must be monotone."""
    if phi is None:
        return d
    if phi(d) >= need:
        return d
    lo = d
    step = 1
    for _ in range(doubling_budget):
        hi = d + step
        if phi(hi) >= need:
            break
        step *= 2
    else:
        raise SparsityError(
            f"no admissible spread: phi stayed below {need} over the search budget"
        )
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if phi(mid) >= need:
            hi = mid
        else:
            lo = mid
    return hi


def _urb_step_impl(state: UrbState, sparsity: SparsityFn | None,
                   pair_counts: dict[int, int] | None):
    a = state.elements
    k = state.k
    if pair_counts is None:
        pair_counts = repfn.unordered_counts(a, 2)
    if any(v > 1 for v in pair_counts.values()):
        raise InternalError(f"step {k}: incoming state has a repeated pair sum")
    d = max(abs(x) for x in a.elements)
    b = positive = None
    for t in range(1, 2 * d + 2):
        if t not in pair_counts:
            b, positive = t, True
            break
        if -t not in pair_counts:
            b, positive = t, False
            break
    if b is None:
        raise InternalError(f"step {k}: no missing sum within [1, 2d+1]")
    c = _choose_spread(d, 2 * k + 2, sparsity)
    if positive:
        fresh = (b + 3 * c, -3 * c)
        singles = {b, 2 * b + 6 * c, -6 * c}
    else:
        fresh = (-(b + 3 * c), 3 * c)
        singles = {-b, -(2 * b + 6 * c), 6 * c}
    if fresh[0] in a or fresh[1] in a:
        raise InternalError(f"step {k}: new elements collide with the current set")
    new_elems = FiniteIntSet(a.elements + fresh)
    new_counts = repfn.unordered_counts(new_elems, 2)

    if len(new_elems) != 2 * (k + 1):
        raise InternalError(f"step {k}: cardinality is not 2(k+1)")
    if any(v > 1 for v in new_counts.values()):
        raise InternalError(f"step {k}: a sum acquired a second representation")
    parts = [
        set(pair_counts),
        {x + fresh[0] for x in a.elements},
        {x + fresh[1] for x in a.elements},
        singles,
    ]
    union = set().union(*parts)
    if sum(len(p) for p in parts) != len(union) or union != set(new_counts):
        raise InternalError(f"step {k}: four-part sumset decomposition failed")
    d_new = max(abs(x) for x in new_elems.elements)
    if d_new != b + 3 * c:
        raise InternalError(f"step {k}: new extreme is not b + 3c")
    if d_new in new_elems and -d_new in new_elems:
        raise InternalError(f"step {k}: both extremes present in the new set")
    return UrbState(k + 1, new_elems, d_new, b, c), new_counts


def urb_step(state: UrbState, sparsity: SparsityFn | None = None) -> UrbState:
    """Adjoin the next two elements, re-checking every proof-backed fact."""
    new_state, _ = _urb_step_impl(state, sparsity, None)
    return new_state


def sparsity_checkpoints(final: FiniteIntSet, c1: int, d_final: int,
                         phi: SparsityFn) -> list[tuple[int, int, int]]:
    """(x, count, bound) at every point where A(-x, x) can jump on [c1, d_final]."""
    xs = sorted({abs(e) for e in final.elements if c1 <= abs(e) <= d_final} | {c1})
    return [(x, final.count(-x, x), phi(x)) for x in xs]


def urb_trace(steps: int, sparsity: SparsityFn | None = None) -> list[UrbState]:
    """All states from index 1 through `steps` (steps - 1 growth steps)."""
    if steps < 1:
        raise ValueError("steps must be >= 1")
    states = [urb_initial()]
    counts: dict[int, int] | None = None
    while states[-1].k < steps:
        new_state, counts = _urb_step_impl(states[-1], sparsity, counts)
        states.append(new_state)
    if sparsity is not None and len(states) > 1:
        c1 = states[1].c_k
        for x, have, bound in sparsity_checkpoints(
            states[-1].elements, c1, states[-1].d_k, sparsity
        ):
            if have > bound:
                raise InternalError(
                    f"sparsity checkpoint failed: A(-{x},{x}) = {have} > {bound}"
                )
    return states


def urb_build(steps: int, sparsity: SparsityFn | None = None) -> UrbState:
    return urb_trace(steps, sparsity)[-1]


def urb_certified_prefix(state: UrbState) -> int:
    """Largest t with every |n| <= t having a pair representation."""
    counts = repfn.unordered_counts(state.elements, 2)
    t = 0
    while t + 1 in counts and -(t + 1) in counts:
        t += 1
    return t


def log2_plus_4(x: int) -> int:
    """ceil(log2 x) + 4 for x >= 1; the stock sparsity budget."""
    if x < 1:
        raise ValueError("x must be >= 1")
    return (x - 1).bit_length() + 4


# ---------------------------------------------------------------------------
# prescribed representation function


@dataclass(frozen=True)
class FundRepState:
    """State after consuming k targets: the set, schedule, last gadget bounds.

    A step adjoins a gadget only when the target's current count is below
    its consumed multiplicity; otherwise the set is left alone (`planted`
    False) and d_k, c_k carry the last planting parameters.
    """

    k: int
    elements: FiniteIntSet
    schedule: tuple[int, ...]
    d_k: int
    c_k: int
    planted: bool


def fundrep_initial() -> FundRepState:
    return FundRepState(k=0, elements=FiniteIntSet(), schedule=(), d_k=0, c_k=0,
                        planted=False)


class _MultisetDP:
    """Running multiset-sum counts for every size <= h, extended per element."""

    def __init__(self, h: int, elements=()):
        self.h = h
        self.levels: list[dict[int, int]] = [{0: 1}] + [{} for _ in range(h)]
        for e in elements:
            self.add(e)

    def add(self, e: int) -> None:
        h = self.h
        snap = [list(lvl.items()) for lvl in self.levels[:h]]
        for j in range(h):
            for s, cnt in snap[j]:
                acc = s
                for c in range(1, h - j + 1):
                    acc += e
                    lvl = self.levels[j + c]
                    lvl[acc] = lvl.get(acc, 0) + cnt

    def top(self) -> dict[int, int]:
        return self.levels[self.h]

    def max_abs_sum(self) -> int:
        m = 0
        for lvl in self.levels[1:]:
            for s in lvl:
                if abs(s) > m:
                    m = abs(s)
        return m


def _check_fundrep_invariants(k: int, f: TargetFn, h: int, u: int,
                              elements: FiniteIntSet,
                              prev_top: dict[int, int],
                              new_top: dict[int, int],
                              schedule: tuple[int, ...]) -> None:
    if not sidon.is_generalized_sidon(elements, h - 1):
        raise InternalError(f"step {k}: set is not generalized Sidon of order h-1")
    for n, cnt in new_top.items():
        bound = f.value(n)
        if bound is not None and cnt > bound:
            raise InternalError(f"step {k}: count {cnt} at {n} exceeds target {bound}")
    for n, times in Counter(schedule).items():
        if new_top.get(n, 0) < times:
            raise InternalError(f"step {k}: count at {n} below scheduled multiplicity")
    for z in f.zero_set():
        if new_top.get(z, 0):
            raise InternalError(f"step {k}: forbidden value {z} became a sum")
    if new_top.get(u, 0) != prev_top.get(u, 0) + 1:
        raise InternalError(f"step {k}: count at the target did not grow by one")
    for n, cnt in prev_top.items():
        if n != u and new_top.get(n, 0) != cnt:
            raise InternalError(f"step {k}: count at existing sum {n} changed")
    for n, cnt in new_top.items():
        if n != u and n not in prev_top and cnt != 1:
            raise InternalError(f"step {k}: fresh sum {n} has multiplicity {cnt}")


def _fundrep_step_impl(state: FundRepState, f: TargetFn, h: int, u: int,
                       dp: _MultisetDP):
    k = state.k + 1
    schedule = state.schedule + (u,)
    occurrences = sum(1 for x in schedule if x == u)
    prev_count = dp.top().get(u, 0)
    bound = f.value(u)
    if bound is not None and occurrences > bound:
        raise InternalError(f"step {k}: schedule over-emitted target {u}")
    if prev_count >= occurrences:
        # the target is already represented often enough (an earlier gadget
        # sum landed on it); adjoining would overshoot the prescribed count
        return FundRepState(k, state.elements, schedule, state.d_k, state.c_k,
                            planted=False), dp
    if prev_count != occurrences - 1:
        raise InternalError(f"step {k}: count at {u} fell behind its multiplicity")
    zeros = f.zero_set()
    zmax = max((abs(z) for z in zeros.elements), default=0)
    if len(state.elements) == 0:
        d = max(1, zmax)
        c = 2 * h * (d + abs(u)) + 1
    else:
        d = max(1, zmax, dp.max_abs_sum())
        c = 2 * h * (2 * d + abs(u)) + 1
    gad = sidon.gadget(GadgetParams(h=h, c=c, u=u))
    if any(g in state.elements for g in gad.elements):
        raise InternalError(f"step {k}: gadget collides with the current set")
    prev_top = dict(dp.top())
    for e in gad.elements:
        dp.add(e)
    new_elements = FiniteIntSet(state.elements.elements + gad.elements)
    if len(new_elements) != len(state.elements) + 2:
        raise InternalError(f"step {k}: gadget did not add two fresh elements")
    _check_fundrep_invariants(k, f, h, u, new_elements, prev_top, dp.top(), schedule)
    return FundRepState(k, new_elements, schedule, d, c, planted=True), dp


def fundrep_step(state: FundRepState, f: TargetFn, h: int) -> FundRepState:
    """Plant the next scheduled target; all step invariants re-checked."""
    if h < 2:
        raise ValueError("order h must be >= 2")
    u = schedule_targets(f, state.k + 1)[-1]
    dp = _MultisetDP(h, state.elements.elements)
    new_state, _ = _fundrep_step_impl(state, f, h, u, dp)
    return new_state


def _fundrep_final_verify(state: FundRepState, f: TargetFn, h: int) -> None:
    """Re-check the two defining conditions with the brute-force oracle."""
    counts = oracle.enum_unordered_counts(state.elements, h)
    for n, cnt in counts.items():
        bound = f.value(n)
        if bound is not None and cnt > bound:
            raise InternalError(f"final check: count {cnt} at {n} exceeds target")
    for n, times in Counter(state.schedule).items():
        if counts.get(n, 0) < times:
            raise InternalError(f"final check: count at {n} below multiplicity")
    for z in f.zero_set():
        if counts.get(z, 0):
            raise InternalError(f"final check: forbidden value {z} is a sum")


def fundrep_trace(f: TargetFn, h: int, steps: int) -> list[FundRepState]:
    """States from k = 0 through k = steps; the final one is oracle-verified."""
    if h < 2:
        raise ValueError("order h must be >= 2")
    if steps < 1:
        raise ValueError("steps must be >= 1")
    targets = schedule_targets(f, steps)
    dp = _MultisetDP(h)
    states = [fundrep_initial()]
    for u in targets:
        new_state, dp = _fundrep_step_impl(states[-1], f, h, u, dp)
        states.append(new_state)
    _fundrep_final_verify(states[-1], f, h)
    return states


def fundrep_build(f: TargetFn, h: int, steps: int) -> FundRepState:
    return fundrep_trace(f, h, steps)[-1]
