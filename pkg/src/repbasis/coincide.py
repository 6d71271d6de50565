"""Pairs and partitions whose order-2 counts eventually coincide.

Pairs are described by shared periodic tails over distinct finite heads;
the head condition is an exact multiset congruence.  Partition instances
are driven by the doubling rules chi(2a) = 1 - chi(a), chi(2a+1) = chi(a)
past the head.  All window counting materializes membership on a bounded
range and convolves exactly (int64; counts are bounded by the window
length, so overflow is impossible at the enforced size limit).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .errors import CongruenceError, HeadCountError
from .intset import EventuallyPeriodicSet, FiniteIntSet

_MAX_MATERIALIZE = 50_000


@dataclass(frozen=True)
class CoincidencePair:
    """Shared tail parameters (n0, m, T) over two heads inside [0, n0]."""

    n0: int
    m: int
    residues: frozenset[int]
    astar: FiniteIntSet
    bstar: FiniteIntSet

    def __init__(self, n0: int, m: int, residues, astar, bstar):
        if n0 < 0:
            raise ValueError("n0 must be nonnegative")
        if m < 1:
            raise ValueError("modulus m must be positive")
        res = frozenset(int(t) for t in residues)
        if not res <= frozenset(range(m)):
            raise ValueError("residues must lie in [0, m)")
        astar = astar if isinstance(astar, FiniteIntSet) else FiniteIntSet(astar)
        bstar = bstar if isinstance(bstar, FiniteIntSet) else FiniteIntSet(bstar)
        for head in (astar, bstar):
            if len(head) and (head.min() < 0 or head.max() > n0):
                raise ValueError("head sets must lie inside [0, n0]")
        object.__setattr__(self, "n0", int(n0))
        object.__setattr__(self, "m", int(m))
        object.__setattr__(self, "residues", res)
        object.__setattr__(self, "astar", astar)
        object.__setattr__(self, "bstar", bstar)


def check_congruence(p: CoincidencePair) -> bool:
    """Multiset equality of (A* + T) mod m and (B* + T) mod m."""
    left = Counter((a + t) % p.m for a in p.astar for t in p.residues)
    right = Counter((b + t) % p.m for b in p.bstar for t in p.residues)
    return left == right


def synthesize_pair(p: CoincidencePair) -> tuple[EventuallyPeriodicSet, EventuallyPeriodicSet]:
    """Attach the common periodic tail to both heads.

    Requires :func:`check_congruence`; the resulting sets have equal
    ordered pair counts at every n > 2*n0 (checkable via
    :func:`verify_pair`).
    """
    if not check_congruence(p):
        raise CongruenceError("head sets fail the shifted congruence condition")
    a = EventuallyPeriodicSet(n0=p.n0, m=p.m, residues=p.residues, head=p.astar)
    b = EventuallyPeriodicSet(n0=p.n0, m=p.m, residues=p.residues, head=p.bstar)
    return a, b


def pair_to_json(p: CoincidencePair) -> dict:
    return {
        "format": 1,
        "n0": p.n0,
        "m": p.m,
        "T": sorted(p.residues),
        "Astar": list(p.astar.elements),
        "Bstar": list(p.bstar.elements),
    }


def pair_from_json(obj: dict) -> CoincidencePair:
    return CoincidencePair(
        n0=obj["n0"], m=obj["m"], residues=obj["T"],
        astar=obj["Astar"], bstar=obj["Bstar"],
    )


def _bits_for(members, lo: int, hi: int) -> np.ndarray:
    length = hi - lo + 1
    if length > _MAX_MATERIALIZE:
        raise ValueError(f"materialization window of {length} exceeds the size limit")
    bits = np.zeros(max(length, 0), dtype=np.int64)
    for n in range(lo, hi + 1):
        if n in members:
            bits[n - lo] = 1
    return bits


def ordered_pair_window(a: EventuallyPeriodicSet | FiniteIntSet,
                        lo: int, hi: int) -> tuple[int, ...]:
    """Ordered pair counts R(n) for n in [lo, hi], by exact convolution."""
    if lo > hi:
        raise ValueError("window bounds out of order")
    if isinstance(a, EventuallyPeriodicSet):
        amin = a.min_element()
    else:
        amin = a.min() if len(a) else None
    out = np.zeros(hi - lo + 1, dtype=np.int64)
    if amin is not None and hi - amin >= amin:
        bits = _bits_for(a, amin, hi - amin)
        conv = np.convolve(bits, bits)  # conv[i] = R(2*amin + i)
        for n in range(max(lo, 2 * amin), hi + 1):
            i = n - 2 * amin
            if i < len(conv):
                out[n - lo] = conv[i]
    return tuple(int(v) for v in out)


def verify_pair(a: EventuallyPeriodicSet, b: EventuallyPeriodicSet,
                horizon: int, start: int | None = None) -> int | None:
    """First n in [start, horizon] where ordered pair counts differ, or None.

    By default the comparison starts just past twice the larger head
    threshold, the range where the tail construction takes over.
    """
    if start is None:
        start = 2 * max(a.n0, b.n0) + 1
    if horizon < start:
        raise ValueError("horizon must reach the comparison start")
    ra = ordered_pair_window(a, start, horizon)
    rb = ordered_pair_window(b, start, horizon)
    for n, (x, y) in enumerate(zip(ra, rb), start=start):
        if x != y:
            return n
    return None


# ---------------------------------------------------------------------------
# complement partitions with coinciding unordered counts


def _parse_bits(head_bits) -> list[int]:
    if isinstance(head_bits, str):
        bits = [int(ch) for ch in head_bits]
    else:
        bits = [int(b) for b in head_bits]
    if any(b not in (0, 1) for b in bits):
        raise ValueError("head bits must be 0 or 1")
    return bits


def sandor_generate(n_param: int, head_bits, horizon: int
                    ) -> tuple[FiniteIntSet, FiniteIntSet]:
    """Extend a head on [0, 2N-1] by the doubling rules up to the horizon.

    chi(2a) = 1 - chi(a) and chi(2a+1) = chi(a) for a >= N; every index in
    (2N-1, horizon] bottoms out in the head by induction.  The head must
    contain exactly N members.  Returns (A, complement of A) on [0, horizon].
    """
    if n_param < 1:
        raise ValueError("N must be >= 1")
    bits = _parse_bits(head_bits)
    if len(bits) != 2 * n_param:
        raise ValueError("head must give membership on [0, 2N-1]")
    if sum(bits) != n_param:
        raise HeadCountError(
            f"head contains {sum(bits)} members, needs exactly {n_param}"
        )
    if horizon < 2 * n_param - 1:
        raise ValueError("horizon must reach 2N-1")
    if horizon + 1 > _MAX_MATERIALIZE:
        raise ValueError("horizon exceeds the materialization limit")
    chi = list(bits)
    for n in range(2 * n_param, horizon + 1):
        parent = chi[n // 2]
        chi.append(parent if n % 2 else 1 - parent)
    a = FiniteIntSet(n for n, bit in enumerate(chi) if bit)
    b = FiniteIntSet(n for n, bit in enumerate(chi) if not bit)
    return a, b


def _unordered_window_finite(s: FiniteIntSet, lo: int, hi: int) -> np.ndarray:
    """r(n) = unordered pair counts of a finite set on [lo, hi]."""
    out = np.zeros(hi - lo + 1, dtype=np.int64)
    if not len(s):
        return out
    amin = s.min()
    if hi - amin < amin:
        return out
    bits = _bits_for(s, amin, hi - amin)
    conv = np.convolve(bits, bits)
    for n in range(max(lo, 2 * amin), hi + 1):
        i = n - 2 * amin
        ordered_n = int(conv[i]) if i < len(conv) else 0
        diag = 1 if n % 2 == 0 and (n // 2) in s else 0
        out[n - lo] = (ordered_n + diag) // 2
    return out


def first_rep_disagreement(a: FiniteIntSet, b: FiniteIntSet,
                           start: int, horizon: int) -> int | None:
    """First n in [start, horizon] with differing unordered pair counts."""
    if horizon < start:
        raise ValueError("horizon must reach the comparison start")
    ra = _unordered_window_finite(a, start, horizon)
    rb = _unordered_window_finite(b, start, horizon)
    diff = np.nonzero(ra != rb)[0]
    return int(diff[0]) + start if len(diff) else None


def sandor_verify(n_param: int, head_bits, horizon: int) -> int | None:
    """First n >= 2N-1 where the partition halves disagree, or None."""
    a, b = sandor_generate(n_param, head_bits, horizon)
    return first_rep_disagreement(a, b, 2 * n_param - 1, horizon)
