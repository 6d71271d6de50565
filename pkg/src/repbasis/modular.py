"""Unordered representation counts over Z/mZ and a bounded-basis search.

The search is explicitly best-effort: a returned set is verified exactly,
while exhaustion of the move budget proves nothing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass


@dataclass(frozen=True)
class ResidueSet:
    m: int
    members: frozenset[int]

    def __init__(self, m: int, members):
        if m < 1:
            raise ValueError("modulus m must be >= 1")
        mem = frozenset(int(x) for x in members)
        if not mem <= frozenset(range(m)):
            raise ValueError("members must lie in [0, m)")
        object.__setattr__(self, "m", int(m))
        object.__setattr__(self, "members", mem)


def residue_to_json(a: ResidueSet) -> dict:
    return {"m": a.m, "members": sorted(a.members)}


def residue_from_json(obj: dict) -> ResidueSet:
    return ResidueSet(obj["m"], obj["members"])


def rep_mod(a: ResidueSet, h: int) -> dict[int, int]:
    """Unordered counts of h-multisets of members summing to each residue."""
    if h < 1:
        raise ValueError("h must be >= 1")
    levels: list[dict[int, int]] = [{0: 1}] + [{} for _ in range(h)]
    for e in sorted(a.members):
        snap = [list(levels[j].items()) for j in range(h)]
        for j in range(h):
            for s, cnt in snap[j]:
                acc = s
                for c in range(1, h - j + 1):
                    acc = (acc + e) % a.m
                    lvl = levels[j + c]
                    lvl[acc] = lvl.get(acc, 0) + cnt
    top = levels[h]
    return {x: top.get(x, 0) for x in range(a.m)}


def is_basis_mod(a: ResidueSet, h: int) -> bool:
    """True iff every residue has at least one representation."""
    return all(v >= 1 for v in rep_mod(a, h).values())


def search_bounded_basis(m: int, h: int, bound: int, budget: int = 20_000,
                         seed: int = 0) -> ResidueSet | None:
    """Randomized greedy-with-local-moves hunt for a bounded-count basis.

    Returns a verified witness (basis of order h with every count <= bound)
    or None when the evaluation budget runs out; None is not a
    nonexistence proof.  Deterministic for a fixed seed.
    """
    if m < 1 or h < 1 or bound < 1:
        raise ValueError("m, h and bound must be positive")
    rng = random.Random(seed)
    evals = 0

    def assess(members: frozenset) -> int:
        nonlocal evals
        evals += 1
        counts = rep_mod(ResidueSet(m, members), h)
        uncovered = sum(1 for v in counts.values() if v == 0)
        excess = sum(v - bound for v in counts.values() if v > bound)
        return uncovered + excess

    while evals < budget:
        cur = frozenset(rng.sample(range(m), rng.randint(1, m)))
        score = assess(cur)
        stall = 0
        while evals < budget and stall <= 2 * m + 10:
            if score == 0:
                witness = ResidueSet(m, cur)
                counts = rep_mod(witness, h)
                if min(counts.values()) >= 1 and max(counts.values()) <= bound:
                    return witness
                break  # assess disagreed with the exact recheck: restart
            flipped = cur ^ {rng.randrange(m)}
            if not flipped:
                stall += 1
                continue
            flipped_score = assess(flipped)
            if flipped_score < score:
                cur, score, stall = flipped, flipped_score, 0
            elif flipped_score == score and rng.random() < 0.3:
                cur, score = flipped, flipped_score
                stall += 1
            else:
                stall += 1
    return None
