"""Seeded random instance generators shared across the test modules."""

from __future__ import annotations

import random
from collections import Counter

from repbasis.coincide import CoincidencePair, check_congruence
from repbasis.intset import EventuallyPeriodicSet, FiniteIntSet
from repbasis.sidon import GadgetParams


def rand_finite_set(rng: random.Random, lo: int = -30, hi: int = 30,
                    max_size: int = 12) -> FiniteIntSet:
    size = rng.randint(0, max_size)
    return FiniteIntSet(rng.sample(range(lo, hi + 1), size))


def rand_periodic_set(rng: random.Random, n0_max: int = 30,
                      m_max: int = 9) -> EventuallyPeriodicSet:
    m = rng.randint(1, m_max)
    n0 = rng.randint(-5, n0_max)
    residues = rng.sample(range(m), rng.randint(0, m))
    head_lo = n0 - 40
    head = rng.sample(range(head_lo, n0 + 1), rng.randint(0, 8))
    return EventuallyPeriodicSet(n0=n0, m=m, residues=residues, head=head)


def rand_gadget_params(rng: random.Random, h_max: int = 5,
                       u_max: int = 50) -> GadgetParams:
    h = rng.randint(2, h_max)
    u = rng.randint(-u_max, u_max)
    c = rng.randint(2 * h * abs(u) + 1, 2 * h * abs(u) + 200)
    return GadgetParams(h=h, c=c, u=u)


def _same_residue_head(rng: random.Random, astar: list[int], m: int,
                       n0: int) -> list[int]:
    """A head with the same residue multiset mod m as astar, inside [0, n0]."""
    by_class: dict[int, list[int]] = {}
    for x in range(n0 + 1):
        by_class.setdefault(x % m, []).append(x)
    need = Counter(a % m for a in astar)
    out: list[int] = []
    for r, cnt in need.items():
        out.extend(rng.sample(by_class[r], cnt))
    return sorted(out)


def rand_coincidence_pair(rng: random.Random, m_max: int = 12,
                          n0_max: int = 20) -> CoincidencePair:
    """A valid pair via constructive families plus rejection for small m."""
    while True:
        m = rng.randint(1, m_max)
        n0 = rng.randint(0, n0_max)
        style = rng.randrange(3)
        if style == 0:
            # equal residue multisets: any T then works
            astar = rng.sample(range(n0 + 1), rng.randint(0, min(6, n0 + 1)))
            bstar = _same_residue_head(rng, astar, m, n0)
            residues = rng.sample(range(m), rng.randint(0, m))
        elif style == 1:
            # full residue system: only head cardinalities matter
            size = rng.randint(0, min(6, n0 + 1))
            astar = rng.sample(range(n0 + 1), size)
            bstar = rng.sample(range(n0 + 1), size)
            residues = range(m)
        else:
            m = rng.randint(1, 2)
            astar = rng.sample(range(n0 + 1), rng.randint(0, min(5, n0 + 1)))
            bstar = rng.sample(range(n0 + 1), len(astar))
            residues = rng.sample(range(m), rng.randint(0, m))
        pair = CoincidencePair(n0=n0, m=m, residues=residues,
                               astar=astar, bstar=bstar)
        if check_congruence(pair):
            return pair


def rand_sandor_head(rng: random.Random, n_param: int) -> list[int]:
    bits = [0] * (2 * n_param)
    for i in rng.sample(range(2 * n_param), n_param):
        bits[i] = 1
    return bits
