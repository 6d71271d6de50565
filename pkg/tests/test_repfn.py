import random
from itertools import product
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from repbasis import oracle, repfn
from repbasis.errors import NoRootError, TruncationError
from repbasis.intset import EventuallyPeriodicSet, FiniteIntSet, integer_window, naturals
from repbasis.repfn import RepTable
from util import rand_finite_set

small_sets = st.builds(FiniteIntSet, st.lists(st.integers(-25, 25), max_size=9))


def test_sumset_examples():
    assert repfn.sumset(3, FiniteIntSet([0, 5])).elements == (0, 5, 10, 15)
    assert repfn.sumset(0, FiniteIntSet([7, 9])).elements == (0,)
    assert repfn.sumset(2, FiniteIntSet([-4, 0, 1, 3])).elements == (
        -8, -4, -3, -1, 0, 1, 2, 3, 4, 6,
    )


def test_two_element_sumset_is_progression():
    # h{a,b} is an arithmetic progression of length h+1 with difference b-a
    a, b, h = -3, 4, 5
    s = repfn.sumset(h, FiniteIntSet([a, b]))
    assert s.elements == tuple(h * a + i * (b - a) for i in range(h + 1))


def test_ordered_on_naturals_window():
    a = integer_window(0, 10)
    tab = repfn.ordered(a, 2, (0, 10))
    for n in range(0, 11):
        assert tab[n] == n + 1
    assert tab[5] == 6


def test_ordered_singleton():
    tab = repfn.ordered(FiniteIntSet([0]), 3, (0, 1))
    assert tab[0] == 1 and tab[1] == 0


def test_ordered_triples():
    # all 8 ordered triples over {0,1}: three of them sum to 1
    brute = {}
    for tup in product((0, 1), repeat=3):
        brute[sum(tup)] = brute.get(sum(tup), 0) + 1
    assert brute[1] == 3
    assert repfn.ordered(FiniteIntSet([0, 1]), 3, (1, 1))[1] == 3


def test_unordered_on_naturals_window():
    a = integer_window(0, 10)
    tab = repfn.unordered(a, 2, (0, 10))
    for n in range(0, 11):
        assert tab[n] == (n + 2) // 2
    assert tab[5] == 3


def test_restricted_example():
    assert repfn.restricted(FiniteIntSet([0, 1, 2]), 2, (2, 2))[2] == 1
    assert repfn.restricted(FiniteIntSet(), 3, (-5, 5)).counts == (0,) * 11


def test_counts_match_oracle_bulk():
    rng = random.Random(4242)
    for _ in range(1000):
        a = rand_finite_set(rng, max_size=9)
        h = rng.randint(1, 4)
        assert repfn.ordered_counts(a, h) == oracle.enum_ordered_counts(a, h)
        assert repfn.unordered_counts(a, h) == oracle.enum_unordered_counts(a, h)
        assert repfn.restricted_counts(a, h) == oracle.enum_restricted_counts(a, h)


def test_footnote_factorial_law():
    rng = random.Random(515)
    for _ in range(250):
        a = rand_finite_set(rng, lo=-40, hi=40, max_size=9)
        h = rng.randint(1, 5)
        restr = repfn.restricted_counts(a, h)
        ordered_restr = oracle.enum_ordered_restricted_counts(a, h)
        assert ordered_restr == {
            n: factorial(h) * c for n, c in restr.items() if c
        }


@settings(max_examples=80, derandomize=True)
@given(small_sets, st.integers(1, 3))
def test_positive_iff_in_sumset(a, h):
    counts = repfn.ordered_counts(a, h)
    support = {n for n, c in counts.items() if c >= 1}
    assert support == set(repfn.sumset(h, a).elements)


@settings(max_examples=80, derandomize=True)
@given(small_sets, st.integers(1, 3))
def test_conservation(a, h):
    assert sum(repfn.ordered_counts(a, h).values()) == len(a) ** h


@settings(max_examples=100, derandomize=True)
@given(small_sets, st.integers(-60, 60))
def test_parity_law(a, n):
    c = repfn.ordered_counts(a, 2).get(n, 0)
    assert (c % 2 == 1) == (n % 2 == 0 and n // 2 in a)


@settings(max_examples=60, derandomize=True)
@given(small_sets, st.integers(1, 4))
def test_monotone_chain_with_zero(a, h):
    withzero = FiniteIntSet(a.elements + (0,))
    lower = set(repfn.sumset(h, withzero).elements)
    upper = set(repfn.sumset(h + 1, withzero).elements)
    assert lower <= upper


def test_gf_check_examples():
    assert repfn.gf_check(FiniteIntSet([0, 1, 2]), 2, (-2, 8)).all_ok()
    assert repfn.gf_check(FiniteIntSet(), 2, (0, 3)).all_ok()
    assert repfn.gf_check(FiniteIntSet([-4, 0, 1, 3]), 2, (-10, 10)).all_ok()


def test_gf_check_bulk():
    rng = random.Random(77)
    for _ in range(150):
        a = rand_finite_set(rng, max_size=8)
        h = rng.randint(1, 4)
        lo = rng.randint(-120, 0)
        assert repfn.gf_check(a, h, (lo, lo + rng.randint(1, 150))).all_ok()


def test_reconstruct_examples():
    table = RepTable(-1, 3, (0, 1, 2, 1, 0))
    assert repfn.reconstruct_ordered(table, 2) == FiniteIntSet([0, 1])
    # window equal to the support hull also works
    assert repfn.reconstruct_ordered(RepTable(0, 2, (1, 2, 1)), 2) == FiniteIntSet([0, 1])
    assert repfn.reconstruct_ordered(RepTable(0, 4, (0,) * 5), 3) == FiniteIntSet()
    with pytest.raises(NoRootError):
        repfn.reconstruct_ordered(RepTable(0, 1, (1, 1)), 2)


def test_reconstruct_truncation():
    a = FiniteIntSet([0, 1, 3])
    full = repfn.ordered(a, 2, (0, 6))
    assert repfn.reconstruct_ordered(full, 2) == a
    cut = RepTable(0, 4, full.counts[:5])
    with pytest.raises(TruncationError):
        repfn.reconstruct_ordered(cut, 2)


def test_reconstruct_result_always_consistent():
    # on arbitrary right-truncations, a returned set must reproduce the
    # table exactly on its window; otherwise the call must raise
    from repbasis import polyring

    rng = random.Random(2024)
    for _ in range(200):
        a = FiniteIntSet(rng.sample(range(-8, 9), rng.randint(1, 6)))
        h = rng.randint(2, 3)
        full = repfn.ordered(a, h, (h * a.min(), h * a.max()))
        cut_hi = rng.randint(full.lo, full.hi)
        table = RepTable(full.lo, cut_hi, full.counts[: cut_hi - full.lo + 1])
        try:
            got = repfn.reconstruct_ordered(table, h)
        except (NoRootError, TruncationError):
            continue
        power = polyring.from_set(got) ** h if len(got) else None
        for n, c in table.items():
            assert (power.coeff(n) if power else 0) == c


def test_reconstruct_round_trip_bulk():
    rng = random.Random(31337)
    for _ in range(120):
        a = FiniteIntSet(rng.sample(range(-12, 13), rng.randint(1, 7)))
        h = rng.randint(2, 3)
        window = (h * a.min() - 2, h * a.max() + 2)
        assert repfn.reconstruct_ordered(repfn.ordered(a, h, window), h) == a


def test_dirac_naturals_fires():
    rep = repfn.dirac_diagnostic(naturals(), (0, 100))
    assert rep.fires and not rep.finite_input
    assert rep.counts[100] == 51


def test_dirac_finite_exempt():
    rep = repfn.dirac_diagnostic(FiniteIntSet([0, 1]), (10, 20))
    assert rep.finite_input
    assert rep.tail_constant and rep.tail_value == 0
    assert not rep.fires


def test_dirac_evens_fires():
    evens = EventuallyPeriodicSet(n0=-1, m=2, residues={0})
    assert repfn.dirac_diagnostic(evens, (0, 80)).fires


def test_dirac_window_validation():
    with pytest.raises(ValueError):
        repfn.dirac_diagnostic(naturals(), (0, 1))


def test_concurrent_use_on_shared_inputs():
    # values are immutable and operations pure, so parallel callers must
    # agree with the serial results
    from concurrent.futures import ThreadPoolExecutor

    a = FiniteIntSet(range(-15, 16, 2))
    window = (-40, 40)
    expected = [repfn.ordered(a, h, window) for h in (1, 2, 3)] * 8
    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(lambda h: repfn.ordered(a, h, window),
                                [1, 2, 3] * 8))
    assert results == expected


def test_reptable_json_round_trip():
    t = RepTable(-3, 2, (1, 0, 4, 0, 0, 7))
    assert RepTable.from_json(t.to_json()) == t
    with pytest.raises(ValueError):
        RepTable(0, 1, (1,))
    with pytest.raises(ValueError):
        RepTable(0, 1, (1, -1))
    with pytest.raises(KeyError):
        t[3]
