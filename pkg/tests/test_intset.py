import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from repbasis.intset import (
    DensityProfile,
    EventuallyPeriodicSet,
    FiniteIntSet,
    count,
    density_profile,
    dilate,
    format_set_text,
    integer_window,
    naturals,
    parse_set_text,
    periodic_from_json,
    periodic_to_json,
    shift,
)
from util import rand_periodic_set

finite_sets = st.builds(FiniteIntSet, st.lists(st.integers(-200, 200), max_size=15))


def test_count_naturals_window():
    assert count(naturals(), -100, 100) == 101


def test_count_finite():
    a = FiniteIntSet([-4, 0, 1, 3])
    assert count(a, 0, 3) == 3
    assert count(a, 5, 2) == 0  # y > x allowed


def test_count_periodic_with_head():
    a = EventuallyPeriodicSet(n0=1, m=2, residues={0}, head=[1])
    # members of [0, 10]: 1 from the head, then 2, 4, 6, 8, 10
    assert count(a, 0, 10) == 6


@given(finite_sets, st.integers(-250, 250), st.integers(-250, 250))
def test_count_matches_enumeration(a, y, x):
    assert a.count(y, x) == sum(1 for e in a.elements if y <= e <= x)


def test_periodic_count_matches_enumeration_bulk():
    rng = random.Random(20240811)
    for _ in range(1000):
        a = rand_periodic_set(rng)
        y = rng.randint(-10_000, 10_000)
        x = y + rng.randint(-5, 2000)
        naive = sum(1 for n in range(y, x + 1) if n in a)
        assert a.count(y, x) == naive


def test_density_profile_naturals():
    prof = density_profile(naturals(), [100])
    assert prof.samples == ((100, Fraction(101, 201)),)


def test_density_profile_empty():
    prof = density_profile(FiniteIntSet(), [5, 10])
    assert all(r == 0 for _, r in prof.samples)


def test_density_profile_evens():
    evens = EventuallyPeriodicSet(n0=-1, m=2, residues={0})
    prof = density_profile(evens, [10])
    assert prof.samples[0][1] == Fraction(6, 21)


def test_density_profile_validation():
    with pytest.raises(ValueError):
        density_profile(naturals(), [])
    with pytest.raises(ValueError):
        DensityProfile(((5, Fraction(1, 2)), (5, Fraction(1, 3))))


def test_density_tail_bound():
    # the tail contributes floor-counts per residue class, so the window
    # ratio stays within (|head| + m) / (2x + 1) of |T| (x - n0) / (m (2x+1))
    rng = random.Random(7)
    for _ in range(300):
        a = rand_periodic_set(rng)
        x = rng.randint(max(1, a.n0 + 1), 5000)
        ratio = density_profile(a, [x]).samples[0][1]
        expected = Fraction(len(a.residues) * (x - a.n0), a.m * (2 * x + 1))
        bound = Fraction(len(a.head) + a.m, 2 * x + 1)
        assert abs(ratio - expected) <= bound


def test_shift():
    assert shift(FiniteIntSet([0, 1]), 5).elements == (5, 6)
    assert shift(FiniteIntSet(), 3).elements == ()
    assert shift(FiniteIntSet([-4, 0, 1, 3]), 4).elements == (0, 4, 5, 7)


def test_dilate():
    assert dilate(FiniteIntSet([0, 1, 2]), 3).elements == (0, 3, 6)
    a = FiniteIntSet([-7, 2, 9])
    assert dilate(a, 1) == a
    assert dilate(FiniteIntSet([-1, 1]), 2).elements == (-2, 2)
    with pytest.raises(ValueError):
        dilate(a, 0)


def test_integer_window():
    assert integer_window(-2, 2).elements == (-2, -1, 0, 1, 2)


def test_periodic_validation():
    with pytest.raises(ValueError):
        EventuallyPeriodicSet(n0=0, m=0, residues=set())
    with pytest.raises(ValueError):
        EventuallyPeriodicSet(n0=0, m=2, residues={2})
    with pytest.raises(ValueError):
        EventuallyPeriodicSet(n0=0, m=2, residues={0}, head=[5])


def test_min_element():
    assert EventuallyPeriodicSet(3, 4, {2}, head=[-6, 1]).min_element() == -6
    assert EventuallyPeriodicSet(3, 4, {2}).min_element() == 6
    assert EventuallyPeriodicSet(3, 4, set()).min_element() is None


def test_set_text_round_trip():
    a = FiniteIntSet([-9, 0, 4])
    text = format_set_text(a)
    assert parse_set_text(text) == a
    assert parse_set_text("# c\n1\n 2 # inline\n\n-3\n") == FiniteIntSet([1, 2, -3])


@settings(max_examples=60, derandomize=True)
@given(st.integers(-20, 20), st.integers(1, 9))
def test_periodic_json_round_trip(n0, m):
    rng = random.Random(n0 * 100 + m)
    a = EventuallyPeriodicSet(
        n0=n0, m=m,
        residues=rng.sample(range(m), rng.randint(0, m)),
        head=rng.sample(range(n0 - 10, n0 + 1), rng.randint(0, 5)),
    )
    assert periodic_from_json(periodic_to_json(a)) == a
