from itertools import permutations

import pytest
from hypothesis import given

from ballotperm.perms import (
    ballot_profile, count_class, cpeak_set, cycle_decompose, cycles_to_permutation, cyclic_neighbors_of,
    des, asc, descent_set, enumerate_class, exc, exc_tilde, format_cycles, in_class, inverse, is_ballot,
    is_dyck, is_hb_ballot, is_odd_order, neighbors_of, parse_cycles, parse_permutation, peak_set, peaks,
    statistics,
)
from ballotperm.patterns import contains
from conftest import ballot_perms, odd_order_perms, perms

SAMPLE = (8, 3, 9, 1, 6, 4, 7, 5, 2)


def pair(a, b):
    return frozenset((a, b))


def test_parse_and_format():
    assert parse_permutation("8 3 9 1 6 4 7 5 2") == SAMPLE
    assert parse_permutation("2,1") == (2, 1)
    assert parse_cycles("(1 8 5 6 4)(2 3 9)(7)") == ((1, 8, 5, 6, 4), (2, 3, 9), (7,))
    assert parse_cycles("(6,4,1,8,5)(7)(9 2 3)") == ((1, 8, 5, 6, 4), (2, 3, 9), (7,))
    assert format_cycles(cycle_decompose(SAMPLE)) == "(1 8 5 6 4)(2 3 9)(7)"


@pytest.mark.parametrize("bad", ["1 1", "0 1", "1 3", "1 x"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_permutation(bad)


def test_cycles_reject_overlap_and_gaps():
    with pytest.raises(ValueError):
        cycles_to_permutation([(1, 2), (2, 3)])
    with pytest.raises(ValueError):
        cycles_to_permutation([(1, 3)])
    with pytest.raises(ValueError):
        parse_cycles("(1 2) junk")


def test_sample_statistics():
    assert cycle_decompose(SAMPLE) == ((1, 8, 5, 6, 4), (2, 3, 9), (7,))
    assert statistics(SAMPLE).exc_tilde == 3
    assert (asc(SAMPLE), des(SAMPLE)) == (3, 5)
    assert descent_set(SAMPLE) == {1, 3, 5, 7, 8}


def test_sample_peaks():
    assert peak_set(SAMPLE) == {(9, pair(1, 3)), (6, pair(1, 4)), (7, pair(4, 5))}
    assert cpeak_set(SAMPLE) == {(8, pair(1, 5)), (6, pair(4, 5)), (9, pair(2, 3))}
    assert peaks(SAMPLE).cpeak_set == cpeak_set(SAMPLE)


def test_neighbours():
    assert neighbors_of(SAMPLE, 9) == pair(3, 1)
    assert neighbors_of(SAMPLE, 8) is None
    assert cyclic_neighbors_of(SAMPLE, 9) == pair(3, 2)
    assert cyclic_neighbors_of(SAMPLE, 7) is None


def test_hb_ballot_example():
    w = (2, 8, 5, 4, 11, 1, 6, 10, 3, 7, 9)
    assert is_hb_ballot(w, 2, 4)
    assert ballot_profile(w, 2).heights == (2, 3, 2, 1, 2, 1, 2, 3, 2, 3, 4)
    assert is_hb_ballot(w, 1, 3)
    assert not is_hb_ballot(w, 0, 2)        # dips below zero


def test_small_class_lists():
    assert list(enumerate_class("ballot", 3)) == [(1, 2, 3), (1, 3, 2), (2, 3, 1)]
    assert list(enumerate_class("ballot", 4)) == [
        (1, 2, 3, 4), (1, 2, 4, 3), (1, 3, 2, 4), (1, 3, 4, 2), (1, 4, 2, 3),
        (2, 3, 1, 4), (2, 3, 4, 1), (2, 4, 1, 3), (3, 4, 1, 2)]
    assert [format_cycles(cycle_decompose(q)) for q in enumerate_class("odd_order", 3)] == [
        "(1)(2)(3)", "(1 2 3)", "(1 3 2)"]
    assert len(list(enumerate_class("odd_order", 4))) == 9


@pytest.mark.parametrize("cls", ["all", "ballot", "odd_order", "dyck"])
def test_enumeration_matches_filter(cls):
    for n in range(7):
        brute = [p for p in permutations(range(1, n + 1)) if in_class(p, cls)]
        assert list(enumerate_class(cls, n)) == brute


def test_hb_enumeration_matches_filter():
    for n in range(1, 7):
        for h in range(3):
            for b in range(4):
                brute = [p for p in permutations(range(1, n + 1)) if is_hb_ballot(p, h, b)]
                assert list(enumerate_class("hb_ballot", n, h=h, b=b)) == brute


def test_pattern_pruned_enumeration():
    for n in range(7):
        for p in [(1, 2, 3), (2, 1, 3), (2, 1), (1, 3, 2, 4)]:
            expected = [w for w in enumerate_class("ballot", n) if not contains(w, p)]
            assert list(enumerate_class("ballot", n, pattern=p)) == expected


def test_prefix_split_partitions_enumeration():
    whole = list(enumerate_class("odd_order", 6))
    parts = [w for first in range(1, 7) for w in enumerate_class("odd_order", 6, prefix=(first,))]
    assert parts == whole


def test_counts_small():
    assert [count_class("ballot", n) for n in range(10)] == [1, 1, 1, 3, 9, 45, 225, 1575, 11025, 99225]
    assert [count_class("odd_order", n) for n in range(9)] == [1, 1, 1, 3, 9, 45, 225, 1575, 11025]


def test_unknown_class():
    with pytest.raises(ValueError):
        count_class("even", 3)


@given(perms())
def test_cycle_round_trip(p):
    cs = cycle_decompose(p)
    assert cycles_to_permutation(cs, len(p)) == p
    assert sum(map(len, cs)) == len(p)
    assert all(c[0] == min(c) for c in cs)


@given(perms())
def test_inverse_involution(p):
    assert inverse(inverse(p)) == p


@given(perms(min_n=1))
def test_asc_des_sum(p):
    assert asc(p) + des(p) == len(p) - 1
    assert len(descent_set(p)) == des(p)


@given(perms())
def test_exc_tilde_bounds(p):
    # each cycle contributes at most half its length
    assert 0 <= exc_tilde(p) <= len(p) // 2
    assert exc(p) <= len(p)


@given(ballot_perms())
def test_ballot_predicates_agree(p):
    assert is_ballot(p) and ballot_profile(p).is_ballot
    assert des(p) <= asc(p)
    assert is_dyck(p) == (len(p) % 2 == 1 and asc(p) == des(p))


@given(odd_order_perms())
def test_odd_order_generator(q):
    assert is_odd_order(q)
    assert all(len(c) % 2 for c in cycle_decompose(q))


@given(perms())
def test_peak_values_are_at_least_three(p):
    assert all(v >= 3 for v, _ in peak_set(p))
    assert all(v >= 3 for v, _ in cpeak_set(p))


def test_transposition_has_no_cyclic_peak():
    assert cpeak_set((2, 1)) == frozenset()
