from collections import Counter

import pytest
from hypothesis import given

from ballotperm.boxperm import BOX, box_neighbor_multiset, format_box_word, parse_box_cycles
from ballotperm.dyck import (
    Factor, Psi, Psi_inv, Psi_inv_word, Psi_word, cycle_factor_spans, cycle_factor_spans_scan,
    extract_cyclic, extract_linear, insert_properly, linear_factor_spans, linear_factor_spans_scan,
)
from ballotperm.perms import (
    asc, cpeak_set, cycle_decompose, cycles_to_permutation, des, enumerate_class, exc_tilde, is_odd_order,
    parse_cycles, parse_permutation, peak_set,
)
from conftest import ballot_perms, odd_order_perms

LONG = parse_permutation("4 6 10 13 12 1 3 2 7 16 20 9 11 14 15 5 18 19 8 17")
LONG_IMAGE = parse_cycles("(6 2 3 1 12 13 10)(4)(16 5 15 14 11 9 20)(7)(8 18 19)(17)")


def unoriented(words):
    return Counter(min(w, w[::-1]) for w in words)


def test_extract_linear_example():
    dec = extract_linear(LONG)
    assert [f.word for f in dec.factors] == [
        (6, 10, 13, 12, 1, 3, 2), (16, 20, 9), (14, 15, 5), (18, 19, 8)]
    assert format_box_word(dec.skeleton) == "4 6 # 2 7 16 # 9 11 14 # 5 18 # 8 17"


def test_extract_linear_small_cases():
    dec = extract_linear((1, 3, 2, 4))
    assert [f.word for f in dec.factors] == [(1, 3, 2)]
    assert format_box_word(dec.skeleton) == "1 # 2 4"
    ident = tuple(range(1, 8))
    assert extract_linear(ident).factors == ()
    assert extract_linear(ident).skeleton == ident
    with pytest.raises(ValueError):
        extract_linear((2, 1, 3))


def test_extract_cyclic_example():
    dec = extract_cyclic(LONG_IMAGE)
    assert dec.skeleton == parse_box_cycles("(6 2 #)(4)(16 5 # 14 11 9 #)(7)(8 18 #)(17)")
    assert unoriented(f.word for f in dec.factors) == unoriented(f.word for f in extract_linear(LONG).factors)
    assert extract_cyclic(((1,), (2,), (3,))).factors == ()
    with pytest.raises(ValueError):
        extract_cyclic(((1, 2),))


def test_insert_properly_example():
    dec = extract_cyclic(LONG_IMAGE)
    assert insert_properly(dec.skeleton, dec.factors) == LONG_IMAGE
    assert insert_properly((1, 2, 3), []) == (1, 2, 3)


def test_insert_properly_orientation():
    f = Factor(((1,), (3,), (2,)))
    assert insert_properly(((1, BOX, 2),), [f]) == ((1, 3, 2),)
    # the box sees its boundary letters in the other order: insert reversed
    assert insert_properly(((2, BOX, 1),), [f]) == ((1, 2, 3),)


def test_insert_properly_unmatched():
    with pytest.raises(ValueError):
        insert_properly((1, BOX, 4), [Factor(((1,), (3,), (2,)))])


def test_factor_reversal():
    f = Factor(((1, 5), (3,), (2, 4)))
    assert f.reversed().clusters == ((4, 2), (3,), (5, 1))
    assert f.reversed().reversed() == f
    assert (f.first, f.last, f.word) == (1, 4, (1, 5, 3, 2, 4))


def test_psi_examples():
    assert Psi(LONG) == LONG_IMAGE
    assert Psi_inv(LONG_IMAGE) == LONG
    assert Psi(tuple(range(1, 6))) == tuple((i,) for i in range(1, 6))
    assert Psi((1, 3, 2)) == ((1, 3, 2),)
    q = Psi_word((1, 3, 2))
    assert des((1, 3, 2)) == exc_tilde(q) == 1
    assert peak_set((1, 3, 2)) == cpeak_set(q) == {(3, frozenset({1, 2}))}
    assert Psi_inv_word(q) == (1, 3, 2)


@pytest.mark.parametrize("n", range(8))
def test_psi_bijection_small(n):
    images = set()
    for p in enumerate_class("ballot", n):
        cs = Psi(p)
        q = cycles_to_permutation(cs, n)
        assert is_odd_order(q)
        assert Psi_inv(cs) == p
        assert des(p) == exc_tilde(q)
        assert peak_set(p) == cpeak_set(q)
        images.add(q)
    assert images == set(enumerate_class("odd_order", n))


@pytest.mark.parametrize("n", range(9))
def test_span_scans_agree(n):
    for p in enumerate_class("ballot", n):
        assert linear_factor_spans(p) == linear_factor_spans_scan(p)
    if n <= 7:
        for q in enumerate_class("odd_order", n):
            for c in cycle_decompose(q):
                assert sorted(cycle_factor_spans(c)) == cycle_factor_spans_scan(c)


def test_linear_and_cyclic_factors_match_exhaustively():
    for n in range(9):
        for p in enumerate_class("ballot", n):
            lin = unoriented(f.word for f in extract_linear(p).factors)
            cyc = unoriented(f.word for f in extract_cyclic(Psi(p)).factors)
            assert lin == cyc


@given(ballot_perms(max_n=12))
def test_extract_insert_round_trip(p):
    dec = extract_linear(p)
    assert insert_properly(dec.skeleton, dec.factors) == p
    for f in dec.factors:
        assert len(f.word) % 2 == 1 and len(f.word) >= 3
        assert asc(f.word) == des(f.word)


@given(ballot_perms(max_n=12))
def test_psi_properties(p):
    cs = Psi(p)
    q = cycles_to_permutation(cs, len(p))
    assert Psi_inv(cs) == p
    assert des(p) == exc_tilde(q)
    assert peak_set(p) == cpeak_set(q)
    dec = extract_linear(p)
    assert box_neighbor_multiset(dec.skeleton) == box_neighbor_multiset(extract_cyclic(cs).skeleton)


@given(odd_order_perms(max_n=12))
def test_psi_inverse_properties(q):
    p = Psi_inv_word(q)
    assert Psi_word(p) == q
    assert des(p) == exc_tilde(q)
