import pickle

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ballotperm.boxperm import (
    BOX, box_neighbor_multiset, box_neighbor_set, check_box_word, check_cyclic_box_perm, classify,
    enumerate_box_words, enumerate_cyclic_box_perms, format_box_cycles, format_box_word, is_box_word,
    orientation, parse_box_cycles, parse_box_word, phi, phi_case, phi_inv, phi_inv_conditions, psi,
    psi_inv,
)

W = parse_box_word


def pairs(*ps):
    return frozenset(frozenset(p) for p in ps)


BP3_LIST = ["1 2 3", "1 # 2 3", "2 # 1 3", "3 # 1 2", "1 2 # 3", "1 3 # 2", "2 3 # 1"]
CBP3_LIST = ["(1)(2)(3)", "(1)(2 3 #)", "(1)(3 2 #)", "(2)(1 3 #)", "(2)(3 1 #)", "(3)(1 2 #)", "(3)(2 1 #)"]


def test_box_sentinel():
    assert pickle.loads(pickle.dumps(BOX)) is BOX
    assert repr(BOX) == "BOX"
    assert parse_box_word("1 □ 2 3") == (1, BOX, 2, 3)
    assert format_box_word((1, BOX, 2, 3)) == "1 # 2 3"


def test_enumerate_three():
    assert sorted(map(format_box_word, enumerate_box_words([1, 2, 3]))) == sorted(BP3_LIST)
    expected = {parse_box_cycles(t) for t in CBP3_LIST}
    assert set(enumerate_cyclic_box_perms([1, 2, 3])) == expected
    assert len(expected) == 7


def test_classify_three():
    by_class = {1: set(), 2: set(), 3: set()}
    for w in enumerate_box_words([1, 2, 3]):
        by_class[classify(w)].add(format_box_word(w))
    assert by_class == {1: {"1 # 2 3", "2 3 # 1"}, 2: {"1 2 3", "1 2 # 3", "1 3 # 2"},
                        3: {"2 # 1 3", "3 # 1 2"}}


@pytest.mark.parametrize("bad", ["2 1", "1 # 2 # 3", "# 1 2", "1 2 #", "1 # 3 # 2 4", "1 1"])
def test_invalid_words(bad):
    tokens = tuple(BOX if t == "#" else int(t) for t in bad.split())
    assert not is_box_word(tokens)
    with pytest.raises(ValueError):
        check_box_word(tokens)


def test_orientation_and_invalid_cycles():
    assert orientation((4,)) == "fixed"
    assert orientation((2, 3, BOX)) == "forward"
    assert orientation((3, 2, BOX)) == "reverse"
    with pytest.raises(ValueError):
        check_cyclic_box_perm([(1, 2, BOX, 3)])          # even length
    with pytest.raises(ValueError):
        check_cyclic_box_perm([(1, 3, 2, BOX, 4)])        # mixed directions


def test_neighbour_set_examples():
    assert box_neighbor_set(W("2 3 # 4 6 7 9 # 1 8 # 5")) == pairs((3, 4), (1, 9), (5, 8))
    assert box_neighbor_set(parse_box_cycles("(1 6 # 2 7 9 #)(5 3 #)(4)(8)")) == pairs((2, 6), (1, 9), (3, 5))
    assert box_neighbor_set(W("1 2 3")) == frozenset()


@pytest.mark.parametrize("src,dst,case", [
    ("4 6 # 2 7 16 # 9 11 14 # 5 18 # 8 17", "6 # 2 4 7 16 # 9 11 14 # 5 18 # 8 17", "II1"),
    ("2 # 8 9 # 7 14 17 18 # 4 11 # 5 6 # 16", "8 # 2 9 # 7 14 17 18 # 4 11 # 5 6 # 16", "I"),
    ("9 # 7 14 17 18 # 4 11 # 5 6 # 16", "14 17 18 # 4 7 # 9 11 # 5 6 # 16", "II3"),
    ("7 # 9 11 # 5 6 # 16", "16 # 6 7 # 9 11 # 5", "II2"),
])
def test_phi_examples(src, dst, case):
    w = W(src)
    assert phi_case(w) == case
    assert format_box_word(phi(w)) == dst
    assert phi_inv(W(dst)) == w
    assert box_neighbor_multiset(phi(w)) == box_neighbor_multiset(w)


def test_phi_rejects_bp2():
    with pytest.raises(ValueError):
        phi(W("1 2 # 3"))


@pytest.mark.parametrize("src,dst", [
    ("4 6 # 2 7 16 # 9 11 14 # 5 18 # 8 17", "(6 2 #)(4)(16 5 # 14 11 9 #)(7)(8 18 #)(17)"),
    ("2 # 8 9 # 7 14 17 18 # 4 11 # 5 6 # 16", "(8 2 #)(18 17 14 4 #)(16 5 # 11 9 # 7 6 #)"),
    ("1 2 3", "(1)(2)(3)"),
])
def test_psi_examples(src, dst):
    w = W(src)
    assert psi(w) == parse_box_cycles(dst)
    assert psi_inv(parse_box_cycles(dst)) == w


SUPPORTS = [tuple(range(1, k + 1)) for k in range(7)] + [(2, 5, 7, 11, 13, 20), (3, 4, 9), (10, 20, 30, 40, 50)]


@pytest.mark.parametrize("A", SUPPORTS, ids=str)
def test_psi_is_a_bijection(A):
    words = list(enumerate_box_words(A))
    cyclic = set(enumerate_cyclic_box_perms(A))
    images = [psi(w) for w in words]
    assert len(words) == len(cyclic)
    assert set(images) == cyclic
    for w, c in zip(words, images):
        assert psi_inv(c) == w
        assert box_neighbor_multiset(w) == box_neighbor_multiset(c)


@pytest.mark.parametrize("A", SUPPORTS[3:], ids=str)
def test_phi_classes(A):
    words = list(enumerate_box_words(A))
    bp1 = [w for w in words if classify(w) == 1]
    bp3 = {w for w in words if classify(w) == 3}
    assert {phi(w) for w in bp1} == bp3
    for w in bp3:
        assert len(phi_inv_conditions(w)) == 1
        assert classify(phi_inv(w)) == 1


def test_support_sizes():
    sizes = [sum(1 for _ in enumerate_box_words(range(1, k + 1))) for k in range(7)]
    assert sizes == [1, 1, 3, 7, 27, 111, 603]
    assert sum(1 for _ in enumerate_box_words([1, 2])) == 3      # 1 2, 1 # 2, 2 # 1


@given(st.sets(st.integers(1, 40), min_size=1, max_size=6).flatmap(
    lambda A: st.sampled_from(list(enumerate_box_words(sorted(A))))))
def test_psi_round_trip_random_support(w):
    c = psi(w)
    assert check_cyclic_box_perm(c) == c
    assert psi_inv(c) == w
    assert box_neighbor_set(c) == box_neighbor_set(w)


def test_cycle_text_is_canonical():
    assert format_box_cycles(parse_box_cycles("(6 2 #)(4)(□ 18 8)")) == "(2 # 6)(4)(8 # 18)"
