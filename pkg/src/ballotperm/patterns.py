"""Classical pattern containment, avoidance counts, the (h,b)-ballot
recurrences ``E``, ``E_alt`` and ``G``, and two descent-preserving maps
between avoidance classes."""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .perms import Perm, check_permutation, count_class, enumerate_class

WILF_MAPS = ("varphi", "eta")


def standardize(word: Sequence[int]) -> Perm:
    """Replace letters by their ranks 1..k."""
    rank = {v: i + 1 for i, v in enumerate(sorted(word))}
    return tuple(rank[v] for v in word)


def contains_naive(w: Sequence[int], p: Sequence[int]) -> bool:
    p = tuple(p)
    return any(standardize(sub) == p for sub in combinations(w, len(p)))


def contains(w: Sequence[int], p: Sequence[int]) -> bool:
    """True iff w has a subsequence order-isomorphic to p.

    Length-3 patterns use a scan over the middle letter; longer ones fall back
    to checking every subsequence.
    """
    p = tuple(p)
    check_permutation(p)
    if len(p) != 3:
        return contains_naive(w, p)
    n = len(w)
    if n < 3:
        return False
    a, b, c = p
    for j in range(1, n - 1):
        m = w[j]
        left = [x for x in w[:j] if (x < m) == (a < b)]
        right = [y for y in w[j + 1:] if (y < m) == (c < b)]
        if not left or not right:
            continue
        if a < c and min(left) < max(right):
            return True
        if a > c and max(left) > min(right):
            return True
    return False


def avoid_count(cls: str, n: int, p: Sequence[int], h: int = 0, b: int = 0) -> int:
    """Members of the class of length n avoiding p (pattern-pruned enumeration)."""
    return count_class(cls, n, pattern=tuple(p), h=h, b=b)


def avoid_count_filter(cls: str, n: int, p: Sequence[int], h: int = 0, b: int = 0) -> int:
    """Same count by enumerating the class and testing each member."""
    return sum(1 for w in enumerate_class(cls, n, h=h, b=b) if not contains(w, p))


# -- recurrences for (h,b)-ballot avoiders ---------------------------------

@lru_cache(maxsize=None)
def _E(n: int, h: int, b: int) -> int:
    if h < 0 or b < 0:
        return 0
    if n == 0:
        return int(h == b)
    total = _E(n - 1, h + 1, b) + _E(n - 1, h - 1, b)
    for i in range(n - 1):
        for a in range(h + i + 1):
            left = _E(i, h + 1, a + 1)
            if left:
                total += left * _E(n - 2 - i, a, b)
    return total


@lru_cache(maxsize=None)
def _E_alt(n: int, h: int, b: int) -> int:
    """Split at the letter 1 instead of at the first letter."""
    if h < 0 or b < 0:
        return 0
    if n == 0:
        return int(h == b)
    total = _E_alt(n - 1, h + 1, b) + _E_alt(n - 1, h, b + 1)
    for i in range(n - 1):
        for a in range(h + i + 1):
            left = _E_alt(i, h, a + 1)
            if left:
                total += left * _E_alt(n - 2 - i, a + 1, b)
    return total


@lru_cache(maxsize=None)
def _G(n: int, h: int, b: int) -> int:
    if h < 0 or b < 0:
        return 0
    if n == 0:
        return int(h == b)
    total = _G(n - 1, h + 1, b) + _G(n - 1, h - 1, b)
    for i in range(n - 1):
        for a in range(h + i + 1):
            left = _G(i, h - 1, a)
            if left:
                total += left * _G(n - 2 - i, a + 1, b)
    return total


_RECURRENCES = {"E": _E, "E_alt": _E_alt, "G": _G}


def ballot_recurrence(which: str, n: int, h: int, b: int) -> int:
    """Number of (h,b)-ballot permutations of length n+1 avoiding 213 (E, E_alt) or 231 (G)."""
    if which not in _RECURRENCES:
        raise ValueError(f"unknown recurrence {which!r}; expected one of {sorted(_RECURRENCES)}")
    if min(n, h, b) < 0:
        raise ValueError("n, h, b must be non-negative")
    return _RECURRENCES[which](n, h, b)


# -- descent-preserving bijections ------------------------------------------

def _shift(word: Sequence[int], offset: int) -> Perm:
    return tuple(v + offset for v in standardize(word))


def _varphi(p: Perm) -> Perm:
    if len(p) <= 1:
        return p
    k = p.index(1)
    left, right = _varphi(standardize(p[:k])), _varphi(standardize(p[k + 1:]))
    return _shift(left, 1) + (1,) + _shift(right, k + 1)


def _eta(p: Perm) -> Perm:
    n = len(p)
    if n <= 1:
        return p
    k = p.index(n)
    left, right = _eta(standardize(p[:k])), _eta(standardize(p[k + 1:]))
    return _shift(left, 0) + (n,) + _shift(right, k)


_SOURCES = {"varphi": ((2, 1, 3), _varphi), "eta": ((1, 3, 2), _eta)}
TARGETS = {"varphi": (3, 1, 2), "eta": (2, 3, 1)}


def wilf_map(which: str, p: Sequence[int]) -> Perm:
    """``varphi``: 213-avoiders -> 312-avoiders; ``eta``: 132-avoiders -> 231-avoiders.

    Both split at the letter 1 (resp. n) and recurse on the two sides.  The
    side before the split letter takes the smaller values, which keeps the
    descent set unchanged.
    """
    if which not in _SOURCES:
        raise ValueError(f"unknown map {which!r}; expected one of {WILF_MAPS}")
    p = tuple(p)
    check_permutation(p)
    source, f = _SOURCES[which]
    if contains(p, source):
        raise ValueError(f"input contains the pattern {''.join(map(str, source))}")
    return f(p)
