"""Permutations in one-line notation: statistics, cycles, ballot heights and
exhaustive enumeration of the classes used throughout the package.

A permutation is a plain tuple of the integers 1..n.  Cycle systems are tuples
of tuples, each cycle rotated so that its smallest letter comes first, and the
cycles sorted by that letter.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

Perm = tuple[int, ...]
Cycles = tuple[tuple[int, ...], ...]

CLASSES = ("all", "ballot", "odd_order", "dyck", "hb_ballot")


# -- parsing and formatting ------------------------------------------------

def check_permutation(word: Sequence[int]) -> None:
    n = len(word)
    seen = set()
    for x in word:
        if not 1 <= x <= n:
            raise ValueError(f"letter {x} out of range 1..{n}")
        if x in seen:
            raise ValueError(f"duplicate letter {x}")
        seen.add(x)


def parse_permutation(text: str | Iterable) -> Perm:
    """Parse ``"8 3 9 1"`` (or any iterable of integer tokens) into a permutation."""
    tokens = text.replace(",", " ").split() if isinstance(text, str) else list(text)
    word = tuple(int(t) for t in tokens)
    check_permutation(word)
    return word


def format_permutation(word: Sequence[int]) -> str:
    return " ".join(map(str, word))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> Cycles:
    """Parse ``"(1 8 5 6 4)(2 3 9)(7)"`` into a canonical cycle system."""
    stripped = _CYCLE_RE.sub("", text).strip()
    if stripped:
        raise ValueError(f"unexpected text outside cycles: {stripped!r}")
    cycles = [tuple(int(t) for t in body.replace(",", " ").split())
              for body in _CYCLE_RE.findall(text)]
    cycles_to_permutation(cycles)
    return canonical_cycles(cycles)


def format_cycles(cycles: Iterable[Sequence[int]]) -> str:
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


# -- cycles ----------------------------------------------------------------

def rotate_min_first(cycle: Sequence) -> tuple:
    i = cycle.index(min(cycle))
    return tuple(cycle[i:]) + tuple(cycle[:i])


def canonical_cycles(cycles: Iterable[Sequence[int]]) -> Cycles:
    return tuple(sorted((rotate_min_first(c) for c in cycles), key=lambda c: c[0]))


def cycle_decompose(word: Sequence[int]) -> Cycles:
    n = len(word)
    seen = [False] * (n + 1)
    cycles = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = word[x - 1]
        cycles.append(tuple(cycle))
    # starts are visited in increasing order, so each cycle already begins
    # with its minimum and the list is sorted
    return tuple(cycles)


def cycles_to_permutation(cycles: Iterable[Sequence[int]], n: Optional[int] = None) -> Perm:
    image: dict[int, int] = {}
    for c in cycles:
        if not c:
            raise ValueError("empty cycle")
        for i, x in enumerate(c):
            if x in image:
                raise ValueError(f"letter {x} appears in more than one place")
            image[x] = c[(i + 1) % len(c)]
    if n is None:
        n = len(image)
    if set(image) != set(range(1, n + 1)):
        raise ValueError(f"cycles do not partition 1..{n}")
    return tuple(image[i] for i in range(1, n + 1))


def inverse(word: Sequence[int]) -> Perm:
    inv = [0] * len(word)
    for i, x in enumerate(word, 1):
        inv[x - 1] = i
    return tuple(inv)


# -- statistics ------------------------------------------------------------

@dataclass(frozen=True)
class StatRecord:
    asc: int
    des: int
    exc: int
    exc_tilde: int


def asc(word: Sequence[int]) -> int:
    return sum(1 for a, b in zip(word, word[1:]) if a < b)


def des(word: Sequence[int]) -> int:
    return sum(1 for a, b in zip(word, word[1:]) if a > b)


def descent_set(word: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(word)) if word[i - 1] > word[i])


def exc(word: Sequence[int]) -> int:
    # position n is excluded, following the definition over i in [n-1]
    return sum(1 for i in range(1, len(word)) if word[i - 1] > i)


def cyclic_ascents(cycle: Sequence[int]) -> int:
    k = len(cycle)
    return sum(1 for i in range(k) if cycle[i] < cycle[(i + 1) % k])


def exc_tilde(word: Sequence[int]) -> int:
    total = 0
    for c in cycle_decompose(word):
        ca = cyclic_ascents(c)
        total += min(ca, len(c) - ca)
    return total


def statistics(word: Sequence[int]) -> StatRecord:
    return StatRecord(asc(word), des(word), exc(word), exc_tilde(word))


# -- peaks -----------------------------------------------------------------

Pair = frozenset  # unordered neighbour pair {a, c}


@dataclass(frozen=True)
class PeakRecord:
    peak_set: frozenset[tuple[int, Pair]]
    cpeak_set: frozenset[tuple[int, Pair]]


def peak_set(word: Sequence[int]) -> frozenset[tuple[int, Pair]]:
    return frozenset(
        (word[i], frozenset((word[i - 1], word[i + 1])))
        for i in range(1, len(word) - 1)
        if word[i - 1] < word[i] > word[i + 1]
    )


def cpeak_set(word: Sequence[int]) -> frozenset[tuple[int, Pair]]:
    inv = inverse(word)
    return frozenset(
        (k, frozenset((inv[k - 1], word[k - 1])))
        for k in range(3, len(word) + 1)
        if inv[k - 1] < k > word[k - 1]
    )


def peaks(word: Sequence[int]) -> PeakRecord:
    return PeakRecord(peak_set(word), cpeak_set(word))


def neighbors_of(word: Sequence[int], k: int) -> Optional[Pair]:
    """Linear neighbours of the value k, or None if k sits at either end."""
    pos = word.index(k)
    if 0 < pos < len(word) - 1:
        return frozenset((word[pos - 1], word[pos + 1]))
    return None


def cyclic_neighbors_of(word: Sequence[int], k: int) -> Optional[Pair]:
    """Cyclic neighbours pi^{-1}(k), pi(k) of k, or None if k is a fixed point."""
    if word[k - 1] == k:
        return None
    return frozenset((word.index(k) + 1, word[k - 1]))


# -- ballot heights --------------------------------------------------------

@dataclass(frozen=True)
class BallotProfile:
    heights: tuple[int, ...]
    is_ballot: bool
    end_height: int


def ballot_profile(word: Sequence[int], start_height: int = 0) -> BallotProfile:
    if start_height < 0:
        raise ValueError("start height must be nonnegative")
    if not word:
        return BallotProfile((), True, start_height)
    h = start_height
    heights = [h]
    for a, b in zip(word, word[1:]):
        h += 1 if a < b else -1
        heights.append(h)
    return BallotProfile(tuple(heights), min(heights) >= 0, h)


def is_ballot(word: Sequence[int]) -> bool:
    h = 0
    for a, b in zip(word, word[1:]):
        h += 1 if a < b else -1
        if h < 0:
            return False
    return True


def is_hb_ballot(word: Sequence[int], h: int, b: int) -> bool:
    prof = ballot_profile(word, h)
    return prof.is_ballot and prof.end_height == b


def is_dyck(word: Sequence[int]) -> bool:
    return len(word) % 2 == 1 and is_hb_ballot(word, 0, 0)


def is_odd_order(word: Sequence[int]) -> bool:
    return all(len(c) % 2 for c in cycle_decompose(word))


def in_class(word: Sequence[int], cls: str, h: int = 0, b: int = 0) -> bool:
    if cls == "all":
        return True
    if cls == "ballot":
        return is_ballot(word)
    if cls == "odd_order":
        return is_odd_order(word)
    if cls == "dyck":
        return is_dyck(word)
    if cls == "hb_ballot":
        return is_hb_ballot(word, h, b)
    raise ValueError(f"unknown class {cls!r}")


# -- enumeration -----------------------------------------------------------

def _completes_occurrence(prefix: Sequence[int], z: int, pattern: Sequence[int]) -> bool:
    """Whether appending z to prefix creates an occurrence of pattern ending at z."""
    k = len(pattern)
    if k == 1:
        return True
    if len(prefix) < k - 1:
        return False
    if k == 2:
        up = pattern[0] < pattern[1]
        return any((x < z) == up for x in prefix)
    if k == 3:
        p1, p2, p3 = pattern
        j_below = p2 < p3       # w_j < z
        i_below_j = p1 < p2     # w_i < w_j
        i_below_z = p1 < p3     # w_i < z
        for j in range(1, len(prefix)):
            wj = prefix[j]
            if (wj < z) != j_below:
                continue
            for i in range(j):
                wi = prefix[i]
                if (wi < wj) == i_below_j and (wi < z) == i_below_z:
                    return True
        return False
    target = tuple(pattern)
    for combo in combinations(prefix, k - 1):
        sub = combo + (z,)
        ranks = sorted(sub)
        if tuple(ranks.index(v) + 1 for v in sub) == target:
            return True
    return False


def enumerate_class(cls: str, n: int, pattern: Optional[Sequence[int]] = None,
                    h: int = 0, b: int = 0, prefix: Sequence[int] = ()) -> Iterator[Perm]:
    """Yield every permutation of [n] in the class, lexicographically.

    ``cls`` is one of ``all``, ``ballot``, ``odd_order``, ``dyck`` or
    ``hb_ballot`` (start height ``h``, end height ``b``).  When ``pattern`` is
    given only its avoiders are produced; the test is applied to every prefix so
    whole subtrees are pruned.  ``prefix`` restricts output to permutations
    starting with it, which lets callers split the work.
    """
    if cls not in CLASSES:
        raise ValueError(f"unknown class {cls!r}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if cls == "dyck":
        if n % 2 == 0:
            return
        cls, h, b = "hb_ballot", 0, 0
    elif cls == "ballot":
        h = 0
    if cls == "hb_ballot" and (h < 0 or b < 0):
        raise ValueError("h and b must be nonnegative")
    if n == 0:
        if not prefix and (cls != "hb_ballot" or h == b):
            yield ()
        return

    heights = cls in ("ballot", "hb_ballot")
    target = b if cls == "hb_ballot" else None
    odd = cls == "odd_order"
    pat = tuple(pattern) if pattern else None

    word = [0] * n
    used = [False] * (n + 2)

    def closes_even_cycle(pos: int, x: int) -> bool:
        # pos is 1-based; follow x forward through assigned positions
        length = 1
        y = x
        while y <= pos:
            if y == pos:
                return length % 2 == 0
            y = word[y - 1]
            length += 1
        return False

    def admissible(pos: int, x: int, height: int) -> Optional[int]:
        # returns the new height (or 0 when heights are not tracked) or None
        if used[x]:
            return None
        if heights and pos > 1:
            height += 1 if word[pos - 2] < x else -1
            if height < 0:
                return None
            if target is not None and abs(height - target) > n - pos:
                return None
        if odd and closes_even_cycle(pos, x):
            return None
        if pat is not None and _completes_occurrence(word[:pos - 1], x, pat):
            return None
        return height

    start_height = h if heights else 0
    if target is not None and abs(start_height - target) > n - 1:
        return

    height = start_height
    for pos, x in enumerate(prefix, 1):
        if not 1 <= x <= n:
            return
        nh = admissible(pos, x, height)
        if nh is None:
            return
        height = nh
        word[pos - 1] = x
        used[x] = True

    def rec(pos: int, height: int) -> Iterator[Perm]:
        if pos > n:
            yield tuple(word)
            return
        for x in range(1, n + 1):
            nh = admissible(pos, x, height)
            if nh is None:
                continue
            word[pos - 1] = x
            used[x] = True
            yield from rec(pos + 1, nh)
            used[x] = False

    yield from rec(len(prefix) + 1, height)


def count_class(cls: str, n: int, pattern: Optional[Sequence[int]] = None,
                h: int = 0, b: int = 0) -> int:
    return sum(1 for _ in enumerate_class(cls, n, pattern, h, b))
