"""Box-permutations, cyclic box-permutations and the box-neighbour-set
preserving bijections ``phi`` (BP1 -> BP3) and ``psi`` (BP -> cBP).

Words are tuples over positive integers and the sentinel ``BOX``.  A cyclic
box-permutation is a tuple of cycles, each rotated so that its smallest integer
comes first, sorted by that integer.
"""
from __future__ import annotations

import math
import re
from collections import Counter
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class _Box:
    __slots__ = ()

    def __repr__(self) -> str:
        return "BOX"

    def __reduce__(self):
        return "BOX"


BOX = _Box()

BoxWord = tuple
BoxCycles = tuple


def ints(letters: Iterable) -> list[int]:
    return [x for x in letters if x is not BOX]


# -- text I/O --------------------------------------------------------------

def _token(tok: str):
    return BOX if tok in ("#", "□") else int(tok)


def parse_box_word(text: str) -> BoxWord:
    w = tuple(_token(t) for t in text.replace(",", " ").split())
    check_box_word(w)
    return w


def format_box_word(w: Sequence) -> str:
    return " ".join("#" if x is BOX else str(x) for x in w)


def parse_box_cycles(text: str) -> BoxCycles:
    bodies = re.findall(r"\(([^()]*)\)", text)
    cycles = [tuple(_token(t) for t in b.replace(",", " ").split()) for b in bodies]
    return check_cyclic_box_perm(cycles)


def format_box_cycles(cycles: Iterable[Sequence]) -> str:
    return "".join("(" + format_box_word(c) + ")" for c in cycles)


# -- validity --------------------------------------------------------------

def segments(w: Sequence) -> list[tuple[int, ...]]:
    """Integer runs of a box word, split at the boxes."""
    out, cur = [], []
    for x in w:
        if x is BOX:
            out.append(tuple(cur))
            cur = []
        else:
            cur.append(x)
    out.append(tuple(cur))
    return out


def _increasing(run: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(run, run[1:]))


def check_box_word(w: Sequence) -> None:
    letters = ints(w)
    if len(set(letters)) != len(letters):
        raise ValueError("repeated integer in box word")
    if any(x <= 0 for x in letters):
        raise ValueError("box words use positive integers")
    segs = segments(w)
    for i, seg in enumerate(segs):
        if not _increasing(seg):
            raise ValueError(f"segment {seg} is not increasing")
        end = i == 0 or i == len(segs) - 1
        if len(segs) > 1 and len(seg) < (1 if end else 2):
            raise ValueError(f"segment {seg} too short")


def is_box_word(w: Sequence) -> bool:
    try:
        check_box_word(w)
    except ValueError:
        return False
    return True


def canonical_box_cycle(cycle: Sequence) -> tuple:
    m = min(ints(cycle))
    i = list(cycle).index(m)
    return tuple(cycle[i:]) + tuple(cycle[:i])


def canonical_box_cycles(cycles: Iterable[Sequence]) -> BoxCycles:
    return tuple(sorted((canonical_box_cycle(c) for c in cycles), key=lambda c: c[0]))


def cyclic_runs(cycle: Sequence) -> list[tuple[int, ...]]:
    """Maximal integer runs of a cycle containing at least one box, read clockwise."""
    j = list(cycle).index(BOX)
    rotated = tuple(cycle[j + 1:]) + tuple(cycle[:j + 1])
    return segments(rotated[:-1])


def orientation(cycle: Sequence) -> str:
    """``fixed``, ``forward`` or ``reverse``; raises ValueError if neither."""
    if len(cycle) == 1 and cycle[0] is not BOX:
        return "fixed"
    if len(cycle) % 2 == 0 or len(cycle) < 3 or BOX not in cycle:
        raise ValueError(f"{cycle} is not an odd box-cycle")
    runs = cyclic_runs(cycle)
    if any(len(r) < 2 for r in runs):
        raise ValueError(f"{cycle} has an integer run shorter than two")
    if all(_increasing(r) for r in runs):
        return "forward"
    if all(_increasing(r[::-1]) for r in runs):
        return "reverse"
    raise ValueError(f"{cycle} is neither an odd nor a reverse odd box-cycle")


def check_cyclic_box_perm(cycles: Iterable[Sequence]) -> BoxCycles:
    cycles = [tuple(c) for c in cycles]
    seen: set[int] = set()
    for c in cycles:
        orientation(c)
        for x in ints(c):
            if x in seen or x <= 0:
                raise ValueError(f"letter {x} repeated or not positive")
            seen.add(x)
    return canonical_box_cycles(cycles)


# -- box-neighbour-set -----------------------------------------------------

def box_neighbor_pairs(x) -> list[frozenset[int]]:
    """One unordered neighbour pair per box, for a box word or a tuple of cycles."""
    if x and isinstance(x[0], tuple):
        pairs = []
        for c in x:
            k = len(c)
            pairs += [frozenset((c[j - 1], c[(j + 1) % k])) for j in range(k) if c[j] is BOX]
        return pairs
    return [frozenset((x[j - 1], x[j + 1])) for j in range(len(x)) if x[j] is BOX]


def box_neighbor_set(x) -> frozenset[frozenset[int]]:
    return frozenset(box_neighbor_pairs(x))


def box_neighbor_multiset(x) -> Counter:
    return Counter(box_neighbor_pairs(x))


# -- classification and phi ------------------------------------------------

def classify(w: Sequence) -> int:
    """1, 2 or 3 according to which of BP1, BP2, BP3 the word belongs to."""
    if not w:
        raise ValueError("classify needs a nonempty support")
    a1 = min(ints(w))
    pos = list(w).index(a1) + 1
    if pos == 1:
        return 1 if len(w) > 1 and w[1] is BOX else 2
    return 1 if pos % 2 == 0 else 3


def phi_case(w: Sequence) -> str:
    """Which construction case applies to a BP1 word: I, II1, II2 or II3."""
    return _phi(tuple(w))[1]


def phi(w: Sequence) -> BoxWord:
    """Map a BP1 box word to BP3, keeping the box-neighbour multiset."""
    return _phi(tuple(w))[0]


def _phi(w: tuple) -> tuple[BoxWord, str]:
    if classify(w) != 1:
        raise ValueError("phi is defined on BP1 only")
    a1 = min(ints(w))
    if w[0] == a1:
        return (w[2], BOX, a1) + w[3:], "I"
    i = w.index(BOX) - 1          # a = w[i], left neighbour of the first box
    a = w[i]
    j = w.index(a1)
    try:
        k = w.index(BOX, j + 1) - 1
        x = w[k]
    except ValueError:
        k, x = len(w), math.inf
    rest = w[:i] + w[j + 1:k]
    if rest and min(rest) < min(a, x):
        t = min(rest)
        if w[0] == t:
            return w[1:j + 1] + (t,) + w[j + 1:], "II1"
        return (t,) + w[:j + 1] + w[j + 2:], "II1"
    if k == j + 1 and x < w[0]:
        y = w[k + 2]
        return (y, BOX, x) + w[:j + 1] + w[k + 3:], "II2"
    if i == 0 and all(v > a for v in w[j + 1:k + 1]):
        return w[3:j + 1] + (w[2], BOX, a) + w[j + 1:], "II3"
    raise AssertionError(f"no case of phi applies to {format_box_word(w)}")


def phi_inv_conditions(w: Sequence) -> list[str]:
    """All inverse-dispatch conditions that hold for a BP3 word.

    Exactly one should fire; the list form lets tests check that.
    """
    w = tuple(w)
    n = len(w)
    a1 = min(ints(w))
    p = w.index(a1) + 1
    first = w[0]
    nxt = w[p] if p < n else None
    box2 = w[1] is BOX
    tail = p == n or (nxt is not None and first < nxt)
    nxt_before_box = nxt is not None and p + 1 < n and w[p + 1] is BOX
    fired = []
    if p == 3 and box2 and tail:
        fired.append("I")
    if p >= 5 and not box2 and tail:
        fired.append("II1b")
    if p >= 7 and box2 and tail:
        fired.append("II2")
    if p >= 3 and nxt is not None and first > nxt and not nxt_before_box:
        fired.append("II1a")
    if p >= 3 and nxt is not None and first > nxt and nxt_before_box:
        fired.append("II3")
    return fired


def phi_inv(w: Sequence) -> BoxWord:
    """Inverse of ``phi``: BP3 -> BP1."""
    w = tuple(w)
    if classify(w) != 3:
        raise ValueError("phi_inv is defined on BP3 only")
    fired = phi_inv_conditions(w)
    if len(fired) != 1:
        raise AssertionError(f"inverse dispatch ambiguous for {format_box_word(w)}: {fired}")
    case = fired[0]
    p = w.index(min(ints(w))) + 1
    if case == "I":
        return (w[2], BOX, w[0]) + w[3:]
    if case == "II1b":
        return w[1:p] + (w[0],) + w[p:]
    if case == "II2":
        y, x, rest = w[0], w[2], w[3:]
        q = p - 3   # a1 sits at rest[q - 1]
        return rest[:q] + (x, BOX, y) + rest[q:]
    if case == "II1a":
        return (w[p],) + w[:p] + w[p + 1:]
    # II3: ... a1 N # a ...  ->  a # N ... a1 ...
    return (w[p + 2], BOX, w[p]) + w[:p] + w[p + 3:]


# -- psi -------------------------------------------------------------------

def psi(w: Sequence) -> BoxCycles:
    """Factor a box word into odd box-cycles, one cycle per step."""
    w = tuple(w)
    check_box_word(w)
    cycles = []
    while w:
        a1 = min(ints(w))
        cls = classify(w)
        if cls == 2:
            cycles.append((a1,))
            w = w[1:]
            continue
        if cls == 1:
            w = phi(w)
            p = w.index(a1)
            cycles.append((a1,) + w[:p][::-1])
        else:
            p = w.index(a1)
            cycles.append((a1,) + w[:p])
        w = w[p + 1:]
    return canonical_box_cycles(cycles)


def psi_inv(cycles: Iterable[Sequence]) -> BoxWord:
    """Inverse of ``psi``."""
    cycles = check_cyclic_box_perm(cycles)
    w: tuple = ()
    # the cycle holding the current minimum is peeled first, so rebuild from
    # the cycle with the largest minimum backwards
    for c in reversed(cycles):
        kind = orientation(c)
        a1 = c[0]
        if kind == "fixed":
            w = (a1,) + w
        elif kind == "forward":
            w = c[1:] + (a1,) + w
        else:
            w = phi_inv(c[1:][::-1] + (a1,) + w)
    return w


# -- independent enumeration -----------------------------------------------

def _ordered_partitions(items: tuple, min_sizes: Sequence[int]) -> Iterator[list[tuple]]:
    """Ordered partitions of ``items`` into sorted blocks with the given minimum sizes."""
    if not min_sizes:
        if not items:
            yield []
        return
    spare = len(items) - sum(min_sizes[1:])
    for size in range(min_sizes[0], spare + 1):
        for block in combinations(items, size):
            left = tuple(x for x in items if x not in block)
            for tail in _ordered_partitions(left, min_sizes[1:]):
                yield [block] + tail


def enumerate_box_words(A: Iterable[int]) -> Iterator[BoxWord]:
    """All of BP(A), built directly from the segment rules."""
    A = tuple(sorted(A))
    yield A
    for m in range(2, len(A) + 1):
        for blocks in _ordered_partitions(A, [1] + [2] * (m - 2) + [1]):
            w: list = []
            for b in blocks:
                if w:
                    w.append(BOX)
                w.extend(b)
            yield tuple(w)


def _box_cycles_on(block: tuple) -> list[tuple]:
    if len(block) == 1:
        return [block]
    out = []
    lo, others = block[0], block[1:]
    for m in range(1, len(block) // 2 + 1):
        if (len(block) + m) % 2 == 0:
            continue
        # the run holding the minimum comes first, fixing the rotation
        for size in range(2, len(block) + 1):
            for extra in combinations(others, size - 1):
                first = (lo,) + extra
                left = tuple(x for x in others if x not in extra)
                for tail in _ordered_partitions(left, [2] * (m - 1)):
                    cyc: list = []
                    for run in [first] + tail:
                        cyc.extend(run)
                        cyc.append(BOX)
                    cyc = tuple(cyc)
                    out.append(canonical_box_cycle(cyc))
                    out.append(canonical_box_cycle(cyc[::-1]))
    return out


def set_partitions(items: tuple) -> Iterator[list[tuple]]:
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for size in range(len(rest) + 1):
        for extra in combinations(rest, size):
            left = tuple(x for x in rest if x not in extra)
            for tail in set_partitions(left):
                yield [(head,) + extra] + tail


def enumerate_cyclic_box_perms(A: Iterable[int]) -> Iterator[BoxCycles]:
    """All of cBP(A), built from set partitions and the cycle rules."""
    A = tuple(sorted(A))

    def rec(parts):
        if not parts:
            yield ()
            return
        for c in _box_cycles_on(parts[0]):
            for tail in rec(parts[1:]):
                yield (c,) + tail

    for parts in set_partitions(A):
        for combo in rec(parts):
            yield canonical_box_cycles(combo)
