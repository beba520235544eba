"""Maximal Dyck factors of ballot permutations and odd cycles, and the
bijection ``Psi`` from ballot permutations to odd order permutations.

The extraction routines work on a letter sequence plus optional flat-step
flags, so the same code serves cluster-permutations (see ``clusters``).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .boxperm import BOX, BoxCycles, BoxWord, canonical_box_cycles, psi, psi_inv
from .perms import Cycles, Perm, canonical_cycles, cycle_decompose, cycles_to_permutation, is_ballot

Cluster = tuple[int, ...]


@dataclass(frozen=True)
class Factor:
    """A maximal Dyck (or Motzkin) factor, stored as its sequence of clusters.

    ``span`` records where it came from: ``(start, end)`` letter indices for a
    word, ``(cycle, l, r)`` for a cycle.
    """
    clusters: tuple[Cluster, ...]
    span: tuple[int, ...] = ()

    @property
    def word(self) -> tuple[int, ...]:
        return tuple(x for c in self.clusters for x in c)

    @property
    def first(self) -> int:
        return self.clusters[0][0]

    @property
    def last(self) -> int:
        return self.clusters[-1][-1]

    def reversed(self) -> "Factor":
        return Factor(tuple(c[::-1] for c in self.clusters[::-1]), self.span)


@dataclass(frozen=True)
class LinearDecomposition:
    factors: tuple[Factor, ...]
    skeleton: BoxWord


@dataclass(frozen=True)
class CyclicDecomposition:
    factors: tuple[Factor, ...]
    skeleton: BoxCycles


def _step(a: int, b: int) -> int:
    return 1 if a < b else -1


def _clusters_of(letters: Sequence[int], flat: Sequence[bool], lo: int, hi: int) -> tuple[Cluster, ...]:
    """Split letters[lo..hi] (inclusive, indices taken mod len) into clusters."""
    k = len(letters)
    out, cur = [], [letters[lo % k]]
    for i in range(lo, hi):
        if flat[i % k]:
            cur.append(letters[(i + 1) % k])
        else:
            out.append(tuple(cur))
            cur = [letters[(i + 1) % k]]
    out.append(tuple(cur))
    return tuple(out)


# -- linear extraction -----------------------------------------------------

def linear_factor_spans(letters: Sequence[int], flat: Optional[Sequence[bool]] = None) -> list[tuple[int, int]]:
    """Spans of the maximal Dyck/Motzkin factors, found by the suffix scan.

    Repeatedly take the right-most closing letter (incoming step down, or flat)
    of minimum height, pair it with the left-most letter of that height whose
    outgoing step is not down, and continue on the suffix after it.
    """
    n = len(letters)
    if flat is None:
        flat = [False] * max(n - 1, 0)
    steps = [0 if flat[i] else _step(letters[i], letters[i + 1]) for i in range(n - 1)]
    spans = []
    start = 0
    while start < n - 1:
        h = 0
        heights = [0]
        best = None
        for i in range(start + 1, n):
            h += steps[i - 1]
            heights.append(h)
            if steps[i - 1] <= 0 and (best is None or h <= best[0]):
                best = (h, i)
        if best is None:
            break
        h1, end = best
        begin = next(j for j in range(start, end)
                     if heights[j - start] == h1 and steps[j] >= 0)
        if any(hh < h1 for hh in heights[begin - start:end - start + 1]):
            raise ValueError("word is not ballot")
        spans.append((begin, end))
        start = end + 1
    return spans


def linear_factor_spans_scan(letters: Sequence[int], flat: Optional[Sequence[bool]] = None) -> list[tuple[int, int]]:
    """Brute-force oracle: every Dyck/Motzkin subword, keep the maximal ones."""
    n = len(letters)
    if flat is None:
        flat = [False] * max(n - 1, 0)
    found = []
    for s in range(n):
        h = 0
        for e in range(s + 1, n):
            h += 0 if flat[e - 1] else _step(letters[e - 1], letters[e])
            if h < 0:
                break
            if h == 0:
                found.append((s, e))
    return sorted(iv for iv in found
                  if not any(o != iv and o[0] <= iv[0] and iv[1] <= o[1] for o in found))


def _linear_skeleton(letters: Sequence[int], spans: Iterable[tuple[int, int]]) -> BoxWord:
    out: list = []
    i = 0
    for s, e in spans:
        out.extend(letters[i:s])
        out += [letters[s], BOX, letters[e]]
        i = e + 1
    out.extend(letters[i:])
    return tuple(out)


def extract_linear(p: Sequence[int]) -> LinearDecomposition:
    if not is_ballot(p):
        raise ValueError("extract_linear needs a ballot permutation")
    spans = linear_factor_spans(p)
    factors = tuple(Factor(tuple((x,) for x in p[s:e + 1]), (s, e)) for s, e in spans)
    return LinearDecomposition(factors, _linear_skeleton(p, spans))


# -- cyclic extraction -----------------------------------------------------

def peak_span(cycle: Sequence[int], p: int) -> tuple[int, int]:
    """Indices (l, r) of the maximal Dyck factor around the cyclic peak at index p.

    Heights are measured relative to the peak, to the right (``up``) and to
    the left (``back``); both are asc - des along the direction of reading.
    """
    k = len(cycle)
    d = tuple(cycle[p:]) + tuple(cycle[:p])     # d[0] is the peak
    up = {}
    h = 0
    for i in range(2, k + 1):
        h += _step(d[i - 2], d[i - 1])
        up[i] = h
    back = {}
    h, prev = 0, d[0]
    for i in range(k, 1, -1):
        h += _step(prev, d[i - 1])
        back[i] = h
        prev = d[i - 1]

    if up[k] >= 0:
        low = min(up[i] for i in range(2, k))
        r = max(i for i in range(2, k) if up[i] == low)
        l = next(i for i in range(r + 1, k + 1)
                 if back[i] == low and back[i] == min(back[j] for j in range(i, k + 1)))
    else:
        low = min(back[i] for i in range(3, k + 1))
        l = min(i for i in range(3, k + 1) if back[i] == low)
        r = max(i for i in range(2, l)
                if up[i] == low and up[i] == min(up[j] for j in range(2, i + 1)))
    return (p + l - 1) % k, (p + r - 1) % k


def _span_positions(l: int, r: int, k: int) -> list[int]:
    length = (r - l) % k + 1
    return [(l + t) % k for t in range(length)]


def cycle_factor_spans(cycle: Sequence[int]) -> list[tuple[int, int]]:
    """Maximal Dyck factors of one odd cycle, one per group of cyclic peaks."""
    k = len(cycle)
    if k < 3:
        return []
    covered: set[int] = set()
    spans = []
    peaks = [i for i in range(k) if cycle[i - 1] < cycle[i] > cycle[(i + 1) % k]]
    for p in sorted(peaks, key=lambda i: -cycle[i]):
        if p in covered:
            continue
        l, r = peak_span(cycle, p)
        pos = _span_positions(l, r, k)
        if covered.intersection(pos):
            raise AssertionError(f"overlapping maximal factors in cycle {cycle}")
        covered.update(pos)
        spans.append((l, r))
    return spans


def cycle_factor_spans_scan(letters: Sequence[int], flat: Optional[Sequence[bool]] = None) -> list[tuple[int, int]]:
    """Maximal Dyck/Motzkin factors of a cycle by checking every cyclic interval.

    ``flat[i]`` marks the step from letter i to letter i+1 (mod length) as a
    horizontal step.
    """
    k = len(letters)
    if flat is None:
        flat = [False] * k
    steps = [0 if flat[i] else _step(letters[i], letters[(i + 1) % k]) for i in range(k)]
    found = []
    for s in range(k):
        h = 0
        for m in range(1, k):
            h += steps[(s + m - 1) % k]
            if h < 0:
                break
            if h == 0:
                found.append((s, m))

    def inside(a, b):
        return a != b and (a[0] - b[0]) % k + a[1] <= b[1]

    maximal = [iv for iv in found if not any(inside(iv, o) for o in found)]
    covered: set[int] = set()
    for s, m in maximal:
        pos = [(s + t) % k for t in range(m + 1)]
        if covered.intersection(pos):
            raise AssertionError(f"overlapping maximal factors in cycle {letters}")
        covered.update(pos)
    return sorted((s, (s + m) % k) for s, m in maximal)


def _cycle_skeleton(cycle: Sequence[int], spans: Iterable[tuple[int, int]]) -> tuple:
    k = len(cycle)
    interior: set[int] = set()
    box_after = set()
    for l, r in spans:
        interior.update(_span_positions(l, r, k)[1:-1])
        box_after.add(l)
    start = next(i for i in range(k) if i not in interior)
    out: list = []
    for t in range(k):
        i = (start + t) % k
        if i in interior:
            continue
        out.append(cycle[i])
        if i in box_after:
            out.append(BOX)
    return tuple(out)


def extract_cyclic(cs: Iterable[Sequence[int]]) -> CyclicDecomposition:
    factors = []
    skeleton = []
    for ci, c in enumerate(cs):
        if len(c) % 2 == 0:
            raise ValueError(f"cycle {tuple(c)} has even length")
        spans = cycle_factor_spans(c)
        k = len(c)
        for l, r in spans:
            word = [c[i] for i in _span_positions(l, r, k)]
            factors.append(Factor(tuple((x,) for x in word), (ci, l, r)))
        skeleton.append(_cycle_skeleton(c, spans))
    return CyclicDecomposition(tuple(factors), canonical_box_cycles(skeleton))


# -- re-insertion ----------------------------------------------------------

def _lookup(factors: Iterable[Factor]) -> dict[frozenset, Factor]:
    table = {}
    for f in factors:
        if f.first == f.last:
            raise AssertionError("factor with equal boundary letters")
        key = frozenset((f.first, f.last))
        if key in table:
            raise ValueError(f"two factors share the boundary pair {set(key)}")
        table[key] = f
    return table


def _fill(seq: Sequence, table: dict, cyclic: bool) -> list[Cluster]:
    """Replace each ``x BOX y`` in seq by the matching factor's clusters."""
    seq = list(seq)
    if cyclic and BOX in seq:
        # rotate so no box triple wraps around the end
        k = len(seq)
        s = next(i for i in range(k) if seq[i] is not BOX and seq[i - 1] is not BOX)
        seq = seq[s:] + seq[:s]
    out: list[Cluster] = []
    i = 0
    while i < len(seq):
        if i + 1 < len(seq) and seq[i + 1] is BOX:
            x, y = seq[i], seq[i + 2]
            f = table.pop(frozenset((x, y)), None)
            if f is None:
                raise ValueError(f"no factor with boundary letters {x}, {y}")
            out.extend(f.clusters if (f.first, f.last) == (x, y) else f.reversed().clusters)
            i += 3
        else:
            out.append((seq[i],))
            i += 1
    return out


def insert_clusters(skeleton, factors: Iterable[Factor], cyclic: bool):
    """Insert factors into their boxes, returning clusters (a list per cycle if cyclic)."""
    table = _lookup(factors)
    if cyclic:
        result = [_fill(c, table, True) for c in skeleton]
    else:
        result = _fill(skeleton, table, False)
    if table:
        raise ValueError(f"{len(table)} factor(s) found no box")
    return result


def insert_properly(skeleton, factors: Iterable[Factor]):
    """Put the factors back into the boxes of a linear or cyclic skeleton.

    A factor whose boundary letters appear as ``d1 BOX dk`` is written as is;
    as ``dk BOX d1`` it is written reversed.
    """
    cyclic = bool(skeleton) and isinstance(skeleton[0], tuple)
    filled = insert_clusters(skeleton, factors, cyclic)
    if cyclic:
        return canonical_cycles(tuple(x for cl in c for x in cl) for c in filled)
    return tuple(x for cl in filled for x in cl)


# -- the bijection ---------------------------------------------------------

def Psi(p: Sequence[int]) -> Cycles:
    """Ballot permutation -> odd order permutation (as a cycle system)."""
    dec = extract_linear(tuple(p))
    return insert_properly(psi(dec.skeleton), dec.factors)


def Psi_inv(cs: Iterable[Sequence[int]]) -> Perm:
    """Odd order permutation (cycle system) -> ballot permutation."""
    cs = canonical_cycles(cs)
    cycles_to_permutation(cs)
    dec = extract_cyclic(cs)
    return insert_properly(psi_inv(dec.skeleton), dec.factors)


def Psi_word(p: Sequence[int]) -> Perm:
    """``Psi`` returning one-line notation."""
    return cycles_to_permutation(Psi(p), len(p))


def Psi_inv_word(q: Sequence[int]) -> Perm:
    return Psi_inv(cycle_decompose(q))
