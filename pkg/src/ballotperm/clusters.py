"""Cluster-permutations (well-labelled positive paths), odd order
cluster-permutations (OCPs) and the extension ``Phi`` of ``Psi``.

A cluster is a tuple of distinct letters.  Inside a cluster consecutive letters
are joined by horizontal steps; between clusters the step goes up or down
according to the boundary letters.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb, factorial
from typing import Iterable, Iterator, Sequence

from .boxperm import canonical_box_cycles, psi, psi_inv, set_partitions
from .dyck import (Factor, _clusters_of, _cycle_skeleton, _linear_skeleton,
                   cycle_factor_spans_scan, insert_clusters, linear_factor_spans)

Cluster = tuple[int, ...]


@dataclass(frozen=True)
class ClusterPerm:
    clusters: tuple[Cluster, ...]

    @property
    def letters(self) -> tuple[int, ...]:
        return tuple(x for c in self.clusters for x in c)

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.clusters)

    @property
    def order(self) -> int:
        return len(self.clusters)

    @property
    def horizontal_steps(self) -> int:
        return self.n - self.order

    def __str__(self) -> str:
        return format_clusters(self.clusters, " ")


@dataclass(frozen=True)
class OCP:
    """Odd order cluster-permutation; build with ``make_ocp`` to get the canonical form."""
    cycles: tuple[tuple[Cluster, ...], ...]

    @property
    def n(self) -> int:
        return sum(len(c) for cyc in self.cycles for c in cyc)

    @property
    def order(self) -> int:
        return sum(len(cyc) for cyc in self.cycles)

    def __str__(self) -> str:
        return "".join("(" + format_clusters(cyc, ",") + ")" for cyc in self.cycles)


# -- text form -------------------------------------------------------------

_TOKEN_RE = re.compile(r"\[([^\]]*)\]|(\d+)")


def _tokens(text: str) -> tuple[Cluster, ...]:
    leftover = _TOKEN_RE.sub(" ", text).replace(",", " ").strip()
    if leftover:
        raise ValueError(f"unexpected text {leftover!r}")
    out = []
    for bracket, single in _TOKEN_RE.findall(text):
        if single:
            out.append((int(single),))
        else:
            c = tuple(int(t) for t in bracket.replace(",", " ").split())
            if not c:
                raise ValueError("empty cluster")
            out.append(c)
    return tuple(out)


def format_clusters(clusters: Iterable[Cluster], sep: str) -> str:
    return sep.join(str(c[0]) if len(c) == 1 else "[" + " ".join(map(str, c)) + "]" for c in clusters)


def _check_letters(letters: Sequence[int]) -> None:
    if sorted(letters) != list(range(1, len(letters) + 1)):
        raise ValueError("cluster letters must partition [n]")


def parse_cluster_perm(text: str) -> ClusterPerm:
    """Parse ``2 [10 15] 19 ...``; brackets group a cluster."""
    if re.search(r"[()]", text):
        raise ValueError("cluster-permutation text has no parentheses")
    cp = ClusterPerm(_tokens(text))
    _check_letters(cp.letters)
    return cp


def rotate_cluster_cycle(cycle: Sequence[Cluster]) -> tuple[Cluster, ...]:
    i = min(range(len(cycle)), key=lambda j: min(cycle[j]))
    return tuple(cycle[i:]) + tuple(cycle[:i])


def make_ocp(cycles: Iterable[Sequence[Cluster]]) -> OCP:
    """Validate and canonicalize: each cycle starts at the cluster holding its
    smallest letter, cycles sorted by that letter."""
    cycles = [tuple(tuple(c) for c in cyc) for cyc in cycles]
    for cyc in cycles:
        if len(cyc) % 2 == 0:
            raise ValueError(f"cluster-cycle of even order: {cyc}")
        if any(not c for c in cyc):
            raise ValueError("empty cluster")
    _check_letters([x for cyc in cycles for c in cyc for x in c])
    return OCP(tuple(sorted((rotate_cluster_cycle(c) for c in cycles), key=lambda c: min(c[0]))))


def parse_ocp(text: str) -> OCP:
    bodies = re.findall(r"\(([^()]*)\)", text)
    if not bodies:
        raise ValueError("no cycles found")
    return make_ocp(_tokens(b) for b in bodies)


# -- ballot validity -------------------------------------------------------

def heights(cp: ClusterPerm) -> list[int]:
    """Height after each letter, starting from 0."""
    out, h = [0], 0
    for a, b in zip(cp.clusters, cp.clusters[1:]):
        out.extend([h] * (len(a) - 1))
        h += 1 if a[-1] < b[0] else -1
        out.append(h)
    if cp.clusters:
        out.extend([h] * (len(cp.clusters[-1]) - 1))
    return out[:cp.n] if cp.n else []


def is_wlpp(cp: ClusterPerm) -> bool:
    letters = cp.letters
    if any(not c for c in cp.clusters) or sorted(letters) != list(range(1, len(letters) + 1)):
        return False
    return all(h >= 0 for h in heights(cp))


def _flats(clusters: Sequence[Cluster], cyclic: bool) -> list[bool]:
    flat: list[bool] = []
    for c in clusters:
        flat += [True] * (len(c) - 1) + [False]
    return flat if cyclic else flat[:-1]


# -- the bijection ---------------------------------------------------------

def Phi(cp: ClusterPerm) -> OCP:
    if not is_wlpp(cp):
        raise ValueError("Phi needs a ballot cluster-permutation")
    letters = cp.letters
    flat = _flats(cp.clusters, cyclic=False)
    spans = linear_factor_spans(letters, flat)
    factors = [Factor(_clusters_of(letters, flat, s, e), (s, e)) for s, e in spans]
    skeleton = _linear_skeleton(letters, spans)
    return make_ocp(insert_clusters(psi(skeleton), factors, cyclic=True))


def Phi_inv(o: OCP) -> ClusterPerm:
    o = make_ocp(o.cycles)
    factors = []
    skeleton = []
    for ci, cyc in enumerate(o.cycles):
        letters = [x for c in cyc for x in c]
        flat = _flats(cyc, cyclic=True)
        k = len(letters)
        spans = cycle_factor_spans_scan(letters, flat)
        for l, r in spans:
            hi = l + (r - l) % k
            factors.append(Factor(_clusters_of(letters, flat, l, hi), (ci, l, r)))
        skeleton.append(_cycle_skeleton(letters, spans))
    word = psi_inv(canonical_box_cycles(skeleton))
    return ClusterPerm(tuple(insert_clusters(word, factors, cyclic=False)))


def cluster_condition(cp: ClusterPerm, o: OCP) -> bool:
    """Every cluster of cp appears in o, possibly reversed, and vice versa."""
    norm = lambda c: min(c, c[::-1])
    left = sorted(norm(c) for c in cp.clusters)
    right = sorted(norm(c) for cyc in o.cycles for c in cyc)
    return left == right


# -- enumeration and counting ----------------------------------------------

def enumerate_wlpp(n: int) -> Iterator[ClusterPerm]:
    """All ballot cluster-permutations of size n."""
    if n == 0:
        yield ClusterPerm(())
        return
    used = [False] * (n + 1)

    def rec(done: list, cur: list, h: int):
        if sum(map(len, done)) + len(cur) == n:
            yield ClusterPerm(tuple(done) + (tuple(cur),))
            return
        prev = cur[-1]
        for x in range(1, n + 1):
            if used[x]:
                continue
            used[x] = True
            cur.append(x)
            yield from rec(done, cur, h)           # horizontal step
            cur.pop()
            step = 1 if prev < x else -1
            if h + step >= 0:
                done.append(tuple(cur))
                yield from rec(done, [x], h + step)
                done.pop()
            used[x] = False

    for x in range(1, n + 1):
        used[x] = True
        yield from rec([], [x], 0)
        used[x] = False


def cluster_cycles_on(block: Sequence[int]) -> Iterator[tuple[Cluster, ...]]:
    """All odd cluster-cycles using exactly the letters of block."""
    block = tuple(sorted(block))
    m = len(block)
    if m == 1:
        yield (block,)
        return
    for rest in permutations(block[1:]):
        ring = (block[0],) + rest
        # cut j means no horizontal step between ring[j] and ring[j+1 mod m]
        for order in range(1, m + 1, 2):
            for cuts in combinations(range(m), order):
                start = (cuts[-1] + 1) % m
                clusters, cur = [], []
                for t in range(m):
                    i = (start + t) % m
                    cur.append(ring[i])
                    if i in cuts:
                        clusters.append(tuple(cur))
                        cur = []
                yield rotate_cluster_cycle(clusters)


def enumerate_ocp(n: int) -> Iterator[OCP]:
    def rec(parts):
        if not parts:
            yield ()
            return
        for cyc in cluster_cycles_on(parts[0]):
            for tail in rec(parts[1:]):
                yield (cyc,) + tail

    for parts in set_partitions(tuple(range(1, n + 1))):
        for cycles in rec(parts):
            yield OCP(cycles)


def count_cluster_cycles(n: int, k: int) -> int:
    """Number of single odd cluster-cycles on [n] with 2k+1 clusters."""
    if n < 1 or not 0 <= k <= (n - 1) // 2:
        raise ValueError("need n >= 1 and 0 <= k <= (n-1)/2")
    return comb(n, 2 * k + 1) * factorial(n - 1)


def count_cluster_cycles_brute(n: int, k: int) -> int:
    return sum(1 for c in cluster_cycles_on(range(1, n + 1)) if len(c) == 2 * k + 1)


def double_factorial(m: int) -> int:
    """m!! with (-1)!! = 0!! = 1."""
    if m < -1:
        raise ValueError("double factorial undefined below -1")
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def count_wlpp_horizontal(n: int, k: int) -> int:
    """Number of ballot cluster-permutations of size n with k horizontal steps."""
    if n < 1 or not 0 <= k <= n - 1:
        raise ValueError("need 0 <= k <= n-1")
    base = comb(n, k) * comb(n - 1, k) * factorial(k)
    if (n - k) % 2 == 0:
        return base * double_factorial(n - k - 1) ** 2
    return base * double_factorial(n - k) * double_factorial(n - k - 2)
