"""Verification suites: each one compares an implementation against an
independent oracle and records every comparison as a ``Check``."""
from __future__ import annotations

import random
import time
from collections import Counter, defaultdict
from dataclasses import asdict, dataclass, field
from itertools import permutations
from math import comb
from typing import Callable

from . import boxperm, clusters, patterns, walks
from .data import BALLOT_NUMBERS, GESSEL_EXCURSIONS, pattern_row
from .dyck import Psi, Psi_inv, extract_linear, insert_properly
from .perms import (count_class, cpeak_set, cycle_decompose, cycles_to_permutation, cyclic_neighbors_of,
                    des, descent_set, enumerate_class, exc_tilde, is_ballot, is_odd_order, neighbors_of, peak_set)
from .series import counts_by_order, b_numbers


@dataclass(frozen=True)
class Check:
    suite: str
    check: str
    expected: object
    actual: object

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def as_dict(self) -> dict:
        d = asdict(self)
        d["pass"] = self.passed
        return d


@dataclass
class Report:
    suite: str
    seed: int
    checks: list[Check] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]


class _Recorder:
    def __init__(self, suite: str, report: Report):
        self.suite, self.report = suite, report

    def __call__(self, name: str, expected, actual) -> None:
        self.report.checks.append(Check(self.suite, name, expected, actual))


def _poly(counter: Counter) -> list[int]:
    if not counter:
        return []
    return [counter.get(k, 0) for k in range(max(counter) + 1)]


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


# -- suites ----------------------------------------------------------------

def suite_cardinality(check, max_n: int, rng: random.Random) -> None:
    egf = b_numbers(max_n)
    for n in range(max_n + 1):
        if n < len(BALLOT_NUMBERS):
            check(f"b_{n} reference vs series", BALLOT_NUMBERS[n], egf[n])
        check(f"|B_{n}| vs series", egf[n], count_class("ballot", n))
        check(f"|O_{n}| vs series", egf[n], count_class("odd_order", n))


def suite_spiro(check, max_n: int, rng: random.Random) -> None:
    for n in range(max_n + 1):
        left = Counter(des(p) for p in enumerate_class("ballot", n))
        right = Counter(exc_tilde(q) for q in enumerate_class("odd_order", n))
        check(f"n={n} des over B_n vs exc~ over O_n", _poly(left), _poly(right))


def suite_wz(check, max_n: int, rng: random.Random) -> None:
    for n in range(2, max_n + 1):
        left: dict = defaultdict(Counter)
        for p in enumerate_class("ballot", n):
            pair = neighbors_of(p, n)
            if pair is not None:
                left[tuple(sorted(pair))][des(p)] += 1
        right: dict = defaultdict(Counter)
        for q in enumerate_class("odd_order", n):
            pair = cyclic_neighbors_of(q, n)
            if pair is not None:
                right[tuple(sorted(pair))][exc_tilde(q)] += 1
        for key in sorted(set(left) | set(right)):
            check(f"n={n} neighbours {key}", _poly(left[key]), _poly(right[key]))


def suite_main_thm(check, max_n: int, rng: random.Random) -> None:
    for n in range(max_n + 1):
        images = set()
        bad_inverse = bad_des = bad_peak = bad_class = 0
        for p in enumerate_class("ballot", n):
            cs = Psi(p)
            q = cycles_to_permutation(cs, n)
            images.add(q)
            bad_class += not is_odd_order(q)
            bad_inverse += Psi_inv(cs) != p
            bad_des += des(p) != exc_tilde(q)
            bad_peak += peak_set(p) != cpeak_set(q)
        check(f"n={n} image size", count_class("odd_order", n), len(images))
        check(f"n={n} images outside O_n", 0, bad_class)
        check(f"n={n} inverse failures", 0, bad_inverse)
        check(f"n={n} des != exc~", 0, bad_des)
        check(f"n={n} PEAK != cPEAK", 0, bad_peak)


def _box_support_check(check, A: tuple[int, ...]) -> None:
    words = list(boxperm.enumerate_box_words(A))
    cyclic = set(boxperm.enumerate_cyclic_box_perms(A))
    images = set()
    bad_inverse = bad_neighbours = 0
    for w in words:
        cs = boxperm.psi(w)
        images.add(cs)
        bad_inverse += boxperm.psi_inv(cs) != w
        bad_neighbours += boxperm.box_neighbor_multiset(w) != boxperm.box_neighbor_multiset(cs)
    check(f"A={A} |BP| vs |cBP|", len(cyclic), len(words))
    check(f"A={A} psi image equals cBP", True, images == cyclic)
    check(f"A={A} inverse failures", 0, bad_inverse)
    check(f"A={A} box-neighbour mismatches", 0, bad_neighbours)


def suite_box(check, max_n: int, rng: random.Random) -> None:
    for m in range(max_n + 1):
        _box_support_check(check, tuple(range(1, m + 1)))
        if m >= 2:
            _box_support_check(check, tuple(sorted(rng.sample(range(1, 4 * m), m))))


def suite_table1(check, max_n: int, rng: random.Random) -> None:
    closed = {
        (1, 2, 3): lambda n: catalan((n + 1) // 2),
        (3, 2, 1): lambda n: 3 * comb(2 * n - 2, n - 2) // (n + 1) if n > 1 else 1,
        (1, 3, 2): lambda n: catalan(n // 2) * catalan((n + 1) // 2),
        (2, 3, 1): lambda n: catalan(n // 2) * catalan((n + 1) // 2),
    }
    for p in ((1, 2, 3), (3, 2, 1), (1, 3, 2), (2, 3, 1), (2, 1, 3), (3, 1, 2)):
        row = pattern_row(p)
        name = "".join(map(str, p))
        for n in range(1, max_n + 1):
            got = patterns.avoid_count("ballot", n, p)
            if n <= len(row):
                check(f"{name} n={n} reference", row[n - 1], got)
            if p in closed:
                check(f"{name} n={n} closed form", closed[p](n), got)
            if p in ((2, 1, 3), (2, 3, 1)) and n >= 1:
                f = walks.F if p == (2, 1, 3) else walks.H
                check(f"{name} n={n} walk sum", sum(f(n - 1, 0, b) for b in range(n)), got)


def _walk_recurrence_checks(check, kind: str, rec_id: str, max_n: int) -> None:
    """E/G recurrences against the walk step DP, and the walk table against brute force."""
    dp = walks.walk_table(kind, max_n, max_n, "step_dp")
    rec = walks.walk_table(kind, max_n, max_n, "recurrence")
    ids = ("E", "E_alt") if rec_id == "E" else ("G",)
    for r in ids:
        bad = sum(patterns.ballot_recurrence(r, n, h, b) != dp[(n, h, b)]
                  for n in range(max_n + 1) for h in range(max_n + 1) for b in range(max_n + 1))
        check(f"{r} vs {kind} step DP mismatches (n,h,b <= {max_n})", 0, bad)
    check(f"{kind} recurrence vs step DP", True, rec.entries == dp.entries)
    bn = min(max_n, 12)
    brute = walks.walk_table(kind, bn, bn, "brute")
    bad = sum(brute[key] != dp[key] for key in brute.entries)
    check(f"{kind} brute vs step DP mismatches (n <= {bn})", 0, bad)


def _hb_brute_checks(check, rec_id: str, pattern: tuple, max_n: int) -> None:
    for n in range(min(max_n, 8) + 1):
        for h in range(5):
            for b in range(5):
                check(f"{rec_id}_{n}({h},{b}) vs filtered permutations",
                      patterns.avoid_count("hb_ballot", n + 1, pattern, h, b),
                      patterns.ballot_recurrence(rec_id, n, h, b))


def suite_gessel213(check, max_n: int, rng: random.Random) -> None:
    _walk_recurrence_checks(check, "gessel", "E", max_n)
    _hb_brute_checks(check, "E", (2, 1, 3), max_n)
    for n in range(min(max_n, 8) + 1):
        check(f"|B_{n + 1}(213)| vs sum_j F_{n}(0,j)",
              patterns.avoid_count("ballot", n + 1, (2, 1, 3)),
              sum(walks.F(n, 0, j) for j in range(n + 1)))
    for n in range(min(max_n, 8) + 1):
        g = walks.gessel_closed_form(n)
        check(f"g_{n} closed form vs excursions", walks.count_walks("gessel", 2 * n, (0, 0), (0, 0)), g)
        check(f"g_{n} reference", GESSEL_EXCURSIONS[n], g)
    for n in range(min(max_n, 4) + 1):
        check(f"213-avoiding Dyck permutations of length {2 * n + 1}",
              walks.gessel_closed_form(n), patterns.avoid_count("dyck", 2 * n + 1, (2, 1, 3)))


def suite_gb231(check, max_n: int, rng: random.Random) -> None:
    _walk_recurrence_checks(check, "gb", "G", max_n)
    _hb_brute_checks(check, "G", (2, 3, 1), max_n)
    for n in range(1, max(max_n, 10) + 1):
        check(f"GB x-axis total n={n}", walks.gb_axis_closed_form(n), walks.axis_total("gb", n))


def suite_egf(check, max_n: int, rng: random.Random) -> None:
    table = counts_by_order(max_n)
    ballot = b_numbers(max_n)
    for n in range(max_n + 1):
        # all clusters singletons: order n recovers b_n
        top = table[n][n] if len(table[n]) > n else 0
        check(f"n={n} series coefficient of t^n vs b_n", ballot[n], top)
        check(f"n={n} series at t=1 vs (2n-1)!!", clusters.double_factorial(2 * n - 1), sum(table[n]))
    for n in range(min(max_n, 7) + 1):
        series_row = {k: v for k, v in enumerate(table[n]) if v}
        ocp = Counter(o.order for o in clusters.enumerate_ocp(n))
        wl = Counter(w.order for w in clusters.enumerate_wlpp(n))
        check(f"n={n} OC_(n,k) vs series", series_row, dict(sorted(ocp.items())))
        check(f"n={n} P_(n,k) vs series", series_row, dict(sorted(wl.items())))
        if n >= 1:
            hz = Counter(w.horizontal_steps for w in clusters.enumerate_wlpp(n))
            check(f"n={n} wlpp by horizontal steps vs formula",
                  [clusters.count_wlpp_horizontal(n, k) for k in range(n)], [hz[k] for k in range(n)])
    for n in range(1, min(max_n, 6) + 1):
        for k in range((n - 1) // 2 + 1):
            check(f"cluster cycles n={n} k={k}", clusters.count_cluster_cycles(n, k),
                  clusters.count_cluster_cycles_brute(n, k))


def suite_clusters(check, max_n: int, rng: random.Random) -> None:
    for n in range(max_n + 1):
        images = set()
        bad_inverse = bad_order = bad_cluster = bad_restrict = 0
        for w in clusters.enumerate_wlpp(n):
            o = clusters.Phi(w)
            images.add(o)
            bad_inverse += clusters.Phi_inv(o) != w
            bad_order += o.order != w.order
            bad_cluster += not clusters.cluster_condition(w, o)
            if w.order == n:
                plain = tuple(tuple(c[0] for c in cyc) for cyc in o.cycles)
                bad_restrict += plain != Psi(w.letters)
        check(f"n={n} Phi image is all of OC_n", set(clusters.enumerate_ocp(n)) == images, True)
        check(f"n={n} inverse failures", 0, bad_inverse)
        check(f"n={n} order changes", 0, bad_order)
        check(f"n={n} cluster condition failures", 0, bad_cluster)
        check(f"n={n} differs from Psi on plain inputs", 0, bad_restrict)


def random_ballot(n: int, rng: random.Random) -> tuple[int, ...]:
    """Uniform ballot permutation by rejection."""
    while True:
        p = list(range(1, n + 1))
        rng.shuffle(p)
        if is_ballot(p):
            return tuple(p)


def suite_roundtrip(check, max_n: int, rng: random.Random, samples: int = 500) -> None:
    bad_extract = bad_psi = bad_stats = 0
    for _ in range(samples):
        p = random_ballot(rng.randint(0, max_n), rng)
        dec = extract_linear(p)
        bad_extract += insert_properly(dec.skeleton, dec.factors) != p
        cs = Psi(p)
        q = cycles_to_permutation(cs, len(p))
        bad_psi += Psi_inv(cycle_decompose(q)) != p
        bad_stats += des(p) != exc_tilde(q) or peak_set(p) != cpeak_set(q)
    check(f"{samples} random ballot permutations: insert(extract) != id", 0, bad_extract)
    check(f"{samples} random ballot permutations: Psi_inv(Psi) != id", 0, bad_psi)
    check(f"{samples} random ballot permutations: statistic mismatches", 0, bad_stats)


def suite_wilf(check, max_n: int, rng: random.Random) -> None:
    for which in patterns.WILF_MAPS:
        source = {"varphi": (2, 1, 3), "eta": (1, 3, 2)}[which]
        target = patterns.TARGETS[which]
        for n in range(min(max_n, 8) + 1):
            dom = [p for p in permutations(range(1, n + 1)) if not patterns.contains(p, source)]
            img = [patterns.wilf_map(which, p) for p in dom]
            check(f"{which} n={n} injective", len(dom), len(set(img)))
            check(f"{which} n={n} lands in target class", 0, sum(patterns.contains(q, target) for q in img))
            check(f"{which} n={n} descent set changes", 0,
                  sum(descent_set(p) != descent_set(q) for p, q in zip(dom, img)))
    for n in range(1, max_n + 1):
        check(f"|B_{n}(213)| vs |B_{n}(312)|", patterns.avoid_count("ballot", n, (2, 1, 3)),
              patterns.avoid_count("ballot", n, (3, 1, 2)))
        check(f"|B_{n}(132)| vs |B_{n}(231)|", patterns.avoid_count("ballot", n, (1, 3, 2)),
              patterns.avoid_count("ballot", n, (2, 3, 1)))


# name -> (suite, largest allowed max_n)
SUITES: dict[str, tuple[Callable, int]] = {
    "cardinality": (suite_cardinality, 10),
    "spiro": (suite_spiro, 10),
    "wz": (suite_wz, 9),
    "main_thm": (suite_main_thm, 10),
    "box": (suite_box, 7),
    "table1": (suite_table1, 10),
    "gessel213": (suite_gessel213, 14),
    "gb231": (suite_gb231, 14),
    "egf": (suite_egf, 12),
    "clusters": (suite_clusters, 7),
    "roundtrip": (suite_roundtrip, 14),
    "wilf": (suite_wilf, 11),
}
# sizes used for each suite by ``all`` when no smaller max_n is requested
_ALL_SIZES = {"box": 6, "clusters": 6, "egf": 10, "gessel213": 12, "gb231": 12, "roundtrip": 12}


def verify_suite(name: str, max_n: int, seed: int = 0) -> Report:
    """Run one suite (or ``all``) and return its report; deterministic given seed."""
    if name == "all":
        report = Report("all", seed)
        start = time.perf_counter()
        for sub in SUITES:
            n = min(max_n, SUITES[sub][1], _ALL_SIZES.get(sub, max_n))
            report.checks.extend(verify_suite(sub, n, seed).checks)
        report.elapsed = time.perf_counter() - start
        return report
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; expected one of {sorted(SUITES) + ['all']}")
    fn, guard = SUITES[name]
    if not 0 <= max_n <= guard:
        raise ValueError(f"suite {name} supports 0 <= max_n <= {guard}")
    report = Report(name, seed)
    rng = random.Random(f"{name}:{seed}")
    start = time.perf_counter()
    fn(_Recorder(name, report), max_n, rng)
    report.elapsed = time.perf_counter() - start
    return report
