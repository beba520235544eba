"""Exact counts of Gessel walks and Gouyou-Beauchamps (GB) walks.

Gessel walks live in the quarter plane with steps N, S, NE, SW; ``F(n, h, b)``
counts n-step walks from (0, h) to (0, b).  GB walks use N, S, E, W and stay
in 0 <= y <= x; ``H(n, h, b)`` counts n-step walks from (h, 0) to (b, 0).
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

STEPS = {
    "gessel": ((0, 1), (0, -1), (1, 1), (-1, -1)),
    "gb": ((0, 1), (0, -1), (-1, 0), (1, 0)),
}
METHODS = ("step_dp", "recurrence", "brute")
BRUTE_MAX_N = 14

Point = tuple[int, int]


def _allowed(kind: str, x: int, y: int) -> bool:
    if kind == "gessel":
        return x >= 0 and y >= 0
    return 0 <= y <= x


def _check_kind(kind: str) -> None:
    if kind not in STEPS:
        raise ValueError(f"unknown walk kind {kind!r}; expected one of {sorted(STEPS)}")


def axis_point(kind: str, v: int) -> Point:
    """The start/end point with free coordinate v: (0, v) for gessel, (v, 0) for gb."""
    return (0, v) if kind == "gessel" else (v, 0)


@dataclass
class CountTable:
    """Counts keyed by (n, h, b); missing keys read as 0."""
    kind: str
    entries: dict = field(default_factory=dict)

    def __getitem__(self, key: tuple[int, int, int]) -> int:
        return self.entries.get(key, 0)

    def __setitem__(self, key, value) -> None:
        self.entries[key] = value


# -- step-by-step dynamic programme ----------------------------------------

def step_dp(kind: str, n: int, start: Point) -> list[dict[Point, int]]:
    """``layers[m][p]`` = number of m-step walks from start to p, for m = 0..n."""
    _check_kind(kind)
    if not _allowed(kind, *start):
        raise ValueError(f"start {start} outside the region")
    layers = [{tuple(start): 1}]
    for _ in range(n):
        nxt: dict[Point, int] = defaultdict(int)
        for (x, y), c in layers[-1].items():
            for dx, dy in STEPS[kind]:
                if _allowed(kind, x + dx, y + dy):
                    nxt[(x + dx, y + dy)] += c
        layers.append(dict(nxt))
    return layers


# -- first-passage recurrences ---------------------------------------------

@lru_cache(maxsize=None)
def F(n: int, h: int, b: int) -> int:
    """Gessel walks (0,h) -> (0,b) by first return to the y-axis."""
    if h < 0 or b < 0 or n < 0:
        return 0
    if n == 0:
        return int(h == b)
    total = F(n - 1, h + 1, b) + F(n - 1, h - 1, b)
    for i in range(n - 1):
        for a in range(0, h + i + 2):
            left = F(i, h + 1, a + 1)
            if left:
                total += left * F(n - 2 - i, a, b)
    return total


@lru_cache(maxsize=None)
def H(n: int, h: int, b: int) -> int:
    """GB walks (h,0) -> (b,0) by first return to the x-axis."""
    if h < 0 or b < 0 or n < 0:
        return 0
    if n == 0:
        return int(h == b)
    total = H(n - 1, h + 1, b) + H(n - 1, h - 1, b)
    for i in range(n - 1):
        for a in range(0, h + i + 1):
            left = H(i, h - 1, a)
            if left:
                total += left * H(n - 2 - i, a + 1, b)
    return total


# -- brute force -----------------------------------------------------------

def brute_axis_counts(kind: str, n: int, h: int) -> dict[tuple[int, int], int]:
    """Enumerate every walk of length <= n from the axis point h.

    Returns ``{(m, b): count}`` over walks of length m ending at axis point b.
    Prefixes that can no longer get back to the axis in time are pruned.
    """
    _check_kind(kind)
    if n > BRUTE_MAX_N:
        raise ValueError(f"brute force is limited to n <= {BRUTE_MAX_N}")
    steps = STEPS[kind]
    out: dict[tuple[int, int], int] = defaultdict(int)
    x0, y0 = axis_point(kind, h)
    stack = [(x0, y0, 0)]
    while stack:
        x, y, m = stack.pop()
        away = x if kind == "gessel" else y
        if away == 0:
            out[(m, y if kind == "gessel" else x)] += 1
        if m == n:
            continue
        for dx, dy in steps:
            nx, ny = x + dx, y + dy
            if _allowed(kind, nx, ny) and (nx if kind == "gessel" else ny) <= n - m - 1:
                stack.append((nx, ny, m + 1))
    return dict(out)


def brute_count(kind: str, n: int, start: Point, end: Point) -> int:
    _check_kind(kind)
    if n > BRUTE_MAX_N:
        raise ValueError(f"brute force is limited to n <= {BRUTE_MAX_N}")
    if not _allowed(kind, *start):
        return 0
    steps = STEPS[kind]
    ex, ey = end
    count = 0
    stack = [(start[0], start[1], 0)]
    while stack:
        x, y, m = stack.pop()
        if m == n:
            count += (x, y) == (ex, ey)
            continue
        left = n - m - 1
        for dx, dy in steps:
            nx, ny = x + dx, y + dy
            if _allowed(kind, nx, ny) and abs(nx - ex) <= left and abs(ny - ey) <= left:
                stack.append((nx, ny, m + 1))
    return count


# -- front door ------------------------------------------------------------

def count_walks(kind: str, n: int, start: Point, end: Point, method: str = "step_dp") -> int:
    _check_kind(kind)
    if n < 0 or min(start) < 0 or min(end) < 0:
        raise ValueError("n and coordinates must be non-negative")
    if not (_allowed(kind, *start) and _allowed(kind, *end)):
        raise ValueError(f"start and end must lie in the {kind} region")
    if method == "step_dp":
        return step_dp(kind, n, start)[n].get(tuple(end), 0)
    if method == "brute":
        return brute_count(kind, n, start, end)
    if method == "recurrence":
        free = 1 if kind == "gessel" else 0
        if start[1 - free] != 0 or end[1 - free] != 0:
            raise ValueError("the recurrence counts walks between axis points only")
        f = F if kind == "gessel" else H
        return f(n, start[free], end[free])
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def walk_table(kind: str, max_n: int, max_h: int, method: str = "recurrence") -> CountTable:
    """Axis-to-axis counts for n <= max_n and h, b <= max_h."""
    _check_kind(kind)
    table = CountTable(kind)
    if method == "step_dp":
        for h in range(max_h + 1):
            layers = step_dp(kind, max_n, axis_point(kind, h))
            for n, layer in enumerate(layers):
                for b in range(max_h + 1):
                    table[(n, h, b)] = layer.get(axis_point(kind, b), 0)
    elif method == "brute":
        for h in range(max_h + 1):
            counts = brute_axis_counts(kind, max_n, h)
            for n in range(max_n + 1):
                for b in range(max_h + 1):
                    table[(n, h, b)] = counts.get((n, b), 0)
    elif method == "recurrence":
        f = F if kind == "gessel" else H
        for n in range(max_n + 1):
            for h in range(max_h + 1):
                for b in range(max_h + 1):
                    table[(n, h, b)] = f(n, h, b)
    else:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    return table


def axis_total(kind: str, n: int, start: int = 0) -> int:
    """Walks of n steps from an axis point to anywhere on the same axis."""
    layer = step_dp(kind, n, axis_point(kind, start))[n]
    i = 0 if kind == "gessel" else 1
    return sum(c for p, c in layer.items() if p[i] == 0)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def gb_axis_closed_form(n: int) -> int:
    return catalan((n + 1) // 2) * catalan((n + 2) // 2)


def _rising(x: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for i in range(n):
        out *= x + i
    return out


def gessel_closed_form(n: int) -> int:
    """16^n (5/6)_n (1/2)_n / ((5/3)_n (2)_n), evaluated exactly."""
    if n < 0:
        raise ValueError("n must be non-negative")
    v = Fraction(16) ** n * _rising(Fraction(5, 6), n) * _rising(Fraction(1, 2), n)
    v /= _rising(Fraction(5, 3), n) * _rising(Fraction(2), n)
    if v.denominator != 1:
        raise ArithmeticError(f"closed form not integral at n={n}")
    return int(v)
