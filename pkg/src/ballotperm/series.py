"""Exact truncated power series in z whose coefficients are polynomials in t."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

Poly = tuple[Fraction, ...]


def _padd(a: Poly, b: Poly, sign: int = 1) -> Poly:
    m = max(len(a), len(b))
    a = a + (Fraction(0),) * (m - len(a))
    b = b + (Fraction(0),) * (m - len(b))
    return _trim(tuple(x + sign * y for x, y in zip(a, b)))


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(tuple(out))


def _trim(p: Poly) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


@dataclass(frozen=True)
class RationalSeries:
    """``coeffs[n]`` is the polynomial in t multiplying z**n; terms above ``order`` are unknown."""
    coeffs: tuple[Poly, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_terms(cls, terms: dict[tuple[int, int], int], order: int) -> "RationalSeries":
        rows = [[] for _ in range(order + 1)]
        for (n, k), c in terms.items():
            if n <= order:
                row = rows[n]
                row.extend([Fraction(0)] * (k + 1 - len(row)))
                row[k] += Fraction(c)
        return cls(tuple(_trim(tuple(r)) for r in rows))

    def truncate(self, order: int) -> "RationalSeries":
        return RationalSeries(self.coeffs[:order + 1])

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        m = min(self.order, other.order)
        return RationalSeries(tuple(_padd(a, b) for a, b in zip(self.coeffs[:m + 1], other.coeffs)))

    def __sub__(self, other: "RationalSeries") -> "RationalSeries":
        m = min(self.order, other.order)
        return RationalSeries(tuple(_padd(a, b, -1) for a, b in zip(self.coeffs[:m + 1], other.coeffs)))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalSeries(tuple(_trim(tuple(x * other for x in p)) for p in self.coeffs))
        m = min(self.order, other.order)
        out = []
        for n in range(m + 1):
            acc: Poly = ()
            for i in range(n + 1):
                acc = _padd(acc, _pmul(self.coeffs[i], other.coeffs[n - i]))
            out.append(acc)
        return RationalSeries(tuple(out))

    def inverse(self) -> "RationalSeries":
        """Multiplicative inverse; the z**0 coefficient must be a nonzero constant."""
        c0 = self.coeffs[0]
        if len(c0) != 1:
            raise ValueError("constant term must be a nonzero constant")
        inv0 = 1 / c0[0]
        out: list[Poly] = [(inv0,)]
        for n in range(1, self.order + 1):
            acc: Poly = ()
            for i in range(1, n + 1):
                acc = _padd(acc, _pmul(self.coeffs[i], out[n - i]))
            out.append(_trim(tuple(-inv0 * x for x in acc)))
        return RationalSeries(tuple(out))

    def sqrt(self) -> "RationalSeries":
        """Square root with constant term 1 by Newton iteration, doubling precision."""
        if self.coeffs[0] != (Fraction(1),):
            raise ValueError("sqrt needs constant term 1")
        y = RationalSeries(((Fraction(1),),))
        prec = 0
        while prec < self.order:
            prec = min(2 * prec + 1, self.order)
            f = self.truncate(prec)
            y = y.truncate(prec)
            y = RationalSeries(y.coeffs + ((),) * (prec - y.order))
            y = (y + f * y.inverse()) * Fraction(1, 2)
        return y

    def at_t(self, t) -> tuple[Fraction, ...]:
        return tuple(sum((c * Fraction(t) ** k for k, c in enumerate(p)), Fraction(0)) for p in self.coeffs)

    def coefficient(self, n: int, k: int = 0) -> Fraction:
        p = self.coeffs[n]
        return p[k] if k < len(p) else Fraction(0)

    def scaled_counts(self) -> list[list[int]]:
        """n! times each coefficient, asserted integral."""
        out = []
        for n, p in enumerate(self.coeffs):
            row = []
            for c in p:
                v = c * factorial(n)
                if v.denominator != 1:
                    raise ArithmeticError(f"non-integral coefficient at z^{n}")
                row.append(int(v))
            out.append(row)
        return out


def series_coefficients(kind: str, N: int) -> RationalSeries:
    """Truncated EGF of ballot permutations (``b_egf``, univariate) or of OCPs by order (``ocp_egf``)."""
    if N < 0:
        raise ValueError("N must be non-negative")
    one = {(0, 0): 1}
    if kind == "b_egf":
        num = RationalSeries.from_terms({**one, (1, 0): 1}, N)
        den = RationalSeries.from_terms({**one, (1, 0): -1}, N)
    elif kind == "ocp_egf":
        num = RationalSeries.from_terms({**one, (1, 0): -1, (1, 1): 1}, N)
        den = RationalSeries.from_terms({**one, (1, 0): -1, (1, 1): -1}, N)
    else:
        raise ValueError(f"unknown series kind {kind!r}")
    return (num * den.inverse()).sqrt()


def b_numbers(N: int) -> list[int]:
    return [row[0] if row else 0 for row in series_coefficients("b_egf", N).scaled_counts()]


def counts_by_order(N: int) -> list[list[int]]:
    """``[n][k]`` = n! [t^k z^n] of the OCP series."""
    return series_coefficients("ocp_egf", N).scaled_counts()

