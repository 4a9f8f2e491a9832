"""Exact integer/rational primitives shared by every formula in the package.

All rationals are :class:`fractions.Fraction`, which already keeps values in
lowest terms with a positive denominator.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

Rational = Fraction


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0; zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"binomial with negative upper index n={n} is not supported")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def odd_double_factorial(m: int) -> int:
    """m!! for odd m >= -3, with (-1)!! = 1 and (-3)!! = -1.

    The negative values follow from m!! = (m+2)!!/(m+2).
    """
    if m % 2 == 0:
        raise ValueError(f"odd_double_factorial needs an odd argument, got {m}")
    if m < -3:
        raise ValueError(f"odd_double_factorial is undefined below -3, got {m}")
    if m == -3:
        return -1
    result = 1
    while m > 1:
        result *= m
        m -= 2
    return result


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling numbers of the second kind."""
    if n < 0:
        raise ValueError(f"stirling2 needs n >= 0, got {n}")
    if n == 0:
        return 1 if k == 0 else 0
    if k <= 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def multinomial(counts: Iterable[int]) -> int:
    """(sum counts)! / prod(count!)."""
    total = 0
    result = 1
    for c in counts:
        total += c
        result *= comb(total, c)
    return result


def exact_div(num: int, den: int) -> int:
    """Integer division that refuses to round."""
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def as_integer(x: Fraction, what: str = "value") -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {x}")
    return x.numerator


class Polynomial:
    """Univariate polynomial with exact rational coefficients (index = degree)."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable = ()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients: tuple[Fraction, ...] = tuple(coeffs)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def coefficient(self, d: int) -> Fraction:
        return self.coefficients[d] if 0 <= d < len(self.coefficients) else Fraction(0)

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coefficients), len(other.coefficients))
        return Polynomial(self.coefficient(i) + other.coefficient(i) for i in range(n))

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return Polynomial(c * other for c in self.coefficients)
        if not self.coefficients or not other.coefficients:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, p in enumerate(self.coefficients):
            for j, q in enumerate(other.coefficients):
                out[i + j] += p * q
        return Polynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coefficients]})"

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for d in range(self.degree, -1, -1):
            c = self.coefficients[d]
            if c == 0:
                continue
            mono = "" if d == 0 else ("t" if d == 1 else f"t^{d}")
            if mono and c == 1:
                terms.append(mono)
            elif mono:
                terms.append(f"({c})*{mono}")
            else:
                terms.append(f"{c}")
        return " + ".join(terms)


def lagrange_interpolate(points: Sequence[tuple]) -> Polynomial:
    """Unique polynomial of degree < len(points) through the given (x, y) pairs."""
    if not points:
        raise ValueError("lagrange_interpolate needs at least one point")
    xs = [Fraction(x) for x, _ in points]
    ys = [Fraction(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise ValueError("lagrange_interpolate needs distinct x-values")
    result = Polynomial()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        basis = Polynomial([1])
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * Polynomial([-xj, 1])
                denom *= xi - xj
        result = result + basis * (yi / denom)
    return result


class RationalMatrix:
    """Dense rectangular matrix over the rationals (rank and solve only)."""

    def __init__(self, rows: Iterable[Iterable]):
        self.entries = [[Fraction(v) for v in row] for row in rows]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        if any(len(r) != self.cols for r in self.entries):
            raise ValueError("RationalMatrix rows must all have the same length")

    def _echelon(self, rhs=None):
        m = [row[:] for row in self.entries]
        if rhs is not None:
            for row, v in zip(m, rhs):
                row.append(Fraction(v))
        pivots = []
        r = 0
        for c in range(self.cols):
            pivot = next((i for i in range(r, self.rows) if m[i][c] != 0), None)
            if pivot is None:
                continue
            m[r], m[pivot] = m[pivot], m[r]
            inv = 1 / m[r][c]
            m[r] = [v * inv for v in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [vi - f * vr for vi, vr in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return m, pivots

    def rank(self) -> int:
        if not self.entries:
            return 0
        return len(self._echelon()[1])

    def solve(self, rhs: Sequence) -> tuple[Fraction, ...] | None:
        """Unique solution of M x = rhs for square nonsingular M, else None."""
        if self.rows != self.cols:
            raise ValueError("solve needs a square matrix")
        m, pivots = self._echelon(rhs)
        if len(pivots) < self.cols:
            return None
        return tuple(m[i][-1] for i in range(self.cols))


def rank(rows: Sequence[Sequence]) -> int:
    return RationalMatrix(rows).rank() if rows else 0


def affine_rank(points: Sequence[Sequence]) -> int:
    """Dimension of the affine span of a nonempty point set."""
    if not points:
        raise ValueError("affine_rank needs at least one point")
    dim = len(points[0])
    if any(len(p) != dim for p in points):
        raise ValueError("affine_rank needs points of equal length")
    base = points[0]
    diffs = [[Fraction(x) - y for x, y in zip(p, base)] for p in points[1:]]
    diffs = [d for d in diffs if any(d)]
    return rank(diffs)
