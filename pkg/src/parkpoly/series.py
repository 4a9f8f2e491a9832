"""Truncated formal power series over the rationals.

A series knows its coefficients of x^0..x^order and nothing beyond; results of
arithmetic carry the smaller order of their operands.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

DEFAULT_ORDER = 10


class PowerSeries:
    __slots__ = ("coefficients", "order")

    def __init__(self, coefficients: Iterable, order: int | None = None):
        coeffs = [Fraction(c) for c in coefficients]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("series order must be nonnegative")
        coeffs = coeffs[: order + 1]
        coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        self.coefficients: tuple[Fraction, ...] = tuple(coeffs)
        self.order = order

    @classmethod
    def constant(cls, c, order: int = DEFAULT_ORDER) -> "PowerSeries":
        return cls([c], order)

    @classmethod
    def x(cls, order: int = DEFAULT_ORDER) -> "PowerSeries":
        return cls([0, 1], order)

    def __getitem__(self, k: int) -> Fraction:
        if k < 0:
            return Fraction(0)
        if k > self.order:
            raise IndexError(f"coefficient x^{k} is beyond the truncation order {self.order}")
        return self.coefficients[k]

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError(f"cannot raise truncation order from {self.order} to {order}")
        return PowerSeries(self.coefficients, order)

    def _coerce(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return other
        return PowerSeries.constant(other, self.order)

    def __add__(self, other) -> "PowerSeries":
        other = self._coerce(other)
        n = min(self.order, other.order)
        return PowerSeries((self[i] + other[i] for i in range(n + 1)), n)

    __radd__ = __add__

    def __neg__(self) -> "PowerSeries":
        return PowerSeries((-c for c in self.coefficients), self.order)

    def __sub__(self, other) -> "PowerSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "PowerSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            c = Fraction(other)
            return PowerSeries((c * v for v in self.coefficients), self.order)
        n = min(self.order, other.order)
        return PowerSeries(
            (sum((self[i] * other[k - i] for i in range(k + 1)), Fraction(0)) for k in range(n + 1)),
            n,
        )

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, PowerSeries):
            return self.order == other.order and self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.coefficients, self.order))

    def __repr__(self) -> str:
        return f"PowerSeries({[str(c) for c in self.coefficients]}, order={self.order})"

    def inverse(self) -> "PowerSeries":
        if self[0] == 0:
            raise ValueError("series with zero constant term has no inverse")
        out = [1 / self[0]]
        for k in range(1, self.order + 1):
            out.append(-sum((self[i] * out[k - i] for i in range(1, k + 1)), Fraction(0)) / self[0])
        return PowerSeries(out, self.order)

    def __truediv__(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return self * other.inverse()
        return self * (1 / Fraction(other))


def ps_mul(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    return f * g


def ps_compose(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """f(g(x)); g must have zero constant term."""
    if g[0] != 0:
        raise ValueError("inner series of a composition must have zero constant term")
    n = min(f.order, g.order)
    g = g.truncate(n)
    acc = PowerSeries.constant(f[n], n)
    for k in range(n - 1, -1, -1):
        acc = acc * g + f[k]
    return acc


def ps_exp(f: PowerSeries) -> PowerSeries:
    if f[0] != 0:
        raise ValueError("exp needs a series with zero constant term")
    # E' = f' E  =>  k e_k = sum_{j=1..k} j f_j e_{k-j}
    e = [Fraction(1)]
    for k in range(1, f.order + 1):
        e.append(sum((j * f[j] * e[k - j] for j in range(1, k + 1)), Fraction(0)) / k)
    return PowerSeries(e, f.order)


def ps_sqrt(f: PowerSeries) -> PowerSeries:
    if f[0] != 1:
        raise ValueError("sqrt needs a series with constant term 1")
    r = [Fraction(1)]
    for k in range(1, f.order + 1):
        r.append((f[k] - sum((r[j] * r[k - j] for j in range(1, k)), Fraction(0))) / 2)
    return PowerSeries(r, f.order)


def ps_derive(f: PowerSeries) -> PowerSeries:
    if f.order == 0:
        raise ValueError("derivative of an order-0 series carries no information")
    return PowerSeries((k * f[k] for k in range(1, f.order + 1)), f.order - 1)


def ps_integrate(f: PowerSeries) -> PowerSeries:
    """Antiderivative with zero constant term."""
    return PowerSeries([0] + [f[k] / (k + 1) for k in range(f.order + 1)], f.order + 1)


# -- the generating-function spine --------------------------------------------------


def g_b_series(b: int, order: int = DEFAULT_ORDER) -> PowerSeries:
    """sum_{n>=1} (bn)^(n-1)/n! x^n."""
    if b < 1 or order < 1:
        raise ValueError(f"need b >= 1 and order >= 1, got b={b}, order={order}")
    return PowerSeries([0] + [Fraction((b * n) ** (n - 1), factorial(n)) for n in range(1, order + 1)], order)


def verify_functional_equation(b: int, order: int = DEFAULT_ORDER, g: PowerSeries | None = None) -> bool:
    """g == x * exp(b g) through ``order``."""
    g = g_b_series(b, order) if g is None else g
    rhs = PowerSeries.x(g.order) * ps_exp(b * g)
    return g == rhs


def f_ab_series(a: int, b: int, order: int = DEFAULT_ORDER) -> PowerSeries:
    """exp((a - b/2 - 1) g_b) / sqrt(1 - b g_b); the x^n coefficient is Vol(X_n(a, b))/n!."""
    if a < 1 or b < 1:
        raise ValueError(f"need a, b >= 1, got ({a}, {b})")
    g = g_b_series(b, order)
    return ps_exp((Fraction(a) - Fraction(b, 2) - 1) * g) * ps_sqrt(1 - b * g).inverse()


def ck_from_egf(order: int) -> list[int]:
    s = ps_sqrt(PowerSeries([1, -2], order)) * ps_exp(PowerSeries.x(order))
    out = []
    for k in range(order + 1):
        c = factorial(k) * s[k]
        if c.denominator != 1:
            raise ArithmeticError(f"c_{k} = {c} is not an integer")
        out.append(c.numerator)
    return out


def ck_egf_check(order: int, reference: Sequence[int] | None = None) -> bool:
    """c_k read off sqrt(1-2x)e^x satisfy c_0 = 1 and c_k = 2(k-1)(c_{k-1} - c_{k-2});
    optionally also equal ``reference``."""
    if order < 2:
        raise ValueError(f"order must be >= 2, got {order}")
    c = ck_from_egf(order)
    if c[0] != 1:
        return False
    if any(c[k] != 2 * (k - 1) * (c[k - 1] - c[k - 2]) for k in range(2, order + 1)):
        return False
    return reference is None or list(reference[: order + 1]) == c
