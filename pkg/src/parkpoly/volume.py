"""Volume formulas for X_n(a, b), PF_n and P(n, p), plus two independent oracles.

Every function says whether it computes the Euclidean (relative) volume or
the normalized volume dim! * Vol natively; :class:`VolumeResult` carries both.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import comb, factorial

from . import arith
from .arith import Polynomial, lagrange_interpolate
from .counting import lattice_points_in_dilate
from .families import ConstraintSystem, XpfParams

PERMANENT_MAX_N = 6


@dataclass(frozen=True)
class VolumeResult:
    euclidean: Fraction
    normalized: int
    source: str
    dim: int

    def __post_init__(self):
        if self.normalized < 0:
            raise ArithmeticError(f"negative normalized volume {self.normalized} from {self.source}")
        if Fraction(self.normalized) != factorial(self.dim) * self.euclidean:
            raise ArithmeticError(
                f"normalized volume {self.normalized} != {self.dim}! * {self.euclidean} ({self.source})"
            )

    @classmethod
    def from_euclidean(cls, vol: Fraction, dim: int, source: str) -> "VolumeResult":
        norm = arith.as_integer(factorial(dim) * Fraction(vol), f"normalized volume ({source})")
        return cls(Fraction(vol), norm, source, dim)

    @classmethod
    def from_normalized(cls, nvol, dim: int, source: str) -> "VolumeResult":
        norm = arith.as_integer(Fraction(nvol), f"normalized volume ({source})")
        return cls(Fraction(norm, factorial(dim)), norm, source, dim)


# -- X_n(a, b) ---------------------------------------------------------------


def closed_form_value(p: XpfParams) -> Fraction:
    """The closed-form sum for the normalized volume, before any sanity checks."""
    n, a, b = p.n, p.a, p.b
    base = 2 * n - 1 + Fraction(2 * a - 2, b)
    total = sum(
        (comb(n, i) * arith.odd_double_factorial(2 * i - 3) * base ** (n - i) for i in range(n + 1)),
        Fraction(0),
    )
    return -factorial(n) * Fraction(b, 2) ** n * total


def nvol_closed_form(p: XpfParams) -> VolumeResult:
    return VolumeResult.from_normalized(closed_form_value(p), p.n, "closed")


def recursive_volumes(n_max: int, a: int, b: int) -> list[Fraction]:
    """Euclidean volumes V_0..V_{n_max} of X_n(a, b) from the pyramid recursion."""
    vols = [Fraction(1)]
    for n in range(1, n_max + 1):
        s = Fraction(0)
        for k in range(n):
            s += comb(n, k) * Fraction((b * (n - k)) ** (n - k - 1) * (n * b + k * b - b + 2 * a - 2), 2) * vols[k]
        vols.append(s / n)
    return vols


def vol_recursive_generalized(p: XpfParams) -> VolumeResult:
    vol = recursive_volumes(p.n, p.a, p.b)[p.n]
    return VolumeResult.from_euclidean(vol, p.n, "recursive")


def volume_all(p: XpfParams) -> list[VolumeResult]:
    return [nvol_closed_form(p), vol_recursive_generalized(p)]


# -- classical parking function polytope PF_n -------------------------------------


@lru_cache(maxsize=None)
def nvol_aw_recursion(n: int) -> int:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        return 1
    if n == 1:
        return 0
    s = Fraction(0)
    for k in range(n):
        s += comb(n, k) * Fraction((n - k) ** (n - k - 1) * (n + k - 1), 2) * Fraction(nvol_aw_recursion(k), factorial(k))
    return arith.as_integer(factorial(n - 1) * s, "nVol(PF_n)")


@lru_cache(maxsize=None)
def nvol_bcc_recursion(n: int, p: int) -> int:
    """Normalized volume of the partial permutahedron P(n, p), p >= n - 1."""
    if n < 0 or p < n - 1:
        raise ValueError(f"recursion only valid for n >= 0 and p >= n - 1, got ({n}, {p})")
    if n == 0:
        return 1
    s = Fraction(0)
    for k in range(1, n + 1):
        s += (
            Fraction(k) ** (k - 2)
            * Fraction(nvol_bcc_recursion(n - k, p - k), factorial(n - k))
            * (k * p - comb(k, 2))
            * comb(n, k)
        )
    return arith.as_integer(factorial(n - 1) * s, f"nVol(P({n},{p}))")


def nvol_shephard_iv(n: int) -> int:
    if n < 2:
        raise ValueError(f"formula needs n >= 2, got {n}")
    s = Fraction(0)
    for i in range(n + 1):
        # the i = n term carries (2n-1)^(-1)
        s += (2 * i - 1) * arith.odd_double_factorial(2 * i - 1) * comb(n, i) * Fraction(2 * n - 1) ** (n - i - 1)
    return arith.as_integer(Fraction(factorial(n), 2 ** n) * s, "nVol(PF_n)")


def nvol_shephard_v(n: int) -> int:
    if n < 2:
        raise ValueError(f"formula needs n >= 2, got {n}")
    s = sum(arith.odd_double_factorial(2 * i + 1) * comb(n - 2, i) * (2 * n - 1) ** (n - i - 2) for i in range(n - 1))
    return arith.as_integer(Fraction(factorial(n) * (n - 1), 2 ** (n - 1)) * s, "nVol(PF_n)")


def _has_perfect_matching(rows: tuple[tuple[int, int], ...], n: int) -> bool:
    match_col = [-1] * n

    def augment(r: int, seen: list[bool]) -> bool:
        for c in rows[r]:
            if not seen[c]:
                seen[c] = True
                if match_col[c] < 0 or augment(match_col[c], seen):
                    match_col[c] = r
                    return True
        return False

    return all(augment(r, [False] * n) for r in range(n))


def count_permanent_positive(n: int) -> int:
    """Number of n x n 0/1 matrices with two 1s per row and positive permanent.

    Row order does not affect the permanent, so each multiset of rows is tested
    once and weighted by its number of orderings.
    """
    if not 1 <= n <= PERMANENT_MAX_N:
        raise ValueError(f"permanent census supports 1 <= n <= {PERMANENT_MAX_N}, got {n}")
    pairs = list(combinations(range(n), 2))
    total = 0
    for rows in combinations_with_replacement(pairs, n):
        if _has_perfect_matching(rows, n):
            total += arith.multinomial([rows.count(r) for r in set(rows)])
    return total


# -- WZ certificate ------------------------------------------------------------


def wz_summand(n: int, i: int) -> Fraction:
    if i < 0 or i > n:
        return Fraction(0)
    return (
        comb(n, i)
        * Fraction(factorial(2 * i), 2 ** i * factorial(i) * (2 * i - 1))
        * Fraction(2 * n - 1) ** (n - i - 1)
        * ((2 * i - 1) ** 2 + (2 * n - 1))
    )


def wz_certificate(n: int, i: int) -> Fraction:
    return Fraction((-2 * n + 1) * i, 2 * i * i - 2 * i + n)


def wz_difference(n: int) -> Fraction:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return sum((wz_summand(n, i) for i in range(n + 1)), Fraction(0))


def wz_certificate_holds(n: int) -> bool:
    """(G(n,i+1) - G(n,i)) / F(n,i) == 1 wherever F(n,i) != 0, with G = R F."""
    def g(i: int) -> Fraction:
        return wz_certificate(n, i) * wz_summand(n, i)

    for i in range(n + 1):
        f = wz_summand(n, i)
        if f != 0 and (g(i + 1) - g(i)) / f != 1:
            return False
    return True


# -- partial permutahedra: the c_k route and the explicit sum -----------------------


def ck_sequence(n_max: int) -> list[int]:
    c = [1, 0]
    for k in range(2, n_max + 1):
        c.append(2 * (k - 1) * (c[k - 1] - c[k - 2]))
    return c[: n_max + 1]


def nvol_pp_ck(n: int, p: int) -> int:
    if p < n - 1:
        raise ValueError(f"need p >= n - 1, got ({n}, {p})")
    c = ck_sequence(n)
    s = sum((comb(n, k) * Fraction(c[k], 2 ** k) * p ** (n - k) for k in range(n + 1)), Fraction(0))
    return arith.as_integer(factorial(n) * s, f"nVol(P({n},{p}))")


def nvol_pp_explicit(n: int, p: int) -> int:
    if p < n - 1:
        raise ValueError(f"need p >= n - 1, got ({n}, {p})")
    s = sum(comb(n, i) * arith.odd_double_factorial(2 * i - 3) * (2 * p + 1) ** (n - i) for i in range(n + 1))
    return arith.as_integer(-Fraction(factorial(n), 2 ** n) * s, f"nVol(P({n},{p}))")


# -- Ehrhart oracle and weakly increasing polytopes ---------------------------------


def ehrhart_counts(sys: ConstraintSystem, tmax: int) -> list[int]:
    return [lattice_points_in_dilate(sys, t) for t in range(tmax + 1)]


def ehrhart_polynomial(counts: list[int]) -> Polynomial:
    return lagrange_interpolate(list(enumerate(counts)))


def ehrhart_volume_oracle(sys: ConstraintSystem, dim: int, tmax: int | None = None) -> VolumeResult:
    """Leading Ehrhart coefficient as Euclidean (relative) volume; dim! times it as
    normalized volume.  Counts t = 0..tmax, default tmax = dim."""
    tmax = dim if tmax is None else tmax
    if tmax < dim:
        raise ValueError(f"need at least dim + 1 = {dim + 1} dilates, got tmax={tmax}")
    poly = ehrhart_polynomial(ehrhart_counts(sys, tmax))
    if poly.degree > dim:
        raise ArithmeticError(f"Ehrhart fit has degree {poly.degree} > dim {dim}: unbounded or miscounted")
    if poly(0) != 1:
        raise ArithmeticError(f"Ehrhart polynomial has constant term {poly(0)}, expected 1")
    return VolumeResult.from_euclidean(poly.coefficient(dim), dim, "ehrhart")


def ps_dimension(sys: ConstraintSystem) -> int:
    """Dimension of a Pitman-Stanley polytope: coordinate i is free iff its prefix bound is positive."""
    return sum(1 for bound in sys.prefix_bounds if bound > 0)


def nvol_wipf(n: int) -> int:
    """Normalized volume of the (n-1)-dimensional X^w_n(1, 1)."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return n ** (n - 2)
