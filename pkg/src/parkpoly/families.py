"""Polytope families: vertex generators, H-descriptions, membership tests and
the integral equivalences between them.

Families covered:

* ``X_n(a, b)`` -- convex hull of x-parking functions for x = (a, b, ..., b)
* ``P(n, p)``   -- partial permutahedra
* ``Pi(r)``     -- permutahedra
* ``X^w_n(a, b)`` -- convex hull of weakly increasing x-parking functions
* ``PS_n(x)``   -- Pitman-Stanley polytopes
* ``P_{a,b}``   -- rational (a, b)-parking function polytopes
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from math import gcd
from typing import Iterator, Mapping, Sequence

from . import arith

LatticePoint = tuple[int, ...]

SYMMETRIC = "symmetric"
PREFIX = "prefix"


@dataclass(frozen=True)
class XpfParams:
    n: int
    a: int
    b: int = 1

    def __post_init__(self):
        for name in ("n", "a", "b"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 1:
                raise ValueError(f"XpfParams.{name} must be a positive integer, got {v!r}")

    @property
    def x(self) -> tuple[int, ...]:
        return (self.a,) + (self.b,) * (self.n - 1)

    def cap(self, i: int) -> int:
        """Bound a + (i-1)b on the i-th smallest entry (1-based)."""
        return self.a + (i - 1) * self.b


@dataclass(frozen=True)
class ConstraintSystem:
    """H-description in one of two compressed shapes.

    ``symmetric``: x_i >= lower_bounds[i] and, for each k in ``cardinality_bounds``,
    the sum of ANY k coordinates is at most ``cardinality_bounds[k]``.
    ``redundant_bounds`` holds valid cardinality bounds that do not cut the set.

    ``prefix``: y_i >= 0 and y_1 + ... + y_i <= prefix_bounds[i-1].
    """

    kind: str
    n: int
    lower_bounds: tuple[int, ...] = ()
    cardinality_bounds: Mapping[int, int] = field(default_factory=dict)
    redundant_bounds: Mapping[int, int] = field(default_factory=dict)
    prefix_bounds: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind == SYMMETRIC:
            if len(self.lower_bounds) != self.n:
                raise ValueError("symmetric system needs one lower bound per coordinate")
            merged = sorted({**self.cardinality_bounds, **self.redundant_bounds}.items())
            if any(k < 1 or k > self.n for k, _ in merged):
                raise ValueError("cardinality bound index out of range")
            rhs = [v for _, v in merged]
            if any(u >= v for u, v in zip(rhs, rhs[1:])):
                raise ValueError("cardinality bounds must increase strictly with k")
        elif self.kind == PREFIX:
            if len(self.prefix_bounds) != self.n:
                raise ValueError("prefix system needs one bound per coordinate")
            if any(u > v for u, v in zip(self.prefix_bounds, self.prefix_bounds[1:])):
                raise ValueError("prefix bounds must be nondecreasing")
        else:
            raise ValueError(f"unknown constraint kind {self.kind!r}")

    def bounds(self, include_redundant: bool = False) -> dict[int, int]:
        if include_redundant:
            return dict(sorted({**self.cardinality_bounds, **self.redundant_bounds}.items()))
        return dict(sorted(self.cardinality_bounds.items()))

    def contains(self, pt: Sequence[int], t: int = 1, include_redundant: bool = False) -> bool:
        """Membership of ``pt`` in the t-th dilate t*P."""
        if t <= 0:
            raise ValueError(f"dilation factor must be positive, got {t}")
        if len(pt) != self.n:
            raise ValueError(f"point of length {len(pt)} in a system of dimension {self.n}")
        if self.kind == PREFIX:
            s = 0
            for y, bound in zip(pt, self.prefix_bounds):
                if y < 0:
                    return False
                s += y
                if s > t * bound:
                    return False
            return True
        if any(x < t * lo for x, lo in zip(pt, self.lower_bounds)):
            return False
        top = sorted(pt, reverse=True)
        prefix = [0]
        for x in top:
            prefix.append(prefix[-1] + x)
        return all(prefix[k] <= t * rhs for k, rhs in self.bounds(include_redundant).items())

    def explicit_inequalities(self, include_redundant: bool = False) -> list[tuple[tuple[int, ...], int]]:
        """Expand to rows (normal, rhs) meaning normal . x <= rhs."""
        n = self.n
        rows = []
        if self.kind == PREFIX:
            for i in range(n):
                rows.append((tuple(-1 if j == i else 0 for j in range(n)), 0))
            for i, bound in enumerate(self.prefix_bounds):
                rows.append((tuple(1 if j <= i else 0 for j in range(n)), bound))
            return rows
        for i, lo in enumerate(self.lower_bounds):
            rows.append((tuple(-1 if j == i else 0 for j in range(n)), -lo))
        for k, rhs in self.bounds(include_redundant).items():
            for subset in _subsets(n, k):
                rows.append((tuple(1 if j in subset else 0 for j in range(n)), rhs))
        return rows


def _subsets(n: int, k: int) -> Iterator[frozenset[int]]:
    for c in combinations(range(n), k):
        yield frozenset(c)


def distinct_permutations(seq: Sequence[int]) -> Iterator[LatticePoint]:
    """Each distinct rearrangement of ``seq`` exactly once (lexicographic order)."""
    items = sorted(seq)
    n = len(items)
    while True:
        yield tuple(items)
        i = n - 2
        while i >= 0 and items[i] >= items[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while items[j] <= items[i]:
            j -= 1
        items[i], items[j] = items[j], items[i]
        items[i + 1:] = reversed(items[i + 1:])


# -- x-parking function polytopes ------------------------------------------------


def xpf_layer_vector(p: XpfParams, k: int) -> LatticePoint:
    """(1,...,1 [k times], a+kb, a+(k+1)b, ..., a+(n-1)b)."""
    return (1,) * k + tuple(p.a + j * p.b for j in range(k, p.n))


def xpf_vertices(p: XpfParams) -> set[LatticePoint]:
    out: set[LatticePoint] = set()
    for k in range(p.n + 1):
        out.update(distinct_permutations(xpf_layer_vector(p, k)))
    return out


def cardinality_rhs(p: XpfParams, k: int) -> int:
    """Sum of the k largest caps: ka + b*k(2n-k-1)/2."""
    return k * p.a + arith.exact_div(p.b * k * (2 * p.n - k - 1), 2)


def xpf_constraints(p: XpfParams) -> ConstraintSystem:
    n = p.n
    if p.a == 1:
        ks = [k for k in range(1, n - 1)] + [n]
        redundant = {n - 1: cardinality_rhs(p, n - 1)} if n >= 2 else {}
    else:
        ks = list(range(1, n + 1))
        redundant = {}
    return ConstraintSystem(
        kind=SYMMETRIC,
        n=n,
        lower_bounds=(1,) * n,
        cardinality_bounds={k: cardinality_rhs(p, k) for k in ks},
        redundant_bounds=redundant,
    )


def xpf_membership(p: XpfParams, t: int, pt: Sequence[int]) -> bool:
    return xpf_constraints(p).contains(pt, t)


def is_x_parking_function(p: XpfParams, pt: Sequence[int]) -> bool:
    if len(pt) != p.n:
        raise ValueError(f"expected a point of length {p.n}, got {len(pt)}")
    return all(v >= 1 for v in pt) and all(v <= p.cap(i) for i, v in enumerate(sorted(pt), 1))


def layer_of(p: XpfParams, v: Sequence[int]) -> int:
    """Layer n - k of a vertex; k is the number of coordinates equal to 1.

    For a = 1 the k = 0 and k = 1 forms coincide; taking k as the count of ones
    picks the larger of the two, so the top layer n is never used.
    """
    ones = sum(1 for x in v if x == 1)
    if len(v) != p.n or tuple(sorted(v)) != tuple(sorted(xpf_layer_vector(p, ones))):
        raise ValueError(f"{tuple(v)} is not a vertex of X_{p.n}({p.a},{p.b})")
    return p.n - ones


def dilate_map(pt: Sequence[int], d: int) -> LatticePoint:
    """The dilation x -> d(x - 1) + 1 fixing the all-ones point."""
    return tuple(d * (x - 1) + 1 for x in pt)


# -- partial permutahedra and permutahedra -------------------------------------


def pp_vertices(n: int, p: int) -> set[LatticePoint]:
    if n < 1 or p < 0:
        raise ValueError(f"partial permutahedron needs n >= 1 and p >= 0, got ({n}, {p})")
    out: set[LatticePoint] = set()
    for k in range(min(n, p) + 1):
        out.update(distinct_permutations((0,) * (n - k) + tuple(range(p - k + 1, p + 1))))
    return out


def xpf_pp_equivalence(n: int, p: int) -> XpfParams:
    """Parameters (n, a, b) with P(n, p) + (1,...,1) = X_n(a, b)."""
    if n < 1 or p < n - 1:
        raise ValueError(f"no equivalence for P({n}, {p}): need n >= 1 and p >= n - 1")
    if n == 1:
        return XpfParams(1, p + 1, 1)
    return XpfParams(n, p - n + 2, 1)


def verify_xpf_pp(n: int, p: int) -> bool:
    q = xpf_pp_equivalence(n, p)
    shifted = {tuple(x + 1 for x in v) for v in pp_vertices(n, p)}
    return shifted == xpf_vertices(q)


def permutahedron_vertices(r: Sequence[int]) -> set[LatticePoint]:
    if not r:
        raise ValueError("permutahedron needs a nonempty vector")
    return set(distinct_permutations(r))


# -- weakly increasing polytopes and Pitman-Stanley polytopes --------------------


def wipf_vertices(p: XpfParams) -> set[LatticePoint]:
    """Weakly increasing vectors built from binary min/max choices.

    v_1 is 1 or a, and each v_{i+1} either repeats v_i or jumps to a + i*b.
    """
    out: set[LatticePoint] = set()
    for choices in product((False, True), repeat=p.n):
        v = [p.a if choices[0] else 1]
        for i in range(1, p.n):
            v.append(p.cap(i + 1) if choices[i] else v[-1])
        out.add(tuple(v))
    return out


def wipf_constraints(p: XpfParams) -> list[tuple[tuple[int, ...], int]]:
    """Explicit rows normal . x <= rhs for X^w_n(a, b):
    x_1 >= 1, x_i <= x_{i+1}, x_i <= a + (i-1)b."""
    n = p.n
    rows = [(tuple(-1 if j == 0 else 0 for j in range(n)), -1)]
    for i in range(n - 1):
        rows.append((tuple(1 if j == i else -1 if j == i + 1 else 0 for j in range(n)), 0))
    for i in range(n):
        rows.append((tuple(1 if j == i else 0 for j in range(n)), p.cap(i + 1)))
    return rows


def is_weakly_increasing_xpf(p: XpfParams, pt: Sequence[int]) -> bool:
    return (
        len(pt) == p.n
        and pt[0] >= 1
        and all(u <= v for u, v in zip(pt, pt[1:]))
        and all(v <= p.cap(i) for i, v in enumerate(pt, 1))
    )


def ps_constraints(x: Sequence[int]) -> ConstraintSystem:
    if not x:
        raise ValueError("Pitman-Stanley polytope needs a nonempty vector")
    if any(v < 0 for v in x):
        raise ValueError("Pitman-Stanley vector must be nonnegative")
    bounds = []
    s = 0
    for v in x:
        s += v
        bounds.append(s)
    return ConstraintSystem(kind=PREFIX, n=len(x), prefix_bounds=tuple(bounds))


def wipf_ps_vector(p: XpfParams) -> tuple[int, ...]:
    """The vector (a-1, b, ..., b) whose Pitman-Stanley polytope matches X^w_n(a, b)."""
    return (p.a - 1,) + (p.b,) * (p.n - 1)


def wipf_to_ps(pt: Sequence[int]) -> LatticePoint:
    """T(x) = (x_1 - 1, x_2 - x_1, ..., x_n - x_{n-1})."""
    if not pt:
        raise ValueError("empty point")
    return (pt[0] - 1,) + tuple(v - u for u, v in zip(pt, pt[1:]))


def ps_to_wipf(pt: Sequence[int]) -> LatticePoint:
    """S(y) = (1 + y_1, 1 + y_1 + y_2, ..., 1 + y_1 + ... + y_n)."""
    if not pt:
        raise ValueError("empty point")
    out = []
    s = 1
    for y in pt:
        s += y
        out.append(s)
    return tuple(out)


# -- rational (a, b)-parking function polytopes ----------------------------------


def _check_coprime(a: int, b: int) -> None:
    if a < 1 or b < 1:
        raise ValueError(f"(a, b) must be positive, got ({a}, {b})")
    if gcd(a, b) != 1:
        raise ValueError(f"(a, b) = ({a}, {b}) is not coprime")


def rational_caps(a: int, b: int) -> tuple[int, ...]:
    """b_1 = 1 and b_i = ceil(b(i-1)/a) for 1 < i <= a."""
    _check_coprime(a, b)
    return (1,) + tuple(-(-b * (i - 1) // a) for i in range(2, a + 1))


def rational_pf_vertices(a: int, b: int) -> set[LatticePoint]:
    caps = rational_caps(a, b)
    out: set[LatticePoint] = set()
    for k in range(1, a + 1):
        out.update(distinct_permutations((1,) * k + caps[k:]))
    return out


def is_rational_parking_function(a: int, b: int, pt: Sequence[int]) -> bool:
    """Vector form: column index (1-based) of the north step carrying each label."""
    caps = rational_caps(a, b)
    return len(pt) == a and all(1 <= v <= c for v, c in zip(sorted(pt), caps))


def rational_pf_constraints(a: int, b: int) -> ConstraintSystem:
    caps = rational_caps(a, b)
    if b >= a:
        ks = list(range(1, a - 1)) + [a]
        redundant = [a - 1] if a >= 2 else []
    elif b == a - 1:
        ks = list(range(1, a - 2)) + [a]
        redundant = [k for k in (a - 2, a - 1) if k >= 1]
    else:
        raise ValueError(f"no inequality description is available for b < a - 1 (a={a}, b={b})")

    def rhs(k: int) -> int:
        return sum(caps[a - k:])

    return ConstraintSystem(
        kind=SYMMETRIC,
        n=a,
        lower_bounds=(1,) * a,
        cardinality_bounds={k: rhs(k) for k in ks},
        redundant_bounds={k: rhs(k) for k in redundant},
    )
