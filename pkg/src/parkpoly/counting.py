"""Enumeration formulas and the brute-force oracles that check them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from math import comb, factorial
from typing import Iterator, Sequence

from . import arith
from .families import (
    PREFIX,
    SYMMETRIC,
    ConstraintSystem,
    LatticePoint,
    XpfParams,
    distinct_permutations,
    is_x_parking_function,
    rational_caps,
    wipf_constraints,
    xpf_constraints,
    xpf_vertices,
)
from .polytope import FaceLattice, hrep_vertices, integral_vertices

FACE_ORACLE_MAX_N = 4


@dataclass(frozen=True)
class FVector:
    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries or self.entries[-1] != 1:
            raise ValueError(f"f-vector must end with 1 (the polytope itself): {self.entries}")
        if any(e < 0 for e in self.entries):
            raise ValueError(f"negative face count in {self.entries}")

    @property
    def dim(self) -> int:
        return len(self.entries) - 1

    def euler_sum(self) -> int:
        return sum((-1) ** k * f for k, f in enumerate(self.entries))

    def __getitem__(self, k: int) -> int:
        return self.entries[k]


# -- x-parking functions -------------------------------------------------------


def count_x_parking_functions(p: XpfParams) -> int:
    return p.a * (p.a + p.n * p.b) ** (p.n - 1)


def _weakly_increasing_xpf(p: XpfParams) -> Iterator[tuple[int, ...]]:
    def rec(prefix: list[int]):
        i = len(prefix)
        if i == p.n:
            yield tuple(prefix)
            return
        lo = prefix[-1] if prefix else 1
        for v in range(lo, p.cap(i + 1) + 1):
            prefix.append(v)
            yield from rec(prefix)
            prefix.pop()

    yield from rec([])


def enumerate_x_parking_functions(p: XpfParams) -> set[LatticePoint]:
    """Every x-parking function, as rearrangements of the sorted ones."""
    out: set[LatticePoint] = set()
    for s in _weakly_increasing_xpf(p):
        out.update(distinct_permutations(s))
    return out


def enumerate_x_parking_functions_box(p: XpfParams) -> set[LatticePoint]:
    """Naive filter of the box [1, a+(n-1)b]^n; only for small n."""
    top = p.cap(p.n)
    return {pt for pt in product(range(1, top + 1), repeat=p.n) if is_x_parking_function(p, pt)}


# -- face counts of X_n(a, b) ------------------------------------------------------


def vertex_count_formula(p: XpfParams) -> int:
    start = 1 if p.a == 1 else 0
    return sum(factorial(p.n) // factorial(k) for k in range(start, p.n + 1))


def facet_count_formula(p: XpfParams) -> int:
    if p.n == 1:
        if p.a == 1:
            raise ValueError("X_1(1) is a single point and has no facets")
        return 2
    return 2 ** p.n - 1 + (0 if p.a == 1 else p.n)


def edge_count_formula(p: XpfParams) -> int:
    return arith.exact_div(p.n * vertex_count_formula(p), 2)


def f_vector_formula(p: XpfParams) -> FVector:
    n = p.n
    if n == 1 and p.a == 1:
        return FVector((1,))
    f = []
    for k in range(n):
        total = 0
        for m in range(n - k + 1):
            if m == 1 and p.a == 1:
                continue
            total += comb(n, m) * factorial(n - k - m) * arith.stirling2(n - m + 1, n - k - m + 1)
        f.append(total)
    f.append(1)
    return FVector(tuple(f))


def xpf_face_lattice(p: XpfParams) -> FaceLattice:
    """Face lattice computed from the H-description alone."""
    if p.n > FACE_ORACLE_MAX_N:
        raise ValueError(f"face oracle refuses n={p.n} > {FACE_ORACLE_MAX_N}")
    rows = xpf_constraints(p).explicit_inequalities()
    verts = integral_vertices(hrep_vertices(rows))
    return FaceLattice(verts, rows)


def brute_force_faces(p: XpfParams) -> FVector:
    return FVector(xpf_face_lattice(p).f_vector())


def _is_permutahedron_copy(pts: set[tuple[int, ...]], n: int) -> bool:
    if len(pts) != factorial(n):
        return False
    first = sorted(next(iter(pts)))
    if any(v - u != 1 for u, v in zip(first, first[1:])):
        return False
    return all(sorted(q) == first for q in pts)


def _is_pinned_pf_copy(pts: set[tuple[int, ...]], n: int) -> bool:
    if n < 2:
        return False
    smaller = xpf_vertices(XpfParams(n - 1, 1, 1))
    for i in range(n):
        if all(q[i] == n for q in pts):
            if {q[:i] + q[i + 1:] for q in pts} == smaller:
                return True
    return False


def permutahedron_facet_census(n: int) -> tuple[int, int]:
    """(# facets of PF_n that are PF_{n-1} with a coordinate pinned to n,
    # facets of PF_n that are a translated copy of the permutahedron Pi_n)."""
    if not 2 <= n <= FACE_ORACLE_MAX_N:
        raise ValueError(f"permutahedron_facet_census supports 2 <= n <= {FACE_ORACLE_MAX_N}, got {n}")
    lattice = xpf_face_lattice(XpfParams(n, 1, 1))
    pf = perm = 0
    for facet in lattice.facets:
        pts = lattice.points(facet)
        pf += _is_pinned_pf_copy(pts, n)
        perm += _is_permutahedron_copy(pts, n)
    return pf, perm


# -- lattice points ------------------------------------------------------------


def _count_symmetric(sys: ConstraintSystem, t: int) -> int:
    n = sys.n
    lo = t * max(sys.lower_bounds)
    if any(t * b != lo for b in sys.lower_bounds):
        raise ValueError("symmetric counting needs a uniform lower bound")
    caps = {k: t * rhs for k, rhs in sys.bounds().items()}
    if not caps:
        raise ValueError("unbounded symmetric system")
    # tightest cap on the sum of the k largest coordinates, using that the rest are >= lo
    eff = [None] * (n + 1)
    best = None
    for k in range(n, 0, -1):
        if best is not None:
            best -= lo
        if k in caps:
            best = caps[k] if best is None else min(best, caps[k])
        eff[k] = best
    if eff[1] is None:
        raise ValueError("unbounded symmetric system")
    nfact = factorial(n)
    total = 0

    def rec(k: int, prev: int, s: int, run: int, denom: int) -> None:
        nonlocal total
        if k > n:
            total += nfact // (denom * factorial(run))
            return
        top = min(prev, eff[k] - s)
        for v in range(top, lo - 1, -1):
            if v == prev:
                rec(k + 1, v, s + v, run + 1, denom)
            else:
                rec(k + 1, v, s + v, 1, denom * factorial(run))

    top = eff[1]
    for v in range(top, lo - 1, -1):
        rec(2, v, v, 1, 1)
    return total


def _count_prefix(sys: ConstraintSystem, t: int) -> int:
    # ways[s] = number of admissible prefixes with sum s
    ways = [1]
    for bound in sys.prefix_bounds:
        cap = t * bound
        nxt = []
        acc = 0
        for s in range(cap + 1):
            if s < len(ways):
                acc += ways[s]
            nxt.append(acc)
        ways = nxt
    return sum(ways)


def lattice_points_in_dilate(sys: ConstraintSystem, t: int) -> int:
    """|tP ∩ Z^n| for t >= 0 (t = 0 is the single origin point)."""
    if t < 0:
        raise ValueError(f"dilation factor must be nonnegative, got {t}")
    if sys.kind == SYMMETRIC:
        return _count_symmetric(sys, t)
    if sys.kind == PREFIX:
        return _count_prefix(sys, t)
    raise ValueError(f"unknown constraint kind {sys.kind!r}")


def lattice_points_brute(sys: ConstraintSystem, t: int, box: tuple[int, int]) -> int:
    """Count points of t*P inside an explicit box by testing every point."""
    lo, hi = box
    if t == 0:
        return 1
    return sum(1 for pt in product(range(lo, hi + 1), repeat=sys.n) if sys.contains(pt, t))


# -- weakly increasing polytopes ---------------------------------------------


def wipf_ehrhart_formula(p: XpfParams, t: int) -> int:
    if t < 0:
        raise ValueError(f"dilation factor must be nonnegative, got {t}")
    num = t * (p.a - 1) + 1
    for j in range(2, p.n + 1):
        num *= t * (p.a - 1 + p.n * p.b) + j
    return arith.exact_div(num, factorial(p.n))


def wipf_lattice_points(p: XpfParams, t: int) -> int:
    """Direct count of weakly increasing x with x_1 >= t and x_i <= t(a + (i-1)b)."""
    if t < 0:
        raise ValueError(f"dilation factor must be nonnegative, got {t}")
    # ways[v] = number of admissible prefixes ending in value v
    ways = {v: 1 for v in range(t, t * p.cap(1) + 1)}
    for i in range(2, p.n + 1):
        cap = t * p.cap(i)
        nxt = {}
        acc = 0
        for v in range(t, cap + 1):
            acc += ways.get(v, 0)
            nxt[v] = acc
        ways = nxt
    return sum(ways.values())


def wipf_lattice_points_brute(p: XpfParams, t: int) -> int:
    """Test every weakly increasing vector in the box [t, t*cap(n)]^n against the rows."""
    if t < 0:
        raise ValueError(f"dilation factor must be nonnegative, got {t}")
    if t == 0:
        return 1
    rows = wipf_constraints(p)
    return sum(
        1
        for pt in combinations_with_replacement(range(t, t * p.cap(p.n) + 1), p.n)
        if all(sum(c * x for c, x in zip(normal, pt)) <= t * rhs for normal, rhs in rows)
    )


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def wipf_face_counts(n: int) -> tuple[int, int, int]:
    """(facets, vertices, edges) of X^w_n(1, 1)."""
    if n < 2:
        raise ValueError(f"wipf_face_counts needs n >= 2, got {n}")
    return 2 * (n - 1), 2 ** (n - 1), 2 ** (n - 2) * (n - 1)


def wipf_face_lattice(p: XpfParams) -> FaceLattice:
    if p.n > FACE_ORACLE_MAX_N + 1:
        raise ValueError(f"face oracle refuses n={p.n}")
    rows = wipf_constraints(p)
    return FaceLattice(integral_vertices(hrep_vertices(rows)), rows)


def wipf_face_counts_brute(n: int) -> tuple[int, int, int]:
    lattice = wipf_face_lattice(XpfParams(n, 1, 1))
    f = lattice.f_vector()
    return f[-2], f[0], f[1]


# -- rational (a, b)-parking functions ---------------------------------------------


def rational_vertex_count(a: int, b: int) -> int:
    caps = rational_caps(a, b)
    if a == 1:
        return 1
    if b > a:
        return sum(factorial(a) // factorial(k) for k in range(1, a + 1))
    m = [0] + [caps.count(i) for i in range(1, b + 1)]
    total = Fraction(1)
    for i in range(1, b + 1):
        total /= factorial(m[i])
    for k in range(2, b + 1):
        head = Fraction(1)
        for j in range(k + 1, b + 1):
            head /= factorial(m[j])
        before = sum(m[1:k])
        inner = sum(Fraction(1, factorial(before + i) * factorial(m[k] - i)) for i in range(1, m[k] + 1))
        total += head * inner
    return arith.as_integer(factorial(a) * total, "rational vertex count")


def rational_dyck_paths(a: int, b: int) -> Iterator[tuple[int, ...]]:
    """Column (x-coordinate) of each north step, for paths (0,0) -> (b,a)
    staying weakly above y = (a/b)x."""
    for north in combinations(range(a + b), a):
        x = y = 0
        cols = []
        ok = True
        north_set = set(north)
        for step in range(a + b):
            if step in north_set:
                cols.append(x)
                y += 1
            else:
                x += 1
            if b * y < a * x:
                ok = False
                break
        if ok:
            yield tuple(cols)


def count_rational_parking_functions(a: int, b: int) -> int:
    """Labelled (a, b)-Dyck paths, labels increasing up each column."""
    rational_caps(a, b)
    total = 0
    for cols in rational_dyck_paths(a, b):
        runs = [cols.count(c) for c in set(cols)]
        total += arith.multinomial(runs)
    return total


def rational_catalan(a: int, b: int) -> int:
    return arith.exact_div(factorial(a + b - 1), factorial(a) * factorial(b))
