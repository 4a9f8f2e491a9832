from fractions import Fraction
from itertools import permutations
from math import comb

import pytest
from hypothesis import given, strategies as st

from parkpoly.arith import (
    Polynomial,
    RationalMatrix,
    affine_rank,
    as_integer,
    binomial,
    exact_div,
    lagrange_interpolate,
    multinomial,
    odd_double_factorial,
    rank,
    stirling2,
)


def test_binomial_values():
    assert binomial(3, 2) == 3
    assert binomial(5, 0) == 1
    assert binomial(4, 5) == 0


def test_binomial_rejects_negative_n():
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_odd_double_factorial_values():
    assert odd_double_factorial(5) == 15
    assert odd_double_factorial(1) == 1
    assert odd_double_factorial(-1) == 1
    assert odd_double_factorial(-3) == -1


@pytest.mark.parametrize("m", [4, 0, -5, -7])
def test_odd_double_factorial_domain(m):
    with pytest.raises(ValueError):
        odd_double_factorial(m)


def test_double_factorial_step_rule():
    for m in range(-3, 50, 2):
        assert odd_double_factorial(m + 2) == (m + 2) * odd_double_factorial(m)


def test_stirling2_values():
    assert stirling2(4, 2) == 7
    assert stirling2(0, 0) == 1
    assert stirling2(3, 5) == 0


def test_stirling_rows_give_bell_numbers():
    bell = [1]
    for n in range(12):
        bell.append(sum(comb(n, k) * bell[k] for k in range(n + 1)))
    for n in range(13):
        assert sum(stirling2(n, k) for k in range(n + 1)) == bell[n]


def test_multinomial_and_exact_div():
    assert multinomial([2, 1]) == 3
    assert multinomial([1, 1, 1]) == 6
    assert exact_div(24, 6) == 4
    with pytest.raises(ArithmeticError):
        exact_div(7, 2)


def test_as_integer():
    assert as_integer(Fraction(10, 5)) == 2
    with pytest.raises(ArithmeticError):
        as_integer(Fraction(1, 2))


def test_fractions_are_reduced():
    x = Fraction(6, -4)
    assert (x.numerator, x.denominator) == (-3, 2)


def test_polynomial_basics():
    p = Polynomial([1, 2, 0, 0])
    assert p.coefficients == (1, 2)
    assert p.degree == 1
    assert Polynomial().degree == -1
    assert p(3) == 7
    assert p * p == Polynomial([1, 4, 4])
    assert str(Polynomial([1, 0, 1])) == "t^2 + 1"


def test_lagrange_examples():
    assert lagrange_interpolate([(0, 1), (1, 2)]) == Polynomial([1, 1])
    assert lagrange_interpolate([(0, 1), (1, 4), (2, 9)]) == Polynomial([1, 2, 1])


def test_lagrange_errors():
    with pytest.raises(ValueError):
        lagrange_interpolate([])
    with pytest.raises(ValueError):
        lagrange_interpolate([(1, 2), (1, 3)])


def test_lagrange_pf2_points():
    # lattice points of t*PF_2 by direct enumeration
    def count(t):
        return sum(
            1
            for x in range(t, 2 * t + 1)
            for y in range(t, 2 * t + 1)
            if x + y <= 3 * t
        )

    poly = lagrange_interpolate([(t, count(t)) for t in range(3)])
    assert poly.degree == 2
    assert poly.leading == Fraction(1, 2)


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=6))
def test_lagrange_reproduces_points(ys):
    pts = list(enumerate(ys))
    poly = lagrange_interpolate(pts)
    assert all(poly(x) == y for x, y in pts)
    assert poly.degree < len(pts)


def test_affine_rank_examples():
    assert affine_rank([(1, 1), (2, 2)]) == 1
    assert affine_rank([(1, 1, 1)]) == 0
    assert affine_rank(list(permutations((1, 2, 3)))) == 2
    with pytest.raises(ValueError):
        affine_rank([(1, 2), (1, 2, 3)])
    with pytest.raises(ValueError):
        affine_rank([])


@given(
    st.lists(st.tuples(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5)), min_size=1, max_size=6),
    st.tuples(st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9)),
    st.permutations([0, 1, 2]),
)
def test_affine_rank_invariance(points, shift, perm):
    r = affine_rank(points)
    moved = [tuple(x + s for x, s in zip(p, shift)) for p in points]
    permuted = [tuple(p[i] for i in perm) for p in points]
    assert affine_rank(moved) == r
    assert affine_rank(permuted) == r


def test_matrix_rank_and_solve():
    m = RationalMatrix([[1, 2], [2, 4]])
    assert m.rank() == 1
    assert m.solve([1, 2]) is None
    assert RationalMatrix([[2, 0], [0, 4]]).solve([1, 1]) == (Fraction(1, 2), Fraction(1, 4))
    assert rank([]) == 0
    with pytest.raises(ValueError):
        RationalMatrix([[1, 2], [3]])
