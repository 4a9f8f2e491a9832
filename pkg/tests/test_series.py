from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from parkpoly.series import (
    PowerSeries,
    ck_egf_check,
    ck_from_egf,
    f_ab_series,
    g_b_series,
    ps_compose,
    ps_derive,
    ps_exp,
    ps_integrate,
    ps_mul,
    ps_sqrt,
    verify_functional_equation,
)
from parkpoly.volume import ck_sequence, recursive_volumes

F = Fraction


def test_exp_of_x():
    assert ps_exp(PowerSeries.x(3)).coefficients == (1, 1, F(1, 2), F(1, 6))


def test_sqrt_of_one_minus_2x():
    assert ps_sqrt(PowerSeries([1, -2], 2)).coefficients == (1, -1, F(-1, 2))


def test_compose_example():
    assert ps_compose(PowerSeries([0, 0, 1], 3), PowerSeries([0, 1, 1], 3)).coefficients == (0, 0, 1, 2)


def test_preconditions():
    with pytest.raises(ValueError):
        ps_exp(PowerSeries([1, 1], 3))
    with pytest.raises(ValueError):
        ps_sqrt(PowerSeries([2, 1], 3))
    with pytest.raises(ValueError):
        ps_compose(PowerSeries.x(3), PowerSeries([1, 1], 3))
    with pytest.raises(ValueError):
        PowerSeries([0, 1], 3).inverse()


def test_orders_propagate_minimum():
    a = PowerSeries([1, 2, 3], 5)
    b = PowerSeries([1, 1], 2)
    assert (a + b).order == 2
    assert ps_mul(a, b).order == 2
    assert ps_derive(a).order == 4
    assert ps_integrate(a).order == 6
    with pytest.raises(IndexError):
        (a * b)[3]
    with pytest.raises(ValueError):
        b.truncate(4)


def test_g_b_examples():
    assert g_b_series(1, 3).coefficients == (0, 1, 1, F(3, 2))
    assert g_b_series(2, 2).coefficients == (0, 1, 2)
    assert all(g_b_series(b, 4)[1] == 1 for b in range(1, 6))


def test_functional_equation():
    assert verify_functional_equation(1, 8)
    assert verify_functional_equation(3, 6)
    assert all(verify_functional_equation(b, 10) for b in range(1, 6))


def test_functional_equation_rejects_perturbation():
    g = g_b_series(2, 6)
    bumped = PowerSeries([c + (F(1, 1000) if k == 4 else 0) for k, c in enumerate(g.coefficients)], 6)
    assert not verify_functional_equation(2, 6, bumped)


def test_f_ab_examples():
    f = f_ab_series(1, 1, 4)
    assert f[0] == 1
    assert f[2] == F(1, 4)
    for a in range(1, 5):
        for b in range(1, 4):
            assert f_ab_series(a, b, 3)[1] == a - 1


def test_f_ab_matches_recursion():
    for a in range(1, 4):
        for b in range(1, 4):
            f = f_ab_series(a, b, 8)
            vols = recursive_volumes(8, a, b)
            for n in range(9):
                assert f[n] == vols[n] / factorial(n)


def test_ck_from_egf():
    c = ck_from_egf(10)
    assert c[1] == 0 and c[2] == -2
    assert c == ck_sequence(10)
    assert ck_egf_check(10)
    assert ck_egf_check(10, ck_sequence(10))
    assert not ck_egf_check(5, [1, 0, -2, -8, -36, -225])
    with pytest.raises(ValueError):
        ck_egf_check(1)


coeffs = st.lists(st.builds(Fraction, st.integers(-9, 9), st.integers(1, 9)), min_size=2, max_size=7)


@given(coeffs)
def test_derive_undoes_integrate(cs):
    s = PowerSeries(cs)
    assert ps_derive(ps_integrate(s)) == s


@given(coeffs)
def test_integrate_undoes_derive_on_zero_constant_term(cs):
    s = PowerSeries([0] + cs[1:])
    assert ps_integrate(ps_derive(s)) == s


@given(coeffs, coeffs)
def test_exp_turns_sums_into_products(xs, ys):
    f = PowerSeries([0] + xs[1:])
    g = PowerSeries([0] + ys[1:])
    assert ps_exp(f + g) == ps_exp(f) * ps_exp(g)


@given(coeffs)
def test_exp_is_consistent_with_its_derivative(cs):
    f = PowerSeries([0] + cs[1:])
    e = ps_exp(f)
    assert ps_derive(e) == ps_derive(f) * e.truncate(f.order - 1)


@given(coeffs)
def test_sqrt_squares_back(cs):
    s = PowerSeries([1] + cs[1:])
    r = ps_sqrt(s)
    assert r * r == s
    assert s * s.inverse() == PowerSeries.constant(1, s.order)
