import math
import random

import pytest

from integral_identities import oracle
from integral_identities.quadrature import integrate_finite
from integral_identities.specfun import DivergenceError


def quad_moment(r, p, q):
    f = lambda x: x ** r * math.sin(x) ** p * math.cos(x) ** q
    return integrate_finite(f, 0.0, math.pi, 1e-13).value


def test_moment_recursive_examples():
    assert oracle.moment_recursive(1, 1, 0) == pytest.approx(math.pi, rel=1e-15)
    for m in range(1, 6):
        assert oracle.moment_recursive(1, 1, 2 * m) == pytest.approx(math.pi / (2 * m + 1), rel=1e-13)
    assert oracle.moment_recursive(1, 5, 2) == pytest.approx(8 * math.pi / 105, rel=1e-13)


@pytest.mark.parametrize("j", range(5))
@pytest.mark.parametrize("m", range(7))
def test_recursion_matches_closed_form(j, m):
    assert oracle.moment_recursive(1, 2 * j + 1, 2 * m) == pytest.approx(
        oracle.lemma1_closed_form(j, m), rel=1e-11)


def test_recursion_against_quadrature():
    rng = random.Random(7)
    checked = 0
    while checked < 20:
        r, p, q = rng.randint(0, 6), rng.randint(0, 6), rng.randint(0, 6)
        if r + p + q > 12:
            continue
        expected = quad_moment(r, p, q)
        assert oracle.moment_recursive(r, p, q) == pytest.approx(expected, rel=1e-10, abs=1e-10)
        checked += 1


def test_recursion_guards():
    with pytest.raises(RecursionError):
        oracle.moment_recursive(30, 20, 20)
    with pytest.raises(ValueError):
        oracle.moment_recursive(-1, 0, 0)


def test_lemma1_closed_form_entries():
    for m in range(6):
        assert oracle.lemma1_closed_form(0, m) == pytest.approx(math.pi / (2 * m + 1))
        assert oracle.lemma1_closed_form(1, m) == pytest.approx(2 * math.pi / (4 * m * m + 8 * m + 3))
    assert oracle.lemma1_closed_form(3, 0) == pytest.approx(48 * math.pi / 105)


def test_odd_power_first_entry():
    assert oracle.odd_power_moment_first_entry(0) == pytest.approx(math.pi)
    assert oracle.odd_power_moment_first_entry(2) == pytest.approx(math.pi / 3)
    expected = quad_moment(1, 1, 1)
    assert oracle.odd_power_moment_first_entry(1) == pytest.approx(expected, rel=1e-12)
    assert expected == pytest.approx(-math.pi / 4, rel=1e-12)


@pytest.mark.parametrize("m", range(11))
def test_odd_power_even_cases(m):
    assert oracle.odd_power_moment_first_entry(2 * m) == pytest.approx(math.pi / (2 * m + 1), rel=1e-15)


@pytest.mark.parametrize("m", [1, 3, 5, 7, 9])
def test_odd_power_odd_cases(m):
    assert oracle.odd_power_moment_first_entry(m) == pytest.approx(quad_moment(1, 1, m), rel=1e-11)


def _fd(m, t, h=1e-5, reading="m/2+1"):
    F = lambda s: oracle.lemma2_antiderivative(s, m, reading)
    return (F(t + h) - F(t - h)) / (2 * h)


def test_lemma2_derivative_example():
    assert _fd(2, 1.0) == pytest.approx(1.0 * math.sin(1.0) * math.cos(1.0) ** 2, abs=1e-6)


@pytest.mark.parametrize("m", [0, 2, 4, 6, 8])
@pytest.mark.parametrize("t", [0.2, 0.7, 1.3, 1.9, 2.6, 3.0])
def test_lemma2_derivative_grid(m, t):
    assert _fd(m, t) == pytest.approx(t * math.sin(t) * math.cos(t) ** m, abs=1e-6)


def test_lemma2_definite_values():
    F = lambda t, m: oracle.lemma2_antiderivative(t, m)
    assert F(math.pi, 2) - F(0, 2) == pytest.approx(math.pi / 3, rel=1e-13)
    assert F(math.pi / 2, 0) - F(0, 0) == pytest.approx(1.0, rel=1e-13)


def test_lemma2_reading_is_the_printed_one():
    assert oracle.lemma2_reading() == "m/2+1"
    # the alternate reading does not differentiate to the integrand
    assert abs(_fd(4, 1.0, reading="1") - math.sin(1.0) * math.cos(1.0) ** 4) > 1e-4


def test_series_sum():
    assert oracle.series_sum(lambda n: 0.5 ** n) == pytest.approx(2.0, rel=1e-15)
    x = 0.5
    assert oracle.series_sum(lambda n: x ** (2 * n) / (2 * n + 1)) == pytest.approx(
        math.atanh(x) / x, rel=1e-14)


def test_series_sum_binomial_half_sum():
    from integral_identities.specfun import binomial_general

    k, x = 3, 0.4
    total = oracle.series_sum(lambda m: binomial_general(1 / k, 2 * m) * x ** (2 * m))
    assert total == pytest.approx(0.5 * ((1 - x) ** (1 / k) + (1 + x) ** (1 / k)), rel=1e-14)


def test_series_sum_nonconvergence():
    with pytest.raises(DivergenceError):
        oracle.series_sum(lambda n: 1.0, max_terms=1000)
