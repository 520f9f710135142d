"""Brute-force evaluators that cross-check both sides of the identities.

Nothing in here calls the quadrature module, so the recursion and series
results stay independent of the numerical integrals they are compared with.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Callable, NamedTuple

from .specfun import DivergenceError, gamma, gauss_2f1

MAX_DEPTH = 60


class MomentIndex(NamedTuple):
    r: int
    p: int
    q: int


def moment_recursive(r: int, p: int, q: int) -> float:
    """I_{r,p,q} = int_0^pi x^r sin^p x cos^q x dx by recursion on q.

    The q-reduction carries the boundary terms at 0 and pi exactly
    (sin = 0, cos = +-1 there). Pure powers of sine fall back on their own
    reduction in p, ending in polynomial moments and the Beta integral.
    """
    idx = MomentIndex(r, p, q)
    if min(idx) < 0:
        raise ValueError("moment indices must be nonnegative")
    if r + p + q > MAX_DEPTH:
        raise RecursionError(f"r + p + q = {r + p + q} exceeds {MAX_DEPTH}")
    return _moment(r, p, q)


@lru_cache(maxsize=None)
def _moment(r: int, p: int, q: int) -> float:
    if q == 0:
        return _sine_moment(r, p)
    if q == 1:
        # sin^{p+1} vanishes at both ends
        if r == 0:
            return 0.0
        return -r / (p + 1) * _moment(r - 1, p + 1, 0)
    s = p + q
    boundary = 0.0
    if p == 0 and r >= 1:
        at_pi = r * math.pi ** (r - 1) * (-1) ** q
        at_zero = 1.0 if r == 1 else 0.0
        boundary = at_pi - at_zero
    value = boundary + (q - 1) * s * _moment(r, p, q - 2)
    if r >= 2:
        value -= r * (r - 1) * _moment(r - 2, p, q)
    if r >= 1 and p >= 1:
        value -= r * p * _moment(r - 1, p - 1, q - 1)
    return value / (s * s)


@lru_cache(maxsize=None)
def _sine_moment(r: int, p: int) -> float:
    """int_0^pi x^r sin^p x dx"""
    if p == 0:
        return math.pi ** (r + 1) / (r + 1)
    if r == 0:
        return math.sqrt(math.pi) * gamma((p + 1) / 2) / gamma(p / 2 + 1)
    if r == 1:
        # x -> pi - x symmetry
        return 0.5 * math.pi * _sine_moment(0, p)
    if p == 1:
        return math.pi ** r - r * (r - 1) * _sine_moment(r - 2, 1)
    return (p - 1) / p * _sine_moment(r, p - 2) - r * (r - 1) / (p * p) * _sine_moment(r - 2, p)


def lemma1_closed_form(j: int, m: int) -> float:
    """int_0^pi t sin^{2j+1} t cos^{2m} t dt = 2^j j! pi / prod_{i=0..j} (2m+2i+1)"""
    if j < 0 or m < 0:
        raise ValueError("j and m must be nonnegative")
    denom = 1
    for i in range(j + 1):
        denom *= 2 * m + 2 * i + 1
    return 2 ** j * math.factorial(j) * math.pi / denom


def odd_power_moment_first_entry(m: int) -> float:
    """int_0^pi t sin t cos^m t dt for any integer m >= 0, via the Beta integral."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    sign = (-1) ** m
    beta_part = (
        math.sqrt(math.pi) / (2 * (m + 1))
        * gamma(m / 2 + 1) / gamma(m / 2 + 1.5)
        * (1 - sign)
    )
    return beta_part - math.pi / (m + 1) * (-1) ** (m + 1)


LEMMA2_READINGS = ("m/2+1", "1")


def lemma2_antiderivative(t: float, m: int, reading: str = "m/2+1") -> float:
    """Antiderivative F(t) of t sin t cos^m t, up to a constant.

    F(t) = -cos^{m+1} t / ((m+1)(m+2)) [cos t 2F1(1/2, b; m/2+2; cos^2 t) + (m+2) t]
    with b = m/2 + 1, or b = 1 under the alternate ``reading``.
    """
    if reading not in LEMMA2_READINGS:
        raise ValueError(f"unknown reading {reading!r}")
    b = m / 2 + 1 if reading == "m/2+1" else 1.0
    c = math.cos(t)
    if abs(c) > 1 - 1e-15:
        c = math.copysign(1.0, c)
    hyp = gauss_2f1(0.5, b, m / 2 + 2, c * c)
    return -c ** (m + 1) / ((m + 1) * (m + 2)) * (c * hyp + (m + 2) * t)


def lemma2_reading(m_values=(0, 2, 4, 6), points=(0.4, 1.0, 2.2), step: float = 1e-5) -> str:
    """Pick the 2F1 reading whose derivative reproduces the integrand."""
    for reading in LEMMA2_READINGS:
        ok = True
        for m in m_values:
            for t in points:
                d = (lemma2_antiderivative(t + step, m, reading)
                     - lemma2_antiderivative(t - step, m, reading)) / (2 * step)
                if abs(d - t * math.sin(t) * math.cos(t) ** m) > 1e-6:
                    ok = False
        if ok:
            return reading
    raise RuntimeError("neither 2F1 reading differentiates to the integrand")


def series_sum(terms: Callable[[int], float], tol: float = 1e-16, max_terms: int = 1_000_000) -> float:
    """Sum terms(0) + terms(1) + ... until three consecutive terms are
    below tol relative to the partial sum."""
    total = 0.0
    small = 0
    for n in range(max_terms):
        term = terms(n)
        total += term
        if abs(term) <= tol * abs(total):
            small += 1
            if small >= 3:
                return total
        else:
            small = 0
    raise DivergenceError(f"series not converged after {max_terms} terms")
