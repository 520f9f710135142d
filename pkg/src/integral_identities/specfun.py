"""Scalar special functions in double precision.

Everything here works on real floats with the standard library only: gamma
and friends, Pochhammer symbols, Gauss's 2F1 on the real line below 1, the
Lerch transcendent inside the unit disc, Bernoulli numbers and a handful of
series that the identity registry needs as closed forms.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "SpecialFunctionError",
    "PoleError",
    "DomainError",
    "DivergenceError",
    "gamma",
    "rgamma",
    "pochhammer",
    "binomial_general",
    "gauss_2f1",
    "lerch_phi",
    "r1_series",
    "upper_incomplete_gamma",
    "lower_incomplete_gamma",
    "bernoulli_numbers",
    "ln_cos_bernoulli",
    "ln_cos_sin_powers",
    "ln_cos_sign",
    "cos_power_expansion",
    "cos_kernel",
    "cos_kernel_partial",
    "csch_series",
    "sech_series",
]

EPS = 1e-16
MAX_TERMS = 1_000_000


class SpecialFunctionError(ValueError):
    pass


class PoleError(SpecialFunctionError):
    pass


class DomainError(SpecialFunctionError):
    pass


class DivergenceError(SpecialFunctionError, ArithmeticError):
    pass


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0 and x == math.floor(x)


def _sum_terms(first: float, ratio, max_terms: int = MAX_TERMS) -> float:
    """Sum a series given its first term and term ratio t[n+1]/t[n] = ratio(n).

    Stops once three consecutive terms fall below EPS relative to the
    partial sum; a single zero term is not enough to stop.
    """
    total = term = first
    small = 0
    for n in range(max_terms):
        term *= ratio(n)
        total += term
        if abs(term) <= EPS * abs(total):
            small += 1
            if small >= 3:
                return total
        else:
            small = 0
    raise DivergenceError(f"series not converged after {max_terms} terms")


# -- gamma family -----------------------------------------------------------

def gamma(x: float) -> float:
    if _is_nonpositive_integer(x):
        raise PoleError(f"gamma has a pole at {x}")
    if x < 0.5:
        # reflection
        return math.pi / (math.sin(math.pi * x) * math.gamma(1.0 - x))
    return math.gamma(x)


def rgamma(x: float) -> float:
    """1/Gamma(x), zero at the poles."""
    if _is_nonpositive_integer(x):
        return 0.0
    return 1.0 / gamma(x)


def pochhammer(a: float, n: int) -> float:
    """Rising factorial a(a+1)...(a+n-1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    result = 1.0
    for i in range(n):
        result *= a + i
    return result


def binomial_general(alpha: float, j: int) -> float:
    """binom(alpha, j) = (-1)^j (-alpha)_j / j!"""
    return (-1) ** j * pochhammer(-alpha, j) / math.factorial(j)


def lower_incomplete_gamma(a: float, x: float) -> float:
    if a <= 0 or x < 0:
        raise DomainError("need a > 0 and x >= 0")
    if x == 0:
        return 0.0
    if x < a + 1:
        return _lower_series(a, x)
    return gamma(a) - _upper_cf(a, x)


def upper_incomplete_gamma(a: float, x: float) -> float:
    """Gamma(a, x) for a > 0, x >= 0."""
    if a <= 0 or x < 0:
        raise DomainError("need a > 0 and x >= 0")
    if x == 0:
        return gamma(a)
    if x < a + 1:
        return gamma(a) - _lower_series(a, x)
    return _upper_cf(a, x)


def _lower_series(a: float, x: float) -> float:
    s = _sum_terms(1.0 / a, lambda n: x / (a + n + 1))
    return s * math.exp(a * math.log(x) - x)


def _upper_cf(a: float, x: float) -> float:
    # modified Lentz on the Legendre continued fraction
    tiny = 1e-300
    b = x + 1.0 - a
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 10_000):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < EPS:
            return math.exp(a * math.log(x) - x) * h
    raise DivergenceError("incomplete gamma continued fraction did not converge")


# -- hypergeometric -----------------------------------------------------------

def _2f1_series(a: float, b: float, c: float, z: float) -> float:
    return _sum_terms(1.0, lambda n: (a + n) * (b + n) / ((c + n) * (n + 1)) * z)


def _2f1_gauss_sum(a: float, b: float, c: float) -> float:
    return gamma(c) * gamma(c - a - b) * rgamma(c - a) * rgamma(c - b)


def _2f1_unit(a: float, b: float, c: float, z: float) -> float:
    """2F1 for 0 <= z < 1."""
    if z <= 0.5:
        return _2f1_series(a, b, c, z)
    s = c - a - b
    if abs(s - round(s)) < 1e-5:
        # gamma poles in the connection formula; the plain series still
        # converges for z < 1, just slowly
        return _2f1_series(a, b, c, z)
    w = 1.0 - z
    first = _2f1_gauss_sum(a, b, c) * _2f1_series(a, b, a + b - c + 1, w)
    second = (
        w ** s
        * gamma(c) * gamma(-s) * rgamma(a) * rgamma(b)
        * _2f1_series(c - a, c - b, s + 1, w)
    )
    return first + second


def gauss_2f1(a: float, b: float, c: float, z: float) -> float:
    """Gauss hypergeometric function 2F1(a, b; c; z) for real z <= 1.

    Regions: direct series for |z| <= 1/2, the Pfaff map z -> z/(z-1) for
    z < -1/2, the 1 - z connection formula on (1/2, 1) and Gauss's sum at
    z = 1 (requires c - a - b > 0).
    """
    if _is_nonpositive_integer(c):
        raise DomainError(f"c = {c} is a nonpositive integer")
    if z > 1:
        raise DomainError("2F1 is only evaluated for z <= 1")
    if z == 1:
        if c - a - b <= 0:
            raise DivergenceError("2F1 diverges at z = 1 when c - a - b <= 0")
        return _2f1_gauss_sum(a, b, c)
    if z == 0:
        return 1.0
    if abs(z) <= 0.5:
        return _2f1_series(a, b, c, z)
    if z < 0:
        return (1.0 - z) ** (-a) * _2f1_unit(a, c - b, c, z / (z - 1.0))
    return _2f1_unit(a, b, c, z)


# -- Lerch and R1 series -----------------------------------------------------

def lerch_phi(z: float, s: float, b: float) -> float:
    """Lerch transcendent sum_{n>=0} z^n / (n + b)^s for |z| < 1, b > 0."""
    if abs(z) >= 1:
        raise DomainError("lerch_phi needs |z| < 1")
    if b <= 0:
        raise DomainError("lerch_phi needs b > 0")
    total = term = b ** (-s)
    az = abs(z)
    for n in range(MAX_TERMS):
        term = z ** (n + 1) * (n + 1 + b) ** (-s)
        total += term
        q = az * ((n + 1 + b) / (n + 2 + b)) ** s
        if q < 1 and abs(term) * q / (1 - q) <= 1e-16 * abs(total):
            return total
    raise DivergenceError("lerch_phi series not converged")


def r1_series(r: float, x: float) -> float:
    """sum_{n>=0} x^n / (n! (n + r + 1)), the closed form behind R1."""
    if r <= -1:
        raise DomainError("r1_series needs r > -1")
    if x == 0:
        return 1.0 / (r + 1)
    # carry x^n/n! and divide at the end of each step
    total = 1.0 / (r + 1)
    coef = 1.0
    small = 0
    for n in range(1, MAX_TERMS):
        coef *= x / n
        term = coef / (n + r + 1)
        total += term
        if abs(term) <= EPS * abs(total):
            small += 1
            if small >= 3:
                return total
        else:
            small = 0
    raise DivergenceError("r1_series not converged")


# -- Bernoulli numbers and ln cos --------------------------------------------

@lru_cache(maxsize=None)
def _bernoulli_exact(nmax: int) -> tuple[Fraction, ...]:
    bs = [Fraction(1)]
    for n in range(1, nmax + 1):
        acc = sum(math.comb(n + 1, j) * bs[j] for j in range(n))
        bs.append(-acc / (n + 1))
    return tuple(bs)


def bernoulli_numbers(nmax: int) -> list[float]:
    """B_0 .. B_nmax from sum_{j<=n} C(n+1, j) B_j = 0 (so B_1 = -1/2)."""
    if nmax < 0 or nmax > 60:
        raise ValueError("nmax must lie in [0, 60]")
    return [float(b) for b in _bernoulli_exact(nmax)]


def _ln_cos_printed_coefficient(k: int) -> Fraction:
    b2k = _bernoulli_exact(2 * k)[2 * k]
    return Fraction(2 ** (2 * k - 1) * (2 ** (2 * k) - 1)) * b2k / (k * math.factorial(2 * k))


def _sin_power_coefficients(order: int) -> list[Fraction]:
    """Taylor coefficients of -1/2 sum_k sin^{2k}(x)/k up to x^order."""
    sin_poly = [Fraction(0)] * (order + 1)
    for n in range(order // 2 + 1):
        if 2 * n + 1 <= order:
            sin_poly[2 * n + 1] = Fraction((-1) ** n, math.factorial(2 * n + 1))

    def mul(p, q):
        out = [Fraction(0)] * (order + 1)
        for i, pi in enumerate(p):
            if pi:
                for j, qj in enumerate(q[: order + 1 - i]):
                    out[i + j] += pi * qj
        return out

    sin2 = mul(sin_poly, sin_poly)
    power = [Fraction(1)] + [Fraction(0)] * order
    result = [Fraction(0)] * (order + 1)
    for k in range(1, order // 2 + 1):
        power = mul(power, sin2)
        for i in range(order + 1):
            result[i] -= power[i] / (2 * k)
    return result


@lru_cache(maxsize=None)
def ln_cos_sign() -> str:
    """Sign pattern that makes the Bernoulli ln cos expansion correct.

    The coefficient 2^{2k-1}(2^{2k}-1)B_{2k}/(k(2k)!) is compared against the
    sin^{2k} expansion for the x^2 and x^4 terms; returns one of "+", "-",
    "(-1)^k", "(-1)^(k+1)".
    """
    reference = _sin_power_coefficients(4)
    candidates = {
        "+": lambda k: 1,
        "-": lambda k: -1,
        "(-1)^k": lambda k: (-1) ** k,
        "(-1)^(k+1)": lambda k: (-1) ** (k + 1),
    }
    for name, sign in candidates.items():
        if all(sign(k) * _ln_cos_printed_coefficient(k) == reference[2 * k] for k in (1, 2)):
            return name
    raise RuntimeError("no sign convention reproduces the ln cos Taylor series")


def _sign_factor(k: int) -> int:
    return {"+": 1, "-": -1, "(-1)^k": (-1) ** k, "(-1)^(k+1)": (-1) ** (k + 1)}[ln_cos_sign()]


def ln_cos_bernoulli(x: float, kmax: int = 30) -> float:
    """ln cos x from the Bernoulli-number power series, |x| < pi/2."""
    if abs(x) >= math.pi / 2:
        raise DomainError("ln cos series needs |x| < pi/2")
    return sum(
        _sign_factor(k) * float(_ln_cos_printed_coefficient(k)) * x ** (2 * k)
        for k in range(1, kmax + 1)
    )


def ln_cos_sin_powers(x: float) -> float:
    """ln cos x = -1/2 sum_{k>=1} sin^{2k}(x)/k, |x| < pi/2."""
    if abs(x) >= math.pi / 2:
        raise DomainError("ln cos series needs |x| < pi/2")
    s2 = math.sin(x) ** 2
    return -0.5 * _sum_terms(s2, lambda n: s2 * (n + 1) / (n + 2))


# -- trigonometric and hyperbolic expansions ---------------------------------

def cos_power_expansion(m: int) -> tuple[list[tuple[int, float]], float]:
    """Fourier form of cos^{2m} x.

    Returns ([(2(m-k), 2 C(2m,k)/4^m) for k < m], C(2m,m)/4^m).
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    scale = 4.0 ** m
    pairs = [(2 * (m - k), 2 * math.comb(2 * m, k) / scale) for k in range(m)]
    return pairs, math.comb(2 * m, m) / scale


def cos_kernel(p: float, x: float) -> float:
    """(1 + p cos x) / (1 + 2 p cos x + p^2)"""
    c = math.cos(x)
    return (1 + p * c) / (1 + 2 * p * c + p * p)


def cos_kernel_partial(p: float, x: float, n: int) -> float:
    """sum_{k<n} (-p)^k cos(kx)"""
    return sum((-p) ** k * math.cos(k * x) for k in range(n))


def csch_series(y: float, n: int) -> float:
    """2 sum_{j<n} e^{-(2j+1) y}, which tends to 1/sinh y for y > 0."""
    return 2.0 * sum(math.exp(-(2 * j + 1) * y) for j in range(n))


def sech_series(y: float, n: int) -> float:
    """2 sum_{j<n} (-1)^j e^{-(2j+1) y}, which tends to 1/cosh y for y > 0."""
    return 2.0 * sum((-1) ** j * math.exp(-(2 * j + 1) * y) for j in range(n))
