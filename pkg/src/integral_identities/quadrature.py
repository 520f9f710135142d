"""Adaptive Gauss-Kronrod on finite intervals and exp-sinh on [a, inf)."""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from typing import Callable

Function = Callable[[float], float]

# Kronrod abscissae (positive half, descending) and weights of the 15-point
# rule; the odd-indexed abscissae are the 7-point Gauss nodes.
XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)

DEFAULT_TOL = 1e-12
DEFAULT_MAX_EVALS = 200_000
_EPMACH = 2.220446049250313e-16


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int
    converged: bool


@dataclass(frozen=True)
class Integrand:
    """A pure real function and its integration range.

    ``points`` lists the panel boundaries, ascending; the last entry may be
    ``math.inf`` for a semi-infinite final panel.
    """

    f: Function
    points: tuple[float, ...]
    label: str = field(default="", compare=False)

    @classmethod
    def over(cls, f: Function, a: float, b: float, *breaks: float, label: str = "") -> "Integrand":
        return cls(f, (a, *breaks, b), label)

    @property
    def a(self) -> float:
        return self.points[0]

    @property
    def b(self) -> float:
        return self.points[-1]


def gauss_kronrod_15(f: Function, a: float, b: float) -> tuple[float, float, float]:
    """One G7/K15 pair on [a, b]: (K15 value, error estimate, |f| integral)."""
    center = 0.5 * (a + b)
    half = 0.5 * (b - a)
    fc = f(center)
    resk = fc * WGK[7]
    resg = fc * WG[3]
    resabs = abs(resk)
    fvals = []
    for j in range(7):
        dx = half * XGK[j]
        f1 = f(center - dx)
        f2 = f(center + dx)
        fvals.append((f1, f2))
        resk += WGK[j] * (f1 + f2)
        resabs += WGK[j] * (abs(f1) + abs(f2))
        if j % 2 == 1:
            resg += WG[j // 2] * (f1 + f2)
    mean = 0.5 * resk
    resasc = WGK[7] * abs(fc - mean)
    for j, (f1, f2) in enumerate(fvals):
        resasc += WGK[j] * (abs(f1 - mean) + abs(f2 - mean))
    result = resk * half
    resabs *= abs(half)
    resasc *= abs(half)
    err = abs((resk - resg) * half)
    # QUADPACK scaling of |K15 - G7|, floored at roundoff level
    if resasc != 0 and err != 0:
        err = resasc * min(1.0, (200.0 * err / resasc) ** 1.5)
    if resabs > 1e-290:
        err = max(50.0 * _EPMACH * resabs, err)
    return result, err, resabs


def integrate_finite(
    f: Function,
    a: float,
    b: float,
    tol: float = DEFAULT_TOL,
    max_evals: int = DEFAULT_MAX_EVALS,
) -> QuadratureResult:
    """Globally adaptive G7/K15 quadrature of f over [a, b].

    The interval with the largest local error is bisected until the summed
    error drops below tol * max(1, |value|) or the evaluation budget runs out.
    """
    if not a < b:
        raise ValueError("integrate_finite needs a < b")
    if tol < 1e-13:
        raise ValueError("tol must be at least 1e-13")
    value, err, _ = gauss_kronrod_15(f, a, b)
    evals = 15
    heap = [(-err, a, b, value)]
    total, total_err = value, err
    while total_err > tol * max(1.0, abs(total)):
        if evals + 30 > max_evals:
            return QuadratureResult(total, total_err, evals, False)
        neg_err, lo, hi, v = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            heapq.heappush(heap, (neg_err, lo, hi, v))
            return QuadratureResult(total, total_err, evals, False)
        v1, e1, _ = gauss_kronrod_15(f, lo, mid)
        v2, e2, _ = gauss_kronrod_15(f, mid, hi)
        evals += 30
        heapq.heappush(heap, (-e1, lo, mid, v1))
        heapq.heappush(heap, (-e2, mid, hi, v2))
        total += v1 + v2 - v
        total_err += e1 + e2 + neg_err
        if len(heap) % 64 == 0:
            # resum now and then so rounding in the running totals cannot drift
            total = math.fsum(item[3] for item in heap)
            total_err = math.fsum(-item[0] for item in heap)
    total = math.fsum(item[3] for item in heap)
    return QuadratureResult(total, total_err, evals, True)


def _safe(f: Function) -> Function:
    def g(x: float) -> float:
        try:
            return f(x)
        except OverflowError:
            return 0.0
    return g


def integrate_semi_infinite(
    f: Function,
    tol: float = DEFAULT_TOL,
    a: float = 0.0,
    max_levels: int = 12,
) -> QuadratureResult:
    """Integrate a decaying f over [a, inf) with the exp-sinh transform.

    x = a + exp(pi/2 sinh t); the transformed trapezoid sum is refined by
    halving the step until two successive sums differ by less than
    tol * max(1, |value|). That difference is the reported error estimate.
    """
    if tol < 1e-13:
        raise ValueError("tol must be at least 1e-13")
    g = _safe(f)
    half_pi = 0.5 * math.pi
    # exp argument must stay below ~700
    t_cap = math.asinh(700.0 / half_pi)
    evals = 0

    def node(t: float) -> float:
        nonlocal evals
        u = half_pi * math.sinh(t)
        if u > 700.0:
            return 0.0
        x = math.exp(u)
        w = x * half_pi * math.cosh(t)
        if w == 0.0:
            return 0.0
        evals += 1
        return g(a + x) * w

    h = 0.5
    total = node(0.0)
    edges = []
    for direction in (1, -1):
        k = 0
        small = 0
        while True:
            k += 1
            t = direction * k * h
            if abs(t) > t_cap:
                break
            term = node(t)
            total += term
            if abs(term) <= 1e-18 * max(abs(total), 1e-300):
                small += 1
                if small >= 3:
                    break
            else:
                small = 0
        edges.append(k)
    kmax, kmin = edges
    estimate = total * h
    err = math.inf
    for _ in range(max_levels):
        h *= 0.5
        kmax *= 2
        kmin *= 2
        total += math.fsum(node(k * h) for k in range(-kmin + 1, kmax, 2))
        new = total * h
        # identical successive sums still carry rounding error
        err = max(abs(new - estimate), 8 * _EPMACH * abs(new))
        estimate = new
        if err <= tol * max(1.0, abs(estimate)):
            return QuadratureResult(estimate, err, evals, True)
    return QuadratureResult(estimate, err, evals, False)


def integrate(integrand: Integrand, tol: float = DEFAULT_TOL) -> QuadratureResult:
    """Integrate over every panel of ``integrand`` and sum the results."""
    pts = integrand.points
    pieces = []
    for lo, hi in zip(pts[:-1], pts[1:]):
        if math.isinf(hi):
            pieces.append(integrate_semi_infinite(integrand.f, tol, a=lo))
        else:
            pieces.append(integrate_finite(integrand.f, lo, hi, tol))
    return QuadratureResult(
        math.fsum(p.value for p in pieces),
        math.fsum(p.error_estimate for p in pieces),
        sum(p.evaluations for p in pieces),
        all(p.converged for p in pieces),
    )
