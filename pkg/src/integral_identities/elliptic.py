"""Complete elliptic integral K and Jacobi sn, cn, dn.

The second argument is always the parameter m = k^2, so the lemniscatic case
is m = 1/2.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .specfun import DivergenceError, DomainError, gamma


class JacobiTriple(NamedTuple):
    sn: float
    cn: float
    dn: float


def _check_parameter(m: float) -> None:
    if m < 0:
        raise DomainError(f"parameter m = {m} outside [0, 1)")
    if m >= 1:
        raise DivergenceError("K(m) diverges as m -> 1")


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean of two positive numbers."""
    if a <= 0 or b <= 0:
        raise DomainError("agm needs positive arguments")
    for _ in range(64):
        if abs(a - b) <= 4e-16 * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def ellip_k(m: float) -> float:
    """K(m) = pi / (2 agm(1, sqrt(1 - m)))."""
    _check_parameter(m)
    return math.pi / (2.0 * agm(1.0, math.sqrt(1.0 - m)))


def jacobi(z: float, m: float) -> JacobiTriple:
    """sn, cn, dn at (z | m) by the descending Landen (AGM) scheme."""
    _check_parameter(m)
    if m == 0:
        return JacobiTriple(math.sin(z), math.cos(z), 1.0)
    a = [1.0]
    c = [math.sqrt(m)]
    b = math.sqrt(1.0 - m)
    while abs(c[-1]) > 1e-16 and len(a) < 40:
        an = a[-1]
        a.append(0.5 * (an + b))
        c.append(0.5 * (an - b))
        b = math.sqrt(an * b)
    n = len(a) - 1
    phi = 2.0 ** n * a[n] * z
    for i in range(n, 0, -1):
        phi = 0.5 * (phi + math.asin(c[i] / a[i] * math.sin(phi)))
    sn = math.sin(phi)
    cn = math.cos(phi)
    # dn >= sqrt(1 - m) > 0, so the square root is well conditioned
    dn = math.sqrt(1.0 - m * sn * sn)
    return JacobiTriple(sn, cn, dn)


def gauss_constant() -> float:
    """G = Gamma(1/4)^2 / (2 pi)^{3/2} = 1/agm(1, sqrt 2)."""
    return gamma(0.25) ** 2 / (2.0 * math.pi) ** 1.5
