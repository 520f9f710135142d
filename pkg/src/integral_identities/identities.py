"""Registry of definite-integral identities and the machinery to check them.

Each :class:`IdentitySpec` pairs a left-hand integral with a right-hand side
(a closed form, or for the Amdeberhan-Moll style entries another integral)
over a parameter domain. :func:`verify` compares the two at one point and
:func:`sweep` does so over a deterministic sample of the domain.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Mapping, Union

from . import oracle
from .elliptic import ellip_k, gauss_constant, jacobi
from .quadrature import Integrand, QuadratureResult, integrate
from .specfun import (
    SpecialFunctionError,
    cos_power_expansion,
    gamma,
    gauss_2f1,
    lerch_phi,
    ln_cos_bernoulli,
    ln_cos_sin_powers,
    r1_series,
    upper_incomplete_gamma,
)

PI = math.pi
EULER_GAMMA = 0.5772156649015329
CATALAN = 0.915965594177219

TOLERANCE_CLASSES = {
    "smooth": 1e-9,
    "near-singular": 1e-7,
    "elliptic": 1e-9,
}

Point = Mapping[str, Union[int, float]]
Rhs = Union[float, Integrand]


# -- parameter domains ---------------------------------------------------------

@dataclass(frozen=True)
class Parameter:
    """A continuous range [lo, hi] or, when ``values`` is set, a finite set.

    Finite sets are always enumerated in full; continuous ranges receive
    ``samples`` stratified points plus any ``mandatory`` values.
    """

    name: str
    lo: float = 0.0
    hi: float = 0.0
    values: tuple = ()
    mandatory: tuple = ()

    def __post_init__(self):
        if not self.values and not self.lo < self.hi:
            raise ValueError(f"empty range for parameter {self.name}")

    @property
    def discrete(self) -> bool:
        return bool(self.values)

    def sample(self, samples: int, rng: random.Random) -> list:
        if self.discrete:
            return list(self.values)
        shift = rng.random()
        width = self.hi - self.lo
        pts = {self.lo + width * (i + shift) / samples for i in range(samples)}
        pts.update(self.mandatory)
        return sorted(pts)


def integer(name: str, lo: int, hi: int) -> Parameter:
    return Parameter(name, values=tuple(range(lo, hi + 1)))


def continuous(name: str, lo: float, hi: float, *mandatory: float) -> Parameter:
    return Parameter(name, lo, hi, mandatory=tuple(mandatory))


@dataclass(frozen=True)
class ParameterDomain:
    params: tuple[Parameter, ...] = ()
    constraint: Callable[[Point], bool] | None = None

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(p.name for p in self.params)

    def points(self, samples: int, seed: int, key: str = "") -> list[dict]:
        """Cartesian product of per-parameter samples, in a fixed order.

        Each parameter draws from its own generator seeded by (seed, key,
        name), so a point set does not depend on which other identities run.
        """
        if samples < 1:
            raise ValueError("samples must be >= 1")
        axes = [
            p.sample(samples, random.Random(f"{seed}:{key}:{p.name}"))
            for p in self.params
        ]
        out = []
        for combo in itertools.product(*axes):
            pt = dict(zip(self.names, combo))
            if self.constraint is None or self.constraint(pt):
                out.append(pt)
        return out


# -- identity records ---------------------------------------------------------

@dataclass(frozen=True)
class IdentitySpec:
    id: str
    description: str
    formula: str
    lhs: Callable[[Point], Integrand]
    rhs: Callable[[Point], Rhs]
    domain: ParameterDomain = ParameterDomain()
    tolerance_class: str = "smooth"
    near_singular: Callable[[Point], bool] | None = field(default=None, compare=False)

    def tolerance(self, point: Point) -> float:
        if self.near_singular is not None and self.near_singular(point):
            return TOLERANCE_CLASSES["near-singular"]
        return TOLERANCE_CLASSES[self.tolerance_class]


@dataclass(frozen=True)
class VerificationRecord:
    id: str
    params: dict
    lhs: float
    lhs_err: float
    rhs: float
    abs_diff: float
    rel_diff: float
    tol: float
    passed: bool
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "params": dict(self.params),
            "lhs": self.lhs,
            "lhs_err": self.lhs_err,
            "rhs": self.rhs,
            "abs_diff": self.abs_diff,
            "rel_diff": self.rel_diff,
            "tol": self.tol,
            "pass": self.passed,
            "note": self.note,
        }


def _quad_tol(tol: float) -> float:
    return min(1e-12, max(1e-13, tol * 1e-3))


def verify(spec: IdentitySpec, point: Point | None = None, tol: float | None = None) -> VerificationRecord:
    """Evaluate both sides of ``spec`` at ``point`` and apply the pass rule.

    pass iff |lhs - rhs| <= tol max(1, |rhs|) and the quadrature error
    estimate (both sides, when the right side is an integral) is within the
    same bound.
    """
    point = dict(point or {})
    missing = set(spec.domain.names) - set(point)
    if missing:
        raise ValueError(f"{spec.id}: missing parameters {sorted(missing)}")
    tol = spec.tolerance(point) if tol is None else tol
    qtol = _quad_tol(tol)
    notes = []
    try:
        left = integrate(spec.lhs(point), qtol)
        rhs_obj = spec.rhs(point)
        if isinstance(rhs_obj, Integrand):
            right = integrate(rhs_obj, qtol)
        else:
            right = QuadratureResult(float(rhs_obj), 0.0, 0, True)
    except (SpecialFunctionError, ArithmeticError) as exc:
        return VerificationRecord(spec.id, point, math.nan, math.nan, math.nan,
                                  math.nan, math.nan, tol, False, f"error: {exc}")
    lhs, rhs = left.value, right.value
    err = left.error_estimate + right.error_estimate
    abs_diff = abs(lhs - rhs)
    scale = max(1.0, abs(rhs))
    rel_diff = abs_diff / abs(rhs) if rhs != 0 else abs_diff
    passed = abs_diff <= tol * scale and err <= tol * scale
    if not (left.converged and right.converged):
        passed = False
        notes.append("quadrature did not converge")
    elif err > tol * scale:
        notes.append("error estimate above tolerance")
    return VerificationRecord(spec.id, point, lhs, err, rhs, abs_diff, rel_diff,
                              tol, passed, "; ".join(notes))


def sweep(spec: IdentitySpec, samples: int = 5, seed: int = 42,
          tol: float | None = None) -> list[VerificationRecord]:
    return [verify(spec, pt, tol) for pt in spec.domain.points(samples, seed, spec.id)]


# -- integrand helpers --------------------------------------------------------

def sech(y: float) -> float:
    e = math.exp(-abs(y))
    return 2.0 * e / (1.0 + e * e)


def tanh_sech(y: float) -> float:
    """sinh y / cosh^2 y without overflow."""
    return math.tanh(y) * sech(y)


def _finite(f, a, b, *breaks) -> Integrand:
    return Integrand.over(f, a, b, *breaks)


def _half_line(f, a: float = 0.0) -> Integrand:
    return Integrand.over(f, a, math.inf)


X_RANGE = continuous("x", 0.05, 0.95)


def _x_near_one(pt: Point) -> bool:
    return pt["x"] >= 0.9


@lru_cache(maxsize=None)
def _k_half() -> float:
    return ellip_k(0.5)


def _gamma_quarter_sq() -> float:
    return gamma(0.25) ** 2


# -- the registry ---------------------------------------------------------------

def _lemma1_entries() -> list[IdentitySpec]:
    m_dom = ParameterDomain((integer("m", 0, 8),))

    def moment_lhs(power):
        def lhs(pt):
            m = pt["m"]
            return _finite(lambda t: t * math.sin(t) ** power * math.cos(t) ** (2 * m), 0.0, PI)
        return lhs

    printed = {
        1: lambda m: PI / (2 * m + 1),
        3: lambda m: 2 * PI / (4 * m * m + 8 * m + 3),
        5: lambda m: 8 * PI / ((2 * m + 1) * (2 * m + 3) * (2 * m + 5)),
        7: lambda m: 48 * PI / ((2 * m + 1) * (2 * m + 3) * (2 * m + 5) * (2 * m + 7)),
    }
    formulas = {
        1: "pi/(2m+1)",
        3: "2 pi/(4m^2+8m+3)",
        5: "8 pi/((2m+1)(2m+3)(2m+5))",
        7: "48 pi/((2m+1)(2m+3)(2m+5)(2m+7))",
    }
    entries = [
        IdentitySpec(
            f"L1-sin{p}",
            f"theta sin^{p} cos^(2m) moment over [0, pi]",
            f"int_0^pi t sin^{p} t cos^(2m) t dt = {formulas[p]}",
            moment_lhs(p),
            (lambda f: lambda pt: f(pt["m"]))(printed[p]),
            m_dom,
        )
        for p in (1, 3, 5, 7)
    ]
    entries.append(IdentitySpec(
        "L1-gen",
        "general odd sine power moment",
        "int_0^pi t sin^(2j+1) t cos^(2m) t dt = 2^j j! pi / ((2m+1)(2m+3)...(2m+2j+1))",
        lambda pt: _finite(
            lambda t: t * math.sin(t) ** (2 * pt["j"] + 1) * math.cos(t) ** (2 * pt["m"]), 0.0, PI),
        lambda pt: oracle.lemma1_closed_form(pt["j"], pt["m"]),
        ParameterDomain((integer("j", 0, 5), integer("m", 0, 6))),
    ))
    entries.append(IdentitySpec(
        "L1-beta",
        "first moment for any integer cosine power, odd included",
        "int_0^pi t sin t cos^m t dt = sqrt(pi)/(2(m+1)) G(m/2+1)/G(m/2+3/2) [1-(-1)^m]"
        " - pi/(m+1) (-1)^(m+1)",
        lambda pt: _finite(lambda t: t * math.sin(t) * math.cos(t) ** pt["m"], 0.0, PI),
        lambda pt: oracle.odd_power_moment_first_entry(pt["m"]),
        ParameterDomain((integer("m", 0, 9),)),
    ))
    entries.append(IdentitySpec(
        "I-rec",
        "x^r sin^p cos^q moments against the q-reduction recursion",
        "I(r,p,q) = [(p+q) x^r sin^(p+1) cos^(q-1) + r x^(r-1) sin^p cos^q"
        " - r(r-1) I(r-2,p,q) - rp I(r-1,p-1,q-1) + (q-1)(p+q) I(r,p,q-2)] / (p+q)^2",
        lambda pt: _finite(
            lambda t: t ** pt["r"] * math.sin(t) ** pt["p"] * math.cos(t) ** pt["q"], 0.0, PI),
        lambda pt: oracle.moment_recursive(pt["r"], pt["p"], pt["q"]),
        ParameterDomain((integer("r", 0, 3), integer("p", 0, 4), integer("q", 0, 5))),
    ))
    entries.append(IdentitySpec(
        "L2",
        "indefinite t sin t cos^m t through 2F1(1/2, m/2+1; m/2+2; cos^2 t)",
        "int t sin t cos^m t dt = -cos^(m+1) t/((m+1)(m+2)) [cos t 2F1(1/2, m/2+1; m/2+2; cos^2 t)"
        " + (m+2) t]",
        lambda pt: _finite(lambda s: s * math.sin(s) * math.cos(s) ** pt["m"], 0.0, pt["t"]),
        lambda pt: (oracle.lemma2_antiderivative(pt["t"], pt["m"])
                    - oracle.lemma2_antiderivative(0.0, pt["m"])),
        ParameterDomain((Parameter("m", values=(0, 2, 4, 6, 8)), continuous("t", 0.1, 3.0, PI / 2))),
    ))

    def cos2m_rhs(pt):
        pairs, const = cos_power_expansion(pt["m"])
        x = pt["x"]
        return math.fsum([c * math.sin(f * x) / f for f, c in pairs] + [const * x])

    entries.append(IdentitySpec(
        "COS2M",
        "cos^(2m) integrated through its finite Fourier expansion",
        "cos^(2m) x = 4^-m [sum_{k<m} 2 C(2m,k) cos 2(m-k)x + C(2m,m)]",
        lambda pt: _finite(lambda t: math.cos(t) ** (2 * pt["m"]), 0.0, pt["x"]),
        cos2m_rhs,
        ParameterDomain((integer("m", 1, 8), continuous("x", 0.1, 3.0))),
    ))
    return entries


def _r1_entries() -> list[IdentitySpec]:
    def lhs(pt):
        r, x = pt["r"], pt["x"]
        return _half_line(lambda z: math.exp(-(r + 1) * z + x * math.exp(-z)))

    def igamma_rhs(pt):
        r, x = pt["r"], pt["x"]
        return (-x) ** (-(r + 1)) * (gamma(r + 1) - upper_incomplete_gamma(r + 1, -x))

    return [
        IdentitySpec(
            "R1", "exponential of exponential, series form",
            "int_0^inf exp(-(r+1)z + x e^-z) dz = sum_n x^n/(n! (n+r+1))",
            lhs, lambda pt: r1_series(pt["r"], pt["x"]),
            ParameterDomain((continuous("r", 0.0, 3.5), continuous("x", 0.1, 2.0))),
        ),
        IdentitySpec(
            "R1-igamma", "exponential of exponential, incomplete gamma form (x < 0)",
            "int_0^inf exp(-(r+1)z + x e^-z) dz = (-x)^-(r+1) [G(r+1) - G(r+1, -x)]",
            lhs, igamma_rhs,
            ParameterDomain((continuous("r", 0.0, 3.5), continuous("x", -2.0, -0.1))),
        ),
    ]


def _theta_sin(power: int, kernel) -> Callable[[Point], Integrand]:
    def lhs(pt):
        return _finite(lambda t: t * math.sin(t) ** power * kernel(pt, math.cos(t)), 0.0, PI)
    return lhs


def _r2_entries() -> list[IdentitySpec]:
    x_dom = ParameterDomain((X_RANGE,))
    minus = lambda pt, c: 1.0 / (1.0 - pt["x"] ** 2 * c * c)
    plus = lambda pt, c: 1.0 / (1.0 + pt["x"] ** 2 * c * c)

    def sin3(pt):
        x = pt["x"]
        return PI / x ** 2 * (1 + (x * x - 1) / x * math.atanh(x))

    def sin5(pt):
        x = pt["x"]
        return PI / x ** 4 * (5 / 3 * x * x - 1 + (x * x - 1) ** 2 / x * math.atanh(x))

    return [
        IdentitySpec("R2", "t sin t / (1 - x^2 cos^2 t)",
                     "int_0^pi t sin t/(1 - x^2 cos^2 t) dt = (pi/2x) ln((1+x)/(1-x))",
                     _theta_sin(1, minus),
                     lambda pt: PI / (2 * pt["x"]) * math.log((1 + pt["x"]) / (1 - pt["x"])),
                     x_dom),
        IdentitySpec("R3", "t sin t / (1 + x^2 cos^2 t)",
                     "int_0^pi t sin t/(1 + x^2 cos^2 t) dt = (pi/x) atan x",
                     _theta_sin(1, plus),
                     lambda pt: PI / pt["x"] * math.atan(pt["x"]),
                     x_dom),
        IdentitySpec("R2-sin3", "t sin^3 t / (1 - x^2 cos^2 t)",
                     "= (pi/x^2) [1 + ((x^2-1)/x) atanh x]",
                     _theta_sin(3, minus), sin3, x_dom),
        IdentitySpec("R2-sin5", "t sin^5 t / (1 - x^2 cos^2 t)",
                     "= (pi/x^4) [(5/3) x^2 - 1 + ((x^2-1)^2/x) atanh x]",
                     _theta_sin(5, minus), sin5, x_dom),
    ]


def _r4_lhs(pt):
    j = pt["j"]

    def f(t):
        c = math.cos(t) ** j
        return math.exp(c * math.cos(j * t)) * math.cos(c * math.sin(j * t))
    return _finite(f, 0.0, PI / 2)


def _r4_entries() -> list[IdentitySpec]:
    return [
        IdentitySpec("R4", "exp(cos^3 cos 3t) cos(cos^3 sin 3t)",
                     "int_0^(pi/2) e^(cos^3 t cos 3t) cos(cos^3 t sin 3t) dt = (pi/2) e^(1/8)",
                     lambda pt: _r4_lhs({"j": 3}), lambda pt: PI / 2 * math.exp(1 / 8)),
        IdentitySpec("R4-gen", "exp(cos^j cos jt) cos(cos^j sin jt)",
                     "= (pi/2) e^(1/2^j)",
                     _r4_lhs, lambda pt: PI / 2 * math.exp(0.5 ** pt["j"]),
                     ParameterDomain((integer("j", 1, 8),))),
    ]


def _r5_entries() -> list[IdentitySpec]:
    x_dom = ParameterDomain((X_RANGE,))
    root = lambda k: lambda pt, c: (1.0 + pt["x"] ** 2 * c * c) ** (1.0 / k)

    def original(pt):
        x = pt["x"]
        s = math.sqrt(1 + x * x)
        return PI / (2 * x) * (x * s + math.log(x + s))

    return [
        IdentitySpec("R5", "t sin t sqrt(1 + x^2 cos^2 t)",
                     "= (pi/2x) [x sqrt(1+x^2) + ln(x + sqrt(1+x^2))]",
                     _theta_sin(1, root(2)), original, x_dom),
        IdentitySpec("R5-gen", "t sin t (1 + x^2 cos^2 t)^(1/k)",
                     "= pi 2F1(1/2, -1/k; 3/2; -x^2)",
                     lambda pt: _theta_sin(1, root(pt["k"]))(pt),
                     lambda pt: PI * gauss_2f1(0.5, -1.0 / pt["k"], 1.5, -pt["x"] ** 2),
                     ParameterDomain((integer("k", 2, 6), X_RANGE))),
        IdentitySpec("R5-k2", "square-root case through asinh",
                     "= (pi/2) [sqrt(1+x^2) + asinh(x)/x]",
                     _theta_sin(1, root(2)),
                     lambda pt: PI / 2 * (math.sqrt(1 + pt["x"] ** 2) + math.asinh(pt["x"]) / pt["x"]),
                     x_dom),
    ]


def _r6_kernel(k):
    def kern(pt, c):
        x = pt["x"]
        return (1 + x * c) ** (1.0 / k) + (1 - x * c) ** (1.0 / k)
    return kern


def _double_factorial(n: int) -> int:
    return math.prod(range(n, 0, -2))


def r6_odd_power_rhs(p: int, k: int, x: float) -> float:
    pref = 2 ** ((p + 1) / 2) * math.factorial((p - 1) // 2) * PI / _double_factorial(p)
    return pref * gauss_2f1(-1 / (2 * k), (k - 1) / (2 * k), (p + 2) / 2, x * x)


def r6_sin3_k2_rhs(x: float) -> float:
    return 8 * PI / (105 * x ** 3) * (
        math.sqrt(1 - x) * (2 + x - 8 * x * x + 5 * x ** 3)
        + math.sqrt(1 + x) * (-2 + x + 8 * x * x + 5 * x ** 3)
    )


def _r6_entries() -> list[IdentitySpec]:
    x_dom = ParameterDomain((X_RANGE,))
    k_dom = ParameterDomain((integer("k", 2, 6), X_RANGE))

    def base(pt):
        x = pt["x"]
        return 3 * PI / (4 * x) * ((1 + x) ** (4 / 3) - (1 - x) ** (4 / 3))

    def gen(pt):
        x, k = pt["x"], pt["k"]
        e = (k + 1) / k
        return PI * k / ((k + 1) * x) * ((1 + x) ** e - (1 - x) ** e)

    return [
        IdentitySpec("R6", "t sin t [(1 + x cos t)^(1/3) + (1 - x cos t)^(1/3)]",
                     "= (3 pi/4x) [(1+x)^(4/3) - (1-x)^(4/3)]",
                     _theta_sin(1, _r6_kernel(3)), base, x_dom,
                     near_singular=_x_near_one),
        IdentitySpec("R6-gen", "t sin t [(1 + x cos t)^(1/k) + (1 - x cos t)^(1/k)]",
                     "= (pi k/((k+1)x)) [(1+x)^((k+1)/k) - (1-x)^((k+1)/k)]",
                     lambda pt: _theta_sin(1, _r6_kernel(pt["k"]))(pt), gen, k_dom,
                     near_singular=_x_near_one),
        IdentitySpec("R6-sin3", "t sin^3 t [(1 + x cos t)^(1/k) + (1 - x cos t)^(1/k)]",
                     "= (4 pi/3) 2F1(-1/(2k), (k-1)/(2k); 5/2; x^2)",
                     lambda pt: _theta_sin(3, _r6_kernel(pt["k"]))(pt),
                     lambda pt: r6_odd_power_rhs(3, pt["k"], pt["x"]), k_dom,
                     near_singular=_x_near_one),
        IdentitySpec("R6-sin3-k2", "t sin^3 t [sqrt(1 + x cos t) + sqrt(1 - x cos t)]",
                     "= (8 pi/(105 x^3)) [sqrt(1-x)(2+x-8x^2+5x^3) + sqrt(1+x)(-2+x+8x^2+5x^3)]",
                     _theta_sin(3, _r6_kernel(2)), lambda pt: r6_sin3_k2_rhs(pt["x"]), x_dom,
                     near_singular=_x_near_one),
        IdentitySpec("R6-odd-p", "t sin^p t [(1 + x cos t)^(1/k) + (1 - x cos t)^(1/k)], p odd",
                     "= (2^((p+1)/2) ((p-1)/2)! pi / p!!) 2F1(-1/(2k), (k-1)/(2k); (p+2)/2; x^2)",
                     lambda pt: _theta_sin(pt["p"], _r6_kernel(pt["k"]))(pt),
                     lambda pt: r6_odd_power_rhs(pt["p"], pt["k"], pt["x"]),
                     ParameterDomain((Parameter("p", values=(1, 3, 5, 7)),
                                      Parameter("k", values=(2, 3)), X_RANGE)),
                     near_singular=_x_near_one),
    ]


def r7_explicit(x: float) -> float:
    r2 = math.sqrt(2.0)
    return (PI / (2 ** 2.5 * x) * math.log((1 + r2 * x + x * x) / (1 - r2 * x + x * x))
            + PI / (2 ** 1.5 * x) * math.atan(r2 * x / (1 - x * x)))


def r7_lerch(j: int, x: float, sign: int = -1) -> float:
    """(pi/j) Phi(sign x^j, 1, 1/j); sign = -1 is the alternating series."""
    return PI / j * lerch_phi(sign * x ** j, 1.0, 1.0 / j)


def r7_2f1(x: float, sign: int = -1) -> float:
    return PI * gauss_2f1(0.25, 1.0, 1.25, sign * x ** 4)


def _r7_lhs(pt):
    j = pt.get("j", 4)
    x = pt["x"]
    return _finite(lambda t: t * math.sin(t) / (1 + (x * math.cos(t)) ** j), 0.0, PI)


@lru_cache(maxsize=None)
def r7_sign_check(x: float = 0.6) -> dict:
    """Which sign of x^4 in the Lerch and 2F1 forms matches quadrature."""
    lhs = integrate(_r7_lhs({"x": x}), 1e-13).value
    out = {}
    for label, fn in (("lerch", lambda s: r7_lerch(4, x, s)), ("2f1", lambda s: r7_2f1(x, s))):
        out[label] = min((-1, 1), key=lambda s: abs(fn(s) - lhs))
    return out


def _r7_entries() -> list[IdentitySpec]:
    x_dom = ParameterDomain((X_RANGE,))
    return [
        IdentitySpec("R7", "t sin t / (1 + x^4 cos^4 t)",
                     "= (pi/(2^(5/2) x)) ln((1+sqrt2 x+x^2)/(1-sqrt2 x+x^2))"
                     " + (pi/(2^(3/2) x)) atan(sqrt2 x/(1-x^2))",
                     _r7_lhs, lambda pt: r7_explicit(pt["x"]), x_dom),
        IdentitySpec("R7-gen", "t sin t / (1 + x^j cos^j t), j even",
                     "= (pi/j) Phi(-x^j, 1, 1/j)",
                     _r7_lhs, lambda pt: r7_lerch(pt["j"], pt["x"], r7_sign_check()["lerch"]),
                     ParameterDomain((Parameter("j", values=(2, 4, 6)), X_RANGE))),
        IdentitySpec("R7-2f1", "quartic case as a hypergeometric",
                     "= pi 2F1(1/4, 1; 5/4; -x^4)",
                     _r7_lhs, lambda pt: r7_2f1(pt["x"], r7_sign_check()["2f1"]), x_dom),
    ]


def _r8_entries() -> list[IdentitySpec]:
    dom = ParameterDomain((continuous("x", 0.05, 0.9),))
    lhs = lambda pt: _finite(math.tan, 0.0, pt["x"])
    return [
        IdentitySpec("R8-bern", "ln cos through Bernoulli numbers",
                     "-ln cos x = int_0^x tan t dt, ln cos x = sum_k s_k 2^(2k-1)(2^(2k)-1) B_2k x^2k/(k (2k)!)",
                     lhs, lambda pt: -ln_cos_bernoulli(pt["x"]), dom),
        IdentitySpec("R8-sin", "ln cos through powers of sine",
                     "ln cos x = -(1/2) sum_k sin^2k x / k",
                     lhs, lambda pt: -ln_cos_sin_powers(pt["x"]), dom),
    ]


def _r10_integrand(a: float):
    def f(t):
        c = math.cos(t)
        p = math.exp(a * c * c)
        y = math.cos(a * math.sin(t) * c)
        return (1 + p * y) / (1 + 2 * p * y + p * p)
    return f


def _r10_entries() -> list[IdentitySpec]:
    dom = ParameterDomain((continuous("a", 0.25, 5.0, 0.5, 1.0, 2.0, 4.0),))
    rhs = lambda pt: PI / (2 * (math.exp(pt["a"] / 2) + 1))

    def full(pt):
        f = _r10_integrand(pt["a"])
        return _finite(lambda t: 0.25 * f(t), 0.0, 2 * PI, PI / 2, PI, 1.5 * PI)

    return [
        IdentitySpec("R10", "cosine kernel with p = exp(a cos^2), x = a sin cos",
                     "int_0^(pi/2) (1 + e^(a cos^2) cos(a sin cos)) / (1 + 2 e^(a cos^2) cos(a sin cos)"
                     " + e^(2a cos^2)) dt = pi/(2(e^(a/2)+1))",
                     lambda pt: _finite(_r10_integrand(pt["a"]), 0.0, PI / 2), rhs, dom),
        IdentitySpec("R10-full", "same integrand over a full period, quartered",
                     "(1/4) int_0^(2 pi) (...) dt = pi/(2(e^(a/2)+1))",
                     full, rhs, dom),
    ]


def _amm_entries() -> list[IdentitySpec]:
    g_dom = lambda *mand: ParameterDomain((continuous("g", 0.25, 5.0, *mand),))
    r_dom = ParameterDomain((continuous("r", 0.25, 5.0, 2.0),))
    sqrt_pi = math.sqrt(PI)

    def a1_lhs(pt):
        g = pt["g"]
        return _half_line(lambda x: x * (
            g * tanh_sech(g * x) * math.exp(-x * x / PI ** 2)
            + sqrt_pi * tanh_sech(x) * math.exp(-g * g * x * x)))

    def a1_rhs(pt):
        g = pt["g"]
        return _half_line(lambda x: math.exp(-x * x / PI ** 2) * sech(g * x))

    def a10_lhs(pt):
        g = pt["g"]
        return _half_line(lambda x: (PI ** 5 * math.exp(-PI ** 3 * x * x / g)
                                     + g ** 2.5 * math.exp(-g * x * x / PI)) * x * x * sech(PI * x))

    def a10_rhs(pt):
        g = pt["g"]
        c = PI * g ** 1.5 / 2
        return _half_line(lambda x: c * math.exp(-g * x * x / PI) * sech(PI * x))

    def a3_lhs(pt):
        r = pt["r"]
        return _half_line(lambda x: x * (math.exp(-x * x / PI) + r * math.exp(-r ** 4 * x * x / PI))
                          * tanh_sech(r * x))

    def a3_rhs(pt):
        r = pt["r"]
        return _half_line(lambda x: math.exp(-r * r * x * x / PI) * sech(r * r * x))

    def a5_lhs(pt):
        return _half_line(lambda x: x * math.exp(-x * x / PI) * tanh_sech(x))

    def a5_rhs(pt):
        r = pt["r"]
        return _half_line(lambda x: r / 2 * math.exp(-r * r * x * x / PI) * sech(r * x))

    def log_normal(x):
        if x <= 0.0:
            return 0.0
        lx = math.log(x)
        return math.exp(-lx * lx) / (1 + x * x)

    def a6_rhs(pt):
        r = pt["r"]
        return _half_line(lambda x: r / 2 * math.exp(-r * r * x * x / PI) * sech(r * sqrt_pi * x))

    def a9_lhs(pt):
        p = pt["p"]
        c = p * p * math.sqrt(p) / PI ** 2
        return _half_line(lambda x: (sqrt_pi * math.exp(-x * x / p) + c * math.exp(-p * x * x / PI ** 2))
                          * x * x * sech(x))

    def a9_rhs(pt):
        p = pt["p"]
        c = p * PI * math.sqrt(p) / 2
        return _half_line(lambda x: c * math.exp(-p * x * x) * sech(PI * x))

    return [
        IdentitySpec("A1", "Gaussian against sech kernels, parameter g",
                     "int_0^inf x (g sinh gx/cosh^2 gx e^(-x^2/pi^2) + sqrt(pi) sinh x/cosh^2 x e^(-g^2 x^2)) dx"
                     " = int_0^inf e^(-x^2/pi^2)/cosh gx dx",
                     a1_lhs, a1_rhs, g_dom(EULER_GAMMA)),
        IdentitySpec("A3", "Gaussian against sech kernels, parameter r",
                     "int_0^inf x (e^(-x^2/pi) + r e^(-r^4 x^2/pi)) sinh rx/cosh^2 rx dx"
                     " = int_0^inf e^(-r^2 x^2/pi)/cosh r^2 x dx",
                     a3_lhs, a3_rhs, r_dom),
        IdentitySpec("A5", "scale-free Gaussian sech integral",
                     "int_0^inf x e^(-x^2/pi) sinh x/cosh^2 x dx = (r/2) int_0^inf e^(-r^2 x^2/pi)/cosh rx dx",
                     a5_lhs, a5_rhs, r_dom),
        IdentitySpec("A6", "x^(-ln x)/(1+x^2) on [0, 1]",
                     "int_0^1 x^(-ln x)/(1+x^2) dx = (r/2) int_0^inf e^(-r^2 x^2/pi)/cosh(r sqrt(pi) x) dx",
                     lambda pt: _finite(log_normal, 0.0, 1.0), a6_rhs, r_dom),
        IdentitySpec("A6-sym", "x -> 1/x symmetry of x^(-ln x)/(1+x^2)",
                     "int_0^1 x^(-ln x)/(1+x^2) dx = int_1^inf x^(-ln x)/(1+x^2) dx",
                     lambda pt: _finite(log_normal, 0.0, 1.0),
                     lambda pt: _half_line(log_normal, 1.0)),
        IdentitySpec("A9", "x^2 sech x against two Gaussians, parameter p",
                     "int_0^inf (sqrt(pi) e^(-x^2/p) + p^2 sqrt(p) pi^-2 e^(-p x^2/pi^2)) x^2/cosh x dx"
                     " = (p pi sqrt(p)/2) int_0^inf e^(-p x^2)/cosh(pi x) dx",
                     a9_lhs, a9_rhs,
                     ParameterDomain((continuous("p", 0.25, 5.0, 3.0),))),
        IdentitySpec("A10", "x^2 sech(pi x) against two Gaussians, parameter g",
                     "int_0^inf (pi^5 e^(-pi^3 x^2/g) + g^(5/2) e^(-g x^2/pi)) x^2/cosh(pi x) dx"
                     " = (pi g^(3/2)/2) int_0^inf e^(-g x^2/pi)/cosh(pi x) dx",
                     a10_lhs, a10_rhs, g_dom(CATALAN)),
    ]


def _elliptic_entries() -> list[IdentitySpec]:
    m = 0.5

    def k_integrand(t):
        s = math.sin(t)
        return 1.0 / math.sqrt(1.0 - m * s * s)

    def r5_like(z):
        sn, cn, _ = jacobi(z, m)
        return z * sn * math.sqrt(1.0 + cn * cn)

    def cn_power(power):
        def f(z):
            sn, cn, dn = jacobi(z, m)
            return z * sn * dn * cn ** power
        return f

    def quarter(f):
        return lambda pt: _finite(f, 0.0, _k_half())

    entries = [
        IdentitySpec("K-half", "lemniscatic complete elliptic integral",
                     "K(1/2) = int_0^(pi/2) dt/sqrt(1 - sin^2 t/2) = G(1/4)^2/(4 sqrt(pi))",
                     lambda pt: _finite(k_integrand, 0.0, PI / 2),
                     lambda pt: _gamma_quarter_sq() / (4 * math.sqrt(PI)),
                     tolerance_class="elliptic"),
        IdentitySpec("K-gauss", "Gauss constant from K at modulus 1/sqrt 2",
                     "G = (sqrt2/pi) K = G(1/4)^2/(2 pi)^(3/2)",
                     lambda pt: _finite(lambda t: math.sqrt(2) / PI * k_integrand(t), 0.0, PI / 2),
                     lambda pt: gauss_constant(),
                     tolerance_class="elliptic"),
        IdentitySpec("E-R5a", "z sn sqrt(1 + cn^2) over a quarter period",
                     "int_0^K z sn(z,1/2) sqrt(1 + cn^2(z,1/2)) dz = pi/2",
                     quarter(r5_like), lambda pt: PI / 2, tolerance_class="elliptic"),
        IdentitySpec("E-R5b", "z sn sqrt(1 + cn^2) over a half period",
                     "int_0^2K z sn(z,1/2) sqrt(1 + cn^2(z,1/2)) dz = G(1/4)^2/sqrt(2 pi)",
                     lambda pt: _finite(r5_like, 0.0, 2 * _k_half(), _k_half()),
                     lambda pt: _gamma_quarter_sq() / math.sqrt(2 * PI),
                     tolerance_class="elliptic"),
        IdentitySpec("E-cn2", "z sn dn cn^2 over a quarter period",
                     "int_0^K z sn dn cn^2 dz = 1/(3 sqrt2)",
                     quarter(cn_power(2)), lambda pt: 1 / (3 * math.sqrt(2)),
                     tolerance_class="elliptic"),
        IdentitySpec("E-cn4", "z sn dn cn^4 over a quarter period",
                     "int_0^K z sn dn cn^4 dz = pi/(20 sqrt2)",
                     quarter(cn_power(4)), lambda pt: PI / (20 * math.sqrt(2)),
                     tolerance_class="elliptic"),
        IdentitySpec("E-cn5", "z sn dn cn^5 over a quarter period",
                     "int_0^K z sn dn cn^5 dz = 1/(10 sqrt2 G)",
                     quarter(cn_power(5)), lambda pt: 1 / (10 * math.sqrt(2) * gauss_constant()),
                     tolerance_class="elliptic"),
    ]
    return entries


@lru_cache(maxsize=None)
def _build() -> tuple[IdentitySpec, ...]:
    entries = (
        _lemma1_entries()
        + _r1_entries()
        + _r2_entries()
        + _r4_entries()
        + _r5_entries()
        + _r6_entries()
        + _r7_entries()
        + _r8_entries()
        + _r10_entries()
        + _amm_entries()
        + _elliptic_entries()
    )
    ids = [e.id for e in entries]
    if len(set(ids)) != len(ids):
        raise RuntimeError("duplicate identity ids in registry")
    return tuple(entries)


def registry() -> list[IdentitySpec]:
    """All identities, in a fixed order."""
    return list(_build())


def get(identity_id: str) -> IdentitySpec:
    for spec in _build():
        if spec.id == identity_id:
            return spec
    raise KeyError(identity_id)


UNVALIDATED = (
    "R6 sin^3 quintic form for k > 2 ((4 pi/3)(q/x^3)[p(x)/(1-x)^((2k-1)/2) + ...]) is not encoded:"
    " its printed p(x) has unbalanced parentheses; the 2F1 form is used instead",
)


def registry_notes() -> list[str]:
    """Conventions fixed numerically at run time, for the report."""
    from .specfun import ln_cos_sign

    signs = r7_sign_check()
    sign_word = {-1: "alternating (-x^4)", 1: "non-alternating (+x^4)"}
    return [
        f"R7 Lerch form uses {sign_word[signs['lerch']]} argument, confirmed by quadrature",
        f"R7 2F1 reduction uses {sign_word[signs['2f1']]} argument, confirmed by quadrature",
        f"ln cos Bernoulli series sign factor: {ln_cos_sign()}",
        f"Lemma 2 hypergeometric reading: 2F1(1/2, {oracle.lemma2_reading()}; m/2+2; cos^2 t)",
        *UNVALIDATED,
    ]
