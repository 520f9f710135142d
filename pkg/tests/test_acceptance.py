"""Acceptance suite: one test and one printed PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v``; the verdict lines are
printed outside pytest's capture so they also show up in teed logs.
"""

import json
import math
import random

import pytest

from integral_identities import harness, oracle
from integral_identities import identities as ids
from integral_identities import specfun as sf
from integral_identities.elliptic import ellip_k, gauss_constant, jacobi
from integral_identities.identities import get, sweep, verify
from integral_identities.quadrature import integrate_finite, integrate_semi_infinite


@pytest.fixture
def verdict(capsys):
    def emit(n, checks):
        failed = [name for name, ok in checks if not ok]
        line = f"ACCEPTANCE {n:>2}: {'PASS' if not failed else 'FAIL'}"
        if failed:
            line += "  (" + "; ".join(failed) + ")"
        with capsys.disabled():
            print("\n" + line)
        assert not failed, line
    return emit


def close(a, b, tol):
    return abs(a - b) <= tol * max(1.0, abs(b))


def sweep_ok(identity_id, tol=None, samples=5):
    recs = sweep(get(identity_id), samples, tol=tol)
    return bool(recs) and all(r.passed for r in recs), recs


def test_01_lemma1_grid(verdict):
    checks = []
    cases = [(j, m) for j in range(5) for m in range(7)]
    assert len(cases) == 35
    for j, m in cases:
        got = oracle.moment_recursive(1, 2 * j + 1, 2 * m)
        want = oracle.lemma1_closed_form(j, m)
        checks.append((f"recursion j={j} m={m}", abs(got - want) <= 1e-11 * abs(want)))
    rng = random.Random(2024)
    for j, m in rng.sample(cases, 20):
        f = lambda t, j=j, m=m: t * math.sin(t) ** (2 * j + 1) * math.cos(t) ** (2 * m)
        q = integrate_finite(f, 0.0, math.pi, 1e-13).value
        checks.append((f"quadrature j={j} m={m}", close(q, oracle.lemma1_closed_form(j, m), 1e-10)))
    verdict(1, checks)


def test_02_r2_r3_family(verdict):
    checks = []
    for identity_id in ("R2", "R3", "R2-sin3", "R2-sin5"):
        ok, recs = sweep_ok(identity_id, tol=1e-9)
        checks.append((identity_id, ok and len(recs) == 5))
    rec = verify(get("R2"), {"x": 0.5}, 1e-9)
    checks.append(("R2 at x=0.5 equals pi ln 3", rec.passed and close(rec.rhs, math.pi * math.log(3), 1e-14)))
    verdict(2, checks)


def test_03_r4_generalization(verdict):
    checks = []
    for j in range(1, 9):
        rec = verify(get("R4-gen"), {"j": j}, 1e-10)
        want = math.pi / 2 * math.exp(1 / 2 ** j)
        checks.append((f"j={j}", rec.passed and close(rec.lhs, want, 1e-10)))
    rec = verify(get("R4"), {}, 1e-10)
    checks.append(("cubic case j=3", rec.passed and close(rec.lhs, math.pi / 2 * math.exp(1 / 8), 1e-10)))
    verdict(3, checks)


def test_04_r5_generalization(verdict):
    checks = []
    ok, recs = sweep_ok("R5-gen", tol=1e-9)
    checks.append(("R5-gen sweep", ok and {r.params["k"] for r in recs} == {2, 3, 4, 5, 6}))
    for i in range(1, 20):
        x = 0.05 * i
        radical = math.pi / 2 * (math.sqrt(1 + x * x) + math.asinh(x) / x)
        hyper = math.pi * sf.gauss_2f1(0.5, -0.5, 1.5, -x * x)
        checks.append((f"k=2 radical vs 2F1 at x={x:.2f}", abs(radical - hyper) <= 1e-10 * abs(radical)))
    verdict(4, checks)


def test_05_r6_family(verdict):
    checks = []
    for identity_id in ("R6", "R6-gen", "R6-sin3", "R6-sin3-k2", "R6-odd-p"):
        ok, recs = sweep_ok(identity_id)
        tols_ok = all(r.tol == (1e-7 if r.params["x"] >= 0.9 else 1e-9) for r in recs)
        checks.append((identity_id, ok and tols_ok))
    _, recs = sweep_ok("R6-sin3")
    checks.append(("sin^3 covers k=2..6", {r.params["k"] for r in recs} == {2, 3, 4, 5, 6}))
    _, recs = sweep_ok("R6-odd-p")
    checks.append(("odd p covers p in {1,3,5,7}, k in {2,3}",
                   {(r.params["p"], r.params["k"]) for r in recs}
                   == {(p, k) for p in (1, 3, 5, 7) for k in (2, 3)}))
    verdict(5, checks)


def test_06_r7_forms(verdict):
    checks = []
    for i in range(1, 20):
        x = 0.05 * i
        e = ids.r7_explicit(x)
        checks.append((f"Lerch j=4 at x={x:.2f}", close(ids.r7_lerch(4, x), e, 1e-9)))
        checks.append((f"2F1 at x={x:.2f}", close(ids.r7_2f1(x), e, 1e-9)))
    for identity_id in ("R7", "R7-gen", "R7-2f1"):
        ok, recs = sweep_ok(identity_id, tol=1e-9)
        checks.append((identity_id, ok))
    _, recs = sweep_ok("R7-gen")
    checks.append(("even j in {2,4,6}", {r.params["j"] for r in recs} == {2, 4, 6}))
    checks.append(("sign recorded", ids.r7_sign_check() == {"lerch": -1, "2f1": -1}
                   and any("alternating" in n for n in ids.registry_notes())))
    verdict(6, checks)


def test_07_r10(verdict):
    checks = []
    for a in (0.5, 1.0, 2.0, 4.0):
        want = math.pi / (2 * (math.exp(a / 2) + 1))
        rec = verify(get("R10"), {"a": a}, 1e-9)
        checks.append((f"a={a}", rec.passed and close(rec.rhs, want, 1e-15)))
        quarter = verify(get("R10"), {"a": a}, 1e-9).lhs
        full = verify(get("R10-full"), {"a": a}, 1e-9).lhs
        checks.append((f"quarter-period symmetry a={a}", close(quarter, full, 1e-9)))
    verdict(7, checks)


def test_08_a_identities(verdict):
    mandatory = {"A1": ("g", ids.EULER_GAMMA), "A3": ("r", 2.0), "A5": ("r", 2.0),
                 "A6": ("r", 2.0), "A9": ("p", 3.0), "A10": ("g", ids.CATALAN)}
    checks = []
    for identity_id, (name, value) in mandatory.items():
        ok, recs = sweep_ok(identity_id, tol=1e-8)
        checks.append((identity_id, ok))
        checks.append((f"{identity_id} includes {name}={value}",
                       any(r.params[name] == value for r in recs)))
    checks.append(("A10 constant is Catalan's", close(ids.CATALAN, 0.915965594177219015, 1e-15)))
    verdict(8, checks)


def test_09_elliptic_values(verdict):
    g = gauss_constant()
    g14 = sf.gamma(0.25)
    expected = {
        "E-R5a": math.pi / 2,
        "E-R5b": g14 ** 2 / math.sqrt(2 * math.pi),
        "E-cn2": 1 / (3 * math.sqrt(2)),
        "E-cn4": math.pi / (20 * math.sqrt(2)),
        "E-cn5": 1 / (10 * math.sqrt(2) * g),
    }
    checks = [("Gauss constant", abs(g - 0.83462684167) <= 1e-11)]
    for identity_id, want in expected.items():
        rec = verify(get(identity_id), {}, 1e-9)
        checks.append((identity_id, rec.passed and close(rec.lhs, want, 1e-9)))
    checks.append(("K(1/2)", abs(ellip_k(0.5) - g14 ** 2 / (4 * math.sqrt(math.pi))) <= 1e-12))
    verdict(9, checks)


def test_10_r1(verdict):
    checks = []
    for r in (0.0, 0.5, 1.0, 2.0, 3.5):
        for x in (0.1, 0.5, 1.0, 2.0):
            q = integrate_semi_infinite(lambda z: math.exp(-(r + 1) * z + x * math.exp(-z)), 1e-13).value
            checks.append((f"r={r} x={x}", close(q, sf.r1_series(r, x), 1e-10)))
    verdict(10, checks)


def _gauss_summation_checks():
    rng = random.Random(11)
    out = []
    while len(out) < 60:
        a, b = rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)
        c = a + b + rng.uniform(0.25, 3.0)
        if c <= 0 and abs(c - round(c)) < 1e-6:
            continue
        want = sf.gamma(c) * sf.gamma(c - a - b) * sf.rgamma(c - a) * sf.rgamma(c - b)
        got = sf.gauss_2f1(a, b, c, 1.0)
        out.append((f"Gauss summation ({a:.3f},{b:.3f},{c:.3f})", abs(got - want) <= 1e-10 * abs(want)))
    return out


def _duplication_checks():
    """Both the single-index form as stated and the doubled-index form."""
    rng = random.Random(12)
    printed, doubled = True, True
    for _ in range(60):
        lam, n = rng.uniform(0.01, 1.99), rng.randint(0, 15)
        rhs = 2.0 ** (2 * n) * sf.pochhammer(lam / 2, n) * sf.pochhammer((lam + 1) / 2, n)
        printed &= abs(sf.pochhammer(lam, n) - rhs) <= 1e-12 * abs(rhs)
        doubled &= abs(sf.pochhammer(lam, 2 * n) - rhs) <= 1e-12 * abs(rhs)
    return [
        ("Pochhammer duplication (lam)_n = 2^(2n)(lam/2)_n((lam+1)/2)_n as stated", printed),
        ("Pochhammer duplication with (lam)_(2n)", doubled),
    ]


def _jacobi_checks():
    out = []
    for m in (0.1, 0.3, 0.5, 0.9):
        k = ellip_k(m)
        triple_ok = deriv_ok = period_ok = True
        for i in range(41):
            z = 2 * k * i / 40
            sn, cn, dn = jacobi(z, m)
            triple_ok &= abs(sn * sn + cn * cn - 1) <= 1e-11 and abs(dn * dn + m * sn * sn - 1) <= 1e-11
            h = 1e-5
            fd = (jacobi(z + h, m).cn - jacobi(z - h, m).cn) / (2 * h)
            deriv_ok &= abs(fd + sn * dn) <= 1e-6
            period_ok &= abs(jacobi(z + 4 * k, m).sn - sn) <= 1e-9
        out += [(f"Jacobi identities m={m}", triple_ok), (f"cn' = -sn dn m={m}", deriv_ok),
                (f"sn period 4K m={m}", period_ok)]
    return out


def _kernel_checks():
    rng = random.Random(13)
    cos_ok = hyp_ok = True
    for _ in range(200):
        p, x = rng.uniform(-0.9, 0.9), rng.uniform(-math.pi, math.pi)
        cos_ok &= abs(sf.cos_kernel_partial(p, x, 400) - sf.cos_kernel(p, x)) <= 1e-8
        y = rng.uniform(0.5, 5.0)
        hyp_ok &= abs(sf.csch_series(y, 60) * math.sinh(y) - 1) <= 1e-12
        hyp_ok &= abs(sf.sech_series(y, 60) * math.cosh(y) - 1) <= 1e-12
    return [("cosine kernel series", cos_ok), ("csch/sech kernel series", hyp_ok)]


def test_11_function_properties(verdict):
    checks = _gauss_summation_checks() + _duplication_checks() + _jacobi_checks() + _kernel_checks()
    verdict(11, checks)


def test_12_full_run_reproducible(verdict):
    first, status = harness.run("*", 5)
    second, _ = harness.run("*", 5)
    dump = lambda rep: json.dumps(rep.records_json(), indent=2)
    checks = [
        ("exit status 0", status == harness.EXIT_OK),
        ("no failed records", first.summary["failed"] == 0),
        ("byte-identical records", dump(first) == dump(second)),
        ("summary identical", json.dumps(first.summary) == json.dumps(second.summary)),
    ]
    verdict(12, checks)
