"""The nine acceptance criteria, one test each.

Every test records a one-line verdict (printed in the terminal summary and,
under ``-s``, immediately) before asserting.
"""

import time
from fractions import Fraction

import numpy as np
import pytest

from conftest import ACCEPTANCE
from weylcremona.birep import GroupWord, Representation, apply_word, states_equal, verify_coxeter_relations
from weylcremona.flows import (
    FlowSpec,
    backlund_flow_commutation,
    continuum_limit_experiment,
    rk4_integrate,
    self_convergence,
    verify_derivation_equivariance,
)
from weylcremona.latticedyn import (
    DP2Params,
    a1l_representation,
    check_tf,
    dp2_versus_group_orbit,
    tf_corrected,
    tf_printed,
    translation_word,
    verify_dAl,
)
from weylcremona.rootdata import (
    cartan_affine_A,
    cartan_finite_A,
    cyclic_orientation,
    symbolic_skew_orientation,
    validate_cartan,
    validate_orientation,
)
from weylcremona.taucocycle import cocycle_suite, conjecture_scan


def record(k, ok, detail):
    ACCEPTANCE[k] = (bool(ok), detail)
    print(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")


def _rep(A, U, mode="thmA"):
    return Representation(A, validate_orientation(U, A, mode))


def test_criterion_1_coxeter_relations():
    B2 = validate_cartan([[2, -2], [-1, 2]], "B2")
    G2 = validate_cartan([[2, -3], [-1, 2]], "G2")
    cases = [
        ("A2", cartan_finite_A(2), [[0, 1], [-1, 0]]),
        ("A1xA1", validate_cartan([[2, 0], [0, 2]]), [[0, 0], [0, 0]]),
    ]
    cases += [(f"B2 u01=-{k}u10", B2, [[0, -k], [1, 0]]) for k in (1, 2)]
    cases += [(f"G2 u01=-{k}u10", G2, [[0, -k], [1, 0]]) for k in (1, Fraction(3, 2), 2, 3)]
    cases += [(f"A1_{l} cyclic", cartan_affine_A(l), cyclic_orientation(l)) for l in (2, 3)]
    t0 = time.perf_counter()
    bad = []
    nchecks = 0
    for name, A, U in cases:
        r = verify_coxeter_relations(_rep(A, U))
        nchecks += len(r.checks)
        if not r.passed:
            bad.append(name)
    dt = time.perf_counter() - t0
    ok = not bad and dt < 120
    record(1, ok, f"{len(cases)} root data, {nchecks} relations, {dt:.1f}s" + (f", failing: {bad}" if bad else ""))
    assert ok


def test_criterion_2_cocycle_suite():
    t0 = time.perf_counter()
    r = cocycle_suite(a1l_representation(2), 3)
    dt = time.perf_counter() - t0
    ok = r.passed and dt < 120
    record(2, ok, f"{len(r.checks)} checks ({r.checks[0].name}), {dt:.1f}s")
    assert ok, r.to_text()


def test_criterion_3_conjecture_scan():
    A = cartan_affine_A(2)
    rep = Representation(A, validate_orientation(symbolic_skew_orientation(A), A, "conjecture"))
    t0 = time.perf_counter()
    r, results = conjecture_scan(rep, 6)
    dt = time.perf_counter() - t0
    ok = r.passed and r.info["non_polynomial"] == 0 and dt < 600
    record(3, ok, f"{len(results)} cases, {r.info['non_polynomial']} non-polynomial, {dt:.1f}s")
    assert ok


def test_criterion_4_discrete_dynamics():
    t0 = time.perf_counter()
    reports = [verify_dAl(l) for l in (2, 3, 4)]
    lines = sum(len(r.checks) for r in reports)
    closed = all(r.passed for r in reports)
    printed = check_tf(tf_printed())
    corrected = check_tf(tf_corrected())
    # T(f1) and T^-1(f0) reproduce as printed; T(f0), T(f2) need the
    # a0 + a2 numerator of g_{2,1} (the a0 + a1 version is recorded as failing)
    verbatim = printed["T(f1)"] and printed["T^-1(f0)"]
    dt = time.perf_counter() - t0
    ok = closed and verbatim and all(corrected.values()) and dt < 300
    record(
        4,
        ok,
        f"closed form + g identities: {lines} checks; T(f1), T^-1(f0) verbatim; "
        f"T(f0) with a0+a2 numerator (a0+a1 form matches: {printed['T(f0)']}); {dt:.1f}s",
    )
    assert ok


def test_criterion_5_dp2():
    p = DP2Params.preset()
    r = dp2_versus_group_orbit(Fraction(1, 3), Fraction(2, 5), p, 20)
    rep = a1l_representation(2)
    t1 = translation_word(rep, 1).word
    commute = []
    for w in (GroupWord((0, 1, 0)), GroupWord((2,))):
        commute.append(states_equal(apply_word(rep, w + t1), apply_word(rep, t1 + w))[0])
    ok = r.passed and all(commute)
    record(5, ok, f"20 exact steps agree: {r.passed}; r0 = s0 s1 s0 and r1 = s2 commute with T1: {commute}")
    assert ok, r.to_text()


def test_criterion_6_equivariance():
    t0 = time.perf_counter()
    cases = [("A_even", 1), ("A_even", 2), ("A_odd", 1), ("A_odd", 2)]
    reports = [verify_derivation_equivariance(f, n) for f, n in cases]
    dt = time.perf_counter() - t0
    ok = all(r.passed for r in reports) and dt < 600
    record(6, ok, f"SP4, A1_4, P_V, A_odd(2): {sum(len(r.checks) for r in reports)} checks, {dt:.1f}s")
    assert ok


SP4 = FlowSpec.sp4((0.3, 0.5, 0.7))
PV = FlowSpec.pv((0.2, 0.3, 0.4, 0.5))


def test_criterion_7_conservation_and_order():
    t = rk4_integrate(SP4, [0.4, 0.6, 0.8], (0, 1), 1e-3)
    drift = float(np.max(np.abs(t.y.sum(axis=1) - (t.y[0].sum() + SP4.delta * t.x))))
    t = rk4_integrate(PV, [0.4, 0.6, 0.8, 0.5], (0, 1), 1e-3)
    q = (t.y[:, 0] + t.y[:, 2]) * np.exp(-PV.delta * t.x / 2)
    rel = float(np.max(np.abs(q - q[0])) / abs(q[0]))
    # at h = 1e-3 the endpoint differences sit at roundoff, so the ratio is
    # measured from h = 0.1
    ratios = {
        "SP4": self_convergence(SP4, [0.4, 0.6, 0.8], (0, 1), 0.1),
        "P_V": self_convergence(PV, [0.4, 0.6, 0.8, 0.5], (0, 1), 0.1),
        "P2": self_convergence(FlowSpec.p2(0.6), [0.2, 0.1], (0, 1), 0.1),
    }
    ok = drift < 1e-8 and rel < 1e-6 and all(12 <= v <= 20 for v in ratios.values())
    rtxt = ", ".join(f"{k} {v:.2f}" for k, v in ratios.items())
    record(7, ok, f"SP4 drift {drift:.1e}, P_V relative drift {rel:.1e}, ratios {rtxt}")
    assert ok


def test_criterion_8_backlund_commutation():
    devs = {w: backlund_flow_commutation(SP4, w, [0.4, 0.6, 0.8], (0, 0.5), 1e-3) for w in (1, "pi")}
    ok = all(d < 1e-6 for d in devs.values())
    record(8, ok, f"max deviation s1 {devs[1]:.1e}, pi {devs['pi']:.1e}")
    assert ok


def test_criterion_9_continuum_limit():
    t0 = time.perf_counter()
    rep = continuum_limit_experiment(0.1)
    dt = time.perf_counter() - t0
    ok = 1.5 <= rep.ratio <= 2.5 and dt < 60
    errs = ", ".join(f"eps {r.eps:g}: {r.error:.3e}" for r in rep.runs)
    record(9, ok, f"{errs}, ratio {rep.ratio:.3f}, {dt:.1f}s")
    assert ok
