"""Acceptance gate: ten end-to-end criteria, one printed verdict line each.

Run with ``pytest tests/test_acceptance.py``; the suite-wide ``-s`` keeps the
verdict lines visible.  Every criterion computes its measurements first, then
prints ``criterion N: PASS/FAIL (...)`` before asserting, so a red run still
reports every line.
"""

import math
import time

import numpy as np

from chordal.grunsky import (
    SeriesCoefficients,
    grunsky_coefficients,
    univalence_certificate,
)
from chordal.capacity import hayman_report
from chordal.loewner import (
    DriverFamily,
    SolverConfig,
    hydrodynamic_parameter,
    semigroup_defect,
    transition_grid,
    univalence_probe,
)
from chordal.measures import (
    arcsine,
    bernoulli,
    cauchy_transform,
    point_mass,
    semicircle,
    stieltjes_invert,
)

from oracles import grunsky_oracle, shifted_slit_map, slit_map

EPS_LADDER = [0.4 / 2**k for k in range(8)]
CATALAN = [1, 0, 1, 0, 2, 0, 5, 0, 14, 0, 42, 0, 132, 0, 429, 0, 1430]

DELTA0 = DriverFamily.constant(point_mass(0.0), horizon=4.0)
TOL = SolverConfig().tol


def acceptance_grid():
    re = np.linspace(-4.0, 4.0, 20)
    im = np.linspace(0.2, 4.0, 10)
    return (re[:, None] + 1j * im[None, :]).ravel()


def _verdict(num, ok, detail):
    print(f"criterion {num}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"criterion {num} failed: {detail}"


def test_criterion_1_slit_closed_form():
    zs = acceptance_grid()
    start = time.perf_counter()
    worst = 0.0
    for t in (0.25, 0.5, 1.0, 2.0):
        vals, _ = transition_grid(DELTA0, 0.0, t, zs)
        worst = max(worst, float(np.abs(vals - slit_map(t, zs)).max()))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-6 and elapsed <= 10.0
    _verdict(1, ok, f"max error {worst:.3g} over 4 durations x {zs.size} points, "
                    f"{elapsed:.2f}s")


def test_criterion_2_shifted_slit_closed_form():
    fam = DriverFamily.constant(point_mass(1.0), horizon=4.0)
    zs = acceptance_grid()
    worst = 0.0
    for t in (0.25, 0.5, 1.0, 2.0):
        vals, _ = transition_grid(fam, 0.0, t, zs)
        worst = max(worst, float(np.abs(vals - shifted_slit_map(t, zs, 1.0)).max()))
    ok = worst <= 1e-6
    _verdict(2, ok, f"max error {worst:.3g} against 1 + sqrt((z-1)^2 - 2t)")


def test_criterion_3_semigroup_identity():
    rng = np.random.default_rng(3)
    fams = (
        DriverFamily.piecewise_constant(
            [0.0, 0.8], [point_mass(0.0), semicircle()], horizon=2.0),
        DriverFamily.moving_atom([(0.0, 0.0), (2.0, 1.0)]),
    )
    zs = rng.uniform(-3, 3, 10) + 1j * rng.uniform(0.5, 3.0, 10)
    worst = 0.0
    for fam in fams:
        for _ in range(100):
            a, b, c = np.sort(rng.uniform(0.0, 2.0, 3))
            worst = max(worst, semigroup_defect(fam, a, b, c, zs))
    ok = worst <= 4.0 * TOL
    _verdict(3, ok, f"max defect {worst:.3g} <= 4 tol = {4.0 * TOL:.3g}, "
                    f"100 triples x 2 drivers x {zs.size} points")


def test_criterion_4_lipschitz_in_both_endpoints():
    rng = np.random.default_rng(4)
    fam = DriverFamily.piecewise_constant(
        [0.0, 1.0], [semicircle(), point_mass(0.5)], horizon=2.0)
    m = 1000
    triples = np.sort(rng.uniform(0.0, 2.0, (m, 3)), axis=1)
    a, b, c = triples[:, 0], triples[:, 1], triples[:, 2]
    zs = rng.uniform(-3, 3, m) + 1j * rng.uniform(0.5, 3.0, m)
    y = zs.imag
    ac, _ = transition_grid(fam, a, c, zs)
    bc, _ = transition_grid(fam, b, c, zs)
    ab, _ = transition_grid(fam, a, b, zs)
    slack = 10.0 * TOL
    first = np.abs(ac - bc) - ((b - a) / y + slack)
    second = np.abs(ab - ac) - ((1.0 + (b - a) / y**2) * (c - b) / y + slack)
    ok = bool(np.all(first <= 0) and np.all(second <= 0))
    _verdict(4, ok, f"{m} random triples, worst margins "
                    f"{first.max():.3g} / {second.max():.3g} (<= 0 passes)")


def test_criterion_5_hydrodynamic_parameter():
    fams = (
        DELTA0,
        DriverFamily.moving_atom([(0.0, 0.0), (2.0, 2.0)]),
        DriverFamily.piecewise_constant(
            [0.0, 1.0], [point_mass(0.0), semicircle()], horizon=2.0),
    )
    worst = 0.0
    for fam in fams:
        for t in (0.5, 1.0, 2.0):
            worst = max(worst, abs(hydrodynamic_parameter(fam, t) - t))
    ok = worst <= 1e-3
    _verdict(5, ok, f"max |recovered - t| = {worst:.3g} over 3 drivers x 3 times")


def test_criterion_6_certificate_verdicts():
    semi = univalence_certificate(CATALAN, 8)
    bern = univalence_certificate([1, 0, 1, 0, 1], 2)
    arcs = univalence_certificate([1, 0, 2, 0, 6], 2)
    delt = univalence_certificate([1, 0, 0, 0, 0], 2)
    semi_c = float(np.abs(semi.c_matrix).max())
    bern_eigs = np.sort(bern.eigenvalues)
    arcs_max = arcs.max_abs_eigenvalue
    delt_dev = float(np.abs(delt.c_matrix - np.eye(2)).max())
    ok = (
        semi.verdict == "pass" and semi_c <= 1e-10
        and bern.verdict == "fail"
        and abs(bern_eigs[0]) <= 1e-8 and abs(bern_eigs[-1] - 2.0) <= 1e-8
        and arcs.verdict == "boundary" and abs(arcs_max - 1.0) <= 1e-8
        and delt.verdict == "boundary" and delt_dev <= 1e-10
    )
    _verdict(6, ok, f"semicircle pass |c|<={semi_c:.2g}, atom pair fail "
                    f"eigs ~ {{0, 2}}, arcsine boundary |max|-1 = "
                    f"{arcs_max - 1.0:.2g}, point mass c = I +/- {delt_dev:.2g}")


def test_criterion_7_grunsky_against_brute_force():
    rng = np.random.default_rng(7)
    worst_rel = 0.0
    worst_sym = 0.0
    for _ in range(50):
        coeffs = [1.0, *rng.uniform(-0.5, 0.5, 24)]
        order = int(rng.integers(1, 13))
        got = grunsky_coefficients(SeriesCoefficients(coeffs), order)
        ref = grunsky_oracle(coeffs, order)
        scale = max(1.0, float(np.abs(ref).max()))
        worst_rel = max(worst_rel, float(np.abs(got - ref).max()) / scale)
        ks = np.arange(1.0, order + 1.0)
        cmat = np.sqrt(ks[None, :] / ks[:, None]) * got
        worst_sym = max(worst_sym, float(np.abs(cmat - cmat.T).max()))
    ok = worst_rel <= 1e-12 and worst_sym <= 1e-10
    _verdict(7, ok, f"50 random series: max relative error {worst_rel:.3g}, "
                    f"max symmetry defect {worst_sym:.3g}")


def test_criterion_8_stieltjes_inversion():
    semi = semicircle()
    raw = stieltjes_invert(lambda z: cauchy_transform(semi, z), (-2.0, 2.0),
                           EPS_LADDER)
    mass = raw / 2.0  # interior support: open + closed readings coincide
    atom = point_mass(0.0)
    off = stieltjes_invert(lambda z: cauchy_transform(atom, z), (1.0, 2.0),
                           EPS_LADDER)
    ok = abs(mass - 1.0) <= 1e-3 and abs(off) <= 1e-6
    _verdict(8, ok, f"semicircle mass on (-2,2) = {mass:.6f}, point mass "
                    f"off-support reading = {off:.3g}")


def test_criterion_9_transfinite_diameter_diagnostic():
    results = []
    ok = True
    for name, mu in (("semicircle", semicircle()), ("arcsine", arcsine())):
        start = time.perf_counter()
        r = hayman_report(mu)
        elapsed = time.perf_counter() - start
        results.append(f"{name} ratio {r.ratio:.4f} ({elapsed:.1f}s)")
        ok = ok and r.verdict == "consistent_with_univalence" \
            and 0.95 <= r.ratio <= 1.05 and elapsed <= 30.0
    start = time.perf_counter()
    rb = hayman_report(bernoulli(1.0))
    elapsed = time.perf_counter() - start
    results.append(f"atom pair verdict {rb.verdict} ({elapsed:.1f}s)")
    ok = ok and rb.verdict == "inconsistent" and elapsed <= 30.0
    _verdict(9, ok, "; ".join(results))


def test_criterion_10_injectivity_probe():
    rng = np.random.default_rng(10)
    m = 10_000
    pairs = np.stack([
        rng.uniform(-4, 4, m) + 1j * rng.uniform(0.15, 3.0, m),
        rng.uniform(-4, 4, m) + 1j * rng.uniform(0.15, 3.0, m),
    ], axis=1)
    ok = all(univalence_probe(DELTA0, t, pairs) for t in (1.0, 2.0))
    _verdict(10, ok, f"no collisions among {m} pairs at t = 1 and t = 2")
