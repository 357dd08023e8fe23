"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines and measured values.  The Figure-2 experiment is the long pole
(about four minutes on two cores); everything else finishes in seconds.
"""

import json
import math
import time
from fractions import Fraction

import numpy as np
import pytest

from dr_annulus import (
    AnnulusModel,
    BOUNDARY,
    CirclePair,
    INF,
    build_frame,
    chord_half_height,
    classify,
    classify_lens,
    classify_via_radius,
    distance_index,
    geodesic_ratio,
    hilbert_grid,
    homology_ranks,
    lens_area,
    lens_area_derivative,
    lens_area_for_case,
    nu,
    omega,
    phi,
    region_agreement,
    rho,
    sample,
)
from dr_annulus.annulus import Regime
from dr_annulus.cli import main
from dr_annulus.fileio import float_axis, fraction_axis

from oracles import brute_force_ranks, weighted_annulus_samples
from test_disc_geometry import _near_case_boundary, boundary_points

MODEL = AnnulusModel(0.4, 0.5, 0.05)
MODEL0 = AnnulusModel(0.4, 0.5, 0.0)


def report(ok: bool, name: str, detail: str) -> None:
    print(f"\nACCEPTANCE {'PASS' if ok else 'FAIL'} - {name}: {detail}")


def test_derivative_identity():
    start = time.time()
    rng = np.random.default_rng(314)
    h = 1e-6
    worst = 0.0
    done = 0
    while done < 200:
        r_disc = rng.uniform(0.2, 2.0)
        s = rng.uniform(0.2, 2.0)
        c = rng.uniform(0.0, r_disc + s + 0.3)
        if _near_case_boundary(r_disc, s, c, 1e-3):
            continue
        fd = (
            lens_area(CirclePair(r_disc, s, c + h))
            - lens_area(CirclePair(r_disc, s, c - h))
        ) / (2 * h)
        analytic = lens_area_derivative(CirclePair(r_disc, s, c))
        err = abs(fd - analytic) / max(abs(analytic), 1e-6)
        worst = max(worst, err)
        done += 1
    elapsed = time.time() - start
    ok = worst < 1e-4 and elapsed < 1.0
    report(ok, "derivative identity",
           f"200 samples, worst rel err {worst:.2e}, {elapsed:.2f}s")
    assert ok


def test_area_continuity_across_case_curves():
    # adjacent case formulas must agree at sampled points of all five
    # delimiting curves (the +-eps nudges select the two cases)
    start = time.time()
    eps = 1e-7
    worst = 0.0
    for curve in (1, 2, 3, 4, 5):
        rng = np.random.default_rng(1000 + curve)
        for s, c_star in boundary_points(curve, 1.0, rng, 100):
            cases = {
                classify_lens(CirclePair(1.0, s, max(c_star - eps, 0.0))),
                classify_lens(CirclePair(1.0, s, c_star + eps)),
            }
            pair = CirclePair(1.0, s, c_star)
            values = [lens_area_for_case(pair, case) for case in cases]
            worst = max(worst, max(values) - min(values))
    elapsed = time.time() - start
    ok = worst < 1e-8 and elapsed < 1.0
    report(ok, "area continuity",
           f"5 curves x 100 crossings, worst formula gap {worst:.2e}, {elapsed:.2f}s")
    assert ok


def test_monte_carlo_measure_oracle():
    start = time.time()
    worst_sigmas = 0.0
    for model in (MODEL, MODEL0):
        rng = np.random.default_rng(271828)
        pts = weighted_annulus_samples(rng, model.R, model.Q, model.w, 1_000_000)
        pick = np.random.default_rng(161803)
        for _ in range(50):
            s = pick.uniform(0.02, 0.8)
            c = pick.uniform(model.domain_left, model.Q)
            p = nu(model, s, c)
            d2 = ((pts - (c, 0.0)) ** 2).sum(axis=1)
            frac = float(np.mean(d2 < s * s))
            sigma = math.sqrt(max(p * (1 - p), 1e-12) / len(pts))
            worst_sigmas = max(worst_sigmas, abs(frac - p) / sigma)
    elapsed = time.time() - start
    ok = worst_sigmas <= 4.0 and elapsed < 60.0
    report(ok, "Monte Carlo measure oracle",
           f"2 models x 50 checks vs 1e6 samples, worst {worst_sigmas:.2f} sigma, {elapsed:.1f}s")
    assert ok


def test_peak_locus_regimes():
    start = time.time()
    ok = True
    half_gap = 0.5 * (MODEL.Q - MODEL.R)
    for s in np.linspace(0.001, half_gap, 20):
        peak = omega(MODEL, float(s))
        ok &= peak.omega == MODEL.R + float(s)
    for s in np.linspace(0.5 * (MODEL.Q + MODEL.R), 2.0, 20):
        ok &= omega(MODEL, float(s)).omega == 0.0
    worst_res = 0.0
    a, b = MODEL.inner_density, MODEL.annulus_density
    for s in np.linspace(0.06, 0.44, 20):
        peak = omega(MODEL, float(s))
        ok &= peak.regime is Regime.MIDDLE_S
        res = abs(
            (b - a) * chord_half_height(CirclePair(MODEL.R, float(s), peak.omega))
            - b * chord_half_height(CirclePair(MODEL.Q, float(s), peak.omega))
        )
        worst_res = max(worst_res, res)
    ok &= worst_res < 1e-10
    worst_w0 = 0.0
    half_sq = 0.5 * (MODEL0.R**2 + MODEL0.Q**2)
    for s in np.linspace(0.06, 0.21, 10):
        peak = omega(MODEL0, float(s))
        worst_w0 = max(worst_w0, abs(peak.omega**2 + s * s - half_sq))
    ok &= worst_w0 < 1e-9
    elapsed = time.time() - start
    ok &= elapsed < 1.0
    report(ok, "peak-locus regimes",
           f"small/large exact, middle residual {worst_res:.1e}, "
           f"w=0 root defect {worst_w0:.1e}, {elapsed:.2f}s")
    assert ok


def test_curve_ordering_and_threshold_consistency():
    start = time.time()
    ok = True
    s_grid = np.geomspace(0.005, 1.0, 500)
    for model in (MODEL, MODEL0):
        for s in s_grid:
            values = [phi(model, ell, float(s)) for ell in range(21)]
            values.append(phi(model, INF, float(s)))
            ok &= all(hi >= lo - 1e-14 for hi, lo in zip(values, values[1:]))
    worst = 0.0
    for s in (0.01, 0.1, 1.0):
        for ell in range(1, 21):
            worst = max(
                worst, abs(geodesic_ratio(rho(ell, s), s) - ell / (2 * ell + 1))
            )
    ok &= worst < 1e-12
    elapsed = time.time() - start
    ok &= elapsed < 5.0
    report(ok, "curve ordering and thresholds",
           f"500-point grid, ell<=20, ratio defect {worst:.1e}, {elapsed:.1f}s")
    assert ok


def test_dual_path_classifier_agreement():
    start = time.time()
    total = disagree = softened = 0
    # midpoint-offset k rows: k = 0 and k = 1 coincide exactly with curve
    # values (phi-tilde = 0 for w = 0, phi_0 = phi_inf = 1 at large s),
    # parameters the region theorem deliberately leaves unclassified
    for model in (MODEL, MODEL0):
        for s in np.linspace(0.01, 0.6, 200):
            for k in np.linspace(1 / 400, 1 - 1 / 400, 200):
                lab = classify(model, float(s), float(k))
                lab_r = classify_via_radius(model, float(s), float(k))
                total += 1
                if lab != lab_r:
                    disagree += 1
                    if lab == BOUNDARY or lab_r == BOUNDARY:
                        softened += 1
    hard = disagree - softened
    frac = 1.0 - disagree / total
    elapsed = time.time() - start
    ok = frac >= 0.999 and hard == 0 and elapsed < 30.0
    report(ok, "dual-path classifier agreement",
           f"{total} points, agreement {frac:.5f}, "
           f"{hard} non-boundary disagreements, {elapsed:.1f}s")
    assert ok


def test_small_complex_homology_oracle():
    start = time.time()
    rng = np.random.default_rng(777)
    checked = 0
    ok = True
    for _ in range(50):
        n = int(rng.integers(2, 9))
        pts = rng.random((n, 2)) * 1.2
        index = distance_index(pts)
        s_values = np.sort(rng.uniform(0.15, 1.3, 5))
        k_values = [Fraction(int(j), 8) for j in sorted(rng.integers(0, 7, 5))]
        for s in s_values:
            for k in k_values:
                h0, h1 = homology_ranks(build_frame(index, float(s), k))
                bh0, bh1, _ = brute_force_ranks(pts, float(s), k)
                ok &= (h0, h1) == (bh0, bh1)
                checked += 1
    square = distance_index(
        np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])
    )
    ok &= homology_ranks(build_frame(square, 1.1, 0)) == (1, 1)
    ok &= homology_ranks(build_frame(square, 1.5, 0)) == (1, 0)
    elapsed = time.time() - start
    ok &= elapsed < 10.0
    report(ok, "small-complex homology oracle",
           f"{checked} frames vs brute force + unit-square goldens, {elapsed:.1f}s")
    assert ok


def test_figure2_experiment():
    start = time.time()
    s_axis = float_axis("0.01", "0.2", 40)
    k_axis = fraction_axis("0", "0.05", 40)
    passes = 0
    detail = []
    for seed in (1, 2, 3, 4, 5):
        cloud = sample(MODEL, 500, seed)
        grid = hilbert_grid(distance_index(cloud.points), s_axis, k_axis)
        rep = region_agreement(grid, MODEL, 0.2)
        circle_ok = rep["fraction"] >= 0.85
        trivial_ok = rep["trivial"]["fraction"] >= 0.85
        passes += int(circle_ok and trivial_ok)
        detail.append(
            f"seed {seed}: circle {rep['fraction']:.3f} "
            f"({rep['n_agree']}/{rep['n_checked']}), "
            f"trivial {rep['trivial']['fraction']:.3f} "
            f"({rep['trivial']['n_agree']}/{rep['trivial']['n_checked']})"
        )
    elapsed = time.time() - start
    ok = passes >= 4 and elapsed < 600.0
    report(ok, "Figure 2 experiment",
           f"{passes}/5 seeds pass at 0.85; " + "; ".join(detail) + f"; {elapsed:.0f}s")
    assert ok


def test_cli_determinism(tmp_path):
    start = time.time()
    pts = tmp_path / "pts.csv"
    assert main(["sample", "--n", "60", "--seed", "3", "--out", str(pts)]) == 0

    invocations = {
        "curves": ["curves", "--s-min", "0.02", "--s-max", "0.2",
                   "--s-steps", "12", "--ell-max", "2"],
        "classify": ["classify", "--s", "0.04", "--k", "0.0087"],
        "nu": ["nu", "--s", "0.04", "--c", "0.46"],
        "omega": ["omega", "--s", "0.1"],
        "sample": ["sample", "--n", "25", "--seed", "8"],
        "hilbert": ["hilbert", "--points", str(pts), "--s-min", "0.05",
                    "--s-max", "0.15", "--s-steps", "4", "--k-min", "0",
                    "--k-max", "0.05", "--k-steps", "4"],
        "compare": ["compare", "--n", "60", "--seed", "3", "--s-steps", "4",
                    "--k-steps", "4", "--s-max", "0.15"],
    }
    ok = True
    for name, argv in invocations.items():
        outs = []
        for run_idx in (0, 1):
            out = tmp_path / f"{name}_{run_idx}.out"
            code = main(argv + ["--out", str(out)])
            ok &= code == 0
            outs.append(out.read_bytes())
        ok &= outs[0] == outs[1]
    elapsed = time.time() - start
    report(ok, "CLI determinism",
           f"{len(invocations)} subcommands byte-identical on rerun, {elapsed:.1f}s")
    assert ok
