"""Tests for degree-Rips frames, homology ranks, and Hilbert grids."""

import math
from fractions import Fraction

import numpy as np
import pytest

from dr_annulus import (
    AnnulusModel,
    build_frame,
    distance_index,
    hilbert_grid,
    homology_ranks,
    region_agreement,
    sample,
    survival_threshold,
)

from oracles import brute_force_ranks

SQUARE = np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])
LINE3 = np.array([[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]])


class TestSurvivalThreshold:
    def test_exact_fraction(self):
        assert survival_threshold(Fraction(7, 10), 3) == 3  # 2.1 -> 3
        assert survival_threshold(Fraction(3, 5), 3) == 2  # 1.8 -> 2
        assert survival_threshold(Fraction(1, 5), 5) == 1  # exactly 1.0
        assert survival_threshold(Fraction(0), 9) == 0
        assert survival_threshold(Fraction(1), 9) == 9

    def test_float_k_uses_exact_binary_value(self):
        # float 0.2 is slightly above 1/5, so 0.2 * 5 needs 2 points
        assert survival_threshold(0.2, 5) == 2
        assert survival_threshold(Fraction(1, 5), 5) == 1

    def test_rejects_out_of_range(self):
        with pytest.raises(Exception):
            survival_threshold(1.5, 3)


class TestBuildFrame:
    def test_collinear_high_threshold(self):
        index = distance_index(LINE3)
        frame = build_frame(index, 1.1, Fraction(7, 10))
        assert frame.vertices == (1,)
        assert frame.edges == ()
        assert frame.triangles == ()

    def test_collinear_lower_threshold(self):
        index = distance_index(LINE3)
        frame = build_frame(index, 1.1, Fraction(3, 5))
        assert frame.vertices == (0, 1, 2)
        assert set(frame.edges) == {(0, 1), (1, 2)}
        assert frame.triangles == ()

    def test_k_zero_is_plain_vietoris_rips(self):
        rng = np.random.default_rng(0)
        pts = rng.random((12, 2))
        index = distance_index(pts)
        s = 0.4
        frame = build_frame(index, s, 0)
        assert frame.vertices == tuple(range(12))
        d2 = ((pts[:, None] - pts[None, :]) ** 2).sum(-1)
        expected = {
            (i, j)
            for i in range(12)
            for j in range(i + 1, 12)
            if d2[i, j] < s * s
        }
        assert set(frame.edges) == expected

    def test_strictness_at_lattice_tie(self):
        pts = np.array([[0.0, 0.0], [1.0, 0.0]])
        index = distance_index(pts)
        assert build_frame(index, 1.0, 0).edges == ()
        assert build_frame(index, 1.0000001, 0).edges == ((0, 1),)

    def test_bifiltration_containment(self):
        rng = np.random.default_rng(3)
        pts = rng.random((15, 2))
        index = distance_index(pts)
        for _ in range(25):
            s1, s2 = sorted(rng.uniform(0.1, 0.9, 2))
            k2, k1 = sorted(rng.uniform(0, 0.5, 2))  # k1 >= k2
            small = build_frame(index, s1, k1)
            big = build_frame(index, s2, k2)
            assert set(small.vertices) <= set(big.vertices)
            assert set(small.edges) <= set(big.edges)
            assert set(small.triangles) <= set(big.triangles)


class TestHomologyRanks:
    def test_square_cycle(self):
        index = distance_index(SQUARE)
        frame = build_frame(index, 1.1, 0)
        assert homology_ranks(frame) == (1, 1)

    def test_square_filled(self):
        index = distance_index(SQUARE)
        frame = build_frame(index, 1.5, 0)
        assert homology_ranks(frame) == (1, 0)

    def test_empty_frame(self):
        index = distance_index(LINE3)
        frame = build_frame(index, 0.5, 1)
        assert frame.vertices == ()
        assert homology_ranks(frame) == (0, 0)

    def test_against_brute_force(self):
        rng = np.random.default_rng(8)
        for trial in range(30):
            n = int(rng.integers(2, 9))
            pts = rng.random((n, 2)) * 1.5
            s = float(rng.uniform(0.2, 1.4))
            k = float(rng.uniform(0, 0.8))
            frame = build_frame(distance_index(pts), s, k)
            h0, h1 = homology_ranks(frame)
            bh0, bh1, h2_skel = brute_force_ranks(pts, s, k)
            assert (h0, h1) == (bh0, bh1)
            # Euler characteristic of the 2-skeleton closes the loop
            v, e, t = (
                len(frame.vertices),
                len(frame.edges),
                len(frame.triangles),
            )
            assert h0 - h1 + h2_skel == v - e + t


class TestHilbertGrid:
    def test_square_golden_column(self):
        index = distance_index(SQUARE)
        grid = hilbert_grid(index, [1.1, 1.5], [0])
        assert grid.h1[:, 0].tolist() == [1, 0]
        assert grid.h0[:, 0].tolist() == [1, 1]

    def test_k_zero_row_equals_plain_vr(self):
        rng = np.random.default_rng(5)
        pts = rng.random((20, 2))
        index = distance_index(pts)
        s_values = [0.1, 0.25, 0.4, 0.8]
        grid = hilbert_grid(index, s_values, [0])
        for i, s in enumerate(s_values):
            h0, h1 = homology_ranks(build_frame(index, s, 0))
            assert grid.h0[i, 0] == h0
            assert grid.h1[i, 0] == h1

    def test_fast_equals_naive(self):
        rng = np.random.default_rng(21)
        for trial in range(10):
            n = int(rng.integers(5, 16))
            pts = rng.random((n, 2))
            index = distance_index(pts)
            s_values = np.sort(rng.uniform(0.05, 1.2, 5)).tolist()
            k_values = [Fraction(j, 10) for j in sorted(rng.integers(0, 8, 5))]
            fast = hilbert_grid(index, s_values, k_values, method="fast")
            naive = hilbert_grid(index, s_values, k_values, method="naive")
            assert (fast.h0 == naive.h0).all()
            assert (fast.h1 == naive.h1).all()

    def test_vertex_monotone_in_k(self):
        rng = np.random.default_rng(2)
        pts = rng.random((25, 2))
        index = distance_index(pts)
        for s in (0.2, 0.5):
            sizes = [
                len(build_frame(index, s, Fraction(j, 20)).vertices)
                for j in range(0, 12)
            ]
            assert all(a >= b for a, b in zip(sizes, sizes[1:]))

    def test_axis_validation(self):
        index = distance_index(SQUARE)
        with pytest.raises(Exception):
            hilbert_grid(index, [0.5, 0.2], [0])
        with pytest.raises(Exception):
            hilbert_grid(index, [0.2], [Fraction(1, 2), Fraction(1, 4)])

    def test_parallel_matches_serial(self):
        pts = sample(AnnulusModel(0.4, 0.5, 0.05), 120, 4).points
        index = distance_index(pts)
        s_values = np.linspace(0.02, 0.25, 8).tolist()
        k_values = [Fraction(j, 100) for j in range(0, 8)]
        serial = hilbert_grid(index, s_values, k_values, n_jobs=1)
        parallel = hilbert_grid(index, s_values, k_values, n_jobs=4)
        assert (serial.h0 == parallel.h0).all()
        assert (serial.h1 == parallel.h1).all()


class TestRegionAgreement:
    def test_vacuous_grid(self):
        # a grid entirely inside the empty region checks no circle points
        model = AnnulusModel(0.4, 0.5, 0.05)
        index = distance_index(SQUARE)
        grid = hilbert_grid(index, [0.01], [Fraction(9, 10)])
        report = region_agreement(grid, model, margin=0.2)
        assert report["n_checked"] == 0
        assert report["fraction"] == 1.0
        # the lone grid point is interior to the empty region and agrees
        assert report["trivial"]["n_checked"] == 1
        assert report["trivial"]["fraction"] == 1.0

    def test_fraction_bounds_and_schema(self):
        model = AnnulusModel(0.4, 0.5, 0.05)
        pts = sample(model, 150, 1).points
        index = distance_index(pts)
        s_values = np.linspace(0.02, 0.15, 10).tolist()
        k_values = [Fraction(j, 200) for j in range(10)]
        grid = hilbert_grid(index, s_values, k_values)
        report = region_agreement(grid, model, margin=0.2)
        for key in ("n_checked", "n_agree", "fraction", "margin", "grid_spec"):
            assert key in report
        assert 0.0 <= report["fraction"] <= 1.0
        assert report["n_agree"] <= report["n_checked"]
        assert report["grid_spec"]["s_steps"] == 10
