"""Acceptance suite: one test per criterion, each printing a PASS line.

Every test announces ``ACCEPTANCE <n> PASS: ...`` on the real terminal when
its criterion holds at the stated tolerance; a failed assertion marks the
criterion FAIL through the normal pytest report.
"""

from __future__ import annotations

import math
import time
from fractions import Fraction

import numpy as np
import pytest

from helpers_oracles import hamming_min_distance, rank_min_distance
from sumrank.bounds import (
    concat_presets,
    gamma_q,
    gv_asymptotic_rate,
    gv_exact_rate,
    line_rate,
    sample_curve,
    tvz_like_sr_rate,
)
from sumrank.codes import (
    SumRankLinearCode,
    concatenate,
    gabidulin,
    reed_solomon,
    sum_zero_code,
)
from sumrank.fields import make_extension, make_prime_field
from sumrank.matspace import Mat
from sumrank.metrics import BlockProfile, min_distance_exhaustive
from sumrank.tables import build_table

F2 = make_prime_field(2)
F3 = make_prime_field(3)


@pytest.fixture
def announce(capsys):
    def _announce(msg: str) -> None:
        with capsys.disabled():
            print(msg, flush=True)

    return _announce


def test_criterion_1_table_one(announce):
    start = time.perf_counter()
    rows = build_table(1)
    elapsed = time.perf_counter() - start

    expected_dims = [2 * v for v in (24, 22, 20, 18, 16, 14, 12, 10, 8, 6, 4, 2)]
    expected_singleton = [2 * v for v in range(27, 15, -1)]
    assert [r.d_sr for r in rows] == list(range(4, 16))
    assert [r.our_dim for r in rows] == expected_dims
    assert [r.singleton_dim for r in rows] == expected_singleton
    assert elapsed < 1.0
    announce(
        f"ACCEPTANCE 1 PASS: Table I dims and Singleton column exact "
        f"({elapsed:.3f}s < 1s)"
    )


def test_criterion_2_table_two(announce):
    start = time.perf_counter()
    rows = build_table(2)
    elapsed = time.perf_counter() - start

    expected_dims = [2 * v for v in range(56, 3, -2)]  # 112 down to 8, step 4
    expected_singleton = [2 * v for v in range(59, 32, -1)]  # 118 down to 66
    assert [r.d_sr for r in rows] == list(range(4, 31))
    assert [r.our_dim for r in rows] == expected_dims
    assert [r.singleton_dim for r in rows] == expected_singleton
    assert elapsed < 1.0
    announce(
        f"ACCEPTANCE 2 PASS: Table II dims and Singleton column exact "
        f"({elapsed:.3f}s < 1s)"
    )


def test_criterion_3_constructive_distances(announce):
    start = time.perf_counter()

    # (a) sum-to-zero code over F_2 with 2x2 blocks, t = 3
    code_a = sum_zero_code(F2, 2, 3)
    assert min_distance_exhaustive(code_a) == 2

    # (b) Gabidulin with n = 3, degree bound 1: size 2^6, exact distance 2
    code_b = gabidulin(F2, 3, 1)
    assert 2 ** code_b.k == 2**6
    assert min_distance_exhaustive(code_b) == 2

    # (c) RS[3,2,2] over F_16 concatenated with the full 2x2 inner code
    inner_full = gabidulin(F2, 2, 1)
    code_c = concatenate(reed_solomon(make_extension(F2, 4), 3, 2), inner_full)
    assert code_c.d_design == 2
    assert min_distance_exhaustive(code_c) >= 2

    # (d) sweep: >= 20 concatenations, all with exact d_sr >= d1 * d2
    checked = 0
    for q, ctx in ((2, F2), (3, F3)):
        for m, deg in ((1, 0), (2, 0), (2, 1)):
            inner = gabidulin(ctx, m, deg)
            big = make_extension(ctx, inner.k)
            for n in {min(3, big.order), min(7, big.order)}:
                for k1 in range(1, n + 1):
                    dim = k1 * inner.k
                    if dim * math.log2(q) > 20:  # <= 2^20 codewords
                        continue
                    code = concatenate(reed_solomon(big, n, k1), inner)
                    exact = min_distance_exhaustive(code, cap_bits=20, threads=4)
                    assert exact >= code.d_design
                    checked += 1
    elapsed = time.perf_counter() - start
    assert checked >= 20
    assert elapsed < 300
    announce(
        f"ACCEPTANCE 3 PASS: desk-scale exact distances and {checked} "
        f"concatenations with d_sr >= d1*d2 ({elapsed:.1f}s < 300s)"
    )


def test_criterion_4_bound_anchors(announce):
    assert concat_presets("d2", 2, 2, 3) == (
        Fraction(3, 2),
        Fraction(3),
        Fraction(14, 15),
    )
    assert concat_presets("d2", 4, 2, 3)[2] == Fraction(254, 255)
    for num in range(1, 25):
        delta = Fraction(num, 100)
        rate = Fraction(1, 4) - delta
        assert abs(tvz_like_sr_rate(9, 2, float(delta)) - float(rate)) < 1e-12
    announce(
        "ACCEPTANCE 4 PASS: presets (3/2, 3, 14/15) and 254/255 exact; "
        "TVZ-like R+delta = 1/4 at every sampled delta"
    )


def test_criterion_5_gv_consistency(announce):
    start = time.perf_counter()
    t = 10**4
    for delta in (0.1, 0.3, 0.5):
        exact = gv_exact_rate(2, 2, 2, t, round(delta * 2 * t))
        asym = gv_asymptotic_rate(2, 2, delta)
        assert abs(exact - asym) < 1e-2
    assert abs(gamma_q(2, 2.0**-50) - gamma_q(2, 2.0**-80)) < 1e-12
    elapsed = time.perf_counter() - start
    assert elapsed < 10
    announce(
        f"ACCEPTANCE 5 PASS: GV exact vs asymptotic within 1e-2 and gamma_2 "
        f"stable to 1e-12 ({elapsed:.2f}s < 10s)"
    )


def test_criterion_6_figure_one_dominance(announce):
    start = time.perf_counter()
    grid = [round(0.005 * i, 6) for i in range(1, 51)]  # (0, 0.25]
    gv = sample_curve("gv_asymptotic", dict(q=2, m=2), grid)
    coeffs = concat_presets("d2", 2, 2, 3)  # r = 4 line for p = 2
    for (delta, r_gv) in gv.samples:
        r_line = float(line_rate(coeffs, Fraction(delta).limit_denominator(10**9)))
        if r_line > 0:
            assert r_line > r_gv
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    announce(
        f"ACCEPTANCE 6 PASS: Corollary line (p=2, r=4) exceeds the GV-like "
        f"bound on all positive grid points ({elapsed:.3f}s < 1s)"
    )


def test_criterion_7_metric_degeneration(announce):
    start = time.perf_counter()
    rng = np.random.default_rng(2026)

    # 50 random codes with 1x1 blocks: sum-rank oracle == Hamming oracle
    for i in range(50):
        q, ctx = ((2, F2), (3, F3))[i % 2]
        k = int(rng.integers(1, 6))
        n = int(rng.integers(k, 9))
        while True:
            G = Mat(ctx, rng.integers(0, q, size=(k, n))).row_space_basis()
            if G.rows == k:
                break
        profile = BlockProfile.uniform(1, 1, n)
        code = SumRankLinearCode(ctx, profile, k, G)
        expected = hamming_min_distance(G.a.tolist(), q)
        assert min_distance_exhaustive(code) == expected

    # 20 random single-block (t = 1) codes: sum-rank oracle == rank oracle
    for i in range(20):
        q, ctx = ((2, F2), (3, F3))[i % 2]
        n = int(rng.integers(2, 4))
        m = int(rng.integers(n, 4))
        kmax = min(8 if q == 2 else 5, n * m)
        k = int(rng.integers(1, kmax + 1))
        while True:
            G = Mat(ctx, rng.integers(0, q, size=(k, n * m))).row_space_basis()
            if G.rows == k:
                break
        code = SumRankLinearCode(ctx, BlockProfile.uniform(n, m, 1), k, G)
        assert min_distance_exhaustive(code) == rank_min_distance(
            G.a.tolist(), q, n, m
        )

    elapsed = time.perf_counter() - start
    assert elapsed < 60
    announce(
        f"ACCEPTANCE 7 PASS: sum-rank oracle matches Hamming on 50 codes and "
        f"rank on 20 codes ({elapsed:.1f}s < 60s)"
    )
