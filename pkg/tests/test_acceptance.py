"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s``.  The Monte-Carlo
criterion simulates 200k paths and dominates the runtime (a few minutes); all
other criteria are exact-arithmetic equalities or 1e-10 float checks.
"""

import json
import math
from fractions import Fraction

import numpy as np
import pytest

from discsig.cartesian import (
    boundary_defects,
    cartesianize,
    diff_fields,
    field_from_word_polynomials,
    rotate,
)
from discsig.cli import main
from discsig.eigenbasis import to_e_basis
from discsig.montecarlo import SimConfig, mc_compare, simulate_exit_signature
from discsig.pde import pde_hierarchy
from discsig.poly import Poly2
from discsig.recurrence import leading_coefficient, run_pipeline
from discsig.scalars import GaussianRational, ONE

from test_recurrence import graded_residual_violations, ungraded_residual_violations


@pytest.fixture(scope="module")
def pipeline8():
    return run_pipeline(8)


@pytest.fixture(scope="module")
def field8(pipeline8):
    return cartesianize(pipeline8.radial_table, 8)


@pytest.fixture(scope="module")
def field6():
    data = run_pipeline(6)
    return cartesianize(data.radial_table, 6)


def _tensor_poly_product(a, b):
    out = {}
    for w1, p1 in a.items():
        for w2, p2 in b.items():
            out[w1 + w2] = out.get(w1 + w2, Poly2()) + p1 * p2
    return out


def test_criterion_1_golden_degree_four_block(field8):
    # degree-4 part of tensor level 4:
    # (z1^2+z2^2)/192 [ -7 (z1 e1 + z2 e2)^x2 + (-z2 e1 + z1 e2)^x2 ] x (e1e1 + e2e2)
    z1 = Poly2({(1, 0): ONE})
    z2 = Poly2({(0, 1): ONE})
    radial = {"1": z1, "2": z2}
    angular = {"1": z2.scale(-1), "2": z1}
    head = {}
    for w, p in _tensor_poly_product(radial, radial).items():
        head[w] = head.get(w, Poly2()) + p.scale(GaussianRational(-7))
    for w, p in _tensor_poly_product(angular, angular).items():
        head[w] = head.get(w, Poly2()) + p
    rsq = Poly2({(2, 0): ONE, (0, 2): ONE})
    pair = {"11": Poly2.constant(ONE), "22": Poly2.constant(ONE)}
    expected = _tensor_poly_product({w: rsq * p for w, p in head.items()}, pair)
    expected = {
        w: {mono: c.real_fraction() * Fraction(1, 192) for mono, c in p.items()}
        for w, p in expected.items()
    }
    expected = {w: {m: c for m, c in monos.items() if c} for w, monos in expected.items()}

    got = {}
    for mono, words in field8.monomials(4).items():
        if mono[0] + mono[1] == 4:
            for w, c in words.items():
                got.setdefault(w, {})[mono] = c
    expected = {w: monos for w, monos in expected.items() if monos}
    assert got == expected
    print("\nACCEPTANCE 1 (golden degree-4 block of level 4): PASS")


def test_criterion_2_oracle_equivalence_level6(field6):
    oracle = field_from_word_polynomials(pde_hierarchy(6), 6)
    diffs = diff_fields(field6, oracle)
    assert diffs == []
    print("\nACCEPTANCE 2 (exact PDE-oracle equivalence, levels <= 6): PASS")


def test_criterion_2_target_oracle_equivalence_level8(field8):
    oracle = field_from_word_polynomials(pde_hierarchy(8), 8)
    diffs = diff_fields(field8, oracle)
    assert diffs == []
    print("\nACCEPTANCE 2 target (exact PDE-oracle equivalence, levels <= 8): PASS")


def test_criterion_3_leading_term_consistency(pipeline8):
    kernel = pipeline8.kernel
    assert leading_coefficient(0, kernel).coefficient("") == ONE
    assert leading_coefficient(1, kernel).is_zero()
    for n in range(2, 9):
        closed_form = leading_coefficient(n, kernel)
        from_pipeline = to_e_basis(pipeline8.radial_series[n]).project(n)
        assert closed_form == from_pipeline, f"leading term mismatch at n={n}"
    print("\nACCEPTANCE 3 (closed-form leading terms match pipeline, n <= 8): PASS")


def test_criterion_4_structural_invariants(pipeline8, field8):
    from discsig.tensors import TensorSeries

    # (a) the radial coefficients sum to the unit series (value at radius 1)
    total = TensorSeries.zero(8, "v")
    for s in pipeline8.radial_series.values():
        total = total + s
    assert total == TensorSeries.one(8, "v")

    # (b) support: no entry with n < |beta|; (c) parity: none with n - beta odd
    for (n, beta) in pipeline8.radial_table:
        assert n >= abs(beta)
        assert (n - beta) % 2 == 0

    # (d) recurrence residuals vanish, graded and ungraded
    assert graded_residual_violations(pipeline8) == []
    assert ungraded_residual_violations(pipeline8) == []

    # (e) standard-basis outputs are real
    for s in pipeline8.radial_series.values():
        for _, c in to_e_basis(s).items():
            assert c.is_real()

    # (f) each level polynomial minus its boundary value is divisible by
    # z1^2 + z2^2 - 1
    assert boundary_defects(field8) == []
    print("\nACCEPTANCE 4 (structural invariant suite at level 8): PASS")


def test_criterion_5_monte_carlo_agreement(field8):
    exact = field8.evaluate((0.5, 0.0))

    def run(seed):
        cfg = SimConfig(start=(0.5, 0.0), dt=1e-4, paths=200_000, level=3, seed=seed)
        est = simulate_exit_signature(cfg)
        return mc_compare(est, exact.values, sigmas=4.0)

    report = run(20_260_809)
    if report["flagged"]:
        # statistical criterion: one rerun with a fresh seed is allowed;
        # two consecutive failures constitute rejection
        report = run(20_260_810)
    assert report["flagged"] == 0, [r for r in report["rows"] if r["flagged"]]
    print(
        f"\nACCEPTANCE 5 (Monte-Carlo within 4 sigma at z=(0.5,0), "
        f"max |z|={report['max_abs_zscore']:.2f}): PASS"
    )


def test_criterion_6_rotation_equivariance(field6):
    angles = (math.pi / 6, math.pi / 4, 1.0)
    points = [(0.3, 0.1), (0.5, 0.0), (-0.4, 0.2), (0.1, -0.7), (0.6, 0.35)]
    worst = 0.0
    for theta in angles:
        c, s = math.cos(theta), math.sin(theta)
        for z in points:
            zr = (c * z[0] - s * z[1], s * z[0] + c * z[1])
            direct = field6.evaluate(zr).values
            rotated = rotate(theta, field6.evaluate(z).values)
            for a, b in zip(direct, rotated):
                worst = max(worst, float(np.max(np.abs(a - b))) if a.size else 0.0)
    assert worst <= 1e-10
    print(f"\nACCEPTANCE 6 (rotation equivariance, worst dev {worst:.2e}): PASS")


def test_criterion_7_cli_determinism(tmp_path):
    invocations = [
        ["compute", "--level", "4", "--point", "0.5", "0"],
        ["leading", "--level", "5"],
        ["verify-mc", "--level", "2", "--point", "0.4", "0.1",
         "--paths", "500", "--dt", "1e-3", "--seed", "99"],
    ]
    for idx, argv in enumerate(invocations):
        a = tmp_path / f"a{idx}.json"
        b = tmp_path / f"b{idx}.json"
        assert main(argv + ["--out", str(a)]) in (0, 1)
        assert main(argv + ["--out", str(b)]) in (0, 1)
        assert a.read_bytes() == b.read_bytes()
        json.loads(a.read_text())
    print("\nACCEPTANCE 7 (byte-identical CLI reruns): PASS")
