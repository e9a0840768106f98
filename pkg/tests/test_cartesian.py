import math
import random
from fractions import Fraction

import numpy as np
import pytest

from discsig.cartesian import (
    CartesianField,
    boundary_defects,
    cartesianize,
    diff_fields,
    field_from_word_polynomials,
    rotate,
    rotate_series,
)
from discsig.pde import pde_hierarchy
from discsig.recurrence import run_pipeline
from discsig.tensors import TensorSeries


@pytest.fixture(scope="module")
def field4():
    data = run_pipeline(4)
    return cartesianize(data.radial_table, 4)


@pytest.fixture(scope="module")
def field5():
    data = run_pipeline(5)
    return cartesianize(data.radial_table, 5)


def test_level_zero_is_constant_one(field4):
    assert field4.monomials(0) == {(0, 0): {"": Fraction(1)}}


def test_level_one_vanishes(field4):
    assert field4.monomials(1) == {}


def test_level_two_matches_exit_time_profile(field4):
    # (1 - z1^2 - z2^2)/4 on the two diagonal words
    expect = {
        (0, 0): {"11": Fraction(1, 4), "22": Fraction(1, 4)},
        (2, 0): {"11": Fraction(-1, 4), "22": Fraction(-1, 4)},
        (0, 2): {"11": Fraction(-1, 4), "22": Fraction(-1, 4)},
    }
    assert field4.monomials(2) == expect


def test_degree_bound(field5):
    for i in range(6):
        for (d1, d2) in field5.monomials(i):
            assert d1 + d2 <= i


def test_negation_parity(field5):
    # substituting z -> -z must equal the slotwise sign flip (-1)^level
    for i in range(6):
        for (d1, d2) in field5.monomials(i):
            assert (d1 + d2 - i) % 2 == 0


def test_boundary_polynomials_divide_exactly(field5):
    assert boundary_defects(field5) == []


def test_agreement_with_pde_solver(field5):
    oracle = field_from_word_polynomials(pde_hierarchy(5), 5)
    assert diff_fields(field5, oracle) == []
    assert field5 == oracle


def test_diff_reports_perturbation(field4):
    levels = {
        i: {mono: dict(words) for mono, words in field4.monomials(i).items()}
        for i in range(5)
        if field4.monomials(i)
    }
    levels[2][(0, 0)]["11"] += Fraction(1, 7)
    other = CartesianField(4, levels)
    diffs = diff_fields(field4, other)
    assert len(diffs) == 1
    assert diffs[0]["level"] == 2 and diffs[0]["word"] == "11"
    assert diff_fields(field4, field4) == []


def test_json_round_trip(field4):
    back = CartesianField.from_json_list(field4.to_json_list())
    assert back == field4


def test_word_polynomial_extraction(field4):
    p = field4.word_polynomial(2, "11")
    assert p.coefficient(0, 0) == Fraction(1, 4)
    assert p.coefficient(2, 0) == Fraction(-1, 4)
    assert field4.word_polynomial(2, "12").is_zero()


# -- numeric evaluation


def test_evaluate_at_origin(field4):
    ev = field4.evaluate((0.0, 0.0))
    assert ev.values[0][()] == 1.0
    assert np.allclose(ev.values[1], 0.0)
    expect2 = np.array([[0.25, 0.0], [0.0, 0.25]])
    assert np.allclose(ev.values[2], expect2, atol=1e-14)


def test_evaluate_on_boundary(field4):
    for theta in (0.0, 0.7, 2.4):
        ev = field4.evaluate((math.cos(theta), math.sin(theta)))
        assert abs(ev.values[0][()] - 1.0) < 1e-12
        for level in range(1, 5):
            assert np.max(np.abs(ev.values[level])) < 1e-12


def test_evaluate_rejects_exterior(field4):
    with pytest.raises(ValueError):
        field4.evaluate((1.2, 0.0))


def test_point_evaluation_json(field4):
    doc = field4.evaluate((0.25, -0.5)).to_json_dict()
    assert doc["z"] == [0.25, -0.5]
    level2 = doc["levels"][2]["terms"]
    assert [t["word"] for t in level2] == ["11", "12", "21", "22"]


# -- rotation


def test_rotation_fixes_symmetric_pair():
    pair = TensorSeries(2, "e", {"11": 1, "22": 1})
    for theta in (0.3, 1.2, -0.8):
        got = rotate_series(theta, pair)
        assert np.allclose(got[2], pair.to_dense()[2], atol=1e-14)


def test_rotation_identity_and_quarter_turn():
    e1 = TensorSeries.monomial(1, "e", "1")
    dense = rotate_series(0.0, e1)
    assert np.allclose(dense[1], [1.0, 0.0])
    dense = rotate_series(math.pi / 2, e1)
    assert np.allclose(dense[1], [0.0, 1.0], atol=1e-12)


def test_rotation_composes():
    rng = random.Random(0)
    values = [np.array(1.0)] + [
        np.array([[rng.uniform(-1, 1) for _ in range(2)] for _ in range(2)])
    ]
    a, b = 0.4, 1.1
    lhs = rotate(a, rotate(b, values))
    rhs = rotate(a + b, values)
    for x, y in zip(lhs, rhs):
        assert np.allclose(x, y, atol=1e-12)


def test_rotation_equivariance_of_field(field4):
    rng = random.Random(1)
    for _ in range(5):
        r = rng.uniform(0.0, 0.9)
        phi = rng.uniform(0.0, 2 * math.pi)
        z = (r * math.cos(phi), r * math.sin(phi))
        theta = rng.uniform(0.0, 2 * math.pi)
        zr = (
            z[0] * math.cos(theta) - z[1] * math.sin(theta),
            z[0] * math.sin(theta) + z[1] * math.cos(theta),
        )
        direct = field4.evaluate(zr).values
        rotated = rotate(theta, field4.evaluate(z).values)
        for x, y in zip(direct, rotated):
            assert np.allclose(x, y, atol=1e-10)
