"""Test the three-quartic identity and the constructions built on it."""
from fractions import Fraction

import pytest

from quartic.curves.curve import INFINITY, Curve, CurvePoint
from quartic.errors import DegenerateSolution, IdentityFailed, InputOffCurve, PointAtInfinity
from quartic.solutions.families import Variant
from quartic.solutions.identities import (
    K2_CONFIG_ID,
    carmichael_terms,
    family_eval,
    family_terms,
    grid_identity_check,
    k2_curve,
    k2_family,
    k2_generate,
    k2_point_to_solution,
    k2_witness,
    k5_family,
    k14_witness,
    literal_k2_family,
    three_quartic_square,
    verify_family,
)
from quartic.solutions.pipeline import QuarticSolution, verify

FIVE = Variant.FIVE_PLUS
THREE = Variant.THREE_PLUS


@pytest.mark.parametrize("a, b, expected", [(6, 10, 76832), (4, 22, 691488), (0, 5, 1250), (-3, 1, 98)])
def test_three_quartic_square(a, b, expected):
    assert three_quartic_square(a, b) == expected


def test_k2_curve():
    curve, model_map = k2_curve()
    assert curve == Curve(-36, 0)
    assert (model_map.sx, model_map.sy) == (6, 18)


def test_k2_witness():
    w = k2_witness(CurvePoint.affine("25/4", "35/8"))
    assert (w.p, w.q, w.r) == (Fraction(25, 24), 1, Fraction(35, 144))
    assert w.holds()
    assert w.closes()


def test_k2_point_to_solution():
    sol = k2_point_to_solution(CurvePoint.affine(12, 36))
    assert sol == QuarticSolution(THREE, 2, (3, 4, 4), 2, 5)
    sol = k2_point_to_solution(CurvePoint.affine("25/4", "35/8"))
    assert sol == QuarticSolution(THREE, 2, (49, 1200, 280), 140, 1201)
    assert verify(sol)


def test_k2_point_errors():
    with pytest.raises(DegenerateSolution):
        k2_point_to_solution(CurvePoint.affine(6, 0))
    with pytest.raises(PointAtInfinity):
        k2_point_to_solution(INFINITY)
    with pytest.raises(InputOffCurve):
        k2_point_to_solution(CurvePoint.affine(12, 35))


def test_k2_generate():
    rows = k2_generate(2)
    assert [sol.g for sol, _ in rows] == [5, 1201]
    _, prov = rows[1]
    assert prov.config_id == K2_CONFIG_ID
    assert prov.multiple == 2
    assert prov.point == CurvePoint.affine("25/4", "-35/8")
    assert all(verify(sol) for sol, _ in rows)
    with pytest.raises(ValueError):
        k2_generate(0)
    with pytest.raises(ValueError):
        k2_generate(1, max_digits=0)


def test_family_polynomial_checks():
    assert verify_family(k2_family())
    assert verify_family(k5_family())
    assert not verify_family(literal_k2_family())


def test_family_eval_at_zero():
    assert family_eval(k2_family(), 0) == QuarticSolution(FIVE, 2, (16, 10, 6, 32, 29), 12, 37)
    assert family_eval(k5_family(), 0) == QuarticSolution(FIVE, 5, (4, 26, 22, 7, 28), 14, 35)


def test_family_eval_reduces():
    raw = family_terms(k2_family(), 1)
    assert raw == QuarticSolution(FIVE, 2, (30, 18, 48, 96, 87), 36, 111)
    assert family_eval(k2_family(), 1) == QuarticSolution(FIVE, 2, (10, 6, 16, 32, 29), 12, 37)


@pytest.mark.parametrize("n", range(-6, 7))
def test_family_eval_range(n):
    for fam in (k2_family(), k5_family()):
        try:
            sol = family_eval(fam, n)
        except DegenerateSolution:
            assert fam.k == 2 and n in (-3, 4)
            continue
        assert verify(sol)


def test_family_eval_degenerate():
    with pytest.raises(DegenerateSolution):
        family_eval(k2_family(), 4)
    with pytest.raises(DegenerateSolution):
        family_eval(k2_family(), -3)


def test_literal_family():
    # agrees with the corrected family only at n = 0
    assert verify(family_eval(literal_k2_family(), 0))
    with pytest.raises(IdentityFailed):
        family_eval(literal_k2_family(), 1)


def test_grid_identities():
    assert grid_identity_check("carmichael", 9)
    assert grid_identity_check("k4", 9)
    with pytest.raises(ValueError):
        grid_identity_check("carmichael", 8)
    with pytest.raises(ValueError):
        grid_identity_check("euler", 9)


def test_carmichael_terms():
    assert carmichael_terms(1, 1) == (1, 2, 2, 3)
    x, y, z, w = carmichael_terms(3, 2)
    assert x ** 4 + y ** 4 + 4 * z ** 4 == w ** 4


def test_k14_witness():
    sol = k14_witness()
    assert sol.k == 14
    assert sol.lhs() == sol.rhs() == 16 ** 4
