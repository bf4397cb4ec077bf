"""Test cubic models and their Weierstrass curves."""
from fractions import Fraction

import pytest

from quartic.arithmetic.exactnum import lambda_reduce
from quartic.curves.curve import INFINITY, Curve, CurvePoint
from quartic.curves.model import (
    CubicModel,
    canonical_coefficients,
    integral_reducer,
    point_to_xr,
    to_weierstrass,
    xr_to_point,
)
from quartic.errors import ModelRelationViolated, PointAtInfinity, SingularCurve
from quartic.solutions.families import EMBEDDED_REGISTRY, Variant, curve_for, lookup


def test_model_validation():
    with pytest.raises(ValueError):
        CubicModel(d=0, a3=1, a1=0, a0=1)
    with pytest.raises(ValueError):
        CubicModel(d=1, a3=1, a1=0, a0=1, a2=3)


def test_to_weierstrass_k1():
    curve, mm = to_weierstrass(CubicModel(d=239, a3=16, a1=4, a0=4))
    assert curve == Curve(228484, 218430704)
    assert (mm.lam, mm.sx, mm.sy) == (2, 956, 114242)


def test_to_weierstrass_keeps_substitution_integral():
    # the unconstrained reduction would divide by 12
    model = CubicModel(d=27, a3=32, a1=8, a0=8)
    curve, mm = to_weierstrass(model)
    assert curve == Curve(144, 3456)
    assert (mm.lam, mm.sx, mm.sy) == (6, 24, 108)


def test_integral_reducer_k8():
    model = CubicModel(d=19, a3=32, a1=8, a0=8)
    big_a, big_b = canonical_coefficients(model)
    assert (big_a, big_b) == (92416, 56188928)
    assert integral_reducer(model, big_a, big_b) == 2
    curve, _ = to_weierstrass(model)
    assert curve == Curve(5776, 877952)


def test_pq_model():
    curve, mm = to_weierstrass(CubicModel(d=3, a3=2, a1=-2, a0=0))
    assert curve == Curve(-36, 0)
    assert (mm.sx, mm.sy) == (6, 18)


def test_singular_model():
    with pytest.raises(SingularCurve):
        to_weierstrass(CubicModel(d=1, a3=1, a1=0, a0=0))


def test_point_round_trip():
    _, mm = to_weierstrass(CubicModel(d=27, a3=32, a1=8, a0=8))
    x, r = point_to_xr(mm, CurvePoint.affine(4, -64))
    assert (x, r) == (Fraction(1, 6), Fraction(-16, 27))
    assert xr_to_point(mm, x, r) == CurvePoint.affine(4, -64)


def test_point_map_errors():
    _, mm = to_weierstrass(CubicModel(d=27, a3=32, a1=8, a0=8))
    with pytest.raises(PointAtInfinity):
        point_to_xr(mm, INFINITY)
    with pytest.raises(ModelRelationViolated):
        xr_to_point(mm, 1, 1)


def test_opposite_branch_flips_b():
    model = CubicModel(d=27, a3=32, a1=8, a0=8)
    curve, _ = to_weierstrass(model.opposite_branch())
    assert curve == Curve(144, -3456)


def test_k1_point_map():
    _, _, mm = curve_for(lookup(Variant.FIVE_PLUS, 1))
    x, r = point_to_xr(mm, CurvePoint.affine(580, 23368))
    assert (x, r) == (Fraction(145, 239), Fraction(11684, 57121))
    assert xr_to_point(mm, x, r) == CurvePoint.affine(580, 23368)


@pytest.mark.parametrize("cfg", EMBEDDED_REGISTRY, ids=lambda c: c.config_id)
def test_point_map_over_multiples(cfg):
    model, curve, mm = curve_for(cfg)
    for p in curve.multiples(cfg.seed, 6):
        x, r = point_to_xr(mm, p)
        assert model.holds(x, r)
        assert xr_to_point(mm, x, r) == p


@pytest.mark.parametrize("cfg", EMBEDDED_REGISTRY, ids=lambda c: c.config_id)
def test_reduced_curve_is_minimal(cfg):
    model, curve, mm = curve_for(cfg)
    big_a, big_b = canonical_coefficients(model)
    lam = lambda_reduce(big_a, big_b)
    assert lambda_reduce(big_a // lam ** 4, big_b // lam ** 6) == 1
    assert lam % mm.lam == 0
    assert (curve.a * mm.lam ** 4, curve.b * mm.lam ** 6) == (big_a, big_b)
