"""Cubic models d*r^2 = a3*x^3 + a1*x + a0 and their Weierstrass curves.

Multiplying the model by a3^2 * d^3 and substituting X = a3*d*x, Y = a3*d^2*r gives
Y^2 = X^3 + (a1*a3*d^2) X + a0*a3^2*d^3. The curve is then shrunk by lambda
(X -> X/lambda^2, Y -> Y/lambda^3) as far as the substitution stays integral.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from sympy import divisors

from quartic.arithmetic.exactnum import RationalLike, lambda_reduce, to_rational
from quartic.curves.curve import Curve, CurvePoint
from quartic.errors import InputOffCurve, ModelRelationViolated, PointAtInfinity, SingularCurve

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CubicModel:
    """The relation d*r^2 = a3*x^3 + a1*x + a0 (depressed: no x^2 term)."""

    d: int
    a3: int
    a1: int
    a0: int
    a2: int = 0

    def __post_init__(self):
        if self.d == 0 or self.a3 == 0:
            raise ValueError(f"cubic model needs d != 0 and a3 != 0, got d={self.d}, a3={self.a3}")
        if self.a2 != 0:
            raise ValueError("only depressed cubics (a2 = 0) are supported")

    def cubic(self, x: Fraction) -> Fraction:
        return self.a3 * x ** 3 + self.a1 * x + self.a0

    def holds(self, x: RationalLike, r: RationalLike) -> bool:
        x, r = to_rational(x), to_rational(r)
        return self.d * r * r == self.cubic(x)

    def opposite_branch(self) -> "CubicModel":
        """The other factor of the difference of squares: d*r^2 = -(cubic)."""
        return CubicModel(self.d, -self.a3, -self.a1, -self.a0)

    def __str__(self) -> str:
        return f"{self.d}r^2 = {self.a3}x^3 + {self.a1}x + {self.a0}"


@dataclass(frozen=True)
class ModelMap:
    """x = X/sx and r = Y/sy carry points of `curve` to solutions of `model`."""

    model: CubicModel
    curve: Curve
    lam: int
    sx: Fraction
    sy: Fraction


def canonical_coefficients(m: CubicModel) -> Tuple[int, int]:
    """(A0, B0) = (a1*a3*d^2, a0*a3^2*d^3) before any reduction."""
    return m.a1 * m.a3 * m.d ** 2, m.a0 * m.a3 ** 2 * m.d ** 3


def integral_reducer(m: CubicModel, big_a: int, big_b: int) -> int:
    """Largest divisor of lambda_reduce(A0, B0) that keeps sx and sy integral."""
    scale_x = m.a3 * m.d
    scale_y = m.a3 * m.d ** 2
    for lam in reversed(divisors(lambda_reduce(big_a, big_b))):
        if scale_x % (lam * lam) == 0 and scale_y % (lam ** 3) == 0:
            return int(lam)
    return 1


def to_weierstrass(m: CubicModel) -> Tuple[Curve, ModelMap]:
    """Transform a cubic model into its reduced short Weierstrass curve.

    Returns:
        Tuple of (curve, map)

    Raises:
        SingularCurve: if the cubic has a repeated root
    """
    big_a, big_b = canonical_coefficients(m)
    if 4 * big_a ** 3 + 27 * big_b ** 2 == 0:
        raise SingularCurve(f"model {m} has a singular Weierstrass form")
    lam = integral_reducer(m, big_a, big_b)
    curve = Curve(big_a // lam ** 4, big_b // lam ** 6)
    model_map = ModelMap(
        model=m,
        curve=curve,
        lam=lam,
        sx=Fraction(m.a3 * m.d, lam ** 2),
        sy=Fraction(m.a3 * m.d ** 2, lam ** 3),
    )
    logger.debug(f"{m} -> {curve} (lambda={lam}, sx={model_map.sx}, sy={model_map.sy})")
    return curve, model_map


def point_to_xr(model_map: ModelMap, p: CurvePoint) -> Tuple[Fraction, Fraction]:
    """Curve point -> model solution (x, r) = (X/sx, Y/sy)."""
    if p.is_infinity:
        raise PointAtInfinity("the point at infinity has no (x, r) image")
    if not model_map.curve.contains(p):
        raise InputOffCurve(f"{p} is not on {model_map.curve}")
    x = p.x / model_map.sx
    r = p.y / model_map.sy
    if not model_map.model.holds(x, r):
        raise ModelRelationViolated(f"({x}, {r}) does not satisfy {model_map.model}")
    return x, r


def xr_to_point(model_map: ModelMap, x: RationalLike, r: RationalLike) -> CurvePoint:
    """Model solution (x, r) -> curve point (x*sx, r*sy)."""
    x, r = to_rational(x), to_rational(r)
    if not model_map.model.holds(x, r):
        raise ModelRelationViolated(f"({x}, {r}) does not satisfy {model_map.model}")
    return CurvePoint(x * model_map.sx, r * model_map.sy)
