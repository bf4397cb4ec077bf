"""Solutions built from a^4 + b^4 + (a+b)^4 = 2*(a^2 + a*b + b^2)^2.

Covers the (p, q) construction for the k=2 (k+3) equation and its curve
Y^2 = X^3 - 36X, the parametric n-families, and two bivariate identities that are
proved by evaluation on a grid larger than their degree.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from quartic import config
from quartic.arithmetic.exactnum import decimal_digits, rational_sqrt
from quartic.arithmetic.poly import UniPoly
from quartic.cache import multiple_cache
from quartic.curves.curve import Curve, CurvePoint
from quartic.curves.model import CubicModel, ModelMap, point_to_xr, to_weierstrass
from quartic.errors import (
    DegenerateSolution,
    DigitBudgetExhausted,
    IdentityFailed,
    ModelRelationViolated,
    PointAtInfinity,
)
from quartic.solutions.families import Variant
from quartic.solutions.pipeline import Provenance, QuarticSolution, primitive_reduction, reduce_solution, verify

logger = logging.getLogger(__name__)

K2_CONFIG_ID = "three_plus-k2-pq"


def three_quartic_square(a: int, b: int) -> int:
    """2*(a^2 + a*b + b^2)^2, checked against a^4 + b^4 + (a+b)^4."""
    value = 2 * (a * a + a * b + b * b) ** 2
    if a ** 4 + b ** 4 + (a + b) ** 4 != value:
        raise ArithmeticError(f"three-quartic identity failed at ({a}, {b})")
    return value


# q pinned to 1: 3r^2 = 2p^3 - 2p
K2_MODEL = CubicModel(d=3, a3=2, a1=-2, a0=0)


def k2_curve() -> Tuple[Curve, ModelMap]:
    """Y^2 = X^3 - 36X with p = X/6, r = Y/18."""
    return to_weierstrass(K2_MODEL)


@dataclass(frozen=True)
class K2Witness:
    """p, q, r with 3r^2 = 2pq(p^2 - q^2); then s = 2r closes

    (p^2 + q^2)^4 = (p^2 - q^2)^4 + (2pq)^4 + s^4 + 2*r^4.
    """

    p: Fraction
    q: Fraction
    r: Fraction

    @property
    def s(self) -> Fraction:
        return 2 * self.r

    def holds(self) -> bool:
        p, q, r = self.p, self.q, self.r
        return 3 * r * r == 2 * p * q * (p * p - q * q)

    def closes(self) -> bool:
        p, q = self.p, self.q
        lhs = (p * p - q * q) ** 4 + (2 * p * q) ** 4 + self.s ** 4 + 2 * self.r ** 4
        return lhs == (p * p + q * q) ** 4


def k2_witness(pt: CurvePoint) -> K2Witness:
    """(p, 1, r) from a point of Y^2 = X^3 - 36X."""
    if pt.is_infinity:
        raise PointAtInfinity("the point at infinity gives no witness")
    _, model_map = k2_curve()
    p, r = point_to_xr(model_map, pt)
    return K2Witness(p, Fraction(1), r)


def k2_point_to_solution(pt: CurvePoint) -> QuarticSolution:
    """Primitive solution of a^4 + b^4 + c^4 + 2*d^4 = e^4 from a curve point.

    Raises:
        InputOffCurve: if pt is not on Y^2 = X^3 - 36X
        DegenerateSolution: for the 2-torsion points and p = +-1
    """
    w = k2_witness(pt)
    if not (w.holds() and w.closes()):
        raise ModelRelationViolated(f"{pt} gives a witness {w} that does not close")
    p, q, r = w.p, w.q, w.r
    raw = [p * p - q * q, 2 * p * q, w.s, r, p * p + q * q]
    if any(v == 0 for v in raw):
        raise DegenerateSolution(f"{pt} gives a zero term: {raw}")
    ints = primitive_reduction(raw)
    return QuarticSolution(Variant.THREE_PLUS, 2, tuple(ints[:3]), ints[3], ints[4])


# (25/4, -35/8) is twice this point
K2_SEED = CurvePoint.affine(12, 36)


def k2_generate(count: int, max_digits: Optional[int] = None) -> List[Tuple[QuarticSolution, Provenance]]:
    """k=2 (k+3) solutions from n * (12, 36) on Y^2 = X^3 - 36X, n = 1, 2, ..."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    max_digits = config.MAX_DIGITS if max_digits is None else max_digits
    if max_digits < 1:
        raise ValueError(f"max_digits must be >= 1, got {max_digits}")
    curve, _ = k2_curve()
    out: List[Tuple[QuarticSolution, Provenance]] = []
    n = 0
    while len(out) < count:
        n += 1
        p = multiple_cache.get(curve, K2_SEED, n)
        try:
            sol = k2_point_to_solution(p)
        except DegenerateSolution as e:
            logger.warning(f"Skipping multiple {n} of {K2_CONFIG_ID}: {e}")
            continue
        if decimal_digits(sol.g) > max_digits:
            if not out:
                raise DigitBudgetExhausted(f"{K2_CONFIG_ID}: multiple {n} exceeds {max_digits} digits")
            break
        out.append((sol, Provenance(K2_CONFIG_ID, n, p)))
    return out


@dataclass(frozen=True)
class ParamFamily:
    """q1(n), q2(n), q3(n) with q1+q2+q3 = 0 plus fixed multiples of u(n) = n^2+n+1.

    Quadratics are coefficient triples (c0, c1, c2), lowest degree first. The terms are
    (|q1|, |q2|, |q3|, fixed_i * u) with f = f_mult * u and g = g_mult * u.
    """

    k: int
    quadratics: Tuple[Tuple[int, int, int], ...]
    fixed_multipliers: Tuple[int, ...]
    f_mult: int
    g_mult: int
    variant: Variant = Variant.FIVE_PLUS
    repaired_from_paper: bool = False
    label: str = ""

    def polys(self) -> Tuple[UniPoly, ...]:
        return tuple(UniPoly(q) for q in self.quadratics)

    @staticmethod
    def scale() -> UniPoly:
        return UniPoly([1, 1, 1])

    def m_f(self):
        """m_f with 2*m_f^2 = g^4 - sum(fixed^4) - k*f^4, or None."""
        rest = self.g_mult ** 4 - sum(v ** 4 for v in self.fixed_multipliers) - self.k * self.f_mult ** 4
        return rational_sqrt(Fraction(rest, 2))


def k2_family() -> ParamFamily:
    # second constant and the f multiplier differ from the printed family
    return ParamFamily(
        k=2,
        quadratics=((-16, -20, 6), (10, -12, -16), (6, 32, 10)),
        fixed_multipliers=(32, 29),
        f_mult=12,
        g_mult=37,
        repaired_from_paper=True,
        label="k2",
    )


def k5_family() -> ParamFamily:
    # fixed terms and the f multiplier are missing from the printed family
    return ParamFamily(
        k=5,
        quadratics=((4, -44, -26), (-26, -8, 22), (22, 52, 4)),
        fixed_multipliers=(7, 28),
        f_mult=14,
        g_mult=35,
        repaired_from_paper=True,
        label="k5",
    )


def literal_k2_family() -> ParamFamily:
    """The k=2 quadratics exactly as printed; f_mult kept at 12 so only they differ."""
    return ParamFamily(
        k=2,
        quadratics=((-16, -20, 6), (-10, -12, -16), (-6, -32, -10)),
        fixed_multipliers=(32, 29),
        f_mult=12,
        g_mult=37,
        label="k2-literal",
    )


FAMILIES = {2: k2_family, 5: k5_family}


def family_terms(fam: ParamFamily, n: int) -> QuarticSolution:
    """Evaluate the family at n without reduction or checking."""
    u = int(fam.scale()(n))
    qs = [abs(int(q(n))) for q in fam.polys()]
    fixed = [m * u for m in fam.fixed_multipliers]
    return QuarticSolution(fam.variant, fam.k, tuple(qs + fixed), fam.f_mult * u, fam.g_mult * u)


def family_eval(fam: ParamFamily, n: int) -> QuarticSolution:
    """Primitive solution of the family at n.

    Raises:
        DegenerateSolution: when one of the quadratics vanishes at n
        IdentityFailed: when the evaluated tuple is not a solution
    """
    raw = family_terms(fam, n)
    if any(v == 0 for v in raw.entries):
        raise DegenerateSolution(f"family {fam.label} has a zero term at n={n}: {raw}")
    sol = reduce_solution(raw)
    if not verify(sol):
        raise IdentityFailed(f"family {fam.label} fails at n={n}: {sol.lhs()} != {sol.rhs()}")
    return sol


def verify_family(fam: ParamFamily) -> bool:
    """Polynomial-level check of the family.

    Needs q1 + q2 + q3 = 0, a rational m_f for the fixed terms, and
    q1^2 + q1*q2 + q2^2 = m_f * u^2 identically.
    """
    q1, q2, q3 = fam.polys()
    if not (q1 + q2 + q3).is_zero():
        logger.debug(f"family {fam.label}: quadratics do not sum to zero")
        return False
    m_f = fam.m_f()
    if m_f is None:
        logger.debug(f"family {fam.label}: fixed terms leave no square m_f")
        return False
    u = fam.scale()
    return q1 * q1 + q1 * q2 + q2 * q2 == u * u * m_f


def _carmichael_sides(a, b):
    lhs = (a ** 4 - 2 * b ** 4) ** 4 + (2 * a ** 3 * b) ** 4 + 4 * (2 * a * b ** 3) ** 4
    rhs = (a ** 4 + 2 * b ** 4) ** 4
    return lhs, rhs


def _k4_sides(p, q):
    u = p * p + p * q + q * q
    lhs = (2 * p * p - 2 * q * q) ** 4 + (2 * q * q + 4 * p * q) ** 4 + (2 * p * p + 4 * p * q) ** 4 + 4 * u ** 4
    rhs = (6 * u * u) ** 2
    return lhs, rhs


GRID_IDENTITIES = {"carmichael": _carmichael_sides, "k4": _k4_sides}


def grid_identity_check(which: str, span: int) -> bool:
    """Check a bivariate identity on the signed grid -(span-1)..(span-1) squared.

    Both identities have degree at most 16 in each variable, so span >= 9 makes the
    check a proof.
    """
    if which not in GRID_IDENTITIES:
        raise ValueError(f"unknown identity {which!r}; expected one of {sorted(GRID_IDENTITIES)}")
    if span < 9:
        raise ValueError(f"span must be >= 9, got {span}")
    axis = np.array(list(range(-(span - 1), span)), dtype=object)
    first, second = np.meshgrid(axis, axis, indexing="ij")
    lhs, rhs = GRID_IDENTITIES[which](first, second)
    ok = bool(np.all(lhs == rhs))
    logger.debug(f"grid check {which} over {axis.size}x{axis.size}: {ok}")
    return ok


def carmichael_terms(a: int, b: int) -> Tuple[int, int, int, int]:
    """(x, y, z, w) with x^4 + y^4 + 4*z^4 = w^4."""
    x = abs(a ** 4 - 2 * b ** 4)
    y = abs(2 * a ** 3 * b)
    z = abs(2 * a * b ** 3)
    w = a ** 4 + 2 * b ** 4
    return x, y, z, w


def k14_witness() -> QuarticSolution:
    """4^4 + 11^4 + 15^4 + 14 * 1^4 = 16^4."""
    sol = QuarticSolution(Variant.THREE_PLUS, 14, (4, 11, 15), 1, 16)
    if 4 + 11 != 15 or three_quartic_square(4, 11) != 16 ** 4 - 14 or not verify(sol):
        raise IdentityFailed("k=14 witness does not hold")
    return sol
