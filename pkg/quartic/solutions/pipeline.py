"""Curve points to primitive integer solutions, and bounded solution streams."""
import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from quartic import config
from quartic.arithmetic.exactnum import decimal_digits, gcd_all, lcm_all
from quartic.cache import MultipleCache, multiple_cache
from quartic.curves.curve import CurvePoint
from quartic.curves.model import ModelMap, point_to_xr
from quartic.errors import (
    DegenerateSolution,
    DigitBudgetExhausted,
    ModelRelationViolated,
    NoSeedPoint,
    PointAtInfinity,
)
from quartic.solutions.families import FamilyConfig, Variant, curve_for

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuarticSolution:
    """sum(terms^4) + k * f^4 = g^4."""

    variant: Variant
    k: int
    terms: Tuple[int, ...]
    f: int
    g: int

    @property
    def entries(self) -> Tuple[int, ...]:
        return self.terms + (self.f, self.g)

    def lhs(self) -> int:
        return sum(t ** 4 for t in self.terms) + self.k * self.f ** 4

    def rhs(self) -> int:
        return self.g ** 4

    def scaled(self, t: int) -> "QuarticSolution":
        return replace(self, terms=tuple(t * v for v in self.terms), f=t * self.f, g=t * self.g)

    def same_multiset(self, other: "QuarticSolution") -> bool:
        """Equal up to the order of the unit-coefficient terms."""
        return (
            self.variant is other.variant
            and self.k == other.k
            and sorted(self.terms) == sorted(other.terms)
            and (self.f, self.g) == (other.f, other.g)
        )

    def __str__(self) -> str:
        terms = ", ".join(str(t) for t in self.terms)
        return f"({terms}) + {self.k}*{self.f}^4 = {self.g}^4"


@dataclass(frozen=True)
class Provenance:
    """Where a solution came from.

    For curve solutions multiple is n in n*seed and point is that multiple; family
    evaluations record the parameter n there and carry no point.
    """

    config_id: str
    multiple: int
    point: Optional[CurvePoint]
    branch: int = 1
    repaired_from_paper: bool = False


def primitive_reduction(values: Sequence[Fraction]) -> List[int]:
    """Scale rationals to integers, divide by their gcd and drop signs."""
    values = [Fraction(v) for v in values]
    scale = lcm_all(v.denominator for v in values)
    ints = [abs(int(v * scale)) for v in values]
    g = gcd_all(ints)
    if g == 0:
        raise DegenerateSolution("every entry is zero")
    return [v // g for v in ints]


def reduce_solution(sol: QuarticSolution) -> QuarticSolution:
    """Primitive form of an integer solution."""
    ints = primitive_reduction(sol.entries)
    return QuarticSolution(sol.variant, sol.k, tuple(ints[:-2]), ints[-2], ints[-1])


def verify(sol: QuarticSolution) -> bool:
    """Exact check of the defining equation, primitivity and nonnegativity."""
    if len(sol.terms) != sol.variant.term_count:
        return False
    if any(v < 0 for v in sol.entries):
        return False
    if gcd_all(sol.entries) != 1:
        return False
    return sol.lhs() == sol.rhs()


def point_to_solution(cfg: FamilyConfig, p: CurvePoint, model_map: Optional[ModelMap] = None) -> QuarticSolution:
    """Back-substitute a curve point into the family's quartic solution.

    Args:
        cfg: Family configuration whose curve p lies on
        p: Affine point on that curve
        model_map: Precomputed map for cfg (built when omitted)

    Returns:
        Primitive QuarticSolution in role order (A, B, multiples of r | r | G)

    Raises:
        PointAtInfinity: for the identity point
        DegenerateSolution: when a term vanishes
    """
    if p.is_infinity:
        raise PointAtInfinity("the point at infinity gives no solution")
    if model_map is None:
        _, _, model_map = curve_for(cfg)
    x, r = point_to_xr(model_map, p)
    s = cfg.sextuple
    raw = [s.a_poly()(x), s.b_poly()(x)] + [m * r for m in cfg.multipliers] + [r, s.g_poly()(x)]
    if any(v == 0 for v in raw):
        raise DegenerateSolution(f"{p} on {cfg.config_id} gives a zero term: {raw}")
    ints = primitive_reduction(raw)
    sol = QuarticSolution(cfg.variant, cfg.k, tuple(ints[:-2]), ints[-2], ints[-1])
    if not verify(sol):
        raise ModelRelationViolated(f"{p} on {cfg.config_id} gave a non-solution {sol}")
    return sol


def generate(
    cfg: FamilyConfig,
    count: int,
    max_digits: Optional[int] = None,
    cache: Optional[MultipleCache] = None,
) -> List[Tuple[QuarticSolution, Provenance]]:
    """Solutions from n*seed for n = 1, 2, ... in ascending order.

    Degenerate multiples are skipped. The stream stops after count solutions or at the
    first g with more than max_digits digits.

    Raises:
        NoSeedPoint: if cfg has no seed or the seed is torsion
        DigitBudgetExhausted: if the budget stops the stream before any solution
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if cfg.seed is None:
        raise NoSeedPoint(f"{cfg.config_id} has no seed point")
    max_digits = config.MAX_DIGITS if max_digits is None else max_digits
    if max_digits < 1:
        raise ValueError(f"max_digits must be >= 1, got {max_digits}")
    cache = cache or multiple_cache
    _, curve, model_map = curve_for(cfg)
    if not curve.is_infinite_order(cfg.seed):
        raise NoSeedPoint(f"seed {cfg.seed} of {cfg.config_id} is a torsion point")

    out: List[Tuple[QuarticSolution, Provenance]] = []
    n = 0
    while len(out) < count:
        n += 1
        p = cache.get(curve, cfg.seed, n)
        try:
            sol = point_to_solution(cfg, p, model_map)
        except DegenerateSolution as e:
            logger.warning(f"Skipping multiple {n} of {cfg.config_id}: {e}")
            continue
        if decimal_digits(sol.g) > max_digits:
            if not out:
                raise DigitBudgetExhausted(
                    f"{cfg.config_id}: g of multiple {n} has {decimal_digits(sol.g)} digits > {max_digits}"
                )
            logger.info(f"{cfg.config_id}: digit budget {max_digits} reached at multiple {n}")
            break
        logger.debug(f"{cfg.config_id} multiple {n}: g has {decimal_digits(sol.g)} digits")
        out.append((sol, Provenance(cfg.config_id, n, p, cfg.branch)))
    logger.info(f"Generated {len(out)} solution(s) for {cfg.config_id}")
    return out


def replay(cfg: FamilyConfig, provenance: Provenance, cache: Optional[MultipleCache] = None) -> QuarticSolution:
    """Recompute the solution a provenance record points at."""
    if cfg.seed is None:
        raise NoSeedPoint(f"{cfg.config_id} has no seed point")
    _, curve, model_map = curve_for(cfg)
    p = (cache or multiple_cache).get(curve, cfg.seed, provenance.multiple)
    if p != provenance.point:
        raise ModelRelationViolated(
            f"multiple {provenance.multiple} of {cfg.config_id} is {p}, not {provenance.point}"
        )
    return point_to_solution(cfg, p, model_map)


def explore_branch(cfg: FamilyConfig, bound: int) -> FamilyConfig:
    """Configuration on the opposite branch, seeded by a point found on its curve.

    The seed is the first point of search_points(bound) that is non-torsion and gives a
    non-degenerate solution.

    Raises:
        NoSeedPoint: if no such point has |X| <= bound
    """
    flipped = replace(cfg, branch=-cfg.branch, seed=None)
    _, curve, model_map = curve_for(flipped)
    for p in curve.search_points(bound):
        if not curve.is_infinite_order(p):
            continue
        try:
            point_to_solution(flipped, p, model_map)
        except DegenerateSolution:
            continue
        logger.info(f"{flipped.config_id}: seed {p} on {curve}")
        return replace(flipped, seed=p)
    raise NoSeedPoint(f"no usable point with |X| <= {bound} on {curve} for {flipped.config_id}")
