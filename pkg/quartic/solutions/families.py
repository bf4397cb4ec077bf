"""Per-k family configurations and construction of their cubic models.

A family substitutes G = a*x^2 + b, A = c*x^2 + d, B = e*x + f and makes the remaining
terms fixed multiples of r. Then G^4 - A^4 - B^4 = content * Q(x)^2, and the equation
turns into r^4 * M = content * Q^2 with M = sum(multipliers^4) + k. When M / content is
a rational square m^2 this is m*r^2 = +-Q(x), a cubic model.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from quartic import config
from quartic.arithmetic.exactnum import gcd_all, lcm_all, rational_sqrt, to_rational
from quartic.arithmetic.poly import UniPoly, extract_square
from quartic.curves.curve import Curve, CurvePoint
from quartic.curves.model import CubicModel, ModelMap, to_weierstrass
from quartic.errors import NotASquare

logger = logging.getLogger(__name__)


class Variant(str, Enum):
    FIVE_PLUS = "five_plus"
    THREE_PLUS = "three_plus"

    @property
    def term_count(self) -> int:
        return 5 if self is Variant.FIVE_PLUS else 3

    @property
    def multiplier_count(self) -> int:
        return 3 if self is Variant.FIVE_PLUS else 1


@dataclass(frozen=True)
class Sextuple:
    """Coefficients of G = a*x^2 + b, A = c*x^2 + d, B = e*x + f."""

    a: int
    b: int
    c: int
    d: int
    e: int
    f: int

    @classmethod
    def of(cls, values) -> "Sextuple":
        return cls(*[int(v) for v in values])

    def as_list(self) -> List[int]:
        return [self.a, self.b, self.c, self.d, self.e, self.f]

    def g_poly(self) -> UniPoly:
        return UniPoly([self.b, 0, self.a])

    def a_poly(self) -> UniPoly:
        return UniPoly([self.d, 0, self.c])

    def b_poly(self) -> UniPoly:
        return UniPoly([self.f, self.e])

    def difference(self) -> UniPoly:
        """G^4 - A^4 - B^4."""
        return self.g_poly() ** 4 - self.a_poly() ** 4 - self.b_poly() ** 4

    def __str__(self) -> str:
        return "[" + ", ".join(str(v) for v in self.as_list()) + "]"


STANDARD_SEXTUPLE = Sextuple(4, 3, 4, -1, 4, -2)
PLUS_TWO_SEXTUPLE = Sextuple(4, 3, 4, -1, 4, 2)
LINEAR_FREE_SEXTUPLE = Sextuple(4, 1, 4, -1, 4, 0)


@dataclass(frozen=True)
class FamilyConfig:
    """One (variant, k) choice of sextuple, multipliers and seed.

    multipliers are (s, t, u) for the (k+5) equation and (s,) for the (k+3) one;
    branch picks the factor m*r^2 = branch * Q(x) of the difference of squares.
    """

    variant: Variant
    k: int
    sextuple: Sextuple
    multipliers: Tuple[Fraction, ...]
    branch: int = 1
    seed: Optional[CurvePoint] = None
    note: str = field(default="", compare=False)

    def __post_init__(self):
        if self.branch not in (1, -1):
            raise ValueError(f"branch must be +1 or -1, got {self.branch}")
        if len(self.multipliers) != self.variant.multiplier_count:
            raise ValueError(
                f"{self.variant.value} needs {self.variant.multiplier_count} multipliers, "
                f"got {len(self.multipliers)}"
            )

    @property
    def config_id(self) -> str:
        suffix = "" if self.branch == 1 else "-neg"
        return f"{self.variant.value}-k{self.k}{suffix}"


def make_config(
    variant: Variant,
    k: int,
    sextuple: Sextuple,
    multipliers,
    seed: Optional[Tuple[str, str]] = None,
    branch: int = 1,
    note: str = "",
) -> FamilyConfig:
    """Build a FamilyConfig from plain values (strings allowed for rationals)."""
    point = CurvePoint.affine(*seed) if seed is not None else None
    return FamilyConfig(
        variant=variant,
        k=k,
        sextuple=sextuple,
        multipliers=tuple(to_rational(m) for m in multipliers),
        branch=branch,
        seed=point,
        note=note,
    )


@lru_cache(maxsize=None)
def derive_identity(s: Sextuple) -> Tuple[Fraction, UniPoly]:
    """G^4 - A^4 - B^4 = content * Q(x)^2.

    Raises:
        NotASquareForm: for sextuples outside the square pattern
    """
    return extract_square(s.difference())


def multiplier_sum(cfg: FamilyConfig) -> Fraction:
    """M = sum of multipliers^4 + k."""
    return sum((m ** 4 for m in cfg.multipliers), Fraction(0)) + cfg.k


def build_model(cfg: FamilyConfig) -> CubicModel:
    """Cubic model m*r^2 = branch * Q(x) with integer, collectively coprime coefficients.

    Raises:
        NotASquare: when M / content is not a rational square
    """
    content, q = derive_identity(cfg.sextuple)
    if q.degree != 3:
        raise ValueError(f"sextuple {cfg.sextuple} gives a degree {q.degree} root, not a cubic")
    big_m = multiplier_sum(cfg)
    m = rational_sqrt(big_m / content)
    if m is None:
        raise NotASquare(f"M / content = {big_m / content} is not a square for {cfg.config_id}")

    # [d, a3, a2, a1, a0] over Q, then cleared to coprime integers
    row = [m] + [cfg.branch * q.coeff(i) for i in (3, 2, 1, 0)]
    scale = lcm_all(v.denominator for v in row)
    ints = [int(v * scale) for v in row]
    g = gcd_all(ints)
    d, a3, a2, a1, a0 = (v // g for v in ints)
    model = CubicModel(d=d, a3=a3, a1=a1, a0=a0, a2=a2)
    logger.debug(f"{cfg.config_id}: M={big_m}, content={content}, model {model}")
    return model


@lru_cache(maxsize=None)
def curve_for(cfg: FamilyConfig) -> Tuple[CubicModel, Curve, ModelMap]:
    """build_model followed by to_weierstrass."""
    model = build_model(cfg)
    curve, model_map = to_weierstrass(model)
    return model, curve, model_map


def _embedded_registry() -> List[FamilyConfig]:
    five, three = Variant.FIVE_PLUS, Variant.THREE_PLUS
    return [
        make_config(five, 1, STANDARD_SEXTUPLE, (19, 17, 11), ("580", "23368")),
        make_config(five, 2, STANDARD_SEXTUPLE, (7, 3, 2), ("1/4", "-33/8")),
        make_config(five, 3, STANDARD_SEXTUPLE, (5, 4, 2), ("34", "-352")),
        make_config(
            five, 4, STANDARD_SEXTUPLE, (70, 30, 20), ("474", "10656"),
            note="multipliers stored as printed; they are (7, 3, 2) scaled by 10",
        ),
        make_config(
            five, 5, LINEAR_FREE_SEXTUPLE, (11, 7, 5),
            ("684407232/2289169", "17682275119320/3463512697"),
        ),
        make_config(five, 6, STANDARD_SEXTUPLE, (37, 31, 11), ("1720", "828352")),
        make_config(five, 7, STANDARD_SEXTUPLE, (5, 3, 2), ("4", "-64")),
        make_config(five, 8, STANDARD_SEXTUPLE, (4, 3, 2), ("-16316/225", "-941248/3375")),
        make_config(
            five, 9, PLUS_TWO_SEXTUPLE, (12, 10, 6),
            (
                "569670529240635121336/10878607024914721",
                "13598002320735074871580564215680/1134644815597146377458481",
            ),
        ),
        make_config(three, 3, PLUS_TWO_SEXTUPLE, ("1/2",), ("36", "176")),
        make_config(
            three, 7, LINEAR_FREE_SEXTUPLE, (47,),
            (
                "-2876843001196439/4324112302500",
                "-94873842643707990383059/8991775327433625000",
            ),
        ),
        make_config(
            three, 8, STANDARD_SEXTUPLE, ("239/13",),
            ("2088556756/1369", "697479284591232/50653"),
        ),
        make_config(three, 9, PLUS_TWO_SEXTUPLE, (2,), ("164", "-2112")),
    ]


EMBEDDED_REGISTRY: Tuple[FamilyConfig, ...] = tuple(_embedded_registry())

# (k+3) values the sextuple method does not cover
MISSING_REASONS: Dict[Tuple[Variant, int], str] = {
    (Variant.THREE_PLUS, 1): "k=1 is the Jacobi-Madden equation, outside this method",
    (Variant.THREE_PLUS, 2): "k=2 is solved by the (p, q) identity; use the identities module",
    (Variant.THREE_PLUS, 4): "k=4 leads to an elliptic curve of rank zero (rank not verified here)",
    (Variant.THREE_PLUS, 5): "k=5 eluded the method; no configuration is known",
    (Variant.THREE_PLUS, 6): "k=6 leads to an elliptic curve of rank zero (rank not verified here)",
}


def registry(path: Optional[str] = None) -> List[FamilyConfig]:
    """All configurations: the embedded 13, or those of a JSON registry file."""
    path = path or config.REGISTRY_FILE
    if path:
        from quartic.schemas import load_registry

        configs = load_registry(path)
        logger.info(f"Loaded {len(configs)} configurations from {path}")
        return configs
    return list(EMBEDDED_REGISTRY)


def lookup(variant: Variant, k: int, configs: Optional[List[FamilyConfig]] = None) -> Optional[FamilyConfig]:
    """First configuration for (variant, k) on the +1 branch, or None."""
    for cfg in configs if configs is not None else registry():
        if cfg.variant is variant and cfg.k == k and cfg.branch == 1:
            return cfg
    return None


def search_multipliers(variant: Variant, k: int, bound: int, content: Fraction = Fraction(1)) -> List[Tuple[int, ...]]:
    """Integer multiplier tuples making (sum of fourth powers + k) / content a square.

    (k+5): tuples s >= t >= u >= 1 with s <= bound; (k+3): single s <= bound.
    Results are in lexicographic order.

    Args:
        variant: Which equation
        k: Coefficient of the lone weighted fourth power
        bound: Largest multiplier tried
        content: Content of the sextuple identity in use

    Returns:
        List of multiplier tuples
    """
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    content = to_rational(content)
    fourth = [n ** 4 for n in range(bound + 1)]

    def fits(total: int) -> bool:
        return rational_sqrt(Fraction(total) / content) is not None

    found: List[Tuple[int, ...]] = []
    if variant is Variant.THREE_PLUS:
        for s in range(1, bound + 1):
            if fits(fourth[s] + k):
                found.append((s,))
        return found
    for s in range(1, bound + 1):
        for t in range(1, s + 1):
            partial = fourth[s] + fourth[t] + k
            for u in range(1, t + 1):
                if fits(partial + fourth[u]):
                    found.append((s, t, u))
    logger.debug(f"search_multipliers({variant.value}, k={k}, bound={bound}): {len(found)} hits")
    return found
