"""Group law on short Weierstrass curves Y^2 = X^3 + AX + B over Q."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from quartic import config
from quartic.arithmetic.exactnum import RationalLike, isqrt_exact, to_rational
from quartic.errors import InputOffCurve, PointAtInfinity, SingularCurve

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CurvePoint:
    """Affine point (x, y), or the point at infinity when both are None."""

    x: Optional[Fraction] = None
    y: Optional[Fraction] = None

    @classmethod
    def affine(cls, x: RationalLike, y: RationalLike) -> "CurvePoint":
        return cls(to_rational(x), to_rational(y))

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    @property
    def is_integral(self) -> bool:
        return not self.is_infinity and self.x.denominator == 1 and self.y.denominator == 1

    def __str__(self) -> str:
        if self.is_infinity:
            return "O"
        return f"({self.x}, {self.y})"


INFINITY = CurvePoint()


@dataclass(frozen=True)
class Curve:
    """Y^2 = X^3 + A*X + B with integer A, B and nonzero discriminant."""

    a: int
    b: int

    def __post_init__(self):
        if isinstance(self.a, bool) or isinstance(self.b, bool):
            raise TypeError("curve coefficients must be integers")
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise TypeError(f"curve coefficients must be integers, got ({self.a!r}, {self.b!r})")
        if 4 * self.a ** 3 + 27 * self.b ** 2 == 0:
            raise SingularCurve(f"4A^3 + 27B^2 = 0 for (A, B) = ({self.a}, {self.b})")

    @property
    def discriminant(self) -> int:
        return -16 * (4 * self.a ** 3 + 27 * self.b ** 2)

    def rhs(self, x: Fraction) -> Fraction:
        return x ** 3 + self.a * x + self.b

    def contains(self, p: CurvePoint) -> bool:
        if p.is_infinity:
            return True
        return p.y * p.y == self.rhs(p.x)

    def _require(self, *points: CurvePoint) -> None:
        for p in points:
            if not self.contains(p):
                raise InputOffCurve(f"{p} is not on {self}")

    def negate(self, p: CurvePoint) -> CurvePoint:
        self._require(p)
        if p.is_infinity:
            return p
        return CurvePoint(p.x, -p.y)

    def add(self, p: CurvePoint, q: CurvePoint) -> CurvePoint:
        """Chord-tangent addition."""
        self._require(p, q)
        return self._add(p, q)

    def _add(self, p: CurvePoint, q: CurvePoint) -> CurvePoint:
        if p.is_infinity:
            return q
        if q.is_infinity:
            return p
        if p.x == q.x:
            if p.y != q.y or p.y == 0:
                return INFINITY
            slope = (3 * p.x * p.x + self.a) / (2 * p.y)
        else:
            slope = (q.y - p.y) / (q.x - p.x)
        x3 = slope * slope - p.x - q.x
        y3 = slope * (p.x - x3) - p.y
        return CurvePoint(x3, y3)

    def double(self, p: CurvePoint) -> CurvePoint:
        return self.add(p, p)

    def scalar_mul(self, n: int, p: CurvePoint) -> CurvePoint:
        """n * p by double-and-add."""
        self._require(p)
        if n < 0:
            return self.scalar_mul(-n, CurvePoint(p.x, -p.y) if not p.is_infinity else p)
        result = INFINITY
        addend = p
        while n:
            if n & 1:
                result = self._add(result, addend)
            addend = self._add(addend, addend)
            n >>= 1
        return result

    def multiples(self, p: CurvePoint, count: int) -> List[CurvePoint]:
        """[p, 2p, ..., count*p] by repeated addition."""
        self._require(p)
        out: List[CurvePoint] = []
        current = INFINITY
        for _ in range(count):
            current = self._add(current, p)
            out.append(current)
        return out

    def is_infinite_order(self, p: CurvePoint, bound: Optional[int] = None) -> bool:
        """Certify that p has infinite order.

        A non-integral coordinate, or an integral y != 0 whose square does not divide
        4A^3 + 27B^2, rules out torsion (Nagell-Lutz). Otherwise multiples are walked up
        to the Mazur bound; the walk stops early as soon as one turns non-integral.
        """
        if p.is_infinity:
            raise PointAtInfinity("the point at infinity has order 1")
        self._require(p)
        if not p.is_integral:
            return True
        disc = 4 * self.a ** 3 + 27 * self.b ** 2
        y = p.y.numerator
        if y != 0 and disc % (y * y) != 0:
            return True
        current = p
        for n in range(2, (bound or config.TORSION_BOUND) + 1):
            current = self._add(current, p)
            if current.is_infinity:
                logger.debug(f"{p} has order {n} on {self}")
                return False
            if not current.is_integral:
                return True
        return True

    def search_points(self, bound: int) -> List[CurvePoint]:
        """Affine points with integral X in [-bound, bound], ordered by X then y."""
        found: List[CurvePoint] = []
        for x in range(-bound, bound + 1):
            value = x ** 3 + self.a * x + self.b
            if value < 0:
                continue
            y = isqrt_exact(value)
            if y is None:
                continue
            found.append(CurvePoint.affine(x, y))
            if y:
                found.append(CurvePoint.affine(x, -y))
        return found

    def __str__(self) -> str:
        return f"Y^2 = X^3 + {self.a}X + {self.b}"
