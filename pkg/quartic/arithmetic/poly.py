"""Dense univariate polynomials with exact rational coefficients."""
import logging
from fractions import Fraction
from typing import Iterable, List, Tuple, Union

from quartic.arithmetic.exactnum import RationalLike, squarefree_part, to_rational
from quartic.errors import NotASquareForm

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


class UniPoly:
    """Polynomial stored as coefficients indexed by degree, trailing zeros trimmed.

    The zero polynomial has no coefficients and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        values = [to_rational(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(values)

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def constant(cls, c: RationalLike) -> "UniPoly":
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __add__(self, other: Union["UniPoly", Scalar]) -> "UniPoly":
        other = _as_poly(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.coeff(i) + other.coeff(i) for i in range(size))

    __radd__ = __add__

    def __sub__(self, other: Union["UniPoly", Scalar]) -> "UniPoly":
        return self + (-_as_poly(other))

    def __rsub__(self, other: Scalar) -> "UniPoly":
        return _as_poly(other) - self

    def __mul__(self, other: Union["UniPoly", Scalar]) -> "UniPoly":
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {n!r}")
        result = UniPoly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x: RationalLike) -> Fraction:
        """Horner evaluation."""
        x = to_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        parts: List[str] = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("x" if i == 1 else f"x^{i}")
            parts.append(f"{sign} {body}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def _as_poly(value: Union[UniPoly, Scalar]) -> UniPoly:
    if isinstance(value, UniPoly):
        return value
    return UniPoly.constant(value)


def arith(p: UniPoly, q: UniPoly, op: str) -> UniPoly:
    """Ring operation selected by name: "add", "sub" or "mul"."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown polynomial operation {op!r}")


def power(p: UniPoly, n: int) -> UniPoly:
    return p ** n


def evaluate(p: UniPoly, x: RationalLike) -> Fraction:
    return p(x)


def extract_square(p: UniPoly) -> Tuple[Fraction, UniPoly]:
    """Decompose p as content * q^2.

    The content is the squarefree part of the leading coefficient, so it is a
    positive squarefree integer and the decomposition is unique; q gets a positive
    leading coefficient. Coefficients of q are matched from the top degree down.

    Args:
        p: Nonzero polynomial

    Returns:
        Tuple of (content, q)

    Raises:
        NotASquareForm: if p is not a positive rational times a square
    """
    if p.is_zero():
        raise ValueError("extract_square needs a nonzero polynomial")
    if p.degree % 2 == 1:
        raise NotASquareForm(f"odd degree {p.degree}: {p!r}")
    if p.leading < 0:
        raise NotASquareForm(f"negative leading coefficient: {p!r}")

    content, top = squarefree_part(p.leading)
    target = p * Fraction(1, content)
    n = p.degree // 2
    q = [Fraction(0)] * (n + 1)
    q[n] = top
    for k in range(n - 1, -1, -1):
        cross = sum((q[i] * q[n + k - i] for i in range(k + 1, n)), Fraction(0))
        q[k] = (target.coeff(n + k) - cross) / (2 * q[n])

    root = UniPoly(q)
    if root * root != target:
        raise NotASquareForm(f"{p!r} is not content * square")
    logger.debug(f"extract_square: {p!r} = {content} * ({root!r})^2")
    return Fraction(content), root
