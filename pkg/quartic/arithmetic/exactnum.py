"""Exact integer and rational helpers shared by every other module.

Integers are plain Python ints and rationals are ``fractions.Fraction``, which keeps
values reduced with a positive denominator at all times. Factoring is trial division
over a cached prime table followed by a squareness test on the cofactor, which is
enough for the coefficients of the registry curves.
"""
import logging
import math
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Dict, Iterable, List, Optional, Tuple, Union

from sympy import primerange

from quartic import config

logger = logging.getLogger(__name__)

RationalLike = Union[int, str, Fraction]


def to_rational(value: RationalLike) -> Fraction:
    """Build a Fraction from an int, a Fraction or a decimal "num/den" string."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if "e" in text.lower() or "." in text:
            raise ValueError(f"exponent and decimal-point forms are not accepted: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def format_rational(value: Fraction) -> str:
    """Decimal "num/den" form, or just "num" for integers."""
    return str(Fraction(value))


def gcd_all(values: Iterable[int]) -> int:
    """Nonnegative gcd of every entry; gcd_all([0, n]) == |n|."""
    items = list(values)
    if not items:
        raise ValueError("gcd_all needs at least one value")
    return reduce(math.gcd, (abs(v) for v in items), 0)


def lcm_all(values: Iterable[int]) -> int:
    """Positive lcm of nonzero entries (1 for an empty list)."""
    result = 1
    for v in values:
        if v == 0:
            raise ValueError("lcm of zero is undefined")
        v = abs(v)
        result = result * v // math.gcd(result, v)
    return result


def isqrt_exact(n: int) -> Optional[int]:
    """Return m with m*m == n, or None when n is not a perfect square."""
    if n < 0:
        raise ValueError(f"isqrt_exact needs a nonnegative integer, got {n}")
    m = math.isqrt(n)
    return m if m * m == n else None


def rational_sqrt(q: Fraction) -> Optional[Fraction]:
    """Exact square root of a nonnegative rational, or None."""
    q = Fraction(q)
    if q < 0:
        return None
    num = isqrt_exact(q.numerator)
    den = isqrt_exact(q.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


@lru_cache(maxsize=4)
def _trial_primes(limit: int) -> Tuple[int, ...]:
    logger.debug(f"Building prime table up to {limit}")
    return tuple(primerange(2, limit + 1))


def trial_factor(n: int, limit: Optional[int] = None) -> Tuple[Dict[int, int], int]:
    """Factor |n| by trial division over primes <= limit.

    Args:
        n: Nonzero integer
        limit: Largest trial prime (defaults to QUARTIC_TRIAL_PRIME_LIMIT)

    Returns:
        Tuple of (prime -> exponent, cofactor). The cofactor is 1, or a number with no
        prime factor <= limit.
    """
    if n == 0:
        raise ValueError("cannot factor zero")
    n = abs(n)
    factors: Dict[int, int] = {}
    for p in _trial_primes(limit or config.TRIAL_PRIME_LIMIT):
        if p * p > n:
            break
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    else:
        # primes ran out before sqrt(n): whatever is left stays a cofactor
        return factors, n
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors, 1


def valuation(n: int, p: int) -> int:
    """Exponent of p in n (n nonzero, p > 1)."""
    count = 0
    while n % p == 0:
        n //= p
        count += 1
    return count


def squarefree_split(n: int) -> Tuple[int, int]:
    """Write n = c * m^2 with c squarefree and m > 0."""
    if n <= 0:
        raise ValueError(f"squarefree_split needs a positive integer, got {n}")
    factors, cofactor = trial_factor(n)
    c, m = 1, 1
    for p, e in factors.items():
        c *= p ** (e % 2)
        m *= p ** (e // 2)
    if cofactor > 1:
        root = isqrt_exact(cofactor)
        if root is not None:
            m *= root
        else:
            c *= cofactor
    return c, m


def squarefree_part(q: Fraction) -> Tuple[int, Fraction]:
    """Write a positive rational as s * w^2 with s a squarefree integer.

    Returns:
        Tuple of (s, w) with w > 0
    """
    q = Fraction(q)
    if q <= 0:
        raise ValueError(f"squarefree_part needs a positive rational, got {q}")
    s, m = squarefree_split(q.numerator * q.denominator)
    return s, Fraction(m, q.denominator)


def lambda_reduce(a: int, b: int) -> int:
    """Largest lambda > 0 with lambda^4 | A and lambda^6 | B.

    A zero coefficient imposes no condition.
    """
    if a == 0 and b == 0:
        raise ValueError("lambda_reduce needs (A, B) != (0, 0)")
    g = math.gcd(a, b)
    factors, cofactor = trial_factor(g)
    if cofactor > 1:
        root = isqrt_exact(cofactor)
        factors[root if root is not None else cofactor] = 1
    lam = 1
    for p in factors:
        limits: List[int] = []
        if a != 0:
            limits.append(valuation(a, p) // 4)
        if b != 0:
            limits.append(valuation(b, p) // 6)
        lam *= p ** min(limits)
    return lam


def decimal_digits(n: int) -> int:
    """Number of decimal digits of |n| (1 for zero)."""
    n = abs(n)
    if n == 0:
        return 1
    # log10(2) ~ 30103/100000; corrected below against powers of ten
    digits = max(1, n.bit_length() * 30103 // 100000)
    while 10 ** digits <= n:
        digits += 1
    while digits > 1 and 10 ** (digits - 1) > n:
        digits -= 1
    return digits
