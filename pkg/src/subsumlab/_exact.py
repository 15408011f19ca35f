"""Exact helpers for quantities of the form ``x * sqrt(n)`` and for
comparisons of products of integer powers with real exponents.

Everything here works on :class:`fractions.Fraction` and Python integers so
that boundary cases (perfect squares, ties) come out exactly.
"""

from __future__ import annotations

import decimal
import math
from fractions import Fraction
from numbers import Rational

__all__ = [
    "as_fraction",
    "floor_mul_sqrt",
    "ceil_mul_sqrt",
    "sign_sqrt1",
    "sign_sqrt2",
    "pow_le",
]

Real = int | float | Fraction


def as_fraction(x: Real) -> Fraction:
    """Convert to a Fraction, reading floats by their shortest decimal repr.

    ``as_fraction(0.1) == Fraction(1, 10)``, not the binary expansion, so that
    user-typed constants such as ``1.07`` behave as the decimals they name.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(x, int | Rational):
        return Fraction(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError(f"non-finite value {x!r}")
        return Fraction(repr(x))
    raise TypeError(f"cannot convert {type(x).__name__} to Fraction")


def _sign(x: Fraction | int) -> int:
    return (x > 0) - (x < 0)


def floor_mul_sqrt(x: Real, n: int) -> int:
    """Return ``floor(x * sqrt(n))`` exactly."""
    if n < 0:
        raise ValueError("n must be non-negative")
    x = as_fraction(x)
    if x < 0:
        return -ceil_mul_sqrt(-x, n)
    sq = x * x * n
    # floor(sqrt(y)) == isqrt(floor(y)) for y >= 0
    return math.isqrt(sq.numerator // sq.denominator)


def ceil_mul_sqrt(x: Real, n: int) -> int:
    """Return ``ceil(x * sqrt(n))`` exactly."""
    x = as_fraction(x)
    if x < 0:
        return -floor_mul_sqrt(-x, n)
    f = floor_mul_sqrt(x, n)
    return f if f * f == x * x * n else f + 1


def sign_sqrt1(r: Real, s: Real, n: int) -> int:
    """Sign of ``r + s*sqrt(n)``."""
    r, s = as_fraction(r), as_fraction(s)
    sr, ss = _sign(r), _sign(s) if n else 0
    if ss == 0:
        return sr
    if sr == 0 or sr == ss:
        return ss
    # opposite signs: compare magnitudes by squaring
    return sr * _sign(r * r - s * s * n)


def sign_sqrt2(r: Real, s1: Real, n1: int, s2: Real, n2: int) -> int:
    """Sign of ``r + s1*sqrt(n1) + s2*sqrt(n2)``."""
    r, s1, s2 = as_fraction(r), as_fraction(s1), as_fraction(s2)
    sx = sign_sqrt1(r, s1, n1)
    sy = _sign(s2) if n2 else 0
    if sy == 0:
        return sx
    if sx == 0 or sx == sy:
        return sy
    # x = r + s1*sqrt(n1), y = s2*sqrt(n2); sign(x + y) = sx * sign(x^2 - y^2)
    diff = sign_sqrt1(r * r + s1 * s1 * n1 - s2 * s2 * n2, 2 * r * s1, n1)
    return sx * diff


_GUARD = 1e-12


def _ln_decimal(v: int, ctx: decimal.Context) -> decimal.Decimal:
    return ctx.ln(decimal.Decimal(v))


def pow_le(value: int, base: int, int_exp: int, real_base: int, real_exp: Real) -> bool:
    """Exactly decide ``value <= base**int_exp * real_base**real_exp``.

    All of ``value``, ``base``, ``real_base`` are positive integers except that
    ``value == 0`` is accepted (always true). Double precision decides unless
    the two log sides are within a relative band of 1e-12, in which case the
    comparison is redone in exact integer arithmetic (small exponent
    denominators) or high-precision decimal logarithms.
    """
    if value == 0:
        return True
    if value < 0 or base < 1 or real_base < 1 or int_exp < 0:
        raise ValueError("pow_le expects non-negative integers and positive bases")
    lhs = math.log(value)
    rhs = int_exp * math.log(base) + float(real_exp) * math.log(real_base)
    if abs(lhs - rhs) > _GUARD * max(1.0, abs(lhs), abs(rhs)):
        return lhs <= rhs

    e = Fraction(real_exp)
    if e.denominator <= 64 and abs(e.numerator) <= 4096:
        num, den = e.numerator, e.denominator
        left = value**den * (real_base ** -num if num < 0 else 1)
        right = base ** (int_exp * den) * (real_base**num if num > 0 else 1)
        return left <= right

    for prec in (60, 120, 240, 480):
        ctx = decimal.Context(prec=prec)
        d_lhs = _ln_decimal(value, ctx)
        d_rhs = ctx.add(
            ctx.multiply(decimal.Decimal(int_exp), _ln_decimal(base, ctx)),
            ctx.multiply(ctx.divide(decimal.Decimal(e.numerator), decimal.Decimal(e.denominator)),
                         _ln_decimal(real_base, ctx)),
        )
        gap = ctx.subtract(d_lhs, d_rhs)
        if abs(gap) > decimal.Decimal(10) ** (-(prec - 15)):
            return gap < 0
    # a tie would need a small-denominator exponent, handled above
    return True
