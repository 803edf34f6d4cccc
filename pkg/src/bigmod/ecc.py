"""Affine elliptic-curve arithmetic over a prime field.

Curves are short Weierstrass, y^2 = x^3 + a*x + b over F_p with p > 3
prime. Points are affine coordinates plus an explicit point at infinity,
and the group law is the chord-and-tangent rule. Every slope denominator
is inverted through `gcd_inverse.mod_inverse` — the whole module exists
to exercise that operation, so no inversion ever goes through Fermat
exponentiation.

Points are validated against the curve when built through
`CurveParams.point`; the arithmetic assumes on-curve inputs.
"""

from __future__ import annotations

import dataclasses
from typing import Optional, Union

from ._limbs import LIMB_BITS
from .bigint import Natural
from .gcd_inverse import mod_inverse
from .rsa import is_probable_prime

IntLike = Union[int, Natural]

_N0 = Natural(0)
_N1 = Natural(1)
_N2 = Natural(2)
_N3 = Natural(3)

DEFAULT_ENUMERATION_BOUND = 10_000


class InvalidCurve(ValueError):
    """Curve parameters rejected (p not an odd prime > 3, or singular)."""


class NotOnCurve(ValueError):
    """Affine coordinates do not satisfy the curve equation."""


class FieldTooLarge(ValueError):
    """Point enumeration refused: p exceeds the configured bound."""


@dataclasses.dataclass(frozen=True)
class CurvePoint:
    """Affine point (x, y), or the point at infinity when both are None."""

    x: Optional[Natural]
    y: Optional[Natural]

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __repr__(self):
        if self.is_infinity:
            return "CurvePoint(infinity)"
        return f"CurvePoint({self.x}, {self.y})"


INFINITY = CurvePoint(None, None)


@dataclasses.dataclass(frozen=True, init=False)
class CurveParams:
    """y^2 = x^3 + a*x + b over F_p; checked nonsingular at construction."""

    p: Natural
    a: Natural
    b: Natural

    def __init__(self, p: IntLike, a: IntLike, b: IntLike,
                 primality_rounds: int = 40):
        p = Natural(p)
        if p <= _N3:
            raise InvalidCurve("field characteristic must exceed 3")
        if not is_probable_prime(p, rounds=primality_rounds):
            raise InvalidCurve("field characteristic must be prime")
        a = Natural(a) % p
        b = Natural(b) % p
        # nonsingular: 4a^3 + 27b^2 != 0 (mod p)
        disc = (Natural(4) * a * a * a + Natural(27) * b * b) % p
        if disc.is_zero:
            raise InvalidCurve("singular curve: 4a^3 + 27b^2 = 0 (mod p)")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def point(self, x: IntLike, y: IntLike) -> CurvePoint:
        """Validated affine point; raises NotOnCurve."""
        pt = CurvePoint(Natural(x) % self.p, Natural(y) % self.p)
        if not is_on_curve(self, pt):
            raise NotOnCurve(f"({pt.x}, {pt.y}) does not satisfy the curve equation")
        return pt

    def _sub(self, u: Natural, v: Natural) -> Natural:
        # (u - v) mod p for reduced operands
        if u >= v:
            return u - v
        return u + self.p - v

    def _rhs(self, x: Natural) -> Natural:
        return (x * x * x + self.a * x + self.b) % self.p


def is_on_curve(curve: CurveParams, pt: CurvePoint) -> bool:
    """True for infinity or coordinates satisfying y^2 = x^3 + ax + b."""
    if pt.is_infinity:
        return True
    return (pt.y * pt.y) % curve.p == curve._rhs(pt.x)


def negate(curve: CurveParams, pt: CurvePoint) -> CurvePoint:
    if pt.is_infinity:
        return INFINITY
    if pt.y.is_zero:
        return pt
    return CurvePoint(pt.x, curve.p - pt.y)


def add_points(curve: CurveParams, pt1: CurvePoint, pt2: CurvePoint) -> CurvePoint:
    """Full group law: identity and inverse cases, chord rule for
    distinct x, tangent rule (via double_point) for equal points."""
    if pt1.is_infinity:
        return pt2
    if pt2.is_infinity:
        return pt1
    p = curve.p
    if pt1.x == pt2.x:
        if pt1.y == pt2.y:
            return double_point(curve, pt1)
        return INFINITY  # opposite y values: pt2 = -pt1
    # chord slope (y2 - y1) / (x2 - x1)
    num = curve._sub(pt2.y, pt1.y)
    den = curve._sub(pt2.x, pt1.x)
    slope = (num * mod_inverse(den, p)) % p
    x3 = curve._sub(curve._sub((slope * slope) % p, pt1.x), pt2.x)
    y3 = curve._sub((slope * curve._sub(pt1.x, x3)) % p, pt1.y)
    return CurvePoint(x3, y3)


def double_point(curve: CurveParams, pt: CurvePoint) -> CurvePoint:
    """Tangent rule: slope (3x^2 + a) / (2y); 2-torsion points go to
    infinity."""
    if pt.is_infinity or pt.y.is_zero:
        return INFINITY
    p = curve.p
    num = (_N3 * pt.x * pt.x + curve.a) % p
    den = (_N2 * pt.y) % p
    slope = (num * mod_inverse(den, p)) % p
    x3 = curve._sub((slope * slope) % p, (_N2 * pt.x) % p)
    y3 = curve._sub((slope * curve._sub(pt.x, x3)) % p, pt.y)
    return CurvePoint(x3, y3)


def scalar_mul(curve: CurveParams, k: IntLike, pt: CurvePoint) -> CurvePoint:
    """k*pt by left-to-right double-and-add; 0*pt is infinity."""
    k = Natural(k)
    limbs = k.limbs
    result = INFINITY
    for i in range(k.bit_length - 1, -1, -1):
        result = double_point(curve, result)
        word, offset = divmod(i, LIMB_BITS)
        if (limbs[word] >> offset) & 1:
            result = add_points(curve, result, pt)
    return result


def enumerate_points(curve: CurveParams,
                     bound: int = DEFAULT_ENUMERATION_BOUND) -> list:
    """Every point on the curve, infinity first then sorted by (x, y).

    Desk-scale oracle: refuses fields with p above `bound`. Walks x once,
    looking up square roots of the right-hand side in a precomputed
    residue table.
    """
    p = curve.p
    if p > Natural(bound):
        raise FieldTooLarge(f"point enumeration is limited to p <= {bound}")
    p_int = int(p)
    roots_by_square: dict = {}
    y = _N0
    for _ in range(p_int):
        roots_by_square.setdefault((y * y) % p, []).append(y)
        y = y + _N1
    points = [INFINITY]
    x = _N0
    for _ in range(p_int):
        for root in roots_by_square.get(curve._rhs(x), ()):
            points.append(CurvePoint(x, root))
        x = x + _N1
    points.sort(key=lambda pt: (0,) if pt.is_infinity else (1, pt.x, pt.y))
    return points
