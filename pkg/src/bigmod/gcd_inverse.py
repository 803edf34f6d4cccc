"""Extended GCD two ways, and the modular inverse built on it.

`binary_ext_gcd` is the workhorse: a binary extended GCD that uses only
halving, parity tests and subtraction, run over raw limb arrays.
`euclid_ext_gcd` is the classical quotient-based algorithm and serves as
an independent cross-check; the two may return different Bezout
coefficient pairs but must agree on the gcd. `mod_inverse` normalizes
the binary algorithm's coefficient into [1, m-1] and reports non-coprime
inputs as errors rather than answers.
"""

from __future__ import annotations

import dataclasses
from typing import Union

from ._limbs import LIMB_BITS, LIMB_MASK
from .bigint import Natural, SignedInteger

IntLike = Union[int, Natural]

_ONE = Natural(1)


class BothZero(ValueError):
    """Raised when both gcd inputs are zero."""


class ZeroElement(ValueError):
    """Raised when the element to invert is 0 modulo the modulus."""


class NotCoprime(ValueError):
    """No modular inverse exists; carries gcd(element, modulus)."""

    def __init__(self, gcd_value: Natural):
        super().__init__(f"operands are not coprime: gcd = {gcd_value}")
        self.gcd = gcd_value


@dataclasses.dataclass(frozen=True)
class ExtGcdResult:
    """gcd g plus Bezout coefficients: a*x + b*y = g for the inputs (x, y)."""

    g: Natural
    a: SignedInteger
    b: SignedInteger

    def holds_for(self, x: IntLike, y: IntLike) -> bool:
        """True iff the Bezout identity holds against the given inputs."""
        sx = SignedInteger(Natural(x))
        sy = SignedInteger(Natural(y))
        return self.a * sx + self.b * sy == SignedInteger(self.g)


def _scalar_inv_core(p: int, q: int) -> tuple[int, int]:
    # Word-sized fast path; q odd, p > 0. Returns (g, a) with
    # a*p == g (mod q) and 0 <= a < q.
    u, v = p, q
    a, c = 1, 0
    while u:
        while not u & 1:
            u >>= 1
            a = (a + q) >> 1 if a & 1 else a >> 1
        while not v & 1:
            v >>= 1
            c = (c + q) >> 1 if c & 1 else c >> 1
        if u >= v:
            u -= v
            a -= c
            if a < 0:
                a += q
        else:
            v -= u
            c -= a
            if c < 0:
                c += q
    return v, c


def _limb_inv_core(p: tuple, q: tuple) -> tuple[list, list]:
    # General path on padded limb arrays; q odd, p > 0. Maintains the
    # invariants a*p == u and c*p == v (mod q) with a, c kept in [0, q),
    # so the loop body is halving, parity fixes and subtraction only.
    top = LIMB_BITS - 1
    n = max(len(p), len(q)) + 1
    u = list(p) + [0] * (n - len(p))
    v = list(q) + [0] * (n - len(q))
    qz = list(q) + [0] * (n - len(q))
    a = [0] * n
    c = [0] * n
    a[0] = 1
    nu = len(p)
    nv = len(q)
    while True:
        while u[0] & 1 == 0:
            if nu == 1 and u[0] == 0:
                break
            carry = 0
            for i in range(nu - 1, -1, -1):
                w = u[i]
                u[i] = (w >> 1) | carry
                carry = (w & 1) << top
            if nu > 1 and u[nu - 1] == 0:
                nu -= 1
            if a[0] & 1:
                # a = (a + q) >> 1 in one fused pass
                s = a[0] + qz[0]
                carry = s >> LIMB_BITS
                s &= LIMB_MASK
                for i in range(1, n):
                    t = a[i] + qz[i] + carry
                    carry = t >> LIMB_BITS
                    t &= LIMB_MASK
                    a[i - 1] = (s >> 1) | ((t & 1) << top)
                    s = t
                a[n - 1] = (s >> 1) | (carry << top)
            else:
                carry = 0
                for i in range(n - 1, -1, -1):
                    w = a[i]
                    a[i] = (w >> 1) | carry
                    carry = (w & 1) << top
        if nu == 1 and u[0] == 0:
            break
        while v[0] & 1 == 0:
            carry = 0
            for i in range(nv - 1, -1, -1):
                w = v[i]
                v[i] = (w >> 1) | carry
                carry = (w & 1) << top
            if nv > 1 and v[nv - 1] == 0:
                nv -= 1
            if c[0] & 1:
                s = c[0] + qz[0]
                carry = s >> LIMB_BITS
                s &= LIMB_MASK
                for i in range(1, n):
                    t = c[i] + qz[i] + carry
                    carry = t >> LIMB_BITS
                    t &= LIMB_MASK
                    c[i - 1] = (s >> 1) | ((t & 1) << top)
                    s = t
                c[n - 1] = (s >> 1) | (carry << top)
            else:
                carry = 0
                for i in range(n - 1, -1, -1):
                    w = c[i]
                    c[i] = (w >> 1) | carry
                    carry = (w & 1) << top
        if nu > nv:
            u_ge_v = True
        elif nu < nv:
            u_ge_v = False
        else:
            u_ge_v = True
            for i in range(nu - 1, -1, -1):
                if u[i] != v[i]:
                    u_ge_v = u[i] > v[i]
                    break
        if u_ge_v:
            borrow = 0
            for i in range(nu):
                d = u[i] - v[i] - borrow
                if d < 0:
                    d += LIMB_MASK + 1
                    borrow = 1
                else:
                    borrow = 0
                u[i] = d
            while nu > 1 and u[nu - 1] == 0:
                nu -= 1
            borrow = 0
            for i in range(n):
                d = a[i] - c[i] - borrow
                if d < 0:
                    d += LIMB_MASK + 1
                    borrow = 1
                else:
                    borrow = 0
                a[i] = d
            if borrow:
                carry = 0
                for i in range(n):
                    s = a[i] + qz[i] + carry
                    a[i] = s & LIMB_MASK
                    carry = s >> LIMB_BITS
        else:
            borrow = 0
            for i in range(nv):
                d = v[i] - u[i] - borrow
                if d < 0:
                    d += LIMB_MASK + 1
                    borrow = 1
                else:
                    borrow = 0
                v[i] = d
            while nv > 1 and v[nv - 1] == 0:
                nv -= 1
            borrow = 0
            for i in range(n):
                d = c[i] - a[i] - borrow
                if d < 0:
                    d += LIMB_MASK + 1
                    borrow = 1
                else:
                    borrow = 0
                c[i] = d
            if borrow:
                carry = 0
                for i in range(n):
                    s = c[i] + qz[i] + carry
                    c[i] = s & LIMB_MASK
                    carry = s >> LIMB_BITS
    del v[nv:]
    return v, c


def _inv_core(p: Natural, q: Natural) -> tuple[Natural, Natural]:
    """Dispatch the gcd core; q odd, p nonzero. Returns (g, a) with
    a*p == g (mod q) and 0 <= a < q."""
    pl, ql = p.limbs, q.limbs
    if len(pl) <= 1 and len(ql) <= 1:
        g, a = _scalar_inv_core(pl[0], ql[0])
        return Natural(g), Natural(a)
    g, a = _limb_inv_core(pl, ql)
    return Natural.from_limbs(g), Natural.from_limbs(a)


def _exact_signed_quotient(g: Natural, coef: Natural, other: Natural,
                           divisor: Natural) -> SignedInteger:
    # (g - coef*other) / divisor, which divides exactly by construction.
    prod = coef * other
    if prod >= g:
        sign = -1
        num = prod - g
    else:
        sign = 1
        num = g - prod
    quot, rem = num.div_rem(divisor)
    if not rem.is_zero:
        raise AssertionError("coefficient recovery division was not exact")
    if quot.is_zero:
        return SignedInteger(0)
    return SignedInteger.from_sign_magnitude(sign, quot)


def binary_ext_gcd(x: IntLike, y: IntLike) -> ExtGcdResult:
    """Extended GCD by the binary method: halve, fix parity, subtract.

    Shared factors of two are stripped up front and folded back into g;
    the coefficient for the odd side is tracked through the loop and the
    other is recovered from the Bezout identity afterwards.
    """
    x = Natural(x)
    y = Natural(y)
    if x.is_zero and y.is_zero:
        raise BothZero("gcd(0, 0) is undefined")
    if x.is_zero:
        return ExtGcdResult(y, SignedInteger(0), SignedInteger(1))
    if y.is_zero:
        return ExtGcdResult(x, SignedInteger(1), SignedInteger(0))
    shared = min(x.trailing_zero_bits(), y.trailing_zero_bits())
    x2 = x >> shared
    y2 = y >> shared
    if not y2.is_even:
        g, a_mag = _inv_core(x2, y2)
        a = SignedInteger(a_mag)
        b = _exact_signed_quotient(g, a_mag, x2, y2)
    else:
        g, b_mag = _inv_core(y2, x2)
        b = SignedInteger(b_mag)
        a = _exact_signed_quotient(g, b_mag, y2, x2)
    return ExtGcdResult(g << shared, a, b)


def euclid_ext_gcd(x: IntLike, y: IntLike) -> ExtGcdResult:
    """Extended GCD by the classical quotient-remainder recurrence."""
    x = Natural(x)
    y = Natural(y)
    if x.is_zero and y.is_zero:
        raise BothZero("gcd(0, 0) is undefined")
    if x.is_zero:
        return ExtGcdResult(y, SignedInteger(0), SignedInteger(1))
    if y.is_zero:
        return ExtGcdResult(x, SignedInteger(1), SignedInteger(0))
    r0, r1 = x, y
    s0, s1 = SignedInteger(1), SignedInteger(0)
    t0, t1 = SignedInteger(0), SignedInteger(1)
    while not r1.is_zero:
        q, r = r0.div_rem(r1)
        qs = SignedInteger(q)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - qs * s1
        t0, t1 = t1, t0 - qs * t1
    return ExtGcdResult(r0, s0, t0)


def gcd(x: IntLike, y: IntLike) -> Natural:
    """Greatest common divisor by the binary method, no coefficients."""
    x = Natural(x)
    y = Natural(y)
    if x.is_zero and y.is_zero:
        raise BothZero("gcd(0, 0) is undefined")
    if x.is_zero:
        return y
    if y.is_zero:
        return x
    xl, yl = x.limbs, y.limbs
    if len(xl) <= 1 and len(yl) <= 1:
        u, v = xl[0], yl[0]
        shift = 0
        while not (u | v) & 1:
            u >>= 1
            v >>= 1
            shift += 1
        while u:
            while not u & 1:
                u >>= 1
            while not v & 1:
                v >>= 1
            if u >= v:
                u -= v
            else:
                v -= u
        return Natural(v << shift)
    shared = min(x.trailing_zero_bits(), y.trailing_zero_bits())
    u = x >> shared
    v = y >> shared
    while not u.is_zero:
        if u.is_even:
            u = u >> u.trailing_zero_bits()
        if v.is_even:
            v = v >> v.trailing_zero_bits()
        if u >= v:
            u = u - v
        else:
            v = v - u
    return v << shared


def mod_inverse(element: IntLike, modulus: IntLike) -> Natural:
    """The unique d in [1, m-1] with element*d == 1 (mod m).

    The element is reduced into [0, m) first. Raises ZeroElement when it
    reduces to 0, NotCoprime (carrying the gcd) when no inverse exists.
    """
    m = Natural(modulus)
    if m.bit_length < 2:
        raise ValueError("modulus must be >= 2")
    e = Natural(element) % m
    if e.is_zero:
        raise ZeroElement("element is 0 modulo the modulus")
    if e == _ONE:
        return _ONE
    if not m.is_even:
        g, a = _inv_core(e, m)
        if g != _ONE:
            raise NotCoprime(g)
        return a
    if e.is_even:
        raise NotCoprime(gcd(e, m))
    # Even modulus, odd element: run the core with the roles swapped and
    # recover the element's coefficient, which lands in (-m, 0).
    g, c = _inv_core(m, e)
    if g != _ONE:
        raise NotCoprime(g)
    b = _exact_signed_quotient(g, c, m, e)
    if b.sign >= 0:
        raise AssertionError("recovered coefficient out of expected range")
    return m - b.magnitude
