"""Limb-level kernels for multiprecision magnitudes.

A magnitude is a list of 64-bit limbs, least-significant limb first, with
no trailing zero limbs; the empty list is the canonical zero. Every
function here returns normalized output and never mutates its inputs.

These kernels are deliberately plain loops over limb lists: they are the
schoolbook algorithms (carry-ripple add/sub, O(n*m) multiply, Knuth
algorithm D division) that the higher-level types build on.
"""

from __future__ import annotations

LIMB_BITS = 64
LIMB_BASE = 1 << LIMB_BITS
LIMB_MASK = LIMB_BASE - 1

Limbs = list  # list[int], limbs in [0, LIMB_BASE), LSB first, normalized


def normalize(limbs: Limbs) -> Limbs:
    """Strip trailing (most-significant) zero limbs in place."""
    while limbs and limbs[-1] == 0:
        limbs.pop()
    return limbs


def from_int(value: int) -> Limbs:
    if value < 0:
        raise ValueError("magnitude cannot be negative")
    out = []
    while value:
        out.append(value & LIMB_MASK)
        value >>= LIMB_BITS
    return out


def to_int(a: Limbs) -> int:
    value = 0
    for limb in reversed(a):
        value = (value << LIMB_BITS) | limb
    return value


def is_valid(a: Limbs) -> bool:
    """Normalization predicate: limbs in range and no trailing zeros."""
    if any(not (0 <= w < LIMB_BASE) for w in a):
        return False
    return not a or a[-1] != 0


def compare(a: Limbs, b: Limbs) -> int:
    """-1, 0 or 1 as a <, ==, > b."""
    la, lb = len(a), len(b)
    if la != lb:
        return 1 if la > lb else -1
    for i in range(la - 1, -1, -1):
        if a[i] != b[i]:
            return 1 if a[i] > b[i] else -1
    return 0


def add(a: Limbs, b: Limbs) -> Limbs:
    if len(a) < len(b):
        a, b = b, a
    out = []
    carry = 0
    lb = len(b)
    for i in range(len(a)):
        s = a[i] + (b[i] if i < lb else 0) + carry
        out.append(s & LIMB_MASK)
        carry = s >> LIMB_BITS
    if carry:
        out.append(carry)
    return out


def sub(a: Limbs, b: Limbs) -> Limbs:
    """a - b; requires a >= b."""
    out = []
    borrow = 0
    lb = len(b)
    for i in range(len(a)):
        d = a[i] - (b[i] if i < lb else 0) - borrow
        if d < 0:
            d += LIMB_BASE
            borrow = 1
        else:
            borrow = 0
        out.append(d)
    if borrow:
        raise ValueError("sub underflow: a < b")
    return normalize(out)


def mul(a: Limbs, b: Limbs) -> Limbs:
    """Schoolbook product, one partial row per limb of a."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b))
    lb = len(b)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        carry = 0
        k = i
        for j in range(lb):
            t = ai * b[j] + out[k] + carry
            out[k] = t & LIMB_MASK
            carry = t >> LIMB_BITS
            k += 1
        out[k] += carry
    return normalize(out)


def shl(a: Limbs, bits: int) -> Limbs:
    if not a or bits == 0:
        return list(a)
    limb_shift, bit_shift = divmod(bits, LIMB_BITS)
    out = [0] * limb_shift
    if bit_shift == 0:
        out.extend(a)
        return out
    carry = 0
    down = LIMB_BITS - bit_shift
    for w in a:
        out.append(((w << bit_shift) | carry) & LIMB_MASK)
        carry = w >> down
    if carry:
        out.append(carry)
    return out


def shr(a: Limbs, bits: int) -> Limbs:
    if not a or bits == 0:
        return list(a)
    limb_shift, bit_shift = divmod(bits, LIMB_BITS)
    if limb_shift >= len(a):
        return []
    src = a[limb_shift:]
    if bit_shift == 0:
        return src
    up = LIMB_BITS - bit_shift
    n = len(src)
    out = []
    for i in range(n - 1):
        out.append((src[i] >> bit_shift) | ((src[i + 1] << up) & LIMB_MASK))
    out.append(src[n - 1] >> bit_shift)
    return normalize(out)


def bit_length(a: Limbs) -> int:
    if not a:
        return 0
    return (len(a) - 1) * LIMB_BITS + a[-1].bit_length()


def trailing_zeros(a: Limbs) -> int:
    """Number of trailing zero bits; requires a nonzero."""
    if not a:
        raise ValueError("trailing_zeros of zero")
    i = 0
    while a[i] == 0:
        i += 1
    w = a[i]
    return i * LIMB_BITS + ((w & -w).bit_length() - 1)


def div_rem(a: Limbs, b: Limbs) -> tuple[Limbs, Limbs]:
    """Quotient and remainder of a / b; requires b nonzero.

    Single-limb divisors take a straight-line short division; longer
    divisors go through Knuth algorithm D with the usual top-limb
    normalization so the trial quotient is off by at most two.
    """
    if not b:
        raise ZeroDivisionError("division by zero magnitude")
    if compare(a, b) < 0:
        return [], list(a)
    if len(b) == 1:
        d = b[0]
        q = [0] * len(a)
        rem = 0
        for i in range(len(a) - 1, -1, -1):
            q[i], rem = divmod((rem << LIMB_BITS) | a[i], d)
        return normalize(q), ([rem] if rem else [])

    shift = LIMB_BITS - b[-1].bit_length()
    an = shl(a, shift)
    bn = shl(b, shift)
    n = len(bn)
    m = len(an) - n
    an.append(0)
    q = [0] * (m + 1)
    btop = bn[-1]
    bsec = bn[-2]
    for j in range(m, -1, -1):
        top2 = (an[j + n] << LIMB_BITS) | an[j + n - 1]
        qhat = top2 // btop
        rhat = top2 - qhat * btop
        if qhat > LIMB_MASK:
            rhat += (qhat - LIMB_MASK) * btop
            qhat = LIMB_MASK
        third = an[j + n - 2]
        while rhat <= LIMB_MASK and qhat * bsec > ((rhat << LIMB_BITS) | third):
            qhat -= 1
            rhat += btop
        if qhat == 0:
            continue
        # multiply-and-subtract the trial row
        borrow = 0
        carry = 0
        for i in range(n):
            p = qhat * bn[i] + carry
            carry = p >> LIMB_BITS
            d = an[i + j] - (p & LIMB_MASK) - borrow
            if d < 0:
                d += LIMB_BASE
                borrow = 1
            else:
                borrow = 0
            an[i + j] = d
        d = an[j + n] - carry - borrow
        if d < 0:
            # trial quotient one too large: add one row back
            qhat -= 1
            carry = 0
            for i in range(n):
                s = an[i + j] + bn[i] + carry
                an[i + j] = s & LIMB_MASK
                carry = s >> LIMB_BITS
            d += carry
        an[j + n] = d & LIMB_MASK
        q[j] = qhat
    return normalize(q), shr(normalize(an[:n]), shift)
