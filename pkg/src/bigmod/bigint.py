"""Arbitrary-precision naturals and sign-magnitude integers.

`Natural` is an unsigned magnitude backed by 64-bit limbs; `SignedInteger`
pairs a Natural magnitude with a sign in {-1, 0, +1}. Values are immutable
and normalized on construction, so equality is representational: one value,
one limb sequence, and zero is always the empty limb tuple with sign 0.
"""

from __future__ import annotations

import enum
from typing import Iterable, NamedTuple, Union

from . import _limbs
from ._limbs import LIMB_BITS, LIMB_MASK


class DivisionByZero(ZeroDivisionError):
    """Raised by div_rem when the divisor is zero."""


class Ordering(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


_ORDERINGS = {-1: Ordering.LESS, 0: Ordering.EQUAL, 1: Ordering.GREATER}


class IntegerStructure(NamedTuple):
    """Shape summary of an integer: length, parity, zeroness, sign."""

    bit_length: int
    is_even: bool
    is_zero: bool
    sign: int


class Natural:
    """Unsigned arbitrary-precision integer.

    Construct from a nonnegative int, another Natural, or via
    `from_limbs`. Supports +, - (raising on underflow), *, divmod, //,
    %, <<, >>, comparisons, hashing and int().
    """

    __slots__ = ("_limbs",)

    def __init__(self, value: Union[int, "Natural"] = 0):
        if isinstance(value, Natural):
            self._limbs = value._limbs
        elif isinstance(value, int):
            if value < 0:
                raise ValueError("Natural cannot be negative")
            self._limbs = tuple(_limbs.from_int(value))
        else:
            raise TypeError(f"cannot build Natural from {type(value).__name__}")

    @classmethod
    def _raw(cls, limbs: tuple) -> "Natural":
        # trusted constructor: limbs already normalized
        out = object.__new__(cls)
        out._limbs = limbs
        return out

    @classmethod
    def from_limbs(cls, limbs: Iterable[int]) -> "Natural":
        """Build from an LSB-first limb sequence, normalizing trailing zeros."""
        seq = list(limbs)
        for w in seq:
            if not isinstance(w, int) or not 0 <= w <= LIMB_MASK:
                raise ValueError(f"limb out of range: {w!r}")
        return cls._raw(tuple(_limbs.normalize(seq)))

    @property
    def limbs(self) -> tuple:
        """LSB-first 64-bit limbs; empty tuple for zero."""
        return self._limbs

    @property
    def bit_length(self) -> int:
        return _limbs.bit_length(self._limbs)

    @property
    def is_zero(self) -> bool:
        return not self._limbs

    @property
    def is_even(self) -> bool:
        return not self._limbs or (self._limbs[0] & 1) == 0

    def compare(self, other: "Natural") -> Ordering:
        return _ORDERINGS[_limbs.compare(self._limbs, other._limbs)]

    def div_rem(self, other: "Natural") -> tuple["Natural", "Natural"]:
        """(q, r) with self = q*other + r and 0 <= r < other."""
        if other.is_zero:
            raise DivisionByZero("div_rem by zero")
        q, r = _limbs.div_rem(self._limbs, other._limbs)
        return Natural._raw(tuple(q)), Natural._raw(tuple(r))

    def shift(self, bits: int, direction: str = "left") -> "Natural":
        """Shift by `bits`: left multiplies by 2**bits, right floors."""
        if bits < 0:
            raise ValueError("shift count cannot be negative")
        if direction == "left":
            return Natural._raw(tuple(_limbs.shl(self._limbs, bits)))
        if direction == "right":
            return Natural._raw(tuple(_limbs.shr(self._limbs, bits)))
        raise ValueError(f"direction must be 'left' or 'right', got {direction!r}")

    def trailing_zero_bits(self) -> int:
        return _limbs.trailing_zeros(self._limbs)

    # -- operators ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Natural):
            return NotImplemented
        return Natural._raw(tuple(_limbs.add(self._limbs, other._limbs)))

    def __sub__(self, other):
        if not isinstance(other, Natural):
            return NotImplemented
        if _limbs.compare(self._limbs, other._limbs) < 0:
            raise ValueError("Natural subtraction underflow")
        return Natural._raw(tuple(_limbs.sub(self._limbs, other._limbs)))

    def __mul__(self, other):
        if not isinstance(other, Natural):
            return NotImplemented
        return Natural._raw(tuple(_limbs.mul(self._limbs, other._limbs)))

    def __divmod__(self, other):
        if not isinstance(other, Natural):
            return NotImplemented
        return self.div_rem(other)

    def __floordiv__(self, other):
        if not isinstance(other, Natural):
            return NotImplemented
        return self.div_rem(other)[0]

    def __mod__(self, other):
        if not isinstance(other, Natural):
            return NotImplemented
        return self.div_rem(other)[1]

    def __lshift__(self, bits: int):
        return self.shift(bits, "left")

    def __rshift__(self, bits: int):
        return self.shift(bits, "right")

    def __eq__(self, other):
        if not isinstance(other, Natural):
            return NotImplemented
        return self._limbs == other._limbs

    def __lt__(self, other):
        if not isinstance(other, Natural):
            return NotImplemented
        return _limbs.compare(self._limbs, other._limbs) < 0

    def __le__(self, other):
        if not isinstance(other, Natural):
            return NotImplemented
        return _limbs.compare(self._limbs, other._limbs) <= 0

    def __gt__(self, other):
        if not isinstance(other, Natural):
            return NotImplemented
        return _limbs.compare(self._limbs, other._limbs) > 0

    def __ge__(self, other):
        if not isinstance(other, Natural):
            return NotImplemented
        return _limbs.compare(self._limbs, other._limbs) >= 0

    def __hash__(self):
        return hash(self._limbs)

    def __bool__(self):
        return bool(self._limbs)

    def __int__(self):
        return _limbs.to_int(list(self._limbs))

    def __str__(self):
        return str(int(self))

    def __repr__(self):
        return f"Natural({int(self)})"


class SignedInteger:
    """Sign-magnitude integer: sign in {-1, 0, +1} plus a Natural magnitude."""

    __slots__ = ("_sign", "_magnitude")

    def __init__(self, value: Union[int, Natural, "SignedInteger"] = 0):
        if isinstance(value, SignedInteger):
            self._sign = value._sign
            self._magnitude = value._magnitude
        elif isinstance(value, Natural):
            self._sign = 0 if value.is_zero else 1
            self._magnitude = value
        elif isinstance(value, int):
            self._sign = 0 if value == 0 else (1 if value > 0 else -1)
            self._magnitude = Natural(abs(value))
        else:
            raise TypeError(f"cannot build SignedInteger from {type(value).__name__}")

    @classmethod
    def _raw(cls, sign: int, magnitude: Natural) -> "SignedInteger":
        out = object.__new__(cls)
        out._sign = sign
        out._magnitude = magnitude
        return out

    @classmethod
    def from_sign_magnitude(cls, sign: int, magnitude: Natural) -> "SignedInteger":
        if sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or 1, got {sign!r}")
        if (sign == 0) != magnitude.is_zero:
            raise ValueError("sign is 0 iff magnitude is 0")
        return cls._raw(sign, magnitude)

    @property
    def sign(self) -> int:
        return self._sign

    @property
    def magnitude(self) -> Natural:
        return self._magnitude

    @property
    def is_zero(self) -> bool:
        return self._sign == 0

    def add(self, other: "SignedInteger") -> "SignedInteger":
        sa, sb = self._sign, other._sign
        if sa == 0:
            return other
        if sb == 0:
            return self
        ma, mb = self._magnitude, other._magnitude
        if sa == sb:
            return SignedInteger._raw(sa, ma + mb)
        c = _limbs.compare(ma._limbs, mb._limbs)
        if c == 0:
            return _ZERO
        if c > 0:
            return SignedInteger._raw(sa, ma - mb)
        return SignedInteger._raw(sb, mb - ma)

    def subtract(self, other: "SignedInteger") -> "SignedInteger":
        return self.add(other.negate())

    def multiply(self, other: "SignedInteger") -> "SignedInteger":
        sign = self._sign * other._sign
        if sign == 0:
            return _ZERO
        return SignedInteger._raw(sign, self._magnitude * other._magnitude)

    def negate(self) -> "SignedInteger":
        if self._sign == 0:
            return self
        return SignedInteger._raw(-self._sign, self._magnitude)

    def compare(self, other: "SignedInteger") -> Ordering:
        if self._sign != other._sign:
            return Ordering.LESS if self._sign < other._sign else Ordering.GREATER
        c = _limbs.compare(self._magnitude._limbs, other._magnitude._limbs)
        if self._sign < 0:
            c = -c
        return _ORDERINGS[c]

    def structure(self) -> IntegerStructure:
        """(bit_length, is_even, is_zero, sign) of this value."""
        return IntegerStructure(
            bit_length=self._magnitude.bit_length,
            is_even=self._magnitude.is_even,
            is_zero=self._sign == 0,
            sign=self._sign,
        )

    # -- operators ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, SignedInteger):
            return NotImplemented
        return self.add(other)

    def __sub__(self, other):
        if not isinstance(other, SignedInteger):
            return NotImplemented
        return self.subtract(other)

    def __mul__(self, other):
        if not isinstance(other, SignedInteger):
            return NotImplemented
        return self.multiply(other)

    def __neg__(self):
        return self.negate()

    def __eq__(self, other):
        if not isinstance(other, SignedInteger):
            return NotImplemented
        return self._sign == other._sign and self._magnitude == other._magnitude

    def __lt__(self, other):
        if not isinstance(other, SignedInteger):
            return NotImplemented
        return self.compare(other) is Ordering.LESS

    def __le__(self, other):
        if not isinstance(other, SignedInteger):
            return NotImplemented
        return self.compare(other) is not Ordering.GREATER

    def __gt__(self, other):
        if not isinstance(other, SignedInteger):
            return NotImplemented
        return self.compare(other) is Ordering.GREATER

    def __ge__(self, other):
        if not isinstance(other, SignedInteger):
            return NotImplemented
        return self.compare(other) is not Ordering.LESS

    def __hash__(self):
        return hash((self._sign, self._magnitude._limbs))

    def __bool__(self):
        return self._sign != 0

    def __int__(self):
        return self._sign * int(self._magnitude)

    def __str__(self):
        return str(int(self))

    def __repr__(self):
        return f"SignedInteger({int(self)})"


_ZERO = SignedInteger(0)
