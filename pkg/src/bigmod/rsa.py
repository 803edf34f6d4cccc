"""RSA key generation and raw (unpadded) sign/verify.

Key generation follows the classic recipe: draw two distinct random
primes of half the modulus size, form n = p*q and phi = (p-1)(q-1),
pick a public exponent coprime to phi, and obtain the private exponent
as its modular inverse. `sign_raw`/`verify_raw` are textbook modular
exponentiations that exist to demonstrate the key relation end to end;
they are not a padded signature scheme.

Randomness always flows through an explicit `random.Random` stream (or a
seed for one), so every randomized operation is reproducible from its
seed. A stream must not be shared across threads concurrently.
"""

from __future__ import annotations

import dataclasses
import random
from typing import Optional, Union

from ._limbs import LIMB_BITS
from .bigint import Natural
from .gcd_inverse import NotCoprime, gcd, mod_inverse

IntLike = Union[int, Natural]
RngLike = Union[random.Random, int, None]

_N1 = Natural(1)
_N2 = Natural(2)

TRIAL_DIVISION_BOUND = 2000
DEFAULT_ROUNDS = 40


class BadModulus(ValueError):
    """mod_exp modulus was smaller than 2."""


class BadPublicExponent(ValueError):
    """Public exponent rejected: even, too small, or not below phi."""


class MessageTooLarge(ValueError):
    """Raw RSA message must be smaller than the modulus."""


class ExhaustedCandidates(RuntimeError):
    """Candidate search gave up; bad rng or absurd parameters."""


class KeyInvariantError(ValueError):
    """An RsaKeyPair invariant does not hold; `which` names it."""

    def __init__(self, which: str):
        super().__init__(f"key invariant violated: {which}")
        self.which = which


def _coerce_rng(rng: RngLike) -> random.Random:
    if rng is None:
        return random.Random()
    if isinstance(rng, random.Random):
        return rng
    return random.Random(rng)


def _sieve(limit: int) -> tuple:
    flags = bytearray([1]) * limit
    flags[0:2] = b"\x00\x00"
    for i in range(2, int(limit ** 0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return tuple(i for i in range(limit) if flags[i])

_SMALL_PRIMES = _sieve(TRIAL_DIVISION_BOUND)
_SMALL_PRIMES_NAT = tuple(Natural(p) for p in _SMALL_PRIMES)
_SMALL_SQUARES_NAT = tuple(Natural(p * p) for p in _SMALL_PRIMES)


def mod_exp(base: IntLike, exponent: IntLike, modulus: IntLike) -> Natural:
    """base**exponent mod modulus by square-and-multiply."""
    modulus = Natural(modulus)
    if modulus.bit_length < 2:
        raise BadModulus("modulus must be >= 2")
    result = _N1
    exponent = Natural(exponent)
    if exponent.is_zero:
        return result
    power = Natural(base) % modulus
    nbits = exponent.bit_length
    seen = 0
    for limb in exponent.limbs:
        for i in range(LIMB_BITS):
            if limb >> i & 1:
                result = (result * power) % modulus
            seen += 1
            if seen >= nbits:
                return result
            power = (power * power) % modulus
    return result


def is_probable_prime(n: IntLike, rounds: int = DEFAULT_ROUNDS,
                      rng: RngLike = None) -> bool:
    """Miller-Rabin preceded by trial division.

    False means certainly composite. True means prime, or composite with
    probability at most 4**-rounds; values with no prime factor above the
    trial-division bound are decided exactly.
    """
    if rounds < 1:
        raise ValueError("rounds must be >= 1")
    n = Natural(n)
    if n < _N2:
        return False
    for p, p2 in zip(_SMALL_PRIMES_NAT, _SMALL_SQUARES_NAT):
        if p2 > n:
            return True
        if (n % p).is_zero:
            return n == p
    return _miller_rabin(n, rounds, _coerce_rng(rng))


def _miller_rabin(n: Natural, rounds: int, rng: random.Random) -> bool:
    # n odd, larger than the trial-division primes
    n_minus_1 = n - _N1
    n_minus_3 = n_minus_1 - _N2
    s = n_minus_1.trailing_zero_bits()
    d = n_minus_1 >> s
    width = n.bit_length + 64
    for _ in range(rounds):
        draw = Natural(rng.getrandbits(width))
        a = (draw % n_minus_3) + _N2  # witness in [2, n-2]
        x = mod_exp(a, d, n)
        if x == _N1 or x == n_minus_1:
            continue
        for _ in range(s - 1):
            x = (x * x) % n
            if x == n_minus_1:
                break
        else:
            return False
    return True


def generate_prime(bits: int, rng: RngLike = None, rounds: int = DEFAULT_ROUNDS,
                   max_attempts: Optional[int] = None) -> Natural:
    """Random probable prime with exactly `bits` bits (top bit set, odd).

    Candidates are drawn uniformly, then stepped by 2 a bounded number of
    times before redrawing. Raises ExhaustedCandidates after
    `max_attempts` primality tests (default 64*bits).
    """
    if bits < 4:
        raise ValueError("prime size must be at least 4 bits")
    rng = _coerce_rng(rng)
    if max_attempts is None:
        max_attempts = 64 * bits
    attempts = 0
    while True:
        candidate = Natural(rng.getrandbits(bits) | (1 << (bits - 1)) | 1)
        for _ in range(128):
            if candidate.bit_length > bits:
                break
            if attempts >= max_attempts:
                raise ExhaustedCandidates(
                    f"no {bits}-bit prime found in {max_attempts} attempts")
            attempts += 1
            if is_probable_prime(candidate, rounds, rng):
                return candidate
            candidate = candidate + _N2


@dataclasses.dataclass(frozen=True)
class RsaKeyPair:
    """Key material (p, q, n, phi, e, d); public part is (n, e)."""

    p: Natural
    q: Natural
    n: Natural
    phi: Natural
    e: Natural
    d: Natural

    def validate(self, rounds: int = DEFAULT_ROUNDS, rng: RngLike = None,
                 check_primality: bool = True) -> None:
        """Raise KeyInvariantError on the first violated invariant."""
        if self.p == self.q:
            raise KeyInvariantError("p != q")
        if self.n != self.p * self.q:
            raise KeyInvariantError("n = p*q")
        if self.p < _N2 or self.q < _N2 or self.phi != (self.p - _N1) * (self.q - _N1):
            raise KeyInvariantError("phi = (p-1)*(q-1)")
        if not (_N1 < self.e and self.e < self.phi):
            raise KeyInvariantError("1 < e < phi")
        if not (_N1 < self.d and self.d < self.phi):
            raise KeyInvariantError("1 < d < phi")
        if gcd(self.e, self.phi) != _N1:
            raise KeyInvariantError("gcd(e, phi) = 1")
        if (self.e * self.d) % self.phi != _N1:
            raise KeyInvariantError("e*d = 1 (mod phi)")
        if check_primality:
            rng = _coerce_rng(rng)
            if not is_probable_prime(self.p, rounds, rng):
                raise KeyInvariantError("p is prime")
            if not is_probable_prime(self.q, rounds, rng):
                raise KeyInvariantError("q is prime")


def keypair_from_primes(p: IntLike, q: IntLike, e: IntLike,
                        rounds: int = DEFAULT_ROUNDS, rng: RngLike = None,
                        check_primality: bool = True) -> RsaKeyPair:
    """Assemble and fully check a keypair from given primes and exponent.

    Raises BadPublicExponent, NotCoprime (e shares a factor with phi) or
    KeyInvariantError as appropriate.
    """
    p = Natural(p)
    q = Natural(q)
    e = Natural(e)
    _check_public_exponent(e)
    if p < _N2 or q < _N2:
        raise KeyInvariantError("p and q are primes >= 2")
    n = p * q
    phi = (p - _N1) * (q - _N1)
    if not e < phi:
        raise KeyInvariantError("1 < e < phi")
    d = mod_inverse(e, phi)
    if not _N1 < d:
        raise KeyInvariantError("1 < d < phi")
    pair = RsaKeyPair(p=p, q=q, n=n, phi=phi, e=e, d=d)
    pair.validate(rounds=rounds, rng=rng, check_primality=check_primality)
    return pair


def _check_public_exponent(e: Natural) -> None:
    if e.is_even or e < Natural(3):
        raise BadPublicExponent("public exponent must be odd and >= 3")


def keygen(bits: int, e: Optional[IntLike] = 65537, rng: RngLike = None,
           rounds: int = DEFAULT_ROUNDS, max_prime_redraws: int = 32) -> RsaKeyPair:
    """Generate a keypair with an n of roughly `bits` bits.

    Each prime gets ceil(bits/2) bits. With a fixed exponent (the
    default), primes are redrawn whenever gcd(e, phi) != 1; pass e=None
    to instead draw a random odd exponent in (1, phi) for the drawn
    primes. Requires bits >= 8.
    """
    if bits < 8:
        raise ValueError("modulus size must be at least 8 bits")
    rng = _coerce_rng(rng)
    fixed_e = None
    if e is not None:
        fixed_e = Natural(e)
        _check_public_exponent(fixed_e)
    prime_bits = (bits + 1) // 2
    for _ in range(max_prime_redraws):
        p = generate_prime(prime_bits, rng, rounds)
        q = generate_prime(prime_bits, rng, rounds)
        for _ in range(64):
            if q != p:
                break
            q = generate_prime(prime_bits, rng, rounds)
        else:
            raise ExhaustedCandidates("could not draw two distinct primes")
        phi = (p - _N1) * (q - _N1)
        if fixed_e is not None:
            if not fixed_e < phi:
                raise BadPublicExponent(
                    "public exponent does not fit below phi; use a smaller e")
            if gcd(fixed_e, phi) != _N1:
                continue  # redraw primes, keeping the requested exponent
            chosen = fixed_e
        else:
            chosen = _draw_random_exponent(phi, rng)
            if chosen is None:
                continue
        return keypair_from_primes(p, q, chosen, rounds=rounds, rng=rng,
                                   check_primality=False)
    raise ExhaustedCandidates("could not find a usable prime pair")


def _draw_random_exponent(phi: Natural, rng: random.Random,
                          tries: int = 256) -> Optional[Natural]:
    # random odd e in [3, phi) with gcd(e, phi) = 1
    span = phi - Natural(3)
    width = phi.bit_length + 64
    for _ in range(tries):
        e = (Natural(rng.getrandbits(width)) % span) + Natural(3)
        if e.is_even:
            e = e + _N1  # stays < phi: phi is even, so e was <= phi - 2
        if gcd(e, phi) == _N1:
            return e
    return None


def sign_raw(key: RsaKeyPair, message: IntLike) -> Natural:
    """Textbook signature s = m**d mod n; message must satisfy m < n."""
    m = Natural(message)
    if not m < key.n:
        raise MessageTooLarge("message must be smaller than the modulus")
    return mod_exp(m, key.d, key.n)


def verify_raw(n: IntLike, e: IntLike, message: IntLike,
               signature: IntLike) -> bool:
    """True iff signature**e mod n equals the message."""
    return mod_exp(signature, e, n) == Natural(message)
