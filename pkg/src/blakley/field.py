"""Arithmetic in the prime field GF(p).

Values are kept as canonical representatives in [0, p). Moduli are
capped at 62 bits so every intermediate product stays comfortably exact
and the primality test below remains deterministic.
"""

from dataclasses import dataclass
import random

from .errors import ModulusMismatchError, NonPrimeModulusError, ZeroInverseError

MAX_MODULUS_BITS = 62

# Witnesses proving primality for every n < 3.3e24, far past the 62-bit cap.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all n below 2**64."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n == q:
            return True
        if n % q == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeModulus:
    """A validated prime field modulus."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int):
            raise NonPrimeModulusError(f"modulus must be an integer, got {type(self.p).__name__}")
        if self.p.bit_length() > MAX_MODULUS_BITS:
            raise ValueError(f"modulus must fit in {MAX_MODULUS_BITS} bits")
        if self.p < 2 or not is_prime(self.p):
            raise NonPrimeModulusError(f"{self.p} is not prime")


def inv_mod(a: int, p: int) -> int:
    """Inverse of a modulo the prime p, by the extended Euclidean algorithm.

    Raises:
        ZeroInverseError: if a is congruent to 0.
    """
    a %= p
    if a == 0:
        raise ZeroInverseError("0 has no multiplicative inverse")
    old_r, r = a, p
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    # gcd is 1 because p is prime and a is a nonzero residue
    return old_s % p


class FieldElement:
    """An element of GF(p), always stored as its canonical representative."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: PrimeModulus):
        object.__setattr__(self, "value", value % modulus.p)
        object.__setattr__(self, "modulus", modulus)

    def _common(self, other: "FieldElement") -> int:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.modulus != self.modulus:
            raise ModulusMismatchError(
                f"mixed moduli {self.modulus.p} and {other.modulus.p}"
            )
        return self.modulus.p

    def __add__(self, other: "FieldElement") -> "FieldElement":
        p = self._common(other)
        return FieldElement((self.value + other.value) % p, self.modulus)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        p = self._common(other)
        return FieldElement((self.value - other.value) % p, self.modulus)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        p = self._common(other)
        return FieldElement(self.value * other.value % p, self.modulus)

    def __neg__(self) -> "FieldElement":
        return FieldElement(-self.value, self.modulus)

    def inv(self) -> "FieldElement":
        """Multiplicative inverse; zero is rejected."""
        return FieldElement(inv_mod(self.value, self.modulus.p), self.modulus)

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.value == other.value and self.modulus == other.modulus
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.modulus.p))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"FieldElement({self.value}, mod {self.modulus.p})"


class RandomSource:
    """Randomness injected into sampling and share generation.

    seeded(n) yields a deterministic stream for tests and reproducible
    splits; system() draws from OS entropy.
    """

    def __init__(self, rng: random.Random):
        self._rng = rng

    @classmethod
    def seeded(cls, seed: int) -> "RandomSource":
        return cls(random.Random(seed))

    @classmethod
    def system(cls) -> "RandomSource":
        return cls(random.SystemRandom())

    def getrandbits(self, k: int) -> int:
        return self._rng.getrandbits(k)

    def sample(self, population, k: int) -> list:
        """k distinct elements drawn without replacement."""
        return self._rng.sample(population, k)


def sample_uniform(rng: RandomSource, modulus: PrimeModulus) -> FieldElement:
    """Uniform draw from GF(p).

    Rejection sampling on bit_length(p)-bit draws, so no residue is
    favored by a modulo fold.
    """
    p = modulus.p
    k = p.bit_length()
    while True:
        v = rng.getrandbits(k)
        if v < p:
            return FieldElement(v, modulus)
