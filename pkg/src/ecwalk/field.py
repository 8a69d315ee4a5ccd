"""Arithmetic in a prime field F_p.

Elements are immutable and always hold the canonical residue in ``[0, p)``.
Moduli are checked for primality by trial division, which is only practical
for desk-scale primes; anything above ``2**64`` is refused outright.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .errors import CapExceeded, DivisionByZero, ModulusMismatch, NotPrime

PRIMALITY_CAP = 2**64


@lru_cache(maxsize=4096)
def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    if n % 3 == 0:
        return n == 3
    # 6k +/- 1 wheel
    f = 5
    limit = isqrt(n)
    while f <= limit:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in ascending order, by trial division."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    factors = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            factors.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        factors.append(n)
    return factors


def sqrt_mod(a: int, p: int) -> int | None:
    """Smaller square root of ``a`` modulo the odd prime ``p``, or ``None``.

    Tonelli-Shanks; the returned root ``r`` satisfies ``r <= p - r``.
    """
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    # p - 1 = q * 2**s with q odd
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return min(r, p - r)


@dataclass(frozen=True)
class PrimeModulus:
    """A prime ``p > 3`` small enough for trial-division verification."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise TypeError(f"modulus must be an int, got {type(self.p).__name__}")
        if self.p > PRIMALITY_CAP:
            raise CapExceeded(f"modulus {self.p} exceeds the trial-division cap 2^64")
        if self.p <= 3:
            raise NotPrime(f"modulus must be a prime > 3, got {self.p}")
        if not is_prime(self.p):
            raise NotPrime(f"modulus {self.p} is not prime")

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(value, self)

    def __int__(self) -> int:
        return self.p


@dataclass(frozen=True, eq=True)
class FieldElement:
    value: int
    modulus: PrimeModulus

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.modulus.p)

    @property
    def p(self) -> int:
        return self.modulus.p

    def _coerce(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            if other.modulus.p != self.modulus.p:
                raise ModulusMismatch(
                    f"cannot combine elements mod {self.modulus.p} and mod {other.modulus.p}"
                )
            return other
        if isinstance(other, int):
            return FieldElement(other, self.modulus)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.value + other.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.value - other.value, self.modulus)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(other.value - self.value, self.modulus)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.value * other.value, self.modulus)

    __rmul__ = __mul__

    def __neg__(self) -> FieldElement:
        return FieldElement(-self.value, self.modulus)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, exponent: int) -> FieldElement:
        if exponent < 0:
            return self.inverse() ** -exponent
        return FieldElement(pow(self.value, exponent, self.modulus.p), self.modulus)

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.modulus.p})"

    def inverse(self) -> FieldElement:
        if self.value == 0:
            raise DivisionByZero(f"0 has no inverse mod {self.modulus.p}")
        return FieldElement(pow(self.value, -1, self.modulus.p), self.modulus)

    def sqrt(self) -> FieldElement | None:
        r = sqrt_mod(self.value, self.modulus.p)
        return None if r is None else FieldElement(r, self.modulus)

    def is_square(self) -> bool:
        return self.value == 0 or pow(self.value, (self.modulus.p - 1) // 2, self.modulus.p) == 1


def modular_arith(a: FieldElement, b: FieldElement | None, op: str) -> FieldElement:
    """Apply ``op`` in {"add", "sub", "mul", "neg"}; ``neg`` ignores ``b``."""
    if op == "neg":
        return -a
    if b is None:
        raise TypeError(f"operation {op!r} needs two operands")
    if a.modulus.p != b.modulus.p:
        raise ModulusMismatch(f"cannot combine elements mod {a.modulus.p} and mod {b.modulus.p}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown field operation {op!r}")


def fe_inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def fe_sqrt(a: FieldElement) -> FieldElement | None:
    return a.sqrt()
