"""Exact scalar arithmetic: big integers, residues mod p^k, and the
elementary number-theoretic helpers the rest of the package builds on.

Python ints are already arbitrary precision and ``fractions.Fraction`` is an
exact rational in lowest terms, so those serve as the integer/rational
scalars directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, isqrt


class NotInvertible(ArithmeticError):
    """The residue shares a factor with the modulus, so no inverse exists."""


def is_prime(n: int) -> bool:
    """Deterministic trial division up to sqrt(n); meant for desk-scale n."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    r = isqrt(n)
    while f <= r:
        if n % f == 0:
            return False
        f += 2
    return True


def int_binomial(n: int, k: int) -> int:
    """Generalized binomial coefficient n(n-1)...(n-k+1) / k!.

    The upper argument may be any integer (including negative); k < 0
    returns 0 so that out-of-range summation terms vanish.
    """
    if k < 0:
        return 0
    num = 1
    for i in range(k):
        num *= n - i
    # a product of k consecutive integers is always divisible by k!
    return num // factorial(k)


def legendre_symbol(a: int, p: int) -> int:
    """Quadratic-residue indicator of a modulo an odd prime p.

    Returns 0 when p | a, +1 when a is a nonzero square mod p, -1 otherwise
    (Euler's criterion with exact modular exponentiation).
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"legendre_symbol needs an odd prime, got {p}")
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


@dataclass(frozen=True)
class ModScalar:
    """Residue in [0, modulus) with exact ring arithmetic.

    Used with prime-power moduli p^k to evaluate p-adic integers such as
    -1/2 at finite precision.
    """

    residue: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus <= 0:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    def _lift(self, other: "ModScalar | int") -> int:
        if isinstance(other, ModScalar):
            if other.modulus != self.modulus:
                raise ValueError("mixed moduli")
            return other.residue
        return other

    def __add__(self, other: "ModScalar | int") -> "ModScalar":
        return ModScalar(self.residue + self._lift(other), self.modulus)

    __radd__ = __add__

    def __sub__(self, other: "ModScalar | int") -> "ModScalar":
        return ModScalar(self.residue - self._lift(other), self.modulus)

    def __rsub__(self, other: int) -> "ModScalar":
        return ModScalar(other - self.residue, self.modulus)

    def __mul__(self, other: "ModScalar | int") -> "ModScalar":
        return ModScalar(self.residue * self._lift(other), self.modulus)

    __rmul__ = __mul__

    def __neg__(self) -> "ModScalar":
        return ModScalar(-self.residue, self.modulus)

    def __pow__(self, e: int) -> "ModScalar":
        if e < 0:
            return self.inverse() ** (-e)
        return ModScalar(pow(self.residue, e, self.modulus), self.modulus)

    def inverse(self) -> "ModScalar":
        return mod_inverse(self)


def mod_inverse(a: ModScalar) -> ModScalar:
    """Multiplicative inverse mod a.modulus; NotInvertible when gcd != 1."""
    try:
        return ModScalar(pow(a.residue, -1, a.modulus), a.modulus)
    except ValueError:
        raise NotInvertible(
            f"{a.residue} has no inverse modulo {a.modulus}"
        ) from None
