"""Exact coefficient arithmetic: rationals and prime fields Z/p.

Rational coefficients are plain ``fractions.Fraction`` values (always in
lowest terms with a positive denominator); prime-field coefficients are
``ModInt`` values normalized to the least nonnegative representative.
No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["ModInt", "Rationals", "PrimeField", "QQ", "GF", "is_prime"]

# Witnesses making Miller-Rabin deterministic for every n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test for moduli of practical size."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
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


class ModInt:
    """An element of Z/p, stored as the least nonnegative representative.

    Arithmetic with plain ints lifts them into the same field; mixing two
    different moduli, or mixing with rationals, raises TypeError.
    """

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        self.value = value % modulus
        self.modulus = modulus

    def _coerce(self, other) -> "ModInt":
        if isinstance(other, ModInt):
            if other.modulus != self.modulus:
                raise TypeError(
                    f"mixed moduli: {self.modulus} and {other.modulus}"
                )
            return other
        if isinstance(other, int):
            return ModInt(other, self.modulus)
        raise TypeError(f"cannot mix ModInt with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        return ModInt(self.value + other.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return ModInt(self.value - other.value, self.modulus)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return ModInt(self.value * other.value, self.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.value == 0:
            raise ZeroDivisionError(f"division by zero in Z/{self.modulus}")
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __neg__(self):
        return ModInt(-self.value, self.modulus)

    def inverse(self) -> "ModInt":
        if self.value == 0:
            raise ZeroDivisionError(f"0 is not invertible in Z/{self.modulus}")
        return ModInt(pow(self.value, -1, self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, ModInt):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"ModInt({self.value}, {self.modulus})"

    def __str__(self):
        return str(self.value)


class Rationals:
    """The field Q with Fraction elements."""

    name = "Q"

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def of(self, value) -> Fraction:
        """Build a field element from an int, Fraction, or decimal string."""
        if isinstance(value, Fraction):
            return value
        if isinstance(value, (int, str)):
            return Fraction(value)
        raise TypeError(f"cannot make a rational from {type(value).__name__}")

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The field Z/p for a prime p."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"Z/{p}"

    @property
    def zero(self) -> ModInt:
        return ModInt(0, self.p)

    @property
    def one(self) -> ModInt:
        return ModInt(1, self.p)

    def of(self, value) -> ModInt:
        if isinstance(value, ModInt):
            if value.modulus != self.p:
                raise TypeError(f"element of Z/{value.modulus} is not in Z/{self.p}")
            return value
        if isinstance(value, (int, str)):
            return ModInt(int(value), self.p)
        raise TypeError(f"cannot make a Z/{self.p} element from {type(value).__name__}")

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Zp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()


def GF(p: int) -> PrimeField:
    """Return the prime field Z/p."""
    return PrimeField(p)
