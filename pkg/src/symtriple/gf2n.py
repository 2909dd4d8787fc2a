"""GF(2^n) arithmetic on integer bit vectors (bit i = coefficient of x^i)."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import MalformedInput, PreconditionViolation

# Fixed irreducible (in fact primitive) moduli, bit i = coefficient of x^i.
IRREDUCIBLE = {
    1: 0b11,          # x + 1
    2: 0b111,         # x^2 + x + 1
    3: 0b1011,        # x^3 + x + 1
    4: 0b10011,       # x^4 + x + 1
    5: 0b100101,      # x^5 + x^2 + 1
    6: 0b1000011,     # x^6 + x + 1
    7: 0b10000011,    # x^7 + x + 1
    8: 0b100011101,   # x^8 + x^4 + x^3 + x^2 + 1
}


def poly_mulmod(a: int, b: int, modulus: int, n: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a >> n & 1:
            a ^= modulus
    return out


def is_irreducible(modulus: int) -> bool:
    """Trial division by every polynomial of degree 1..deg/2 (brute force)."""
    n = modulus.bit_length() - 1
    if n < 1:
        return False
    for d in range(1, n // 2 + 1):
        for f in range(1 << d, 1 << (d + 1)):
            if _poly_mod(modulus, f) == 0:
                return False
    return True


def _poly_mod(a: int, f: int) -> int:
    df = f.bit_length() - 1
    while a and a.bit_length() - 1 >= df:
        a ^= f << (a.bit_length() - 1 - df)
    return a


@dataclass(frozen=True)
class BinaryField:
    n: int
    modulus: int = 0

    def __post_init__(self):
        if self.modulus == 0:
            if self.n not in IRREDUCIBLE:
                raise PreconditionViolation(f"no built-in modulus for n={self.n} (have 1..8)")
            object.__setattr__(self, "modulus", IRREDUCIBLE[self.n])
        if self.modulus.bit_length() - 1 != self.n:
            raise MalformedInput(f"modulus degree {self.modulus.bit_length() - 1} != n={self.n}")
        if not is_irreducible(self.modulus):
            raise MalformedInput(f"modulus {bin(self.modulus)} is reducible")

    @property
    def size(self) -> int:
        return 1 << self.n

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        return poly_mulmod(a, b, self.modulus, self.n)

    def pow(self, a: int, e: int) -> int:
        out = 1
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in GF(2^n)")
        return self.pow(a, self.size - 2)

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative order")
        x, k = a, 1
        while x != 1:
            x = self.mul(x, a)
            k += 1
        return k

    @cached_property
    def primitive_element(self) -> int:
        """Smallest generator of the multiplicative group."""
        for a in range(2, self.size) if self.size > 2 else [1]:
            if self.element_order(a) == self.size - 1:
                return a
        return 1

    def element(self, bits: int) -> BinaryFieldElement:
        return BinaryFieldElement(self, bits)


@dataclass(frozen=True)
class BinaryFieldElement:
    field: BinaryField
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits < self.field.size:
            raise MalformedInput(f"{self.bits} is not an element of GF(2^{self.field.n})")

    def _other(self, other):
        if isinstance(other, BinaryFieldElement):
            if other.field != self.field:
                raise MalformedInput("elements of different fields")
            return other.bits
        return other

    def __add__(self, other):
        return BinaryFieldElement(self.field, self.bits ^ self._other(other))

    __sub__ = __add__
    __radd__ = __add__

    def __mul__(self, other):
        return BinaryFieldElement(self.field, self.field.mul(self.bits, self._other(other)))

    __rmul__ = __mul__

    def inverse(self):
        return BinaryFieldElement(self.field, self.field.inv(self.bits))

    def __truediv__(self, other):
        return self * BinaryFieldElement(self.field, self.field.inv(self._other(other)))

    def __pow__(self, e: int):
        return BinaryFieldElement(self.field, self.field.pow(self.bits, e))

    def coefficients(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(self.field.n)]
