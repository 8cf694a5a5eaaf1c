"""Finite fields GF(2^e), 1 <= e <= 8, in a fixed polynomial basis.

Elements are stored as integers 0 .. 2^e - 1 whose bit ``i`` is the
coefficient of ``t^i``; this is also the JSON encoding.  Arithmetic goes
through precomputed multiplication and inversion tables so that numpy
arrays of elements can be combined with plain fancy indexing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "MODULI",
    "FieldError",
    "FieldMismatchError",
    "GF2e",
    "Scalar",
    "gf",
    "is_irreducible_gf2",
]

# bit i = coefficient of t^i; one fixed irreducible per degree
MODULI = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011011,
}


class FieldError(ValueError):
    pass


class FieldMismatchError(FieldError):
    """Operands live in different fields."""


def _clmul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def _polymod(a: int, m: int) -> int:
    dm = m.bit_length() - 1
    while a and a.bit_length() - 1 >= dm:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def is_irreducible_gf2(poly: int) -> bool:
    """Trial division by every polynomial of degree 1 .. deg/2 over GF(2)."""
    deg = poly.bit_length() - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for cand in range(1 << d, 1 << (d + 1)):
            if _polymod(poly, cand) == 0:
                return False
    return True


class GF2e:
    """The field GF(2^e) with the modulus from :data:`MODULI`.

    Instances compare equal by degree, and :func:`gf` hands out cached
    instances, so constructing the same field twice is cheap.
    """

    def __init__(self, degree: int):
        if not isinstance(degree, (int, np.integer)) or not 1 <= degree <= 8:
            raise FieldError(f"field degree must be an integer in 1..8, got {degree!r}")
        self.degree = int(degree)
        self.modulus = MODULI[self.degree]
        if not is_irreducible_gf2(self.modulus):  # pragma: no cover - table is fixed
            raise FieldError(f"modulus {bin(self.modulus)} is reducible")
        self.order = 1 << self.degree
        q = self.order
        a = np.arange(q, dtype=np.int64)
        table = np.zeros((q, q), dtype=np.int64)
        # schoolbook carry-less product, one bit of b at a time
        for i in range(self.degree):
            bit = (a >> i) & 1
            table ^= np.outer(a << i, bit)
        # reduce degrees >= e
        for k in range(2 * self.degree - 2, self.degree - 1, -1):
            hit = (table >> k) & 1
            table ^= hit * (self.modulus << (k - self.degree))
        self.mul_table = table.astype(np.uint8)
        inv = np.zeros(q, dtype=np.uint8)
        rows, cols = np.nonzero(self.mul_table == 1)
        inv[rows] = cols
        self.inv_table = inv
        # t^k reduced, used by the bit-plane matrix product
        self.tpow = np.array(
            [_polymod(1 << k, self.modulus) for k in range(2 * self.degree)], dtype=np.uint8
        )

    # -- identity -----------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, GF2e) and other.degree == self.degree

    def __hash__(self):
        return hash(("GF2e", self.degree))

    def __repr__(self):
        return f"GF(2^{self.degree})"

    # -- integer-level arithmetic --------------------------------------
    def _check(self, a: int) -> int:
        a = int(a)
        if not 0 <= a < self.order:
            raise FieldError(f"{a} is not an element of {self!r}")
        return a

    def add(self, a: int, b: int) -> int:
        return self._check(a) ^ self._check(b)

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[self._check(a), self._check(b)])

    def inv(self, a: int) -> int:
        if self._check(a) == 0:
            raise ZeroDivisionError("inverse of zero in a field")
        return int(self.inv_table[a])

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            return self.pow(self.inv(a), -k)
        out, base = 1, self._check(a)
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    # -- scalars --------------------------------------------------------
    def __call__(self, value: int) -> "Scalar":
        return Scalar(self, self._check(value))

    @property
    def zero(self) -> "Scalar":
        return Scalar(self, 0)

    @property
    def one(self) -> "Scalar":
        return Scalar(self, 1)

    @property
    def generator(self) -> "Scalar":
        """The class of ``t`` (equal to 1 only for GF(2))."""
        return Scalar(self, _polymod(2, self.modulus))

    def elements(self):
        return [Scalar(self, v) for v in range(self.order)]

    def random(self, rng: np.random.Generator, shape) -> np.ndarray:
        return rng.integers(0, self.order, size=shape, dtype=np.uint8)

    def to_json(self) -> dict:
        return {"degree": self.degree}


@lru_cache(maxsize=None)
def gf(degree: int = 1) -> GF2e:
    """Cached field instance for ``GF(2^degree)``."""
    return GF2e(degree)


@dataclass(frozen=True)
class Scalar:
    field: GF2e
    value: int

    def _other(self, other) -> int:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(f"cannot combine {self.field!r} and {other.field!r}")
            return other.value
        if isinstance(other, (int, np.integer)) and other in (0, 1):
            return int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Scalar(self.field, self.value ^ b)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Scalar(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field.inv(self.value))

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Scalar(self.field, self.field.mul(self.value, self.field.inv(b)))

    def __pow__(self, k: int):
        return Scalar(self.field, self.field.pow(self.value, k))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def bits(self) -> tuple:
        """Polynomial-basis coordinates, lowest degree first."""
        return tuple((self.value >> i) & 1 for i in range(self.field.degree))

    def __repr__(self):
        return f"{self.field!r}({self.value})"
