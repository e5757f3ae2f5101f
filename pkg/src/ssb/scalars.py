"""Exact scalar arithmetic: the rationals, prime fields, and the quadratic
extension by a square root of -1.

Scalars are plain Python objects (Fraction for characteristic 0, int for a
prime field, pairs for the quadratic extension); a Field object carries the
operations.  No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InvalidParams, NoSquareRoot


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class RationalField:
    """Exact rational arithmetic on Fraction values."""

    char = 0

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def from_fraction(self, q):
        return Fraction(q)

    def from_base(self, a):
        return a

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return 1 / a

    def div(self, a, b):
        return a / b

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b):
        return a == b

    def to_str(self, a):
        return str(a)

    def __repr__(self):
        return "QQ"


class PrimeField:
    """Residues mod a prime, stored as ints in [0, p)."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise InvalidParams(f"characteristic must be 0 or prime, got {p}")
        self.char = p

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, n):
        return n % self.char

    def from_fraction(self, q):
        q = Fraction(q)
        den = q.denominator % self.char
        if den == 0:
            raise ZeroDivisionError(f"denominator {q.denominator} vanishes mod {self.char}")
        return q.numerator * pow(den, self.char - 2, self.char) % self.char

    def from_base(self, a):
        return a % self.char

    def add(self, a, b):
        return (a + b) % self.char

    def sub(self, a, b):
        return (a - b) % self.char

    def mul(self, a, b):
        return (a * b) % self.char

    def neg(self, a):
        return (-a) % self.char

    def inv(self, a):
        if a % self.char == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.char - 2, self.char)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a % self.char == 0

    def eq(self, a, b):
        return (a - b) % self.char == 0

    def to_str(self, a):
        return str(a % self.char)

    def __repr__(self):
        return f"GF({self.char})"


class ImaginaryExtension:
    """The base field with a square root of -1 adjoined.

    Elements are pairs (a, b) meaning a + b*i with i*i = -1.  Only used to
    verify the explicit isomorphism over fields where -1 is not a square.
    """

    def __init__(self, base):
        self.base = base
        self.char = base.char

    def zero(self):
        return (self.base.zero(), self.base.zero())

    def one(self):
        return (self.base.one(), self.base.zero())

    def i(self):
        return (self.base.zero(), self.base.one())

    def from_int(self, n):
        return (self.base.from_int(n), self.base.zero())

    def from_base(self, a):
        return (a, self.base.zero())

    def from_fraction(self, q):
        return (self.base.from_fraction(q), self.base.zero())

    def add(self, x, y):
        return (self.base.add(x[0], y[0]), self.base.add(x[1], y[1]))

    def sub(self, x, y):
        return (self.base.sub(x[0], y[0]), self.base.sub(x[1], y[1]))

    def mul(self, x, y):
        a, b = x
        c, d = y
        f = self.base
        return (f.sub(f.mul(a, c), f.mul(b, d)), f.add(f.mul(a, d), f.mul(b, c)))

    def neg(self, x):
        return (self.base.neg(x[0]), self.base.neg(x[1]))

    def inv(self, x):
        a, b = x
        f = self.base
        n = f.add(f.mul(a, a), f.mul(b, b))  # norm of a + bi
        if f.is_zero(n):
            raise ZeroDivisionError("inverse of zero")
        ninv = f.inv(n)
        return (f.mul(a, ninv), f.neg(f.mul(b, ninv)))

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def is_zero(self, x):
        return self.base.is_zero(x[0]) and self.base.is_zero(x[1])

    def eq(self, x, y):
        return self.is_zero(self.sub(x, y))

    def to_str(self, x):
        return f"{self.base.to_str(x[0])}+{self.base.to_str(x[1])}i"

    def __repr__(self):
        return f"{self.base!r}(i)"


def field_for_characteristic(char: int):
    if char == 0:
        return RationalField()
    return PrimeField(char)


def sqrt_minus_one(field):
    """A square root of -1 in a prime field, or None if there is none."""
    p = field.char
    if p == 0 or p % 4 == 3:
        return None
    if p == 2:
        return 1
    for x in range(2, p):
        if x * x % p == p - 1:
            return x
    return None


def field_with_sqrt_minus_one(char: int):
    """Smallest field of the given characteristic containing i with i*i=-1.

    Returns (field, i).  Raises NoSquareRoot in characteristic 2 where the
    only candidate i = 1 degenerates (1*1 = -1 but i = -i).
    """
    if char == 2:
        raise NoSquareRoot("characteristic 2: 1 = -1, no useful square root of -1")
    base = field_for_characteristic(char)
    if char != 0:
        root = sqrt_minus_one(base)
        if root is not None:
            return base, root
    ext = ImaginaryExtension(base)
    return ext, ext.i()
