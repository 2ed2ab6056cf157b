"""Exact arithmetic in the Gaussian integers Z[i].

Everything here is integer-exact: norms, divisibility, the Euclidean gcd
(made single-valued by canonicalizing associates), and the classification of
elements as zero / unit / split / inert / ramified / composite.  Components
are plain Python integers, so there is no overflow to worry about at this
level; the fixed-width numba kernels carry their own range guards.
"""

import enum
from dataclasses import dataclass
from math import isqrt


@dataclass(frozen=True)
class GaussianInt:
    """A Gaussian integer re + im*i."""

    re: int
    im: int

    def __add__(self, other: "GaussianInt") -> "GaussianInt":
        other = _coerce(other)
        return GaussianInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: "GaussianInt") -> "GaussianInt":
        other = _coerce(other)
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _coerce(other).__sub__(self)

    def __mul__(self, other: "GaussianInt") -> "GaussianInt":
        other = _coerce(other)
        return GaussianInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __neg__(self) -> "GaussianInt":
        return GaussianInt(-self.re, -self.im)

    def __divmod__(self, other: "GaussianInt"):
        """Euclidean division: q with both components of self/other rounded
        to the nearest integer, and r = self - q*other with
        norm(r) <= norm(other)/2."""
        other = _coerce(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Z[i]")
        # self * conj(other) = t1 + t2*i; round t1/n and t2/n to nearest.
        t1 = self.re * other.re + self.im * other.im
        t2 = self.im * other.re - self.re * other.im
        q = GaussianInt((2 * t1 + n) // (2 * n), (2 * t2 + n) // (2 * n))
        return q, self - q * other

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def conjugate(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    @property
    def is_unit(self) -> bool:
        return self.norm() == 1

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        return f"{self.re}{self.im:+d}i"


def _coerce(value) -> GaussianInt:
    if isinstance(value, GaussianInt):
        return value
    if isinstance(value, int):
        return GaussianInt(value, 0)
    raise TypeError(f"cannot interpret {value!r} as a Gaussian integer")


ZERO = GaussianInt(0, 0)
ONE = GaussianInt(1, 0)
I = GaussianInt(0, 1)
UNITS = (ONE, I, -ONE, -I)


class PrimeTag(enum.Enum):
    ZERO = "zero"
    UNIT = "unit"
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"
    COMPOSITE = "composite"


@dataclass(frozen=True)
class PrimeClass:
    """Classification of an element of Z[i], with the rational prime under it
    when the element is prime."""

    tag: PrimeTag
    rational_prime: int | None = None

    @property
    def is_prime(self) -> bool:
        return self.tag in (PrimeTag.SPLIT, PrimeTag.INERT, PrimeTag.RAMIFIED)


def norm(z: GaussianInt) -> int:
    """Field norm re^2 + im^2; multiplicative, zero only at zero."""
    return _coerce(z).norm()


def divides(d: GaussianInt, z: GaussianInt) -> bool:
    """True iff z is a Gaussian-integer multiple of d (exact-division
    remainder test).  d must be nonzero."""
    d = _coerce(d)
    if d.is_zero:
        raise ZeroDivisionError("divisibility by zero is undefined")
    return (_coerce(z) % d).is_zero


def canonical_associate(z: GaussianInt) -> GaussianInt:
    """The unique associate of z in the half-quadrant {re > 0, im >= 0};
    zero maps to zero and units map to 1."""
    z = _coerce(z)
    if z.is_zero:
        return ZERO
    for _ in range(4):
        if z.re > 0 and z.im >= 0:
            return z
        z = z * I
    raise AssertionError("unreachable: some rotation lands in the half-quadrant")


def gcd(z1: GaussianInt, z2: GaussianInt) -> GaussianInt:
    """Euclidean gcd in Z[i], returned as its canonical associate.

    gcd(z, 0) is the canonical associate of z; gcd(0, 0) is an error.
    """
    a, b = _coerce(z1), _coerce(z2)
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero:
        a, b = b, a % b
    return canonical_associate(a)


def is_coprime(z1: GaussianInt, z2: GaussianInt) -> bool:
    """True iff gcd(z1, z2) is a unit; (0, 0) counts as not coprime."""
    z1, z2 = _coerce(z1), _coerce(z2)
    if z1.is_zero and z2.is_zero:
        return False
    return gcd(z1, z2).is_unit


def is_rational_prime(n: int) -> bool:
    """Deterministic trial-division primality test for rational integers."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for f in range(3, isqrt(n) + 1, 2):
        if n % f == 0:
            return False
    return True


def classify(z: GaussianInt) -> PrimeClass:
    """Classify z as zero / unit / split / inert / ramified / composite.

    Off the axes, z is prime exactly when its norm is a rational prime
    (an odd prime that is a sum of two nonzero squares is automatically
    1 mod 4, so the norm being prime is the whole condition).  On an axis,
    z is prime exactly when |z| is a rational prime congruent to 3 mod 4.
    Norm 2 is the ramified case: the four associates of 1+i.
    """
    z = _coerce(z)
    n = z.norm()
    if n == 0:
        return PrimeClass(PrimeTag.ZERO)
    if n == 1:
        return PrimeClass(PrimeTag.UNIT)
    if n == 2:
        return PrimeClass(PrimeTag.RAMIFIED, 2)
    if z.re != 0 and z.im != 0:
        if is_rational_prime(n):
            return PrimeClass(PrimeTag.SPLIT, n)
        return PrimeClass(PrimeTag.COMPOSITE)
    p = abs(z.re) if z.im == 0 else abs(z.im)
    if p % 4 == 3 and is_rational_prime(p):
        return PrimeClass(PrimeTag.INERT, p)
    return PrimeClass(PrimeTag.COMPOSITE)
