"""Chern class calculus in the Chow ring Z[h]/(h^(n+1)) of P^n.

A :class:`ChowClass` stores the coefficients of ``1, h, ..., h^n``. With the
Euler sequence, ``c(T P^n) = (1+h)^(n+1)`` and ``c(Omega^1) = (1-h)^(n+1)``.
For divisors of degrees ``d_1, d_2`` the logarithmic cotangent sheaf has
``c(Omega^1(log D)) = (1-h)^(n+1) / ((1 - d_1 h)(1 - d_2 h))``.

>>> log_chern_class(3, [1, 2]).top()
Fraction(1, 1)
>>> integrate(tangent_class(3))
Fraction(4, 1)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import (
    DimensionMismatchError,
    IntegralityError,
    NonUnitError,
    UnsupportedCountError,
)
from .polyarith import HomogPoly


@dataclass(frozen=True)
class ChowClass:
    n: int
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)[: self.n + 1]
        coeffs += (Fraction(0),) * (self.n + 1 - len(coeffs))
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def one(cls, n):
        return cls(n, (1,))

    @classmethod
    def hyperplane(cls, n, power=1):
        return cls(n, (0,) * power + (1,))

    @classmethod
    def linear(cls, n, a):
        """The class 1 + a h."""
        return cls(n, (1, a))

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k <= self.n else Fraction(0)

    def component(self, k):
        """The homogeneous degree-k part as a class."""
        return ChowClass(self.n, (0,) * k + (self[k],))

    def top(self):
        return self.coeffs[self.n]

    def _check(self, other):
        if not isinstance(other, ChowClass):
            return NotImplemented
        if other.n != self.n:
            raise DimensionMismatchError(f"classes on P^{self.n} and P^{other.n}")
        return other

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ChowClass(self.n, (other,))
        other = self._check(other)
        return ChowClass(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return ChowClass(self.n, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ChowClass(self.n, tuple(a * other for a in self.coeffs))
        return chow_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            return chow_inverse(self) ** (-k)
        result = ChowClass.one(self.n)
        for _ in range(k):
            result = chow_mul(result, self)
        return result

    def dual(self):
        """c(E^*) from c(E): the degree-k part picks up (-1)^k."""
        return ChowClass(self.n, tuple(c * (-1) ** k for k, c in enumerate(self.coeffs)))

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs)

    def __str__(self):
        out = ""
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else "h" if k == 1 else f"h^{k}"
            mag = abs(c)
            body = str(mag) if not mono else mono if mag == 1 else f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            out += (("-" if c < 0 else "") + body) if not out else f" {sign} {body}"
        return out or "0"


def chow_mul(a, b):
    """Product truncated beyond h^n."""
    b = a._check(b)
    n = a.n
    out = [Fraction(0)] * (n + 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j in range(n + 1 - i):
                out[i + j] += x * b.coeffs[j]
    return ChowClass(n, tuple(out))


def chow_inverse(a):
    """Multiplicative inverse of a class with constant term 1."""
    if a.coeffs[0] != 1:
        raise NonUnitError(f"constant term {a.coeffs[0]} is not 1")
    inv = [Fraction(1)] + [Fraction(0)] * a.n
    for k in range(1, a.n + 1):
        inv[k] = -sum(a.coeffs[i] * inv[k - i] for i in range(1, k + 1))
    return ChowClass(a.n, tuple(inv))


def integrate(a):
    """Degree of the zero-cycle part: the coefficient of h^n."""
    return a.top()


def tangent_class(n):
    return ChowClass.linear(n, 1) ** (n + 1)


def cotangent_class(n):
    return ChowClass.linear(n, -1) ** (n + 1)


def _check_degrees(n, degrees, limit=2):
    degrees = [int(d) for d in degrees]
    if limit is not None and not 1 <= len(degrees) <= limit:
        raise UnsupportedCountError(
            f"{len(degrees)} divisor degrees given; between 1 and {limit} are supported"
        )
    if any(d < 1 for d in degrees):
        raise ValueError("divisor degrees must be positive")
    if n < 1:
        raise ValueError("ambient dimension must be positive")
    return degrees


def chern_difference_class(n, degrees, tangent=True, limit=2):
    """c(T - sum_j O(D_j)) on P^n, or its dual when ``tangent`` is false."""
    degrees = _check_degrees(n, degrees, limit)
    sign = 1 if tangent else -1
    result = tangent_class(n) if tangent else cotangent_class(n)
    for d in degrees:
        result = chow_mul(result, chow_inverse(ChowClass.linear(n, sign * d)))
    return result


def log_chern_class(n, degrees):
    """c(Omega^1(log D)) = (1-h)^(n+1) * prod_j (1 - d_j h)^(-1).

    At most two components are accepted; see :func:`log_chern_class_snc`
    for the normal crossings baseline with more components.
    """
    return chern_difference_class(n, degrees, tangent=False, limit=2)


def log_chern_class_snc(n, degrees):
    return chern_difference_class(n, degrees, tangent=False, limit=None)


def divisor_class(n, degree):
    return ChowClass(n, (0, degree))


def integrate_over(cls, degrees):
    """Integral of ``cls`` over a complete intersection of the given degrees.

    Only the component of complementary dimension contributes:
    the result is ``coeff_{n-k}(cls) * prod(degrees)`` with ``k = len(degrees)``.
    """
    k = len(degrees)
    if k > cls.n:
        return Fraction(0)
    value = cls[cls.n - k]
    for d in degrees:
        value *= d
    return value


def chern_integral(n, degrees):
    """The integer ``int_Z c_{n-k}(T P^n - sum O(d_j))`` over the complete
    intersection ``Z`` of the given ``k`` degrees (``k = 0`` gives P^n)."""
    degrees = list(degrees)
    if degrees:
        cls = chern_difference_class(n, degrees, tangent=True, limit=None)
    else:
        cls = tangent_class(n)
    return require_integer(integrate_over(cls, degrees), "Chern integral")


def require_integer(value, what="value"):
    value = Fraction(value)
    if value.denominator != 1:
        raise IntegralityError(f"{what} {value} is not an integer")
    return int(value)


def complete_symmetric(k, args):
    """h_k(args): the sum of all degree-k monomials in ``args``."""
    if k < 0:
        raise ValueError("degree must be non-negative")
    args = [Fraction(a) for a in args]
    # h_k(a_1..a_m) = sum_j a_m^j h_{k-j}(a_1..a_{m-1})
    row = [Fraction(1)] + [Fraction(0)] * k
    for a in args:
        for d in range(1, k + 1):
            row[d] += a * row[d - 1]
    return row[k]


def twisted_top_chern(n, d):
    """Top Chern number of T P^n (x) O(-d), which equals sum_i (1-d)^i.

    Cross-checked against the Euler-sequence expansion
    (1 + (1-d)h)^(n+1) / (1 - d h), i.e. sum_i C(n+1, i) (1-d)^i d^(n-i).
    """
    closed = sum(Fraction(1 - d) ** i for i in range(n + 1))
    expansion = sum(comb(n + 1, i) * Fraction(1 - d) ** i * Fraction(d) ** (n - i)
                    for i in range(n + 1))
    assert closed == expansion, (n, d, closed, expansion)
    return closed


def twisted_tangent_class(n, d):
    """c(T P^n (x) O(-d)) from 0 -> O(-d) -> O(1-d)^(n+1) -> T(-d) -> 0."""
    return chow_mul(ChowClass.linear(n, 1 - d) ** (n + 1),
                    chow_inverse(ChowClass.linear(n, -d)))


@dataclass(frozen=True)
class DivisorOnPn:
    name: str
    F: HomogPoly

    @property
    def n(self):
        return len(self.F.variables) - 1

    @property
    def degree(self):
        return self.F.degree

    def fundamental_class(self):
        return divisor_class(self.n, self.degree)


@dataclass(frozen=True)
class Decomposition:
    D1: DivisorOnPn
    D2: DivisorOnPn

    def __post_init__(self):
        if self.D1.F.variables != self.D2.F.variables:
            raise DimensionMismatchError("decomposition components use different variables")

    @property
    def n(self):
        return self.D1.n

    @property
    def degrees(self):
        return (self.D1.degree, self.D2.degree)

    def intersection_class(self):
        return ChowClass.hyperplane(self.n, 2) * (self.D1.degree * self.D2.degree)

    def swapped(self):
        return Decomposition(self.D2, self.D1)


def snc_complement_euler(n, degrees):
    """Euler characteristic of P^n minus a normal crossings union of smooth
    hypersurfaces, by inclusion-exclusion over the smooth complete
    intersections of the components (each by its Chern integral)."""
    total = 0
    for k in range(len(degrees) + 1):
        for subset in combinations(degrees, k):
            total += (-1) ** k * chern_integral(n, subset)
    return total
