"""Exact univariate polynomials in x over the rationals.

Coefficients are stored densely in ascending order.  The zero polynomial is
the empty coefficient tuple and has degree ``-inf``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Union

Rational = Fraction
Scalar = Union[int, Fraction]

NEG_INF = -math.inf


def as_rational(c: Scalar) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"cannot use {type(c).__name__} as an exact coefficient")


def _strip(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


def _common_denominator(coeffs: tuple[Fraction, ...]) -> tuple[list[int], int]:
    den = 1
    for c in coeffs:
        den = math.lcm(den, c.denominator)
    return [c.numerator * (den // c.denominator) for c in coeffs], den


def convolve_int(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


class Polynomial:
    """Immutable dense polynomial with :class:`fractions.Fraction` coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self._coeffs = _strip([as_rational(c) for c in coeffs])

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...]) -> "Polynomial":
        # caller guarantees canonical form
        p = cls.__new__(cls)
        p._coeffs = coeffs
        return p

    @classmethod
    def x(cls) -> "Polynomial":
        return cls._raw((Fraction(0), Fraction(1)))

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> "Polynomial":
        if degree < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls([0] * degree + [c])

    @classmethod
    def from_terms(cls, terms: Mapping[int, Scalar]) -> "Polynomial":
        """Build from an ``{exponent: coefficient}`` mapping."""
        if not terms:
            return cls()
        top = max(terms)
        coeffs: list[Scalar] = [0] * (top + 1)
        for e, c in terms.items():
            if e < 0:
                raise ValueError("polynomial exponents must be nonnegative")
            coeffs[e] = c
        return cls(coeffs)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> Union[int, float]:
        return len(self._coeffs) - 1 if self._coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self._coeffs

    def leading_coefficient(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == Polynomial.constant(other)._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        from .render import poly_text

        return f"Polynomial({poly_text(self)!r})"

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(tuple(-c for c in self._coeffs))

    def __add__(self, other: object) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return poly_add(self, other)

    __radd__ = __add__

    def __sub__(self, other: object) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return poly_add(self, -other)

    def __rsub__(self, other: object) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return poly_add(other, -self)

    def __mul__(self, other: object) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return poly_scale(self, other)
        if isinstance(other, Polynomial):
            return poly_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __call__(self, x0: Scalar) -> Fraction:
        return poly_eval(self, x0)

    def scale_argument(self, c: Scalar) -> "Polynomial":
        """Return ``p(c*x)``."""
        c = as_rational(c)
        out = []
        power = Fraction(1)
        for a in self._coeffs:
            out.append(a * power)
            power *= c
        return Polynomial(out)

    def is_even_or_odd(self) -> bool:
        """True when only powers of one parity occur."""
        parities = {i % 2 for i, c in enumerate(self._coeffs) if c}
        return len(parities) <= 1


def _coerce(other: object):
    if isinstance(other, Polynomial):
        return other
    if isinstance(other, (int, Fraction)):
        return Polynomial.constant(other)
    return NotImplemented


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    ca, cb = a.coeffs, b.coeffs
    if len(ca) < len(cb):
        ca, cb = cb, ca
    out = list(ca)
    for i, c in enumerate(cb):
        out[i] += c
    return Polynomial._raw(_strip(out))


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero() or b.is_zero():
        return Polynomial()
    na, da = _common_denominator(a.coeffs)
    nb, db = _common_denominator(b.coeffs)
    den = da * db
    # product of nonzero leading coefficients is nonzero, so no stripping needed
    return Polynomial._raw(tuple(Fraction(v, den) for v in convolve_int(na, nb)))


def poly_scale(a: Polynomial, c: Scalar) -> Polynomial:
    c = as_rational(c)
    if not c:
        return Polynomial()
    return Polynomial._raw(tuple(x * c for x in a.coeffs))


def poly_eval(a: Polynomial, x0: Scalar) -> Fraction:
    x0 = as_rational(x0)
    acc = Fraction(0)
    for c in reversed(a.coeffs):
        acc = acc * x0 + c
    return acc


def canonicalize(coeffs: Iterable[Scalar]) -> Polynomial:
    return Polynomial(coeffs)
