"""Laurent polynomials in u = q^(1/2) with exact rational coefficients.

A value is a lowest exponent plus a dense run of coefficients.  Both ends of
the run are nonzero; zero is ``min_exp = 0`` with no coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .errors import NonExactDivision
from .ratpoly import Scalar, _common_denominator, as_rational, convolve_int


class LaurentPoly:
    __slots__ = ("_min_exp", "_coeffs")

    def __init__(self, min_exp: int = 0, coeffs: Iterable[Scalar] = ()):
        cs = [as_rational(c) for c in coeffs]
        lo, hi = 0, len(cs)
        while lo < hi and not cs[lo]:
            lo += 1
        while hi > lo and not cs[hi - 1]:
            hi -= 1
        if lo == hi:
            self._min_exp, self._coeffs = 0, ()
        else:
            self._min_exp, self._coeffs = int(min_exp) + lo, tuple(cs[lo:hi])

    @classmethod
    def from_terms(cls, terms: Mapping[int, Scalar]) -> "LaurentPoly":
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        coeffs: list[Scalar] = [0] * (hi - lo + 1)
        for e, c in terms.items():
            coeffs[e - lo] = c
        return cls(lo, coeffs)

    @classmethod
    def monomial(cls, exp: int, c: Scalar = 1) -> "LaurentPoly":
        return cls(exp, (c,))

    @classmethod
    def constant(cls, c: Scalar) -> "LaurentPoly":
        return cls(0, (c,))

    @property
    def min_exp(self) -> int:
        return self._min_exp

    @property
    def max_exp(self) -> int:
        return self._min_exp + len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def is_zero(self) -> bool:
        return not self._coeffs

    def terms(self) -> dict[int, Fraction]:
        return {self._min_exp + i: c for i, c in enumerate(self._coeffs) if c}

    def coefficient(self, exp: int) -> Fraction:
        i = exp - self._min_exp
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._min_exp == other._min_exp and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._min_exp, self._coeffs))

    def __repr__(self) -> str:
        from .render import laurent_text_u

        return f"LaurentPoly({laurent_text_u(self)!r})"

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self._min_exp, [-c for c in self._coeffs])

    def __add__(self, other: object) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return lp_add(self, other)

    __radd__ = __add__

    def __sub__(self, other: object) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return lp_add(self, -other)

    def __rsub__(self, other: object) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return lp_add(other, -self)

    def __mul__(self, other: object) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            c = as_rational(other)
            return LaurentPoly(self._min_exp, [x * c for x in self._coeffs])
        if isinstance(other, LaurentPoly):
            return lp_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return lp_div_exact(self, other)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by u**k."""
        if self.is_zero():
            return self
        return LaurentPoly(self._min_exp + k, self._coeffs)

    def bar(self) -> "LaurentPoly":
        return lp_bar(self)

    def evaluate(self, u0: Scalar) -> Fraction:
        u0 = as_rational(u0)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * u0 + c
        if self._min_exp >= 0:
            return acc * u0**self._min_exp
        return acc / u0 ** (-self._min_exp)


def _coerce(other: object):
    if isinstance(other, LaurentPoly):
        return other
    if isinstance(other, (int, Fraction)):
        return LaurentPoly.constant(other)
    return NotImplemented


U = LaurentPoly.monomial(1)
U_INV = LaurentPoly.monomial(-1)


def lp_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    lo = min(a.min_exp, b.min_exp)
    hi = max(a.max_exp, b.max_exp)
    out = [Fraction(0)] * (hi - lo + 1)
    for i, c in enumerate(a.coeffs):
        out[a.min_exp - lo + i] += c
    for i, c in enumerate(b.coeffs):
        out[b.min_exp - lo + i] += c
    return LaurentPoly(lo, out)


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if a.is_zero() or b.is_zero():
        return LaurentPoly()
    na, da = _common_denominator(a.coeffs)
    nb, db = _common_denominator(b.coeffs)
    den = da * db
    prod = convolve_int(na, nb)
    return LaurentPoly(a.min_exp + b.min_exp, [Fraction(v, den) for v in prod])


def lp_div_exact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Return c with ``a == b * c``.

    Both operands are shifted to ordinary polynomials in u (their lowest
    coefficients are nonzero, so Laurent divisibility is plain polynomial
    divisibility) and long-divided; any remainder raises NonExactDivision.
    """
    if b.is_zero():
        raise ZeroDivisionError("Laurent division by zero")
    if a.is_zero():
        return LaurentPoly()
    num = list(a.coeffs)
    den = b.coeffs
    m = len(den) - 1
    if len(num) - 1 < m:
        raise NonExactDivision(f"degree of divisor exceeds dividend span")
    lead = den[-1]
    quot = [Fraction(0)] * (len(num) - m)
    for i in range(len(quot) - 1, -1, -1):
        c = num[i + m] / lead
        quot[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[:m]):
        raise NonExactDivision("remainder is nonzero")
    return LaurentPoly(a.min_exp - b.min_exp, quot)


def lp_bar(a: LaurentPoly) -> LaurentPoly:
    """The involution u -> 1/u."""
    if a.is_zero():
        return a
    return LaurentPoly(-a.max_exp, reversed(a.coeffs))


def u_power_sum(n: int, sign: int = 1) -> LaurentPoly:
    """``u**n + sign * u**-n`` for n >= 0."""
    if n == 0:
        return LaurentPoly.constant(1 + sign)
    return LaurentPoly.from_terms({n: 1, -n: sign})
