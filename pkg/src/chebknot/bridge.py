"""Substituting x = (h/2)(u + 1/u) links T^(1,h), T^(2,h) to T(n, 2) invariants."""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from .alexander import U_MINUS_U_INV, U_PLUS_U_INV, torus_knot_n2, torus_link_n2
from .chebgen import cheb_sequence
from .errors import AsymmetricInput, NotOdd
from .laurent import LaurentPoly, lp_bar, lp_div_exact
from .ratpoly import Polynomial, _common_denominator
from .report import VerificationReport


@dataclass(frozen=True)
class SubstitutionContext:
    h: int

    def __post_init__(self):
        if self.h < 1:
            raise ValueError(f"h must be >= 1 (got {self.h})")

    @property
    def x_image(self) -> LaurentPoly:
        return U_PLUS_U_INV * Fraction(self.h, 2)


def _as_ctx(ctx) -> SubstitutionContext:
    return ctx if isinstance(ctx, SubstitutionContext) else SubstitutionContext(ctx)


def substitute_x(p: Polynomial, ctx: SubstitutionContext | int) -> LaurentPoly:
    """Image of p under x -> (h/2)(u + 1/u).

    Horner in y = u + 1/u on integer numerators of p((h/2) y); the image of
    y^i spans exponents -i..i, so the accumulator is a dense list over that
    window.
    """
    ctx = _as_ctx(ctx)
    if p.is_zero():
        return LaurentPoly()
    nums, den = _common_denominator(p.scale_argument(Fraction(ctx.h, 2)).coeffs)
    deg = len(nums) - 1
    # acc[j] is the coefficient of u^(j - deg)
    acc = [0] * (2 * deg + 1)
    acc[deg] = nums[deg]
    width = 0
    for c in reversed(nums[:-1]):
        nxt = [0] * (2 * deg + 1)
        for j in range(deg - width, deg + width + 1):
            v = acc[j]
            if v:
                nxt[j - 1] += v
                nxt[j + 1] += v
        width += 1
        nxt[deg] += c
        acc = nxt
    return LaurentPoly(-deg, [Fraction(v, den) for v in acc])


def _require_odd(n: int) -> None:
    if n < 1 or n % 2 == 0:
        raise NotOdd(f"bridge identities are stated for odd n >= 1 (got n={n})")


def t1h_sides(n: int, h: int) -> tuple[LaurentPoly, LaurentPoly]:
    ctx = SubstitutionContext(h)
    lhs = substitute_x(cheb_sequence(1, h, n)[n], ctx)
    rhs = ctx.x_image * torus_knot_n2(n)
    return lhs, rhs


def t2h_sides(n: int, h: int) -> tuple[LaurentPoly, LaurentPoly]:
    ctx = SubstitutionContext(h)
    lhs = substitute_x(cheb_sequence(2, h, n)[n], ctx)
    # 2x/h maps to u + 1/u
    rhs = U_PLUS_U_INV * lp_div_exact(torus_link_n2(n + 1), U_MINUS_U_INV)
    return lhs, rhs


def t1h_quotient(n: int, h: int) -> LaurentPoly:
    """substitute_x(T^(1,h)_n) / substitute_x(x); should not depend on h."""
    ctx = SubstitutionContext(h)
    return lp_div_exact(substitute_x(cheb_sequence(1, h, n)[n], ctx), ctx.x_image)


def verify_t1h(n: int, h: int) -> VerificationReport:
    """T^(1,h)_n(x) == x * Delta^K_{n,2}, plus h-invariance of the quotient over h = 1..10."""
    _require_odd(n)
    started = time.perf_counter()
    report = VerificationReport("bridge-t1h", [("n", n, n), ("h", h, h)])
    report.record({"n": n, "h": h}, *t1h_sides(n, h))
    base = t1h_quotient(n, 1)
    for hh in range(1, 11):
        report.record({"n": n, "h": hh, "quotient_vs_h": 1}, t1h_quotient(n, hh), base)
    return report.finish(started)


def verify_t2h(n: int, h: int) -> VerificationReport:
    _require_odd(n)
    started = time.perf_counter()
    report = VerificationReport("bridge-t2h", [("n", n, n), ("h", h, h)])
    report.record({"n": n, "h": h}, *t2h_sides(n, h))
    return report.finish(started)


def symmetric_to_polynomial(lp: LaurentPoly, h: int) -> Polynomial:
    """Invert x -> (h/2)(u + 1/u) on a bar-symmetric Laurent polynomial.

    Writes lp = c_0 + sum_j c_j (u^j + u^-j), replaces u^j + u^-j by the monic
    first-kind polynomial T^(1,2)_j at y, then sets y = 2x/h.
    """
    if lp_bar(lp) != lp:
        raise AsymmetricInput("Laurent polynomial is not invariant under u -> 1/u")
    top = max(lp.max_exp, 0)
    monic = cheb_sequence(1, 2, top)
    out = Polynomial((lp.coefficient(0),))
    for j in range(1, top + 1):
        c = lp.coefficient(j)
        if c:
            out = out + monic[j] * c
    return out.scale_argument(Fraction(2, h))


def chebyshev_from_alexander(n: int, h: int) -> Polynomial:
    _require_odd(n)
    ctx = SubstitutionContext(h)
    return symmetric_to_polynomial(ctx.x_image * torus_knot_n2(n), h)
