"""Alexander polynomials of torus knots T(n, l) and torus links T(n, 2).

All values are Laurent polynomials in u = q^(1/2).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .errors import NonCoprime, NotEven, NotOdd
from .laurent import LaurentPoly, lp_bar, lp_div_exact, u_power_sum
from .report import VerificationReport

U_MINUS_U_INV = u_power_sum(1, -1)
U_PLUS_U_INV = u_power_sum(1, 1)


@dataclass(frozen=True)
class TorusParams:
    n: int
    l: int

    def __post_init__(self):
        if self.n < 1 or self.l < 1:
            raise ValueError(f"torus parameters must be positive (got n={self.n}, l={self.l})")


def torus_alexander(t: TorusParams) -> LaurentPoly:
    """(u^nl - u^-nl)(u - u^-1) / ((u^n - u^-n)(u^l - u^-l)) for coprime n, l."""
    g = math.gcd(t.n, t.l)
    if g != 1:
        raise NonCoprime(t.n, t.l, g)
    num = u_power_sum(t.n * t.l, -1) * U_MINUS_U_INV
    den = u_power_sum(t.n, -1) * u_power_sum(t.l, -1)
    return lp_div_exact(num, den)


def torus_knot_n2(n: int) -> LaurentPoly:
    if n < 1 or n % 2 == 0:
        raise NotOdd(f"T(n, 2) is a knot only for odd n >= 1 (got n={n})")
    return lp_div_exact(u_power_sum(n, 1), U_PLUS_U_INV)


def torus_link_n2(n: int) -> LaurentPoly:
    if n < 2 or n % 2:
        raise NotEven(f"T(n, 2) is a two-component link only for even n >= 2 (got n={n})")
    return lp_div_exact(u_power_sum(n, -1), U_PLUS_U_INV)


def torus_n2(n: int) -> LaurentPoly:
    """Knot or link invariant of T(n, 2), dispatching on the parity of n."""
    return torus_knot_n2(n) if n % 2 else torus_link_n2(n)


def skein_sides(n: int) -> tuple[LaurentPoly, LaurentPoly]:
    if n < 3:
        raise ValueError(f"the T(n, 2) skein tower needs n >= 3 (got n={n})")
    lhs = torus_n2(n) - torus_n2(n - 2)
    rhs = U_MINUS_U_INV * torus_n2(n - 1)
    return lhs, rhs


def skein_family_check(n: int) -> VerificationReport:
    """Delta_{n,2} - Delta_{n-2,2} == (u - 1/u) Delta_{n-1,2}.

    Switching one crossing of T(n, 2) gives T(n-2, 2); smoothing it gives
    T(n-1, 2).
    """
    started = time.perf_counter()
    report = VerificationReport("skein", [("n", n, n)])
    report.record({"n": n}, *skein_sides(n))
    return report.finish(started)


def palindromy_check(n: int) -> VerificationReport:
    started = time.perf_counter()
    report = VerificationReport("palindromy", [("n", n, n)])
    delta = torus_n2(n)
    expected = delta if n % 2 else -delta
    report.record({"n": n}, lp_bar(delta), expected)
    return report.finish(started)
