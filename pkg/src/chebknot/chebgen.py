"""Generalized equidistant Chebyshev polynomials T^(k,h)_n.

k is the kind, h the hyperkind.  (k, h) = (1, 1) and (2, 1) are the standard
first/second-kind polynomials, h = 2 gives the monic ones.  Every member obeys

    T_{n+1} = (2/h) x T_n - T_{n-1},   T_0 = A,   T_1 = B x

with A = (k-1) - (k-2) h and B = (k-1)(2/h) - (k-2).
"""

from __future__ import annotations

import threading
import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import IndexOutOfRange
from .ratpoly import Polynomial
from .report import VerificationReport


@dataclass(frozen=True)
class ChebParams:
    k: int
    h: int
    n: int

    def __post_init__(self):
        if self.k < 1 or self.h < 1 or self.n < 0:
            raise ValueError(
                f"need k >= 1, h >= 1, n >= 0 (got k={self.k}, h={self.h}, n={self.n})"
            )


@dataclass(frozen=True)
class SeedPair:
    A: Fraction
    B: Fraction


@dataclass(frozen=True)
class EquidistantCoeffs:
    alpha: Fraction
    beta: Fraction


def _check_kh(k: int, h: int) -> None:
    if k < 1 or h < 1:
        raise ValueError(f"need k >= 1 and h >= 1 (got k={k}, h={h})")


def seed_pair(k: int, h: int) -> SeedPair:
    _check_kh(k, h)
    return SeedPair(
        A=Fraction((k - 1) - (k - 2) * h),
        B=Fraction(2 * (k - 1), h) - (k - 2),
    )


def equidistant_coefficients(k: int, h: int) -> EquidistantCoeffs:
    _check_kh(k, h)
    return EquidistantCoeffs(
        alpha=(k - 1) - Fraction((k - 2) * h, 2),
        beta=Fraction((k - 2) * h, 2),
    )


class _GrowingSequences:
    """Per-key prefix cache for recurrence sequences; extended on demand."""

    def __init__(self, seeds):
        self._seeds = seeds
        self._seqs: dict[tuple, list[Polynomial]] = {}
        self._lock = threading.Lock()

    def get(self, key: tuple, h: int, length: int) -> tuple[Polynomial, ...]:
        with self._lock:
            seq = self._seqs.get(key)
            if seq is None:
                seq = self._seqs[key] = list(self._seeds(*key))
            if len(seq) < length:
                step = Polynomial((0, Fraction(2, h)))
                while len(seq) < length:
                    seq.append(step * seq[-1] - seq[-2])
            return tuple(seq[:length])

    def clear(self) -> None:
        with self._lock:
            self._seqs.clear()


def _first_kind_seeds(k: int, h: int) -> tuple[Polynomial, Polynomial]:
    s = seed_pair(k, h)
    return Polynomial((s.A,)), Polynomial((0, s.B))


def _second_kind_seeds(h: int) -> tuple[Polynomial, Polynomial]:
    # V_{-2} = -1, V_{-1} = 0 continue the recurrence backwards from V_0 = 1
    return Polynomial((-1,)), Polynomial()


_CHEB = _GrowingSequences(_first_kind_seeds)
_SECOND = _GrowingSequences(_second_kind_seeds)


def clear_caches() -> None:
    _CHEB.clear()
    _SECOND.clear()


def cheb_sequence(k: int, h: int, n_max: int) -> tuple[Polynomial, ...]:
    """T^(k,h)_0 .. T^(k,h)_{n_max} from the three-term recurrence."""
    _check_kh(k, h)
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    return _CHEB.get((k, h), h, n_max + 1)


def cheb_recurrence(p: ChebParams) -> Polynomial:
    return cheb_sequence(p.k, p.h, p.n)[p.n]


def chebyshev(k: int, h: int, n: int) -> Polynomial:
    """Convenience wrapper: T^(k,h)_n."""
    return cheb_recurrence(ChebParams(k, h, n))


def second_kind_sequence(h: int, n_max: int) -> tuple[Polynomial, ...]:
    """V^(h)_{-2} .. V^(h)_{n_max}; index i holds V_{i-2}."""
    if h < 1:
        raise ValueError("h must be >= 1")
    return _SECOND.get((h,), h, n_max + 3)


def second_kind_basis(h: int, n: int) -> Polynomial:
    if n < -2:
        raise IndexOutOfRange(f"V^(h)_n is defined for n >= -2 (got n={n})")
    return second_kind_sequence(h, max(n, 0))[n + 2]


def cheb_closed_form(p: ChebParams) -> Polynomial:
    """alpha * V_n + beta * V_{n-2}, the sine-ratio form written in the V basis."""
    ab = equidistant_coefficients(p.k, p.h)
    v = second_kind_sequence(p.h, p.n)
    return v[p.n + 2] * ab.alpha + v[p.n] * ab.beta


def linear_combination_form(p: ChebParams) -> Polynomial:
    t2 = cheb_sequence(2, p.h, p.n)[p.n]
    t1 = cheb_sequence(1, p.h, p.n)[p.n]
    return t2 * (p.k - 1) - t1 * (p.k - 2)


def connection_sides(h: int, n: int) -> tuple[Polynomial, Polynomial]:
    if n < 0:
        raise ValueError("n must be nonnegative")
    lhs = cheb_sequence(1, h, n)[n] * 2
    v = second_kind_sequence(h, n)
    rhs = (v[n + 2] - v[n]) * h
    return lhs, rhs


def connection_first_second(h: int, n: int) -> VerificationReport:
    """Check 2 T^(1,h)_n == h (V^(h)_n - V^(h)_{n-2})."""
    started = time.perf_counter()
    report = VerificationReport("connection", [("h", h, h), ("n", n, n)])
    report.record({"h": h, "n": n}, *connection_sides(h, n))
    return report.finish(started)


def equidistance_delta(k: int, h: int, n: int) -> Polynomial:
    _check_kh(k, h)
    if n < 0:
        raise ValueError("n must be nonnegative")
    return cheb_sequence(k + 1, h, n)[n] - cheb_sequence(k, h, n)[n]


# --- floating-point cross-check -------------------------------------------
#
# Monomial-basis Chebyshev coefficients cancel heavily (sum |c_i x^i| grows
# like (1 + sqrt 2)^n), so plain double Horner loses ~1e-5 by n = 30.  The
# polynomial is evaluated in double-double arithmetic instead; coefficients
# are split exactly into hi + lo doubles.

_SPLITTER = 134217729.0  # 2**27 + 1


def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _split(a):
    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def _two_prod(a, b):
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def _fast_two_sum(a, b):
    s = a + b
    return s, b - (s - a)


def _dd_coeff(c: Fraction) -> tuple[float, float]:
    hi = float(c)
    return hi, float(c - Fraction(hi))


def eval_double_double(p: Polynomial, x: np.ndarray) -> np.ndarray:
    """Evaluate p at float points with ~106-bit intermediate precision."""
    x = np.asarray(x, dtype=np.float64)
    if p.is_zero():
        return np.zeros_like(x)
    coeffs = [_dd_coeff(c) for c in p.coeffs]
    hi = np.full_like(x, coeffs[-1][0])
    lo = np.full_like(x, coeffs[-1][1])
    for ch, cl in reversed(coeffs[:-1]):
        # (hi, lo) * x
        ph, pl = _two_prod(hi, x)
        pl = pl + lo * x
        hi, lo = _fast_two_sum(ph, pl)
        # + (ch, cl)
        sh, sl = _two_sum(hi, ch)
        sl = sl + lo + cl
        hi, lo = _fast_two_sum(sh, sl)
    return hi + lo


def sine_ratio_form(k: int, h: int, n: int, theta: np.ndarray) -> np.ndarray:
    ab = equidistant_coefficients(k, h)
    s = np.sin(theta)
    return (float(ab.alpha) * np.sin((n + 1) * theta) + float(ab.beta) * np.sin((n - 1) * theta)) / s


def trig_crosscheck(p: ChebParams, sample_count: int = 1000) -> float:
    """Max |T^(k,h)_n(h cos t) - trig form(t)| over t evenly spread in [0.1, pi - 0.1]."""
    if sample_count < 1:
        raise ValueError("sample_count must be positive")
    theta = np.linspace(0.1, np.pi - 0.1, sample_count)
    poly_vals = eval_double_double(cheb_recurrence(p), p.h * np.cos(theta))
    trig_vals = sine_ratio_form(p.k, p.h, p.n, theta)
    return float(np.max(np.abs(poly_vals - trig_vals)))
