"""Text, JSON, CSV and LaTeX renderings of polynomials and Laurent polynomials.

Text and LaTeX list terms in descending powers.  Laurent polynomials are shown
in q = u^2, so odd u-exponents become half-integer powers of q.  JSON stores
every rational as a ``[numerator, denominator]`` pair of decimal strings.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable

from .laurent import LaurentPoly
from .ratpoly import Polynomial

FORMATS = ("text", "json", "csv", "latex")


def _rational_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _join_terms(terms: list[tuple[Fraction, str]], coeff_fmt, sep_mul: str, spaced: bool = True) -> str:
    """terms: (coefficient, monomial) with monomial '' for a constant."""
    if not terms:
        return "0"
    parts = []
    for i, (c, mono) in enumerate(terms):
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{coeff_fmt(mag)}{sep_mul}{mono}"
        else:
            body = coeff_fmt(mag)
        if i == 0:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            sign = "-" if c < 0 else "+"
            parts.append(f" {sign} {body}" if spaced else f"{sign}{body}")
    return "".join(parts)


def poly_text(p: Polynomial, var: str = "x") -> str:
    terms = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if c:
            mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
            terms.append((c, mono))
    return _join_terms(terms, _rational_text, "*")


def _q_power_text(e: int) -> str:
    # e is an exponent of u; q^(e/2)
    if e == 0:
        return ""
    if e % 2 == 0:
        j = e // 2
        return "q" if j == 1 else f"q^{j}"
    return f"q^{{{e}/2}}"


def laurent_text(lp: LaurentPoly) -> str:
    terms = [(c, _q_power_text(e)) for e, c in sorted(lp.terms().items(), reverse=True)]
    return _join_terms(terms, _rational_text, "*")


def laurent_text_u(lp: LaurentPoly) -> str:
    terms = []
    for e, c in sorted(lp.terms().items(), reverse=True):
        mono = "" if e == 0 else "u" if e == 1 else f"u^{e}"
        terms.append((c, mono))
    return _join_terms(terms, _rational_text, "*")


def render_text(obj: Any) -> str:
    if isinstance(obj, Polynomial):
        return poly_text(obj)
    if isinstance(obj, LaurentPoly):
        return laurent_text(obj)
    return str(obj)


# --- LaTeX, in the \over style of typeset tables ---------------------------


def _rational_latex(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{{{c.numerator}\\over {c.denominator}}}"


def poly_latex(p: Polynomial, var: str = "x") -> str:
    terms = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if c:
            mono = "" if i == 0 else var if i == 1 else f"{var}^{{{i}}}"
            terms.append((c, mono))
    return _join_terms(terms, _rational_latex, "", spaced=False)


def _q_power_latex(e: int) -> str:
    if e == 0:
        return ""
    if e % 2 == 0:
        j = e // 2
        if j == 1:
            return "q"
        return f"q^{{{j}}}" if j > 0 else f"q^{{-{-j}}}"
    if e > 0:
        return f"q^{{{e}\\over 2}}"
    return f"q^{{-{{{-e}\\over 2}}}}"


def laurent_latex(lp: LaurentPoly) -> str:
    terms = [(c, _q_power_latex(e)) for e, c in sorted(lp.terms().items(), reverse=True)]
    return _join_terms(terms, _rational_latex, "", spaced=False)


def render_latex(obj: Any) -> str:
    if isinstance(obj, Polynomial):
        return poly_latex(obj)
    if isinstance(obj, LaurentPoly):
        return laurent_latex(obj)
    return str(obj)


# --- JSON -------------------------------------------------------------------


def _pair(c: Fraction) -> list[str]:
    return [str(c.numerator), str(c.denominator)]


def _unpair(pair: Iterable[str]) -> Fraction:
    num, den = pair
    den_i = int(den)
    if den_i <= 0:
        raise ValueError(f"denominator must be positive, got {den}")
    return Fraction(int(num), den_i)


def to_json_obj(obj: Any) -> dict[str, Any]:
    if isinstance(obj, Polynomial):
        return {"var": "x", "coeffs": [_pair(c) for c in obj.coeffs]}
    if isinstance(obj, LaurentPoly):
        return {"var": "u", "min_exp": obj.min_exp, "coeffs": [_pair(c) for c in obj.coeffs]}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def from_json_obj(data: dict[str, Any]):
    var = data.get("var")
    coeffs = [_unpair(p) for p in data["coeffs"]]
    if var == "x":
        return Polynomial(coeffs)
    if var == "u":
        return LaurentPoly(int(data["min_exp"]), coeffs)
    raise ValueError(f"unknown variable {var!r}")


# --- CSV --------------------------------------------------------------------


def csv_cells(p: Polynomial) -> list[str]:
    """Ascending coefficients, one ``num/den`` cell each."""
    return [f"{c.numerator}/{c.denominator}" for c in p.coeffs]


def poly_from_csv_cells(cells: Iterable[str]) -> Polynomial:
    return Polynomial(Fraction(c) for c in cells if c != "")
