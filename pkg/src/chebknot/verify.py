"""Range scans behind ``chebknot verify``; each returns one VerificationReport."""

from __future__ import annotations

import time
from typing import Callable

from . import alexander, bridge, chebgen
from .render import render_text
from .report import VerificationReport

SUITES = (
    "recurrence-vs-closed",
    "equidistance",
    "connection",
    "skein",
    "bridge-t1h",
    "bridge-t2h",
    "trig",
)

TRIG_TOLERANCE = 1e-9


def scan_closed_form(k_max: int, h_max: int, n_max: int) -> VerificationReport:
    started = time.perf_counter()
    report = VerificationReport(
        "recurrence-vs-closed", [("k", 1, k_max), ("h", 1, h_max), ("n", 0, n_max)]
    )
    for h in range(1, h_max + 1):
        v = chebgen.second_kind_sequence(h, n_max)
        t1 = chebgen.cheb_sequence(1, h, n_max)
        t2 = chebgen.cheb_sequence(2, h, n_max)
        for k in range(1, k_max + 1):
            ab = chebgen.equidistant_coefficients(k, h)
            seq = chebgen.cheb_sequence(k, h, n_max)
            for n in range(n_max + 1):
                closed = v[n + 2] * ab.alpha + v[n] * ab.beta
                linear = t2[n] * (k - 1) - t1[n] * (k - 2)
                report.record({"k": k, "h": h, "n": n, "form": 0}, seq[n], closed)
                report.record({"k": k, "h": h, "n": n, "form": 1}, seq[n], linear)
    return report.finish(started)


def scan_equidistance(k_max: int, h_max: int, n_max: int) -> VerificationReport:
    """T^(k+1,h)_n - T^(k,h)_n must equal the k = 1 difference for every k."""
    started = time.perf_counter()
    report = VerificationReport(
        "equidistance", [("k", 1, k_max), ("h", 1, h_max), ("n", 0, n_max)]
    )
    for h in range(1, h_max + 1):
        seqs = [chebgen.cheb_sequence(k, h, n_max) for k in range(1, k_max + 2)]
        for n in range(n_max + 1):
            base = seqs[1][n] - seqs[0][n]
            for k in range(2, k_max + 1):
                report.record({"k": k, "h": h, "n": n}, seqs[k][n] - seqs[k - 1][n], base)
    return report.finish(started)


def scan_connection(h_max: int, n_max: int) -> VerificationReport:
    started = time.perf_counter()
    report = VerificationReport("connection", [("h", 1, h_max), ("n", 0, n_max)])
    for h in range(1, h_max + 1):
        for n in range(n_max + 1):
            report.record({"h": h, "n": n}, *chebgen.connection_sides(h, n))
    return report.finish(started)


def scan_skein(n_max: int) -> VerificationReport:
    if n_max < 3:
        raise ValueError(f"skein scan needs n-max >= 3 (got {n_max})")
    started = time.perf_counter()
    report = VerificationReport("skein", [("n", 3, n_max)])
    for n in range(3, n_max + 1):
        report.record({"n": n}, *alexander.skein_sides(n))
    return report.finish(started)


def _record_even(report: VerificationReport, sides: Callable, n_max: int, h_max: int) -> None:
    # stated for odd n only; even-n data is kept but not asserted
    for n in range(2, min(n_max, 8) + 1, 2):
        for h in range(1, min(h_max, 2) + 1):
            try:
                lhs, rhs = sides(n, h)
            except (ValueError, ArithmeticError) as exc:
                report.observations.append({"n": n, "h": h, "error": str(exc)})
                continue
            report.observations.append(
                {"n": n, "h": h, "lhs": render_text(lhs), "rhs": render_text(rhs), "equal": lhs == rhs}
            )


def _even_t1h(n: int, h: int):
    ctx = bridge.SubstitutionContext(h)
    lhs = bridge.substitute_x(chebgen.cheb_sequence(1, h, n)[n], ctx)
    return lhs, ctx.x_image * alexander.torus_link_n2(n)


def _even_t2h(n: int, h: int):
    ctx = bridge.SubstitutionContext(h)
    lhs = bridge.substitute_x(chebgen.cheb_sequence(2, h, n)[n], ctx)
    rhs = alexander.U_PLUS_U_INV * (alexander.torus_knot_n2(n + 1) / alexander.U_MINUS_U_INV)
    return lhs, rhs


def scan_t1h(n_max: int, h_max: int) -> VerificationReport:
    started = time.perf_counter()
    report = VerificationReport("bridge-t1h", [("n", 1, n_max), ("h", 1, h_max)])
    for n in range(1, n_max + 1, 2):
        base = None
        for h in range(1, h_max + 1):
            report.record({"n": n, "h": h}, *bridge.t1h_sides(n, h))
            quotient = bridge.t1h_quotient(n, h)
            if base is None:
                base = quotient
            # h-invariance of T^(1,h)_n / x after substitution
            report.record({"n": n, "h": h, "quotient_vs_h1": 1}, quotient, base)
    _record_even(report, _even_t1h, n_max, h_max)
    return report.finish(started)


def scan_t2h(n_max: int, h_max: int) -> VerificationReport:
    started = time.perf_counter()
    report = VerificationReport("bridge-t2h", [("n", 1, n_max), ("h", 1, h_max)])
    for n in range(1, n_max + 1, 2):
        for h in range(1, h_max + 1):
            report.record({"n": n, "h": h}, *bridge.t2h_sides(n, h))
    _record_even(report, _even_t2h, n_max, h_max)
    return report.finish(started)


def scan_trig(k_max: int, h_max: int, n_max: int, samples: int = 1000) -> VerificationReport:
    started = time.perf_counter()
    report = VerificationReport(
        "trig", [("k", 1, k_max), ("h", 1, h_max), ("n", 0, n_max)]
    )
    worst = 0.0
    for k in range(1, k_max + 1):
        for h in range(1, h_max + 1):
            for n in range(n_max + 1):
                dev = chebgen.trig_crosscheck(chebgen.ChebParams(k, h, n), samples)
                worst = max(worst, dev)
                report.checked += 1
                if not dev < TRIG_TOLERANCE:
                    report.failures.append(
                        {"params": {"k": k, "h": h, "n": n}, "lhs": repr(dev), "rhs": f"< {TRIG_TOLERANCE}"}
                    )
    report.observations.append({"max_deviation": worst, "samples": samples})
    return report.finish(started)


def run_suite(
    suite: str, k_max: int = 10, h_max: int = 10, n_max: int = 50, samples: int = 1000
) -> list[VerificationReport]:
    if suite == "all":
        names = SUITES
    elif suite in SUITES:
        names = (suite,)
    else:
        raise ValueError(f"unknown suite {suite!r}")
    if min(k_max, h_max) < 1 or n_max < 0:
        raise ValueError("k-max and h-max must be >= 1, n-max >= 0")
    if "skein" in names and n_max < 3:
        raise ValueError(f"skein suite needs n-max >= 3 (got {n_max})")
    runners = {
        "recurrence-vs-closed": lambda: scan_closed_form(k_max, h_max, n_max),
        "equidistance": lambda: scan_equidistance(k_max, h_max, n_max),
        "connection": lambda: scan_connection(h_max, n_max),
        "skein": lambda: scan_skein(n_max),
        "bridge-t1h": lambda: scan_t1h(n_max, h_max),
        "bridge-t2h": lambda: scan_t2h(n_max, h_max),
        "trig": lambda: scan_trig(k_max, h_max, n_max, samples),
    }
    return [runners[name]() for name in names]
