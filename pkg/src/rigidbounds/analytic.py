"""Analytic majorants of the word count and the sqrt(a)-exponential bounds.

Float policy: binary64 with ``math.pi`` and ``math.e``.  The exact side of a
mixed comparison is computed first; the float side gets a relative slack
(``STIRLING_REL_TOL`` or ``TABLE_REL_TOL``).  When a power would overflow,
both sides are compared through natural logarithms instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, isqrt

from .core import BoundCertificate, DomainError, require_admissible
from .local_bounds import mubar

STIRLING_REL_TOL = 1e-12
TABLE_REL_TOL = 1e-9
E2 = math.e**2


def _check_b_range(a: int, b: int) -> None:
    if not 1 <= b <= isqrt(max(a, 0)):
        raise DomainError(f"need 1 <= b <= floor(sqrt(a)), got a={a}, b={b}")


def _majorant(base: float, b: int) -> float:
    try:
        return (base * E2) ** b / (2 * math.pi * b)
    except OverflowError:
        return math.inf


def _log_majorant(base: float, b: int) -> float:
    return b * (math.log(base) + 2.0) - math.log(2 * math.pi * b)


def u_ratio(a: int, b: int) -> float:
    return (2 * a - b * (b - 1)) / (b * b)


def u_bound(a: int, b: int) -> float:
    """(1/(2 pi b)) * ((2a - b(b-1))/b^2 * e^2)^b; ``inf`` past the float range."""
    _check_b_range(a, b)
    return _majorant(u_ratio(a, b), b)


def log_u_bound(a: int, b: int) -> float:
    _check_b_range(a, b)
    return _log_majorant(u_ratio(a, b), b)


def v_bound(a: int, b: int) -> float:
    """(1/(2 pi b)) * (5a/(3b^2) * e^2)^b, stated for a >= 17."""
    if a < 17:
        raise DomainError(f"v_b is only stated for a >= 17, got a={a}")
    _check_b_range(a, b)
    return _majorant(5 * a / (3 * b * b), b)


def w_bound(a: int, b: int) -> float:
    """(1/(2 pi b)) * (2a/b^2 * e^2)^b."""
    _check_b_range(a, b)
    return _majorant(2 * a / (b * b), b)


def stirling_bound(a: int, b: int) -> Fraction:
    """2^b * (a - b(b-1)/2)^b / (b!)^2, exactly."""
    require_admissible(a, b)
    return Fraction(2 * a - b * (b - 1)) ** b / factorial(b) ** 2


def _log_fraction(x: Fraction) -> float:
    return math.log(x.numerator) - math.log(x.denominator)


def certify_stirling_below_u(a: int, b: int) -> BoundCertificate:
    require_admissible(a, b)
    _check_b_range(a, b)
    exact = stirling_bound(a, b)
    u = u_bound(a, b)
    if math.isfinite(u):
        return BoundCertificate.check(
            "stirling<=u_b", exact, u, "<=", rel_tol=STIRLING_REL_TOL, a=a, b=b
        )
    return BoundCertificate.check(
        "log(stirling)<=log(u_b)",
        _log_fraction(exact),
        log_u_bound(a, b) + math.log1p(STIRLING_REL_TOL),
        "<=",
        a=a,
        b=b,
    )


def u_monotonicity_scan(a_max: int) -> list[BoundCertificate]:
    """Certify u_b < u_{b+1} wherever 2a - b(b+1) >= (5/2)(b+1)^2 and b+1 <= floor(sqrt(a))."""
    certs = []
    for a in range(1, a_max + 1):
        for b in range(1, isqrt(a)):
            if 2 * (2 * a - b * (b + 1)) < 5 * (b + 1) ** 2:
                continue
            lo, hi = u_bound(a, b), u_bound(a, b + 1)
            if math.isfinite(hi):
                certs.append(BoundCertificate.check("u_b<u_(b+1)", lo, hi, "<", a=a, b=b))
            else:
                certs.append(
                    BoundCertificate.check(
                        "log(u_b)<log(u_(b+1))", log_u_bound(a, b), log_u_bound(a, b + 1), "<", a=a, b=b
                    )
                )
    return certs


def u_argmax(a: int) -> int:
    """Index b in 1..floor(sqrt(a)) maximizing u_b; smallest b on ties."""
    best_b, best = 1, -math.inf
    for b in range(1, isqrt(a) + 1):
        val = log_u_bound(a, b)
        if val > best:
            best_b, best = b, val
    return best_b


def certify_u_argmax(a: int) -> BoundCertificate:
    """For a >= 17 the maximizing index satisfies 2a - b(b-1) <= (5/3) a."""
    if a < 17:
        raise DomainError(f"argmax bound is stated for a >= 17, got a={a}")
    b = u_argmax(a)
    return BoundCertificate.check(
        "2a-b_max(b_max-1)<=5a/3", 2 * a - b * (b - 1), Fraction(5 * a, 3), "<=", a=a, b_max=b
    )


def certify_mubar_below_u(a: int, b: int) -> BoundCertificate:
    require_admissible(a, b)
    return BoundCertificate.check(
        "mubar<=u_b", mubar(a, b), u_bound(a, b), "<=", rel_tol=TABLE_REL_TOL, a=a, b=b
    )


def coarse_bound(a: int) -> float:
    """e^2/(2 pi s) * (2 e^2)^s with s = floor(sqrt(a)); valid for every a >= 1."""
    if a < 1:
        raise DomainError(f"need a >= 1, got {a}")
    s = isqrt(a)
    return E2 / (2 * math.pi * s) * (2 * E2) ** s


def refined_bound(a: int) -> float:
    """e^2/(2 pi s) * (5/3 e^2)^s with s = floor(sqrt(a)); stated for a >= 17."""
    if a < 17:
        raise DomainError(f"refined bound is stated for a >= 17, got {a}")
    s = isqrt(a)
    return E2 / (2 * math.pi * s) * (5 / 3 * E2) ** s


@dataclass(frozen=True)
class AnalyticReport:
    a: int
    b: int
    u: float
    v: float | None
    w: float
    stirling: Fraction
    coarse: float
    refined: float | None


def analytic_report(a: int, b: int) -> AnalyticReport:
    require_admissible(a, b)
    _check_b_range(a, b)
    return AnalyticReport(
        a=a,
        b=b,
        u=u_bound(a, b),
        v=v_bound(a, b) if a >= 17 else None,
        w=w_bound(a, b),
        stirling=stirling_bound(a, b),
        coarse=coarse_bound(a),
        refined=refined_bound(a) if a >= 17 else None,
    )
