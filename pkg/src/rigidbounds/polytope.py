"""Lattice points of the position simplex and the volume of its enlargement."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .core import BoundCertificate, DomainError, require_admissible


@lru_cache(maxsize=None)
def _count(coeffs: tuple[int, ...], budget: int) -> int:
    if not coeffs:
        return 1
    head, rest = coeffs[0], coeffs[1:]
    return sum(_count(rest, budget - head * x) for x in range(budget // head + 1))


def lattice_count(a: int, b: int) -> int:
    """Number of x in Z_{>=0}^b with b*x1 + (b-1)*x2 + ... + xb <= a - b^2."""
    if b < 1:
        raise DomainError(f"simplex dimension must be >= 1, got {b}")
    require_admissible(a, b)
    return _count(tuple(range(b, 0, -1)), a - b * b)


def volume_plus(a: int, b: int) -> Fraction:
    """Volume of {x >= 0, b*x1 + ... + xb <= a - b(b-1)/2}, i.e. (a - b(b-1)/2)^b / (b!)^2."""
    if b < 1 or 2 * a < b * (b - 1):
        raise DomainError(f"volume needs b >= 1 and a >= b(b-1)/2, got a={a}, b={b}")
    height = Fraction(2 * a - b * (b - 1), 2)
    return height**b / factorial(b) ** 2


def certify_lattice_volume(a: int, b: int) -> BoundCertificate:
    """Lattice count of the simplex is at most the volume of the enlarged simplex."""
    require_admissible(a, b)
    return BoundCertificate.check(
        "lattice-count<=volume-plus", lattice_count(a, b), volume_plus(a, b), "<=", a=a, b=b
    )
