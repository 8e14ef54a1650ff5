"""Shared value types and exact-comparison helpers.

Every bound in this package is an unbounded ``int``; every ratio is a
:class:`fractions.Fraction`.  Floats only appear in :mod:`rigidbounds.analytic`
and are converted to exact rationals before they enter a certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, NamedTuple

ExactRational = Fraction

RELATIONS = ("<", "<=", "=")


class InadmissiblePairError(ValueError):
    """Raised for a pair (a, b) outside the domain a >= b**2."""

    def __init__(self, a: int, b: int):
        super().__init__(f"pair (a={a}, b={b}) is inadmissible: need a >= b^2 = {b * b}")
        self.a = a
        self.b = b


class DomainError(ValueError):
    pass


class StructuralError(ValueError):
    pass


class LocalPair(NamedTuple):
    """Codimension budget ``a`` and rank defect ``b`` of a constraint locus."""

    a: int
    b: int

    @property
    def admissible(self) -> bool:
        return is_admissible(self)


def is_admissible(p: LocalPair | tuple[int, int]) -> bool:
    a, b = p
    return a >= 0 and b >= 0 and a >= b * b


def require_admissible(a: int, b: int) -> None:
    if a < 0 or b < 0 or a < b * b:
        raise InadmissiblePairError(a, b)


@dataclass(frozen=True)
class FamilyParams:
    """A complete intersection of ``k1`` quadrics and ``k2`` cubics."""

    k1: int
    k2: int

    def __post_init__(self):
        if self.k1 < 0 or self.k2 < 0:
            raise DomainError(f"k1, k2 must be non-negative, got ({self.k1}, {self.k2})")
        if self.M < 4:
            raise DomainError(f"dimension M = k1 + 2*k2 = {self.M} < 4")

    @property
    def k(self) -> int:
        return self.k1 + self.k2

    @property
    def M(self) -> int:
        return self.k1 + 2 * self.k2

    @property
    def d(self) -> int:
        return 2**self.k1 * 3**self.k2


def power(base: int, exponent: int) -> Fraction:
    """``base**exponent`` as an exact rational; negative exponents allowed."""
    return Fraction(base) ** exponent


def _exact(x: int | Fraction | float) -> int | Fraction:
    if isinstance(x, float):
        return Fraction(x)
    return x


def compare(lhs, rhs, relation: str, rel_tol: float | Fraction = 0) -> bool:
    """Evaluate ``lhs relation rhs`` exactly.

    With ``rel_tol > 0`` the right-hand side is relaxed to ``rhs * (1 + rel_tol)``
    for ``<=`` (the slack is applied on the float side of a mixed comparison).
    """
    if relation not in RELATIONS:
        raise ValueError(f"unknown relation {relation!r}")
    lhs, rhs = _exact(lhs), _exact(rhs)
    if relation == "=":
        return lhs == rhs
    if relation == "<":
        return lhs < rhs
    tol = Fraction(rel_tol)
    return lhs <= rhs + abs(rhs) * tol


@dataclass(frozen=True)
class BoundCertificate:
    """One verified inequality with both sides kept exactly."""

    claim_id: str
    lhs: int | Fraction
    rhs: int | Fraction
    relation: str
    holds: bool
    context: dict[str, Any] = field(default_factory=dict)
    rel_tol: Fraction = Fraction(0)

    @classmethod
    def check(cls, claim_id: str, lhs, rhs, relation: str = "<=", rel_tol=0, **context) -> BoundCertificate:
        lhs, rhs = _exact(lhs), _exact(rhs)
        tol = Fraction(rel_tol)
        return cls(
            claim_id=claim_id,
            lhs=lhs,
            rhs=rhs,
            relation=relation,
            holds=compare(lhs, rhs, relation, tol),
            context=dict(context),
            rel_tol=tol,
        )

    def __str__(self) -> str:
        mark = "PASS" if self.holds else "FAIL"
        ctx = ", ".join(f"{k}={v}" for k, v in self.context.items())
        return f"[{mark}] {self.claim_id}: {self.lhs} {self.relation} {self.rhs} ({ctx})"
