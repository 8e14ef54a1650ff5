import math
from fractions import Fraction
from math import ceil, factorial

import mpmath
import pytest

from rigidbounds.analytic import (
    analytic_report,
    certify_mubar_below_u,
    certify_stirling_below_u,
    certify_u_argmax,
    coarse_bound,
    refined_bound,
    stirling_bound,
    u_argmax,
    u_bound,
    u_monotonicity_scan,
    v_bound,
    w_bound,
)
from rigidbounds.core import DomainError, InadmissiblePairError
from rigidbounds.local_bounds import mubar

# mpmath at 50 digits, frozen
U_36_6 = 10886.377797913769806
COARSE_4 = 128.41537333993650758
REFINED_17 = 6762.3860148303281892


def mp_u(a, b):
    with mpmath.workdps(50):
        return (mpmath.mpf(2 * a - b * (b - 1)) / b**2 * mpmath.e**2) ** b / (2 * mpmath.pi * b)


def test_u_golden_value():
    assert u_bound(36, 6) == pytest.approx(U_36_6, rel=1e-13)


def test_u_matches_mpmath_on_grid():
    for a in range(1, 121):
        for b in range(1, math.isqrt(a) + 1):
            assert u_bound(a, b) == pytest.approx(float(mp_u(a, b)), rel=1e-12)


def test_w_at_b1():
    for a in (1, 7, 40):
        assert w_bound(a, 1) == pytest.approx(2 * a * math.e**2 / (2 * math.pi), rel=1e-14)


def test_v_domain():
    assert v_bound(17, 4) > 0
    with pytest.raises(DomainError):
        v_bound(16, 4)


def test_b_range():
    with pytest.raises(DomainError):
        u_bound(15, 4)
    with pytest.raises(DomainError):
        w_bound(5, 0)


@pytest.mark.parametrize(
    "a,b,value",
    [(4, 2, Fraction(9)), (36, 6, Fraction(64 * 21**6, 518400)), (1, 1, Fraction(2))],
)
def test_stirling_examples(a, b, value):
    assert stirling_bound(a, b) == value


def test_stirling_inadmissible():
    with pytest.raises(InadmissiblePairError):
        stirling_bound(3, 2)


def test_stirling_below_u_to_120():
    for a in range(1, 121):
        for b in range(1, 9):
            if a >= b * b:
                assert certify_stirling_below_u(a, b).holds, (a, b)


def test_stirling_below_u_overflow_path():
    c = certify_stirling_below_u(10**6, 400)
    assert c.claim_id.startswith("log(") and c.holds


def test_mubar_below_rounded_stirling():
    for a in range(1, 121):
        for b in range(1, 9):
            if a >= b * b:
                assert mubar(a, b) <= ceil(stirling_bound(a, b)), (a, b)


def test_mubar_below_u_on_table():
    for a in range(1, 37):
        for b in range(1, 7):
            if a >= b * b:
                assert certify_mubar_below_u(a, b).holds, (a, b)


def test_monotonicity_scan():
    certs = u_monotonicity_scan(100)
    assert certs and all(c.holds for c in certs)
    # at (25, 4) the hypothesis 2a - b(b+1) >= (5/2)(b+1)^2 fails (30 < 62.5)
    assert {"a": 25, "b": 4} not in [c.context for c in u_monotonicity_scan(25)]
    assert u_monotonicity_scan(3) == []


def test_monotonicity_hypothesis_is_respected():
    for c in u_monotonicity_scan(200):
        a, b = c.context["a"], c.context["b"]
        assert 2 * (2 * a - b * (b + 1)) >= 5 * (b + 1) ** 2


def test_argmax_bound_examples():
    assert certify_u_argmax(17).holds
    assert certify_u_argmax(100).holds
    with pytest.raises(DomainError):
        certify_u_argmax(16)


@pytest.mark.parametrize("a", [19, 20])
def test_argmax_bound_fails_at(a):
    # high-precision confirmation that the stated inequality is false here
    with mpmath.workdps(50):
        vals = [mp_u(a, b) for b in range(1, math.isqrt(a) + 1)]
    b = vals.index(max(vals)) + 1
    assert b == u_argmax(a) == 3
    assert 3 * (2 * a - b * (b - 1)) > 5 * a
    assert not certify_u_argmax(a).holds


def test_argmax_bound_elsewhere():
    failing = [a for a in range(17, 501) if not certify_u_argmax(a).holds]
    assert failing == [19, 20]


def test_scalar_bounds():
    assert coarse_bound(4) == pytest.approx(COARSE_4, rel=1e-13)
    assert coarse_bound(1) == pytest.approx(math.e**2 / (2 * math.pi) * 2 * math.e**2, rel=1e-14)
    assert refined_bound(17) == pytest.approx(REFINED_17, rel=1e-13)
    with pytest.raises(DomainError):
        refined_bound(16)
    with pytest.raises(DomainError):
        coarse_bound(0)


def test_report():
    r = analytic_report(16, 4)
    assert r.v is None and r.refined is None
    assert r.stirling == Fraction(2**4 * 10**4, factorial(4) ** 2)
    assert analytic_report(17, 4).v == v_bound(17, 4)
