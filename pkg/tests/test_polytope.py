import itertools
from fractions import Fraction
from math import factorial

import numpy as np
import pytest
from scipy.spatial import ConvexHull

from rigidbounds.core import DomainError, InadmissiblePairError
from rigidbounds.polytope import certify_lattice_volume, lattice_count, volume_plus


def brute_count(a, b):
    budget = a - b * b
    coeffs = [b - i for i in range(b)]
    ranges = [range(budget // c + 1) for c in coeffs]
    return sum(1 for x in itertools.product(*ranges) if sum(c * v for c, v in zip(coeffs, x)) <= budget)


@pytest.mark.parametrize("a,b,n", [(4, 2, 1), (16, 2, 49), (36, 6, 1)])
def test_examples(a, b, n):
    assert lattice_count(a, b) == n


def test_matches_brute_force():
    for b in range(1, 5):
        for a in range(b * b, 45):
            assert lattice_count(a, b) == brute_count(a, b), (a, b)


def test_inadmissible():
    with pytest.raises(InadmissiblePairError):
        lattice_count(3, 2)


@pytest.mark.parametrize("a,b,v", [(4, 2, Fraction(9, 4)), (36, 6, Fraction(21**6, 518400)), (1, 1, Fraction(1))])
def test_volume_examples(a, b, v):
    assert volume_plus(a, b) == v


def test_volume_domain():
    with pytest.raises(DomainError):
        volume_plus(0, 2)
    with pytest.raises(DomainError):
        volume_plus(5, 0)


def enlarged_simplex_volume(a, b):
    """Oracle: convex hull of the simplex {x >= 0, sum (b-i+1) x_i <= a - b(b-1)/2}."""
    s = a - b * (b - 1) / 2
    pts = [np.zeros(b)]
    for i in range(b):
        e = np.zeros(b)
        e[i] = s / (b - i)
        pts.append(e)
    return ConvexHull(np.array(pts)).volume


@pytest.mark.parametrize("a,b", [(4, 2), (17, 3), (30, 4), (36, 6), (50, 5)])
def test_volume_is_enlarged_simplex_volume(a, b):
    assert float(volume_plus(a, b)) == pytest.approx(enlarged_simplex_volume(a, b), rel=1e-9)


def test_simplex_volume_formula():
    # the simplex with budget s and weights b, b-1, ..., 1 has volume s^b / (b! * b!)
    assert volume_plus(10, 3) == Fraction(7**3, factorial(3) ** 2)


def test_count_below_volume():
    for a in range(1, 121):
        for b in range(1, 9):
            if a >= b * b:
                c = certify_lattice_volume(a, b)
                assert c.holds and c.relation == "<=", (a, b)
