"""Sequence tests, including independent oracles.

The power-series oracle below rebuilds sec t + tan t from scratch: sin and
cos series straight from factorials, then one exact series division.  It
shares no code with the boustrophedon fill in `sequences`, so agreement
actually means something.
"""

from fractions import Fraction
from math import factorial

import pytest

from superradial.sequences import (
    bernoulli,
    bernoulli_list,
    check_tangent_identity,
    euler_number,
    is_alternating,
    tangent_coefficient,
    zigzag,
    zigzag_bruteforce,
    zigzag_list,
)

F = Fraction

# A000111, frozen by hand.
ZIGZAG_KNOWN = [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792, 2702765]

# B_0..B_12 with B_1 = -1/2, frozen by hand.
BERNOULLI_KNOWN = [
    F(1),
    F(-1, 2),
    F(1, 6),
    F(0),
    F(-1, 30),
    F(0),
    F(1, 42),
    F(0),
    F(-1, 30),
    F(0),
    F(5, 66),
    F(0),
    F(-691, 2730),
]


def _series_divide(num, den, terms):
    """Coefficients of num/den as power series, den[0] != 0."""
    q = []
    for n in range(terms):
        acc = num[n] if n < len(num) else F(0)
        for k in range(n):
            dk = den[n - k] if n - k < len(den) else F(0)
            acc -= q[k] * dk
        q.append(acc / den[0])
    return q


def secant_tangent_series(terms):
    """Exact coefficients of sec t + tan t, built only from factorials."""
    sin = [F(0)] * terms
    cos = [F(0)] * terms
    for k in range(terms):
        if k % 2 == 0:
            cos[k] = F((-1) ** (k // 2), factorial(k))
        else:
            sin[k] = F((-1) ** ((k - 1) // 2), factorial(k))
    one_plus_sin = [a + b for a, b in zip([F(1)] + [F(0)] * (terms - 1), sin)]
    return _series_divide(one_plus_sin, cos, terms)


def test_zigzag_known_values():
    assert zigzag_list(12) == ZIGZAG_KNOWN


def test_zigzag_against_series_oracle():
    series = secant_tangent_series(15)
    for n in range(15):
        assert zigzag(n) == series[n] * factorial(n)


def test_zigzag_matches_bruteforce():
    for n in range(9):
        assert zigzag(n) == zigzag_bruteforce(n)


def test_bruteforce_guard():
    with pytest.raises(ValueError):
        zigzag_bruteforce(11)
    with pytest.raises(ValueError):
        zigzag(-1)


def test_is_alternating():
    assert is_alternating([])
    assert is_alternating([0])
    assert is_alternating([1, 0])
    assert is_alternating([1, 0, 2])
    assert not is_alternating([0, 1, 2])
    assert is_alternating([2, 0, 3, 1])
    assert not is_alternating([2, 1, 0])


def test_bernoulli_known_values():
    assert bernoulli_list(12) == BERNOULLI_KNOWN
    assert bernoulli(20) == F(-174611, 330)


def test_euler_numbers():
    assert [euler_number(n) for n in (0, 2, 4, 6, 8)] == [1, -1, 5, -61, 1385]
    assert euler_number(3) == 0


def test_tangent_identity():
    for m in range(1, 7):
        assert check_tangent_identity(m)
    assert tangent_coefficient(1) == 1
    assert tangent_coefficient(3) == 16
    assert tangent_coefficient(4) == 272
