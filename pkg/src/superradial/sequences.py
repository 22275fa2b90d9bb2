"""Euler zigzag numbers and Bernoulli numbers, exactly.

Conventions:

* ``zigzag(n)`` is the number A_n of alternating permutations of {1,...,n}
  (down-up or up-down both give the same count; A_0 = A_1 = 1, and
  sec t + tan t = sum A_n t^n / n!).
* ``bernoulli(n)`` uses the B_1 = -1/2 convention, so B = 1, -1/2, 1/6,
  0, -1/30, ...
* Euler numbers (secant coefficients) are E_{2n} = (-1)^n A_{2n}.

``zigzag`` fills a cache with the boustrophedon (Seidel-Entringer) triangle,
which is pure integer addition; ``zigzag_bruteforce`` literally enumerates
permutations and applies the alternation predicate, and exists to be held
against the fast version in tests.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import comb
from typing import List, Sequence

from .scalars import ONE, Scalar

_zigzag: List[int] = [1]
_zigzag_row: List[int] = [1]

_bernoulli: List[Fraction] = [Fraction(1)]


def zigzag(n: int) -> int:
    """A_n, the number of alternating permutations of n letters."""
    if n < 0:
        raise ValueError("n must be >= 0")
    while len(_zigzag) <= n:
        row = _zigzag_row
        new = [0]
        for k in range(len(row)):
            new.append(new[-1] + row[len(row) - 1 - k])
        _zigzag_row[:] = new
        _zigzag.append(new[-1])
    return _zigzag[n]


def zigzag_list(n: int) -> List[int]:
    """[A_0, ..., A_n]."""
    zigzag(n)
    return _zigzag[: n + 1]


def is_alternating(perm: Sequence[int]) -> bool:
    """True when consecutive slopes strictly alternate, starting downward.

    A permutation s is alternating here when s(1) > s(2) < s(3) > ...,
    equivalently s(i) < s(i+1) exactly when s(i+1) > s(i+2).
    """
    n = len(perm)
    if n <= 1:
        return True
    if perm[0] < perm[1]:
        return False
    for i in range(n - 1):
        if (perm[i] < perm[i + 1]) != (i % 2 == 1):
            return False
    return True


def zigzag_bruteforce(n: int) -> int:
    """Count alternating permutations by checking every permutation.

    Exponential on purpose; intended for n <= 10.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > 10:
        raise ValueError("brute force capped at n = 10")
    if n <= 1:
        return 1
    count = 0
    for perm in permutations(range(n)):
        if perm[0] < perm[1]:
            continue
        ok = True
        for i in range(n - 2):
            if (perm[i] < perm[i + 1]) == (perm[i + 1] < perm[i + 2]):
                ok = False
                break
        if ok:
            count += 1
    return count


def bernoulli(n: int) -> Fraction:
    """B_n with B_1 = -1/2."""
    if n < 0:
        raise ValueError("n must be >= 0")
    while len(_bernoulli) <= n:
        m = len(_bernoulli)
        # sum_{k=0}^{m} C(m+1,k) B_k = 0 for m >= 1
        acc = Fraction(0)
        for k in range(m):
            acc += comb(m + 1, k) * _bernoulli[k]
        _bernoulli.append(-acc / comb(m + 1, m))
    return _bernoulli[n]


def bernoulli_list(n: int) -> List[Fraction]:
    """[B_0, ..., B_n]."""
    bernoulli(n)
    return _bernoulli[: n + 1]


def euler_number(n: int) -> int:
    """Secant coefficient E_n: E_{2k} = (-1)^k A_{2k}, zero for odd n."""
    if n % 2:
        return 0
    return (-1 if (n // 2) % 2 else 1) * zigzag(n)


def tangent_coefficient(m: int) -> Scalar:
    """A_{2m-1} expressed through Bernoulli numbers.

    The odd zigzag numbers are tangent numbers:
    A_{2m-1} = (-1)^{m-1} 2^{2m} (2^{2m} - 1) B_{2m} / (2m).
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    sign = -ONE if (m - 1) % 2 else ONE
    return sign * (2 ** (2 * m)) * (2 ** (2 * m) - 1) * bernoulli(2 * m) / (2 * m)


def check_tangent_identity(m: int) -> bool:
    """Exact equality of zigzag(2m-1) and its Bernoulli expression."""
    value = tangent_coefficient(m)
    return value.denominator == 1 and value == zigzag(2 * m - 1)
