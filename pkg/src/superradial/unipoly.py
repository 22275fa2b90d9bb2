"""Dense univariate polynomials over Q, used for the commutation polynomials."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .scalars import ONE, ZERO, Scalar, format_scalar


class UniPoly:
    """Polynomial in one variable; coefficients ascending, trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls()

    @classmethod
    def one(cls) -> "UniPoly":
        return cls((ONE,))

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((ZERO, ONE))

    @classmethod
    def monomial(cls, n: int, c: Scalar = ONE) -> "UniPoly":
        return cls((ZERO,) * n + (Fraction(c),))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> Scalar:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.coefficient(i) + other.coefficient(i) for i in range(n))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.coefficient(i) - other.coefficient(i) for i in range(n))

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            if self.is_zero() or other.is_zero():
                return UniPoly()
            out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        out[i + j] += a * b
            return UniPoly(out)
        return UniPoly(c * other for c in self.coeffs)

    __rmul__ = __mul__

    def __call__(self, x: Scalar) -> Scalar:
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "UniPoly(0)"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coefficient(i)
            if not c:
                continue
            if i == 0:
                body = format_scalar(abs(c))
            else:
                xs = "x" if i == 1 else f"x^{i}"
                body = xs if abs(c) == 1 else f"{format_scalar(abs(c))}*{xs}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return "UniPoly(" + " ".join(parts) + ")"

    def coeff_strings(self) -> list[str]:
        """Ascending coefficients as exact strings (for serialization)."""
        return [format_scalar(c) for c in self.coeffs]


def poly_from_strings(strings: Sequence[str]) -> UniPoly:
    return UniPoly(Fraction(s) for s in strings)
