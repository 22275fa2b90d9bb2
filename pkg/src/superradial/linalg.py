"""Exact linear algebra over the rationals.

Two layers live here.  Dense `Matrix` objects (lists of Fraction rows) cover
the small structural computations: involutions, changes of basis, character
polynomials of ad-operators.  `SparseEchelon` covers the large rank and
membership computations over spaces indexed by PBW monomials, where rows are
sparse dicts keyed by arbitrary hashable labels and the echelon form is grown
incrementally.

No floats anywhere; every operation is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Callable, Hashable, Iterable, Optional, Sequence

from .scalars import ONE, ZERO, Scalar


def rref(rows: Sequence[Sequence[Scalar]]) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form. Returns (reduced rows, pivot column indices)."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = ONE / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence[Scalar]]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[Scalar]], ncols: int) -> list[list[Scalar]]:
    """Basis of {v : M v = 0}, one vector per free column of the RREF."""
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    basis = []
    for fc in range(ncols):
        if fc in pivot_set:
            continue
        v = [ZERO] * ncols
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve(rows: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar]) -> Optional[list[Scalar]]:
    """One solution of M x = rhs (free variables set to 0), or None."""
    if not rows:
        return [] if not any(rhs) else None
    ncols = len(rows[0])
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [ZERO] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return x


def solve_membership(
    target: Sequence[Scalar], span: Sequence[Sequence[Scalar]]
) -> Optional[list[Scalar]]:
    """Coefficients expressing `target` in `span`, or None if not in the span."""
    if not span:
        return [] if not any(target) else None
    rows = [[v[i] for v in span] for i in range(len(target))]
    return solve(rows, list(target))


class Matrix:
    """Small dense matrix with exact entries."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[Scalar]]):
        self.rows = [[Fraction(x) for x in row] for row in rows]
        if self.rows:
            w = len(self.rows[0])
            if any(len(r) != w for r in self.rows):
                raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[Scalar]]) -> "Matrix":
        n = len(cols[0]) if cols else 0
        return cls([[col[i] for col in cols] for i in range(n)])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def column(self, j: int) -> list[Scalar]:
        return [row[j] for row in self.rows]

    def apply(self, vec: Sequence[Scalar]) -> list[Scalar]:
        return [sum((a * b for a, b in zip(row, vec)), ZERO) for row in self.rows]

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.rows)) if self.rows else Matrix([])

    def trace(self) -> Scalar:
        return sum((self.rows[i][i] for i in range(self.nrows)), ZERO)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            bt = list(zip(*other.rows))
            return Matrix(
                [[sum((a * b for a, b in zip(row, col)), ZERO) for col in bt] for row in self.rows]
            )
        return Matrix([[x * other for x in row] for row in self.rows])

    __rmul__ = __mul__

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        return Matrix([[-x for x in row] for row in self.rows])

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.rows == other.rows

    def __repr__(self) -> str:
        return f"Matrix({self.rows!r})"

    def rank(self) -> int:
        return rank(self.rows)

    def inverse(self) -> "Matrix":
        n = self.nrows
        if n != self.ncols:
            raise ValueError("not square")
        aug = [row + ident_row for row, ident_row in zip(self.rows, Matrix.identity(n).rows)]
        red, pivots = rref(aug)
        if pivots != list(range(n)):
            raise ValueError("singular matrix")
        return Matrix([row[n:] for row in red])


def char_poly(mat: Matrix) -> list[Scalar]:
    """Coefficients of det(t*I - A), ascending in t (last coefficient is 1).

    Faddeev-LeVerrier recursion; exact over the rationals.
    """
    n = mat.nrows
    if n != mat.ncols:
        raise ValueError("not square")
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    m = Matrix.identity(n)
    for k in range(1, n + 1):
        am = mat * m
        c = -am.trace() / k
        coeffs[n - k] = c
        m = am + c * Matrix.identity(n)
    return coeffs


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = set()
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.add(i)
            out.add(n // i)
        i += 1
    return sorted(out)


def _poly_eval(coeffs: Sequence[Scalar], x: Scalar) -> Scalar:
    acc = ZERO
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _poly_deflate(coeffs: list[Scalar], root: Scalar) -> list[Scalar]:
    """Divide by (t - root); assumes root actually is a root."""
    out = [ZERO] * (len(coeffs) - 1)
    carry = ZERO
    for i in range(len(coeffs) - 1, 0, -1):
        carry = coeffs[i] + carry * root
        out[i - 1] = carry
    return out


def rational_roots(coeffs: Sequence[Scalar]) -> list[tuple[Scalar, int]]:
    """All rational roots (root, multiplicity) of a rational polynomial.

    Roots the polynomial may have outside Q are simply not reported; callers
    that need a full eigenvalue set must compare multiplicities against the
    degree themselves.
    """
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        raise ValueError("zero polynomial has every root")
    roots: list[tuple[Scalar, int]] = []
    mult0 = 0
    while cs[0] == 0:
        cs.pop(0)
        mult0 += 1
    if mult0:
        roots.append((ZERO, mult0))
    if len(cs) <= 1:
        return roots
    den = 1
    for c in cs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in cs]
    candidates: list[Scalar] = []
    seen = set()
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand not in seen:
                    seen.add(cand)
                    candidates.append(cand)
    for cand in sorted(candidates):
        if _poly_eval(cs, cand) == 0:
            mult = 0
            while _poly_eval(cs, cand) == 0 and len(cs) > 1:
                cs = _poly_deflate(cs, cand)
                mult += 1
            roots.append((cand, mult))
    return roots


class SparseEchelon:
    """Incrementally maintained echelon form over sparse rows.

    Rows are dicts mapping hashable labels to nonzero Fractions.  The pivot
    of a row is its largest label under `key`; stored pivot rows are
    normalized so the pivot coefficient is 1.  Inserting a row reduces it
    against the current pivots first, so `rank` is the dimension of the span
    of everything inserted so far and `contains` answers membership in it.
    """

    def __init__(self, key: Optional[Callable[[Hashable], object]] = None):
        self.pivots: dict[Hashable, dict[Hashable, Scalar]] = {}
        self.key = key if key is not None else (lambda label: label)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> tuple[Optional[Hashable], dict]:
        """Eliminate leading labels; return (unreducible lead, residual row)."""
        row = {lab: Fraction(v) for lab, v in row.items() if v}
        while row:
            lead = max(row, key=self.key)
            piv = self.pivots.get(lead)
            if piv is None:
                return lead, row
            c = row[lead]
            for lab, v in piv.items():
                new = row.get(lab, ZERO) - c * v
                if new:
                    row[lab] = new
                else:
                    row.pop(lab, None)
        return None, row

    def insert(self, row: dict) -> bool:
        """Add a row to the span. True if it increased the rank."""
        lead, residual = self.reduce(row)
        if lead is None:
            return False
        c = residual[lead]
        if c != 1:
            residual = {lab: v / c for lab, v in residual.items()}
        self.pivots[lead] = residual
        return True

    def contains(self, row: dict) -> bool:
        lead, _ = self.reduce(row)
        return lead is None
