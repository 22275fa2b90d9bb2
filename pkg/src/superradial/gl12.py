"""The rank-one supersymmetric pair inside gl(1|2).

The ambient algebra is gl(1|2) on a graded space with one even and two odd
dimensions (index parities (0,1,1)).  Nine named elements

    z  = identity,            k  = diag(0,1,-1),
    k1 = E(1b,2b),            k2 = E(2b,1b),
    e' = E(1,1b) + E(2b,1),   f' = E(1,2b) - E(1b,1),
    p  = diag(2,1,1),         e  = E(1,1b) - E(2b,1),
    f  = E(1,2b) + E(1b,1)

form a basis; the PBW order is z < k < k1 < k2 < e' < f' < p < e < f.  The
involution theta(X) = -P X^st P^{-1} (P the symplectic-looking matrix below,
supertranspose [[A,B],[C,D]]^st = [[A^t,-C^t],[B^t,D^t]]) fixes k, k1, k2,
e', f' and negates z, p, e, f; the Cartan subspace is a = span{z, p}.

Everything downstream of that lives here: the commutation polynomials
alpha_n, beta_n with p^n e' = e' alpha_n(p) + beta_{n-1}(p) e (and the same
for the pair (f', f)), their closed forms through Euler and Bernoulli
numbers, the two lemma identity suites behind the ideal structure theorem,
the explicit basis of the two-sided ideal I = U(g)k + kU(g), the canonical
quotient representatives {z^m, z^m p^j ef}, and the radial restriction
checks.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from random import Random
from typing import Iterator, Mapping, Optional, Sequence

from .enveloping import Monomial, UElement, deglex_key, enveloping_of
from .liealg import (
    Involution,
    Rebased,
    SuperVector,
    SymmetricPair,
    change_basis,
    check_jacobi,
    gl_superalgebra,
    root_decomposition,
    split_pair,
)
from .linalg import Matrix, SparseEchelon
from .scalars import ONE, ZERO, Scalar
from .sequences import bernoulli, euler_number
from .unipoly import UniPoly

# generator indices in the PBW order
Z, K, K1, K2, EP, FP, P, E, F = range(9)

GEN_NAMES = ("z", "k", "k1", "k2", "e'", "f'", "p", "e", "f")
GEN_PARITIES = (0, 0, 0, 0, 1, 1, 0, 1, 1)
K_RANGE = range(K, FP + 1)  # k, k1, k2, e', f'

_PAR3 = (0, 1, 1)

F0 = Fraction(0)
F1 = Fraction(1)


def _mat(entries: Mapping[tuple[int, int], Scalar]) -> tuple[tuple[Scalar, ...], ...]:
    rows = [[F0] * 3 for _ in range(3)]
    for (i, j), c in entries.items():
        rows[i][j] = Fraction(c)
    return tuple(tuple(r) for r in rows)


GEN_MATRICES = {
    "z": _mat({(0, 0): 1, (1, 1): 1, (2, 2): 1}),
    "k": _mat({(1, 1): 1, (2, 2): -1}),
    "k1": _mat({(1, 2): 1}),
    "k2": _mat({(2, 1): 1}),
    "e'": _mat({(0, 1): 1, (2, 0): 1}),
    "f'": _mat({(0, 2): 1, (1, 0): -1}),
    "p": _mat({(0, 0): 2, (1, 1): 1, (2, 2): 1}),
    "e": _mat({(0, 1): 1, (2, 0): -1}),
    "f": _mat({(0, 2): 1, (1, 0): 1}),
}

_P_MAT = _mat({(0, 0): 1, (1, 2): 1, (2, 1): -1})
_P_INV = _mat({(0, 0): 1, (1, 2): -1, (2, 1): 1})


def _mat_mul(x, y):
    return tuple(
        tuple(sum((x[i][m] * y[m][j] for m in range(3)), F0) for j in range(3))
        for i in range(3)
    )


def _mat_combo(parts: Sequence[tuple[str, Scalar]]):
    rows = [[F0] * 3 for _ in range(3)]
    for name, c in parts:
        m = GEN_MATRICES[name]
        for i in range(3):
            for j in range(3):
                rows[i][j] += c * m[i][j]
    return tuple(tuple(r) for r in rows)


def _mat_bracket(x, y, px: int, py: int):
    xy = _mat_mul(x, y)
    yx = _mat_mul(y, x)
    sign = -1 if (px and py) else 1
    return tuple(
        tuple(xy[i][j] - sign * yx[i][j] for j in range(3)) for i in range(3)
    )


def supertranspose(x):
    """(X^st)_{ij} = (-1)^{|j|(|i|+|j|)} X_{ji} on the (1|2)-graded space."""
    out = [[F0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            sign = -1 if (_PAR3[j] and (_PAR3[i] ^ _PAR3[j])) else 1
            out[i][j] = sign * x[j][i]
    return tuple(tuple(r) for r in out)


def theta_matrix(x):
    """theta(X) = -P X^st P^{-1}."""
    m = _mat_mul(_P_MAT, _mat_mul(supertranspose(x), _P_INV))
    return tuple(tuple(-v for v in row) for row in m)


def _units_vector(mat) -> SuperVector:
    """Expand a 3x3 matrix over the matrix-unit basis of gl(1|2)."""
    return SuperVector(
        ((3 * i + j, mat[i][j]) for i in range(3) for j in range(3))
    )


# ---------------------------------------------------------------------------
# commutation polynomials, module-level caches

_alphas: list[UniPoly] = [UniPoly.one()]
_betas: list[UniPoly] = []


def _ensure_polys(n: int) -> None:
    x = UniPoly.x()
    while len(_alphas) <= n:
        m = len(_alphas) - 1
        a = _alphas[m]
        beta_m = x * (_betas[m - 1] if m else UniPoly.zero())
        for i in range(m + 1):
            beta_m = beta_m + a.coefficient(i) * _alphas[i]
        _betas.append(beta_m)
        nxt = x * a
        for i in range(1, m + 1):
            nxt = nxt - a.coefficient(i) * _betas[i - 1]
        _alphas.append(nxt)


def alpha_recursive(n: int) -> UniPoly:
    """alpha_n from the coupled recursion with alpha_0 = 1, beta_{-1} = 0:

    alpha_{m+1} = x*alpha_m - sum_{i>=1} a_i beta_{i-1},
    beta_m      = x*beta_{m-1} + sum_{i>=0} a_i alpha_i,

    where a_i are the coefficients of alpha_m.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    _ensure_polys(n)
    return _alphas[n]


def beta_recursive(n: int) -> UniPoly:
    """beta_n from the coupled recursion; beta_{-1} = 0."""
    if n < -1:
        raise ValueError("n must be >= -1")
    if n == -1:
        return UniPoly.zero()
    _ensure_polys(n + 1)
    return _betas[n]


def alpha_beta_recursive(n: int) -> tuple[UniPoly, UniPoly]:
    """(alpha_n, beta_{n-1}) from the coupled recursion."""
    return alpha_recursive(n), beta_recursive(n - 1)


def alpha_closed(n: int) -> UniPoly:
    """alpha_n = sum_k E_{2k} C(n,2k) x^{n-2k} with Euler numbers E_{2k}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    coeffs = [ZERO] * (n + 1)
    for k in range(n // 2 + 1):
        coeffs[n - 2 * k] = Fraction(euler_number(2 * k) * comb(n, 2 * k))
    return UniPoly(coeffs)


def beta_closed(n: int) -> UniPoly:
    """beta_{n-1} = sum_k [2^{2k+2}(2^{2k+2}-1) B_{2k+2}/(2k+2)] C(n,n-1-2k) x^{n-1-2k}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return UniPoly.zero()
    coeffs = [ZERO] * n
    for k in range((n - 1) // 2 + 1):
        power = 2 ** (2 * k + 2)
        tangent = Fraction(power * (power - 1)) * bernoulli(2 * k + 2) / (2 * k + 2)
        coeffs[n - 1 - 2 * k] = tangent * comb(n, n - 1 - 2 * k)
    return UniPoly(coeffs)


def beta_from_alpha(n: int) -> UniPoly:
    """beta_{n-1} = sum_{i odd} C(n,i) alpha_{n-i}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = UniPoly.zero()
    for i in range(1, n + 1, 2):
        out = out + Fraction(comb(n, i)) * alpha_recursive(n - i)
    return out


# ---------------------------------------------------------------------------


class QuotientElement:
    """An element of U(g)/I on the canonical representatives {z^m, z^m p^j ef}.

    Stored as monomial -> coefficient with no zero entries, like UElement,
    but the support is restricted to the representative monomials.
    """

    __slots__ = ("pair", "terms")

    def __init__(self, pair: "Gl12Pair", terms: Mapping[Monomial, Scalar]) -> None:
        self.pair = pair
        self.terms = {m: c for m, c in terms.items() if c}

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono: Monomial) -> Scalar:
        return self.terms.get(tuple(mono), ZERO)

    def to_element(self) -> UElement:
        return self.pair.U.element(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuotientElement):
            return NotImplemented
        return self.pair is other.pair and self.terms == other.terms

    def __add__(self, other: "QuotientElement") -> "QuotientElement":
        out = dict(self.terms)
        for m, c in other.terms.items():
            new = out.get(m, ZERO) + c
            if new:
                out[m] = new
            else:
                del out[m]
        return QuotientElement(self.pair, out)

    def __sub__(self, other: "QuotientElement") -> "QuotientElement":
        return self + (-1) * other

    def __rmul__(self, c: Scalar) -> "QuotientElement":
        c = Fraction(c)
        return QuotientElement(self.pair, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other: "QuotientElement") -> "QuotientElement":
        if isinstance(other, QuotientElement):
            return self.pair.quotient_reduce(self.to_element() * other.to_element())
        return self.__rmul__(other)

    def text(self) -> str:
        return self.to_element().text()

    def to_json(self) -> list:
        return self.to_element().to_json()

    def __repr__(self) -> str:
        return f"QuotientElement({self.text()})"


class Gl12Pair:
    """The gl(1|2) pair with all nine named generators wired up.

    Construction validates the whole structural story: the rebased algebra
    satisfies the Jacobi identity, theta is a genuine involution whose
    eigenspaces split the basis exactly as labeled, and a = span{z, p} is
    an even abelian subspace of p.  Use `build_pair()` to get the shared
    instance (the enveloping-algebra caches make sharing worthwhile).
    """

    def __init__(self) -> None:
        self.gl = gl_superalgebra(1, 2)
        vectors = [_units_vector(GEN_MATRICES[name]) for name in GEN_NAMES]
        self.rebased: Rebased = change_basis(self.gl, vectors, GEN_NAMES, GEN_PARITIES)
        self.algebra = self.rebased.algebra
        bad = check_jacobi(self.algebra)
        if bad:
            raise AssertionError(f"rebased gl(1|2) violates Jacobi on {bad}")
        cols = []
        for name in GEN_NAMES:
            image = _units_vector(theta_matrix(GEN_MATRICES[name]))
            cols.append(self.rebased.to_new(image).dense(9))
        self.theta = Involution(Matrix.from_columns(cols))
        for i in range(9):
            expected = ONE if i in K_RANGE else -ONE
            col = self.theta.matrix.column(i)
            if col != [expected if r == i else ZERO for r in range(9)]:
                raise AssertionError(
                    f"theta is not diagonal as labeled on {GEN_NAMES[i]}"
                )
        self.pair: SymmetricPair = split_pair(
            self.algebra, self.theta, [SuperVector.unit(Z), SuperVector.unit(P)]
        )
        if self.pair.k_basis != [SuperVector.unit(i) for i in K_RANGE]:
            raise AssertionError("k eigenbasis is not the labeled generators")
        if self.pair.p_basis != [SuperVector.unit(i) for i in (Z, P, E, F)]:
            raise AssertionError("p eigenbasis is not the labeled generators")
        self.U = enveloping_of(self.algebra)
        self._gens = {name: self.U.gen(name) for name in GEN_NAMES}
        self._roots: Optional[dict] = None

    # -- small builders ----------------------------------------------------

    def u(self, name: str) -> UElement:
        return self._gens[name]

    def mono(self, exps: Mapping[int, int]) -> Monomial:
        out = [0] * 9
        for i, e in exps.items():
            out[i] = e
        return tuple(out)

    def umono(self, exps: Mapping[int, int]) -> UElement:
        return self.U.monomial(self.mono(exps))

    def p_power(self, n: int) -> UElement:
        return self.umono({P: n})

    def poly_of_p(self, poly: UniPoly) -> UElement:
        """poly evaluated at the generator p, as a normal-form element."""
        return self.U.element(
            {self.mono({P: i}): c for i, c in enumerate(poly.coeffs) if c}
        )

    def v_vectors(self, a: Scalar, b: Scalar) -> tuple[SuperVector, SuperVector]:
        """(v_k, v_p) = (a e' + b f', a e + b f) as algebra vectors."""
        vk = SuperVector({EP: Fraction(a), FP: Fraction(b)})
        vp = SuperVector({E: Fraction(a), F: Fraction(b)})
        return vk, vp

    def v_elements(self, a: Scalar, b: Scalar) -> tuple[UElement, UElement]:
        vk, vp = self.v_vectors(a, b)
        return self.U.from_vector(vk), self.U.from_vector(vp)

    def cartan_h_basis(self) -> list[SuperVector]:
        """{z, p, k}: a basis of the diagonal Cartan subalgebra."""
        return [SuperVector.unit(Z), SuperVector.unit(P), SuperVector.unit(K)]

    def roots(self) -> dict[tuple[Scalar, ...], list[SuperVector]]:
        if self._roots is None:
            self._roots = root_decomposition(self.algebra, self.cartan_h_basis())
        return self._roots

    # -- the commutator table ---------------------------------------------

    def verify_table(self, samples: Sequence[tuple[Scalar, Scalar]] = ()) -> list[dict]:
        """Check every displayed bracket two independent ways.

        Each entry is computed from the rebased structure constants AND from
        literal 3x3 supermatrix arithmetic, then compared with the stated
        right-hand side.  `samples` adds (a,b) instances of the v_k/v_p
        family identities on top of the fixed entries.
        """
        fixed: list[tuple[str, list, list, list]] = [
            ("[e,e'] = 0", [("e", F1)], [("e'", F1)], []),
            ("[e,f'] = -p", [("e", F1)], [("f'", F1)], [("p", -F1)]),
            ("[f,e'] = p", [("f", F1)], [("e'", F1)], [("p", F1)]),
            ("[f,f'] = 0", [("f", F1)], [("f'", F1)], []),
            ("[e,e] = -2k2", [("e", F1)], [("e", F1)], [("k2", -2 * F1)]),
            ("[f,f] = 2k1", [("f", F1)], [("f", F1)], [("k1", 2 * F1)]),
            ("[e,p] = -e'", [("e", F1)], [("p", F1)], [("e'", -F1)]),
            ("[e',p] = -e", [("e'", F1)], [("p", F1)], [("e", -F1)]),
            ("[f,p] = -f'", [("f", F1)], [("p", F1)], [("f'", -F1)]),
            ("[f',p] = -f", [("f'", F1)], [("p", F1)], [("f", -F1)]),
            ("[e',e'] = 2k2", [("e'", F1)], [("e'", F1)], [("k2", 2 * F1)]),
            ("[f',f'] = -2k1", [("f'", F1)], [("f'", F1)], [("k1", -2 * F1)]),
            ("[p,k1] = 0", [("p", F1)], [("k1", F1)], []),
            ("[p,k2] = 0", [("p", F1)], [("k2", F1)], []),
            ("[p,k] = 0", [("p", F1)], [("k", F1)], []),
            ("[e,k1] = f", [("e", F1)], [("k1", F1)], [("f", F1)]),
        ]
        entries = list(fixed)
        for a, b in samples:
            a, b = Fraction(a), Fraction(b)
            vk = [("e'", a), ("f'", b)]
            vp = [("e", a), ("f", b)]
            entries.extend(
                [
                    (f"[e,v_k] = -b p @ (a,b)=({a},{b})", [("e", F1)], vk, [("p", -b)]),
                    (f"[f,v_k] = a p @ (a,b)=({a},{b})", [("f", F1)], vk, [("p", a)]),
                    (
                        f"[v_p,p] = -v_k @ (a,b)=({a},{b})",
                        vp,
                        [("p", F1)],
                        [("e'", -a), ("f'", -b)],
                    ),
                    (
                        f"[v_k,p] = -v_p @ (a,b)=({a},{b})",
                        vk,
                        [("p", F1)],
                        [("e", -a), ("f", -b)],
                    ),
                ]
            )
        out = []
        for label, xs, ys, expect in entries:
            x_sv = SuperVector((self.algebra.index(n), c) for n, c in xs)
            y_sv = SuperVector((self.algebra.index(n), c) for n, c in ys)
            want = SuperVector((self.algebra.index(n), c) for n, c in expect)
            structural = self.algebra.bracket(x_sv, y_sv)
            px = self.algebra.parity_of(x_sv)
            py = self.algebra.parity_of(y_sv)
            matrix_br = _mat_bracket(_mat_combo(xs), _mat_combo(ys), px, py)
            matrix_sv = self.rebased.to_new(_units_vector(matrix_br))
            ok = structural == want and matrix_sv == want
            out.append(
                {
                    "identity": label,
                    "pass": ok,
                    "structure": structural == want,
                    "matrix": matrix_sv == want,
                }
            )
        return out

    # -- alpha/beta from the rewriting engine ------------------------------

    def alpha_beta_from_pbw(self, n: int) -> tuple[UniPoly, UniPoly]:
        """Extract (alpha_n, beta_{n-1}) from normal forms of p^n e' and p^n f'.

        p^n e' = e' alpha_n(p) + beta_{n-1}(p) e and likewise with (f', f);
        the two routes must agree, and no monomials outside the two expected
        families may appear.
        """
        if n < 0:
            raise ValueError("n must be >= 0")
        results = []
        for start, partner in ((EP, E), (FP, F)):
            terms = self.U._nf_word((P,) * n + (start,))
            alpha = [ZERO] * (n + 1)
            beta = [ZERO] * (n + 1)
            for mono, c in terms.items():
                j = mono[P]
                rest = list(mono)
                rest[P] = 0
                if tuple(rest) == self.mono({start: 1}):
                    alpha[j] = c
                elif tuple(rest) == self.mono({partner: 1}):
                    beta[j] = c
                else:
                    raise ValueError(
                        f"unexpected monomial {mono} in the normal form of p^{n} "
                        f"{GEN_NAMES[start]}"
                    )
            results.append((UniPoly(alpha), UniPoly(beta)))
        if results[0] != results[1]:
            raise ValueError("(e',e) and (f',f) routes disagree")
        return results[0]

    def verify_binomial_splitting(
        self, n: int, samples: Sequence[tuple[Scalar, Scalar]] = ((1, 0), (0, 1), (3, -2))
    ) -> bool:
        """p^n v_k = v_k sum_{i even} C(n,i) p^{n-i} + v_p sum_{i odd} C(n,i) p^{n-i}."""
        even_c = [ZERO] * (n + 1)
        odd_c = [ZERO] * (n + 1)
        for i in range(n + 1):
            if i % 2 == 0:
                even_c[n - i] = Fraction(comb(n, i))
            else:
                odd_c[n - i] = Fraction(comb(n, i))
        even_poly = UniPoly(even_c)
        odd_poly = UniPoly(odd_c)
        pn = self.p_power(n)
        for a, b in samples:
            vk, vp = self.v_elements(a, b)
            lhs = pn * vk
            rhs = vk * self.poly_of_p(even_poly) + vp * self.poly_of_p(odd_poly)
            if lhs != rhs:
                return False
        return True

    # -- lemma identity suites ---------------------------------------------

    def first_part_identities(
        self, n: int, k0: tuple[Scalar, Scalar, Scalar]
    ) -> list[tuple[str, bool]]:
        """Commutation of k0 = x k + y k1 + w k2 past p^n, p^n e, p^n f, p^n ef."""
        x, y, w = (Fraction(c) for c in k0)
        U = self.U
        k0_el = x * self.u("k") + y * self.u("k1") + w * self.u("k2")
        pn = self.p_power(n)
        pne = self.umono({P: n, E: 1})
        pnf = self.umono({P: n, F: 1})
        pnef = self.umono({P: n, E: 1, F: 1})
        checks = [
            ("p^n k0 = k0 p^n", pn * k0_el, k0_el * pn),
            (
                "p^n e k0 = k0 p^n e + p^n(x e + y f)",
                pne * k0_el,
                k0_el * pne + x * pne + y * pnf,
            ),
            (
                "p^n f k0 = k0 p^n f + p^n(w e - x f)",
                pnf * k0_el,
                k0_el * pnf + w * pne - x * pnf,
            ),
            (
                "p^n ef k0 = k0 p^n ef + y k1 p^n - w k2 p^n",
                pnef * k0_el,
                k0_el * pnef
                + y * self.umono({K1: 1, P: n})
                - w * self.umono({K2: 1, P: n}),
            ),
        ]
        return [(label, lhs == rhs) for label, lhs, rhs in checks]

    def second_part_identities(
        self, n: int, a: Scalar, b: Scalar
    ) -> list[tuple[str, bool]]:
        """Commutation of v_k = a e' + b f' past p^n, p^n e, p^n f, p^n ef.

        With A = alpha_n(p) and B = beta_{n-1}(p):

        (i)   p^n v_k    = v_k A + B v_p
        (ii)  p^n e v_k  = -v_k A e + a k2 B - b k B + b B ef - b p^{n+1}
        (iii) p^n f v_k  = -v_k A f - a B ef - b k1 B + a p^{n+1}
        (iv)  p^n ef v_k = v_k A ef - a k2 B f + b k B f - b k1 B e - b B f
                           + p^{n+1} v_p - a e' A - a B e
        """
        a, b = Fraction(a), Fraction(b)
        U = self.U
        A = self.poly_of_p(alpha_recursive(n))
        B = self.poly_of_p(beta_recursive(n - 1))
        vk, vp = self.v_elements(a, b)
        e_el, f_el = self.u("e"), self.u("f")
        ef = self.umono({E: 1, F: 1})
        pn = self.p_power(n)
        pn1 = self.p_power(n + 1)
        pne = self.umono({P: n, E: 1})
        pnf = self.umono({P: n, F: 1})
        pnef = self.umono({P: n, E: 1, F: 1})
        k_el, k1_el, k2_el = self.u("k"), self.u("k1"), self.u("k2")
        ep_el = self.u("e'")
        checks = [
            ("p^n v_k = v_k A + B v_p", pn * vk, vk * A + B * vp),
            (
                "p^n e v_k = -v_k A e + a k2 B - b k B + b B ef - b p^{n+1}",
                pne * vk,
                -(vk * A * e_el) + a * (k2_el * B) - b * (k_el * B) + b * (B * ef) - b * pn1,
            ),
            (
                "p^n f v_k = -v_k A f - a B ef - b k1 B + a p^{n+1}",
                pnf * vk,
                -(vk * A * f_el) - a * (B * ef) - b * (k1_el * B) + a * pn1,
            ),
            (
                "p^n ef v_k = v_k A ef - a k2 B f + b k B f - b k1 B e - b B f"
                " + p^{n+1} v_p - a e' A - a B e",
                pnef * vk,
                vk * A * ef
                - a * (k2_el * B * f_el)
                + b * (k_el * B * f_el)
                - b * (k1_el * B * e_el)
                - b * (B * f_el)
                + pn1 * vp
                - a * (ep_el * A)
                - a * (B * e_el),
            ),
        ]
        return [(label, lhs == rhs) for label, lhs, rhs in checks]

    def mirror_identity(self, n: int, a: Scalar, b: Scalar) -> bool:
        """v_p p^n = alpha_n(p) v_p - v_k beta_{n-1}(p)."""
        vk, vp = self.v_elements(a, b)
        lhs = vp * self.p_power(n)
        rhs = self.poly_of_p(alpha_recursive(n)) * vp - vk * self.poly_of_p(
            beta_recursive(n - 1)
        )
        return lhs == rhs

    def verify_lemma_suites(self, n_max: int, draws: int = 50, seed: int = 20260825) -> dict:
        """Run both identity suites for n <= n_max over random rational draws."""
        rng = Random(seed)

        def small() -> Fraction:
            return Fraction(rng.randint(-9, 9), rng.randint(1, 4))

        failures: list[str] = []
        total = 0
        for n in range(n_max + 1):
            for _ in range(draws):
                k0 = (small(), small(), small())
                a, b = small(), small()
                for label, ok in self.first_part_identities(n, k0):
                    total += 1
                    if not ok:
                        failures.append(f"n={n} k0={k0}: {label}")
                for label, ok in self.second_part_identities(n, a, b):
                    total += 1
                    if not ok:
                        failures.append(f"n={n} (a,b)=({a},{b}): {label}")
        return {
            "n_max": n_max,
            "draws": draws,
            "checked": total,
            "failures": failures,
            "pass": not failures,
        }

    # -- the ideal I = kU(g) + U(g)k ---------------------------------------

    def ideal_basis(self, d: int) -> list[UElement]:
        """The proven basis of I up to filtration degree d, three families:

        (iii) every PBW monomial containing a k-generator,
        (i)   z^m p^n e and z^m p^n f,
        (ii)  z^m (beta_{n-1}(p) ef - p^{n+1})    (beta_{-1} = 0).
        """
        U = self.U
        out: list[UElement] = []
        for mono in U.monomials_up_to(d):
            if any(mono[i] for i in K_RANGE):
                out.append(U.monomial(mono))
        for m in range(d):
            for n in range(d - m):
                out.append(self.umono({Z: m, P: n, E: 1}))
                out.append(self.umono({Z: m, P: n, F: 1}))
        for m in range(d):
            for n in range(d - m):
                beta = beta_recursive(n - 1)
                terms = {self.mono({Z: m, P: n + 1}): -ONE}
                for j, c in enumerate(beta.coeffs):
                    if c:
                        key = self.mono({Z: m, P: j, E: 1, F: 1})
                        terms[key] = terms.get(key, ZERO) + c
                out.append(self.U.element(terms))
        return out

    def generic_ideal_rows(self, d: int) -> Iterator[dict]:
        """Normal forms of x*m and m*x (x in the k-basis, deg m <= d).

        Factors of degree d are needed: degree-d ideal elements can arise
        from top-degree cancellation (p = e'*f + f*e' already at d = 1).
        The yielded dicts are shared with the engine cache; treat them as
        read-only.
        """
        U = self.U
        for mono in U.monomials_up_to(d):
            word = U.mono_word(mono)
            for x in K_RANGE:
                yield U._nf_word((x,) + word)
                yield U._nf_word(word + (x,))

    def ideal_echelon(self, d: int) -> SparseEchelon:
        """Echelon form of the generic spanning set of I up to degree d.

        Spanning rows may have filtration degree d+1; membership queries
        for degree <= d vectors remain exact.
        """
        ech = SparseEchelon(deglex_key)
        rows = sorted(self.generic_ideal_rows(d), key=len)
        for row in rows:
            ech.insert(row)
        return ech

    def basis_echelon(self, d: int) -> SparseEchelon:
        """Echelon form of ideal_basis(d), for cheap membership queries."""
        ech = SparseEchelon(deglex_key)
        for el in sorted(self.ideal_basis(d), key=lambda e: len(e.terms)):
            ech.insert(el.terms)
        return ech

    def v_p_in_ideal(self, m: int) -> bool:
        """v_p p^m lies in the span of the proven ideal basis, both v-axes."""
        ech = self.basis_echelon(m + 1)
        for start in (E, F):
            terms = self.U._nf_word((start,) + (P,) * m)
            if not ech.contains(terms):
                return False
        return True

    def quotient_representatives(self, d: int) -> list[Monomial]:
        """Canonical complement monomials {z^m} and {z^m p^j ef} up to degree d."""
        out = [self.mono({Z: m}) for m in range(d + 1)]
        for m in range(d - 1):
            for j in range(d - 1 - m):
                out.append(self.mono({Z: m, P: j, E: 1, F: 1}))
        return out

    def verify_ideal_basis(self, d: int) -> dict:
        """Membership, independence, and complement-rank checks for the basis."""
        U = self.U
        span = self.ideal_echelon(d)
        basis = self.ideal_basis(d)
        missing = [el for el in basis if not span.contains(el.terms)]
        indep = SparseEchelon(deglex_key)
        dependent = 0
        for el in basis:
            if not indep.insert(el.terms):
                dependent += 1
        ideal_rank = indep.rank
        reps = self.quotient_representatives(d)
        for mono in reps:
            indep.insert({mono: ONE})
        dim = U.dim_up_to(d)
        return {
            "degree": d,
            "basis_count": len(basis),
            "rep_count": len(reps),
            "dim": dim,
            "span_rank": span.rank,
            "membership": not missing,
            "independent": dependent == 0,
            "ideal_rank": ideal_rank,
            "complete": indep.rank == dim,
            "pass": (not missing) and dependent == 0 and indep.rank == dim,
        }

    # -- the quotient U(g)/I and radial restriction -------------------------

    def quotient_reduce(self, el: UElement) -> QuotientElement:
        """Canonical representative of el + I, supported on {z^m, z^m p^j ef}.

        Monomial rules: k-content kills a monomial; z^t p^n e and z^t p^n f
        die; z^t p^n with n >= 1 becomes z^t beta_{n-2}(p) ef; z^t and
        z^t p^j ef are already canonical.
        """
        if el.U is not self.U:
            raise ValueError("element does not live in the gl(1|2) enveloping algebra")
        acc: dict[Monomial, Scalar] = {}

        def add(mono: Monomial, c: Scalar) -> None:
            new = acc.get(mono, ZERO) + c
            if new:
                acc[mono] = new
            else:
                del acc[mono]

        for mono, c in el.terms.items():
            if any(mono[i] for i in K_RANGE):
                continue
            na, nb = mono[E], mono[F]
            if na + nb == 1:
                continue
            if na == 1 and nb == 1:
                add(mono, c)
                continue
            t, npow = mono[Z], mono[P]
            if npow == 0:
                add(mono, c)
                continue
            beta = beta_recursive(npow - 2)
            for j, coeff in enumerate(beta.coeffs):
                if coeff:
                    add(self.mono({Z: t, P: j, E: 1, F: 1}), c * coeff)
        return QuotientElement(self, acc)

    def radial_restriction_check(self, d: int) -> dict:
        """Restrict the quotient map to S(a) = Q[z,p] and audit it.

        Surjectivity onto the representative space, kernel exactly the
        multiples of z^a p, and independence of the remaining images.
        """
        reps = self.quotient_representatives(d)
        ech = SparseEchelon(deglex_key)
        kernel: list[Monomial] = []
        nonzero = 0
        new_pivots = 0
        for total in range(d + 1):
            for a in range(total + 1):
                mono = self.mono({Z: a, P: total - a})
                image = self.quotient_reduce(self.U.monomial(mono))
                if image.is_zero():
                    kernel.append(mono)
                else:
                    nonzero += 1
                    new_pivots += ech.insert(image.terms)
        expected_kernel = sorted(
            self.mono({Z: a, P: 1}) for a in range(d)
        )
        return {
            "degree": d,
            "coordinates": "z = h1 + h1bar, p = 2*h1 + h1bar",
            "surjective": ech.rank == len(reps),
            "kernel_ok": sorted(kernel) == expected_kernel,
            "independent": new_pivots == nonzero,
            "image_rank": ech.rank,
            "rep_count": len(reps),
            "kernel": [list(m) for m in sorted(kernel)],
            "pass": ech.rank == len(reps)
            and sorted(kernel) == expected_kernel
            and new_pivots == nonzero,
        }

    def rep_functional_values(
        self, rep_values: Mapping[Monomial, Scalar], bound: int
    ) -> dict[Monomial, Scalar]:
        """Pull back values on quotient representatives to all of U_{<= bound}.

        The result vanishes on I by construction and is the value table of a
        bi-invariant functional up to the bound.
        """
        table: dict[Monomial, Scalar] = {}
        for mono in self.U.monomials_up_to(bound):
            image = self.quotient_reduce(self.U.monomial(mono))
            value = ZERO
            for rep, c in image.terms.items():
                value += c * rep_values.get(rep, ZERO)
            table[mono] = value
        return table


@lru_cache(maxsize=None)
def build_pair() -> Gl12Pair:
    return Gl12Pair()


def builtin_pair(name: str) -> SymmetricPair:
    """Symmetric pairs constructible by name."""
    if name.strip() == "gl12-osp12":
        return build_pair().pair
    raise KeyError(f"unknown builtin pair {name!r}")
