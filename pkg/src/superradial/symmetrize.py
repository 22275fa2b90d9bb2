"""Symmetric superalgebras S(p), S(a) and the supersymmetrization map.

A SymElement is a supercommutative polynomial in a fixed homogeneous basis
of p (or a).  `supersymmetrize` sends the monomial x_1...x_r to the signed
average (1/r!) sum_pi sgn(pi; x) x_{pi(1)}...x_{pi(r)} inside U(g), where
sgn picks up -1 for every pair of odd factors that crosses.  Reduction
modulo the left ideal I_L = U(g)k inverts it: rewrite with k-generators
rightmost so that monomials with k-content die, then run back-substitution
against the symmetrized images, which are unitriangular with respect to
total degree.

The check_* functions audit, at a degree bound, the structural facts the
radial restriction rests on: s(ad_k S(p)) lands in the two-sided ideal I,
S(p) decomposes as S(a) + ad_k S(p), and I + s(S(a)) exhausts U(g).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement, permutations
from math import factorial
from typing import Iterator, Mapping, Optional, Sequence

from .enveloping import Enveloping, UElement, deglex_key, enveloping_of
from .liealg import SuperVector, SymmetricPair, change_basis
from .linalg import SparseEchelon, solve_membership
from .scalars import ONE, ZERO, Parity, Scalar

ExpVec = tuple[int, ...]


def _sort_word(word: Sequence[int], parities: Sequence[Parity]) -> Optional[tuple[Scalar, ExpVec]]:
    """Sort a supercommutative word into an exponent vector.

    Returns (sign, exponents) with the Koszul sign of the sorting
    permutation, or None when an odd letter repeats (its square is zero).
    """
    letters = list(word)
    sign = ONE
    # insertion sort, counting odd-odd crossings
    for i in range(1, len(letters)):
        j = i
        while j > 0 and letters[j - 1] > letters[j]:
            if parities[letters[j - 1]] and parities[letters[j]]:
                sign = -sign
            letters[j - 1], letters[j] = letters[j], letters[j - 1]
            j -= 1
    exps = [0] * len(parities)
    for letter in letters:
        exps[letter] += 1
        if parities[letter] and exps[letter] > 1:
            return None
    return sign, tuple(exps)


def _word_of(exps: ExpVec) -> tuple[int, ...]:
    out: list[int] = []
    for i, e in enumerate(exps):
        out.extend([i] * e)
    return tuple(out)


class SymElement:
    """A supercommutative polynomial over a homogeneous basis inside g."""

    __slots__ = ("algebra", "basis", "parities", "space", "terms")

    def __init__(
        self,
        algebra,
        basis: Sequence[SuperVector],
        terms: Mapping[ExpVec, Scalar],
        space: str = "S(p)",
    ) -> None:
        self.algebra = algebra
        self.basis = tuple(basis)
        parities = []
        for v in basis:
            par = algebra.parity_of(v)
            if par is None:
                raise ValueError("basis vector is not parity homogeneous")
            parities.append(par)
        self.parities = tuple(parities)
        self.space = space
        clean: dict[ExpVec, Scalar] = {}
        for exps, c in terms.items():
            exps = tuple(exps)
            if len(exps) != len(self.basis):
                raise ValueError("exponent vector length does not match basis")
            if any(e > 1 for e, par in zip(exps, self.parities) if par):
                raise ValueError("odd letters square to zero; exponent above 1")
            if c:
                clean[exps] = clean.get(exps, ZERO) + Fraction(c)
                if not clean[exps]:
                    del clean[exps]
        self.terms = clean

    @classmethod
    def monomial(
        cls, algebra, basis: Sequence[SuperVector], exps: ExpVec, space: str = "S(p)"
    ) -> "SymElement":
        return cls(algebra, basis, {tuple(exps): ONE}, space)

    @classmethod
    def one(cls, algebra, basis: Sequence[SuperVector], space: str = "S(p)") -> "SymElement":
        return cls(algebra, basis, {(0,) * len(basis): ONE}, space)

    def _like(self, terms: Mapping[ExpVec, Scalar]) -> "SymElement":
        out = SymElement.__new__(SymElement)
        out.algebra = self.algebra
        out.basis = self.basis
        out.parities = self.parities
        out.space = self.space
        out.terms = {t: c for t, c in terms.items() if c}
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(t) for t in self.terms)

    def parity_of(self) -> Optional[Parity]:
        pars = {
            sum(e * p for e, p in zip(t, self.parities)) % 2 for t in self.terms
        }
        if not pars:
            return 0
        if len(pars) > 1:
            return None
        return pars.pop()

    def _check_mate(self, other: "SymElement") -> None:
        if self.algebra is not other.algebra or self.basis != other.basis:
            raise ValueError("elements live over different bases")

    def __add__(self, other: "SymElement") -> "SymElement":
        self._check_mate(other)
        out = dict(self.terms)
        for t, c in other.terms.items():
            new = out.get(t, ZERO) + c
            if new:
                out[t] = new
            else:
                del out[t]
        return self._like(out)

    def __sub__(self, other: "SymElement") -> "SymElement":
        return self + (-ONE) * other

    def __neg__(self) -> "SymElement":
        return (-ONE) * self

    def __rmul__(self, c: Scalar) -> "SymElement":
        c = Fraction(c)
        return self._like({t: c * v for t, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, SymElement):
            return self.__rmul__(other)
        self._check_mate(other)
        acc: dict[ExpVec, Scalar] = {}
        for t1, c1 in self.terms.items():
            w1 = _word_of(t1)
            for t2, c2 in other.terms.items():
                sorted_word = _sort_word(w1 + _word_of(t2), self.parities)
                if sorted_word is None:
                    continue
                sign, exps = sorted_word
                new = acc.get(exps, ZERO) + sign * c1 * c2
                if new:
                    acc[exps] = new
                else:
                    del acc[exps]
        return self._like(acc)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymElement):
            return NotImplemented
        return (
            self.algebra is other.algebra
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        return f"SymElement({self.space}, {self.terms})"

    def to_json(self) -> dict:
        return {
            "space": self.space,
            "terms": [
                {"monomial": list(t), "coeff": str(c)}
                for t, c in sorted(self.terms.items(), key=lambda kv: deglex_key(kv[0]))
            ],
        }


def sym_monomials_up_to(parities: Sequence[Parity], d: int) -> list[ExpVec]:
    """All exponent vectors of total degree <= d, odd letters capped at 1."""
    out: list[ExpVec] = []

    def rec(i: int, left: int, acc: list[int]) -> None:
        if i == len(parities):
            out.append(tuple(acc))
            return
        top = min(left, 1) if parities[i] else left
        for e in range(top + 1):
            acc.append(e)
            rec(i + 1, left - e, acc)
            acc.pop()

    rec(0, d, [])
    return sorted(out, key=deglex_key)


def sym_monomials_exact(parities: Sequence[Parity], r: int) -> list[ExpVec]:
    return [t for t in sym_monomials_up_to(parities, r) if sum(t) == r]


def supersymmetrize(s_el: SymElement, U: Optional[Enveloping] = None) -> UElement:
    """The signed symmetrization of s_el inside U(g).

    Each monomial x_1...x_r goes to (1/r!) sum over all r! orderings with
    the Koszul sign of the reordering; summands are normal formed.
    """
    if U is None:
        U = enveloping_of(s_el.algebra)
    out = U.zero()
    parities = s_el.parities
    for exps, coeff in s_el.terms.items():
        word = _word_of(exps)
        r = len(word)
        scale = coeff / factorial(r)
        for pi in permutations(range(r)):
            sign = ONE
            for a in range(r):
                for b in range(a + 1, r):
                    if pi[a] > pi[b] and parities[word[pi[a]]] and parities[word[pi[b]]]:
                        sign = -sign
            factors = [s_el.basis[word[pi[a]]] for a in range(r)]
            out = out + (sign * scale) * U.normal_form(factors)
    return out


def ad_action(x: SuperVector, s_el: SymElement) -> SymElement:
    """Extend ad_x (x in k) to a super-derivation of the symmetric algebra."""
    g = s_el.algebra
    px = g.parity_of(x)
    if px is None:
        raise ValueError("x is not parity homogeneous")
    dim = g.dim
    basis_dense = [v.dense(dim) for v in s_el.basis]
    bracket_coords: list[list[Scalar]] = []
    for v in s_el.basis:
        image = g.bracket(x, v)
        coords = solve_membership(image.dense(dim), basis_dense)
        if coords is None:
            raise ValueError("ad image leaves the spanned subspace")
        bracket_coords.append(coords)
    acc: dict[ExpVec, Scalar] = {}
    parities = s_el.parities
    for exps, coeff in s_el.terms.items():
        word = _word_of(exps)
        prefix_par = 0
        for t, letter in enumerate(word):
            sign_prefix = -ONE if (px and prefix_par % 2) else ONE
            for c, coord in enumerate(bracket_coords[letter]):
                if not coord:
                    continue
                new_word = word[:t] + (c,) + word[t + 1 :]
                sorted_word = _sort_word(new_word, parities)
                if sorted_word is None:
                    continue
                sign, new_exps = sorted_word
                add = coeff * coord * sign * sign_prefix
                new = acc.get(new_exps, ZERO) + add
                if new:
                    acc[new_exps] = new
                else:
                    del acc[new_exps]
            prefix_par += parities[letter]
    return s_el._like(acc)


# ---------------------------------------------------------------------------
# reduction modulo I_L = U(g)k

_KLAST: dict[int, tuple] = {}


def _k_last(pair: SymmetricPair):
    """Rebased copy of pair.algebra with p-letters first and k-letters last."""
    record = _KLAST.get(id(pair))
    if record is None:
        g = pair.algebra
        vectors = list(pair.p_basis) + list(pair.k_basis)
        parities = [g.parity_of(v) for v in vectors]
        names = [f"p{i}" for i in range(len(pair.p_basis))] + [
            f"k{i}" for i in range(len(pair.k_basis))
        ]
        rebased = change_basis(g, vectors, names, parities)
        record = (rebased, enveloping_of(rebased.algebra), {})
        _KLAST[id(pair)] = record
    return record


def _to_k_last(u: UElement, pair: SymmetricPair) -> UElement:
    rebased, U2, _ = _k_last(pair)
    out = U2.zero()
    for mono, c in u.terms.items():
        factors = [rebased.to_new(SuperVector.unit(i)) for i in u.U.mono_word(mono)]
        out = out + c * U2.normal_form(factors)
    return out


def _p_part(terms: Mapping, n_p: int) -> dict:
    """Drop monomials with any k-letter content (they lie in U(g)k)."""
    return {
        mono: c for mono, c in terms.items() if not any(mono[n_p:])
    }


def _sym_image_k_last(pair: SymmetricPair, exps: ExpVec) -> dict:
    """Normal form of the symmetrized p-monomial, k-content removed, cached."""
    rebased, U2, cache = _k_last(pair)
    cached = cache.get(exps)
    if cached is None:
        n_p = len(pair.p_basis)
        basis = [SuperVector.unit(i) for i in range(n_p)]
        s_el = SymElement(rebased.algebra, basis, {exps: ONE})
        image = supersymmetrize(s_el, U2)
        cached = _p_part(image.terms, n_p)
        cache[exps] = cached
    return cached


def reduce_mod_IL(u: UElement, pair: SymmetricPair) -> SymElement:
    """The unique v in S(p) with supersymmetrize(v) = u modulo U(g)k.

    Works in the k-last presentation: monomials containing a k-letter are
    dropped, then the symmetrized images are eliminated from the top total
    degree down (they are unitriangular against the PBW p-monomials).
    """
    n_p = len(pair.p_basis)
    v = _p_part(_to_k_last(u, pair).terms, n_p)
    result: dict[ExpVec, Scalar] = {}
    while v:
        mono = max(v, key=deglex_key)
        c = v.pop(mono)
        exps = tuple(mono[:n_p])
        result[exps] = result.get(exps, ZERO) + c
        for m2, c2 in _sym_image_k_last(pair, exps).items():
            if m2 == mono:
                continue
            new = v.get(m2, ZERO) - c * c2
            if new:
                v[m2] = new
            else:
                v.pop(m2, None)
    return SymElement(
        pair.algebra, pair.p_basis, {t: c for t, c in result.items() if c}, "S(p)"
    )


def check_unitriangular(pair: SymmetricPair, d: int) -> bool:
    """Mod U(g)k, s(m) equals the PBW monomial m plus lower-degree terms."""
    rebased, U2, _ = _k_last(pair)
    n_p = len(pair.p_basis)
    parities = [rebased.algebra.parity(i) for i in range(n_p)]
    for exps in sym_monomials_up_to(parities, d):
        image = _sym_image_k_last(pair, exps)
        diag = exps + (0,) * len(pair.k_basis)
        if image.get(diag) != ONE:
            return False
        deg = sum(exps)
        if any(sum(m) >= deg for m in image if m != diag):
            return False
    return True


# ---------------------------------------------------------------------------
# bounded-degree structural checks

def generic_ideal_echelon(pair: SymmetricPair, U: Enveloping, d: int) -> SparseEchelon:
    """Echelon span of {x*m, m*x : x in the k-basis, deg m <= d}.

    Every row lies in I = kU(g) + U(g)k; factors of degree d are included
    because degree-d ideal vectors can arise by top-degree cancellation.
    """
    ech = SparseEchelon(deglex_key)
    k_els = [U.from_vector(x) for x in pair.k_basis]
    for mono in U.monomials_up_to(d):
        m_el = U.monomial(mono)
        for xe in k_els:
            ech.insert((xe * m_el).terms)
            ech.insert((m_el * xe).terms)
    return ech


def check_symmetrization_in_ideal(pair: SymmetricPair, d: int) -> bool:
    """s(ad_x(m)) lies in the ideal span for every k-basis x, deg(m) <= d."""
    U = enveloping_of(pair.algebra)
    ech = generic_ideal_echelon(pair, U, d)
    g = pair.algebra
    parities = []
    for v in pair.p_basis:
        parities.append(g.parity_of(v))
    for exps in sym_monomials_up_to(parities, d):
        s_mono = SymElement(g, pair.p_basis, {exps: ONE})
        for x in pair.k_basis:
            image = supersymmetrize(ad_action(x, s_mono), U)
            if image.is_zero():
                continue
            if not ech.contains(image.terms):
                return False
    return True


def _a_basis_as_sym(pair: SymmetricPair) -> list[SymElement]:
    g = pair.algebra
    dim = g.dim
    p_dense = [v.dense(dim) for v in pair.p_basis]
    out = []
    for a in pair.a_basis:
        coords = solve_membership(a.dense(dim), p_dense)
        if coords is None:
            raise ValueError("a-basis vector is not in span(p)")
        terms = {}
        for i, c in enumerate(coords):
            if c:
                exps = [0] * len(pair.p_basis)
                exps[i] = 1
                terms[tuple(exps)] = c
        out.append(SymElement(g, pair.p_basis, terms, "S(a)"))
    return out


def s_of_a_monomials(pair: SymmetricPair, d: int) -> Iterator[tuple[tuple[int, ...], SymElement]]:
    """S(a) monomials of degree <= d as elements of S(p), with their shapes."""
    a_sym = _a_basis_as_sym(pair)
    one = SymElement.one(pair.algebra, pair.p_basis, "S(a)")
    for r in range(d + 1):
        for combo in combinations_with_replacement(range(len(a_sym)), r):
            el = one
            for i in combo:
                el = el * a_sym[i]
            yield combo, el


def check_Spa_decomposition(pair: SymmetricPair, r: int) -> bool:
    """S^r(p) = S^r(a) + ad_k(S^r(p)), by exact rank over exponent vectors."""
    g = pair.algebra
    parities = [g.parity_of(v) for v in pair.p_basis]
    monomials = sym_monomials_exact(parities, r)
    ech = SparseEchelon()
    independents: list[SymElement] = []

    def push(el: SymElement) -> bool:
        if el.is_zero():
            return False
        if ech.insert(el.terms):
            independents.append(el)
            return True
        return False

    for combo, el in s_of_a_monomials(pair, r):
        if len(combo) == r:
            push(el)
    frontier = []
    for exps in monomials:
        s_mono = SymElement(g, pair.p_basis, {exps: ONE})
        for x in pair.k_basis:
            if push(ad_action(x, s_mono)):
                frontier.append(independents[-1])
    while frontier:
        new_frontier = []
        for el in frontier:
            for x in pair.k_basis:
                if push(ad_action(x, el)):
                    new_frontier.append(independents[-1])
        frontier = new_frontier
    return ech.rank == len(monomials)


def check_radial_spanning(pair: SymmetricPair, d: int) -> bool:
    """Every PBW monomial of degree <= d lies in I-span + s(S(a))."""
    U = enveloping_of(pair.algebra)
    ech = generic_ideal_echelon(pair, U, d)
    for _, el in s_of_a_monomials(pair, d):
        image = supersymmetrize(el, U)
        if not image.is_zero():
            ech.insert(image.terms)
    for mono in U.monomials_up_to(d):
        if not ech.contains({mono: ONE}):
            return False
    return True


def check_ad_theta_identity(
    pair: SymmetricPair,
    h_basis: Sequence[SuperVector],
    k_max: int,
    grid: Optional[Sequence[Sequence[Scalar]]] = None,
) -> bool:
    """ad_{x+theta(x)}(a^k) = -k alpha(a) (x-theta(x)) a^{k-1} in S(p).

    x runs over the root vectors of the decomposition relative to h_basis,
    alpha over the matching roots, and a over grid combinations of the
    Cartan subspace basis.  Checked exactly for 1 <= k <= k_max.
    """
    from .liealg import root_decomposition

    g = pair.algebra
    dim = g.dim
    p_dense = [v.dense(dim) for v in pair.p_basis]
    h_dense = [v.dense(dim) for v in h_basis]

    def as_sym(v: SuperVector, space: str = "S(p)") -> SymElement:
        coords = solve_membership(v.dense(dim), p_dense)
        if coords is None:
            raise ValueError("vector is not in span(p)")
        terms = {}
        for i, c in enumerate(coords):
            if c:
                exps = [0] * len(pair.p_basis)
                exps[i] = 1
                terms[tuple(exps)] = c
        return SymElement(g, pair.p_basis, terms, space)

    if grid is None:
        grid = _small_grid(len(pair.a_basis))
    roots = root_decomposition(g, h_basis)
    one = SymElement.one(g, pair.p_basis)
    for tag, vectors in roots.items():
        for x in vectors:
            tx = pair.theta.apply(x)
            xk = x + tx
            xp_sym = as_sym(x - tx)
            for coords in grid:
                a_vec = SuperVector({})
                for c, basis_vec in zip(coords, pair.a_basis):
                    a_vec = a_vec + Fraction(c) * basis_vec
                h_coords = solve_membership(a_vec.dense(dim), h_dense)
                if h_coords is None:
                    raise ValueError("a-basis vector is outside span(h)")
                alpha_a = sum((c * t for c, t in zip(h_coords, tag)), ZERO)
                a_sym = as_sym(a_vec)
                power = one
                for k in range(1, k_max + 1):
                    prev = power
                    power = power * a_sym
                    lhs = ad_action(xk, power)
                    rhs = (-k * alpha_a) * (xp_sym * prev)
                    if lhs != rhs:
                        return False
    return True


def _small_grid(n: int) -> list[tuple[Scalar, ...]]:
    from itertools import product

    values = [Fraction(0), Fraction(1), Fraction(2), Fraction(-1), Fraction(1, 2)]
    return [tuple(c) for c in product(values, repeat=n)]
