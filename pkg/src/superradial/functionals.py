"""Degree-truncated functionals on U(g) and their convolution product.

A DualFunctional knows its values on every PBW monomial up to a degree
bound.  The product is dual to the coproduct,

    (lam mu)(x) = sum (-1)^{|x_1||mu|} lam(x_1) mu(x_2),

and the functionals vanishing on the coideal I = kU(g) + U(g)k close
under it; `is_bi_invariant` checks the vanishing against a supplied
spanning set of I at the bound.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random
from typing import Mapping, Optional

from .enveloping import Enveloping, Monomial, UElement
from .scalars import Parity, Scalar, ZERO


def _mono_parity(U: Enveloping, mono: Monomial) -> Parity:
    return U.mono_parity(mono)


class DualFunctional:
    """A linear functional on U(g) truncated at a total-degree bound.

    Monomials absent from `values` count as zero, so the functional is
    total on the basis up to the bound.
    """

    __slots__ = ("U", "degree_bound", "values", "parity")

    def __init__(
        self,
        U: Enveloping,
        degree_bound: int,
        values: Mapping[Monomial, Scalar],
        parity: Parity = 0,
    ) -> None:
        self.U = U
        self.degree_bound = degree_bound
        clean: dict[Monomial, Scalar] = {}
        for mono, c in values.items():
            mono = tuple(mono)
            if sum(mono) > degree_bound:
                raise ValueError("value assigned above the degree bound")
            c = Fraction(c)
            if c:
                clean[mono] = c
        self.values = clean
        self.parity = parity

    def value(self, mono: Monomial) -> Scalar:
        mono = tuple(mono)
        if sum(mono) > self.degree_bound:
            raise ValueError("monomial degree exceeds the functional's bound")
        return self.values.get(mono, ZERO)

    def __call__(self, el: UElement) -> Scalar:
        out = ZERO
        for mono, c in el.terms.items():
            out += c * self.value(mono)
        return out


def counit_functional(U: Enveloping, degree_bound: int) -> DualFunctional:
    """The counit as a functional: 1 on the empty monomial, 0 elsewhere."""
    return DualFunctional(U, degree_bound, {(0,) * U.algebra.dim: Fraction(1)}, 0)


def dual_product(lam: DualFunctional, mu: DualFunctional, x: Monomial) -> Scalar:
    """(lam mu)(x) through the coproduct, with the Koszul sign on mu."""
    U = lam.U
    if U is not mu.U:
        raise ValueError("functionals live on different enveloping algebras")
    x = tuple(x)
    if sum(x) > min(lam.degree_bound, mu.degree_bound):
        raise ValueError("monomial degree exceeds a functional's bound")
    total = ZERO
    for (m1, m2), c in U._coproduct_mono(x).items():
        left = lam.value(m1)
        if not left:
            continue
        right = mu.value(m2)
        if not right:
            continue
        if mu.parity and _mono_parity(U, m1):
            c = -c
        total += c * left * right
    return total


def product_functional(lam: DualFunctional, mu: DualFunctional) -> DualFunctional:
    """The convolution product, tabulated up to the smaller bound."""
    bound = min(lam.degree_bound, mu.degree_bound)
    values = {}
    for mono in lam.U.monomials_up_to(bound):
        v = dual_product(lam, mu, mono)
        if v:
            values[mono] = v
    return DualFunctional(lam.U, bound, values, (lam.parity + mu.parity) % 2)


def is_bi_invariant(lam: DualFunctional, pair, ideal_basis_at_degree) -> bool:
    """True iff lam kills every supplied ideal vector.

    The caller supplies a spanning set of I intersected with the filtration
    level at lam's bound; `pair` identifies which coideal is meant and is
    kept for signature clarity.
    """
    del pair
    for el in ideal_basis_at_degree:
        if lam(el):
            return False
    return True


def random_invariant_functional(
    gl12_pair, bound: int, rng: Optional[Random] = None, parity: Parity = 0
) -> DualFunctional:
    """Random functional that vanishes on I, built on the gl(1|2) quotient.

    Draws rational values on the canonical quotient representatives and
    pulls them back through quotient_reduce, so vanishing on I holds by
    construction.
    """
    rng = rng or Random(0)
    rep_values = {
        rep: Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        for rep in gl12_pair.quotient_representatives(bound)
    }
    table = gl12_pair.rep_functional_values(rep_values, bound)
    return DualFunctional(gl12_pair.U, bound, table, parity)
