"""Checks for the gl(1|2) pair, its commutation polynomials, and the ideal.

`build_pair()` is cached, so the module-level handle shares the rewriting
caches across tests.  Heavy degree-6 rank identities live in the acceptance
suite; the versions here stop at degree 5.
"""

from fractions import Fraction as F

import pytest

from superradial.gl12 import (
    E,
    EP,
    F as FG,
    FP,
    K,
    K1,
    K2,
    P,
    QuotientElement,
    Z,
    GEN_MATRICES,
    alpha_beta_recursive,
    alpha_closed,
    alpha_recursive,
    beta_closed,
    beta_from_alpha,
    beta_recursive,
    build_pair,
    builtin_pair,
    supertranspose,
    theta_matrix,
)
from superradial.liealg import SuperVector
from superradial.unipoly import UniPoly

pair = build_pair()
U = pair.U


def test_theta_fixes_k_and_negates_p():
    for name in ("k", "k1", "k2", "e'", "f'"):
        assert theta_matrix(GEN_MATRICES[name]) == GEN_MATRICES[name]
    for name in ("z", "p", "e", "f"):
        m = theta_matrix(GEN_MATRICES[name])
        assert m == tuple(tuple(-v for v in row) for row in GEN_MATRICES[name])


def test_supertranspose_blocks():
    # [[A, B], [C, D]] goes to [[A^t, -C^t], [B^t, D^t]]
    x = GEN_MATRICES["e"]  # B and C blocks populated
    st = supertranspose(x)
    assert st[1][0] == x[0][1]
    assert st[0][1] == -x[1][0]
    assert st[0][2] == -x[2][0]


def test_pair_split_matches_labels():
    assert pair.pair.k_basis == [SuperVector.unit(i) for i in (K, K1, K2, EP, FP)]
    assert pair.pair.p_basis == [SuperVector.unit(i) for i in (Z, P, E, FG)]
    assert pair.pair.a_basis == [SuperVector.unit(Z), SuperVector.unit(P)]


def test_z_is_central():
    z = SuperVector.unit(Z)
    for i in range(9):
        assert pair.algebra.bracket(z, SuperVector.unit(i)) == SuperVector({})


def test_commutator_table():
    report = pair.verify_table(samples=[(1, 0), (0, 1), (F(3), F(-2)), (F(1, 2), 5)])
    failures = [r["identity"] for r in report if not r["pass"]]
    assert failures == []
    assert len(report) == 16 + 4 * 4


def test_alpha_beta_base_case():
    a1, b0 = alpha_beta_recursive(1)
    assert a1 == UniPoly.x()
    assert b0 == UniPoly.one()


def test_alpha_beta_spot_values_all_routes():
    x = UniPoly.x()
    a4 = x * x * x * x - 6 * x * x + UniPoly([F(5)])
    b2 = 3 * x * x - UniPoly([F(2)])
    assert alpha_recursive(4) == a4
    assert alpha_closed(4) == a4
    assert pair.alpha_beta_from_pbw(4) == (a4, UniPoly([F(0), F(-8), F(0), F(4)]))
    assert beta_recursive(2) == b2
    assert beta_closed(3) == b2
    assert beta_from_alpha(3) == b2
    assert pair.alpha_beta_from_pbw(3)[1] == b2


def test_route_agreement():
    for n in range(1, 9):
        a, b = alpha_beta_recursive(n)
        assert alpha_closed(n) == a
        assert beta_closed(n) == b
        assert beta_from_alpha(n) == b
        assert pair.alpha_beta_from_pbw(n) == (a, b)


def test_degrees_and_leading_coefficients():
    for n in range(1, 11):
        a = alpha_recursive(n)
        b = beta_recursive(n - 1)
        assert a.degree == n
        assert b.degree == n - 1
        assert a.coefficient(n) > 0
        assert b.coefficient(n - 1) > 0


def test_parity_of_exponents():
    for n in range(1, 11):
        for j, c in enumerate(alpha_recursive(n).coeffs):
            if c:
                assert (n - j) % 2 == 0
        for j, c in enumerate(beta_recursive(n - 1).coeffs):
            if c:
                assert (n - 1 - j) % 2 == 0


def test_binomial_splitting():
    assert pair.verify_binomial_splitting(0)
    assert pair.verify_binomial_splitting(1)
    assert pair.verify_binomial_splitting(6)


def test_first_part_identities():
    for n in range(4):
        for k0 in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (F(2), F(-1, 2), F(3))]:
            for label, ok in pair.first_part_identities(n, k0):
                assert ok, (n, k0, label)


def test_second_part_identities():
    for n in range(4):
        for v in [(1, 0), (0, 1), (F(3), F(-2)), (F(1, 2), F(5, 3))]:
            for label, ok in pair.second_part_identities(n, *v):
                assert ok, (n, v, label)


def test_second_part_iii_base_case_puts_p_in_the_ideal():
    # f e' = -e' f + p, so p is a combination of k-sided products
    ep, f = U.gen("e'"), U.gen("f")
    assert f * ep == -(ep * f) + U.gen("p")
    assert pair.quotient_reduce(U.gen("p")).is_zero()


def test_mirror_identity():
    for n in range(9):
        assert pair.mirror_identity(n, F(1), F(0))
        assert pair.mirror_identity(n, F(2, 3), F(-5))


def test_lemma_suite_report():
    report = pair.verify_lemma_suites(2, draws=3, seed=11)
    assert report["pass"]
    assert report["failures"] == []
    assert report["checked"] == 3 * 3 * 8


def test_ideal_basis_low_degree():
    names = {frozenset(el.terms): el for el in pair.ideal_basis(1)}
    monos = {m for terms in names for m in terms}
    # family (iii): the five k-side generators; family (i): e and f; (ii): -p
    assert pair.mono({K: 1}) in monos
    assert pair.mono({EP: 1}) in monos
    assert pair.mono({E: 1}) in monos
    assert pair.mono({FG: 1}) in monos
    assert frozenset({pair.mono({P: 1})}) in names
    assert len(names) == 8


def test_ideal_basis_family_two_beta():
    d2 = pair.ideal_basis(2)
    target = U.monomial(pair.mono({E: 1, FG: 1})) - U.monomial(pair.mono({P: 2}))
    assert any(el == target for el in d2)


def test_verify_ideal_basis_small_degrees():
    trivial = pair.verify_ideal_basis(0)
    assert trivial["pass"] and trivial["basis_count"] == 0 and trivial["rep_count"] == 1
    for d in (2, 5):
        report = pair.verify_ideal_basis(d)
        assert report["membership"], d
        assert report["independent"], d
        assert report["complete"], d
        assert report["ideal_rank"] + report["rep_count"] == report["dim"]


def test_quotient_reduce_examples():
    q = pair.quotient_reduce
    assert q(U.gen("p")).is_zero()
    assert q(pair.p_power(2)) == QuotientElement(pair, {pair.mono({E: 1, FG: 1}): F(1)})
    z3 = pair.umono({Z: 3})
    assert q(z3).to_element() == z3
    # p^3 rewrites through beta_1 = 2x
    assert q(pair.p_power(3)) == QuotientElement(
        pair, {pair.mono({P: 1, E: 1, FG: 1}): F(2)}
    )


def test_quotient_reduce_is_linear_and_idempotent():
    q = pair.quotient_reduce
    a = pair.p_power(4) + F(2) * pair.umono({Z: 1, P: 1})
    b = pair.umono({K: 1, P: 2}) - pair.umono({Z: 2})
    assert q(a + b) == q(a) + q(b)
    for el in (a, b, a + b):
        image = q(el)
        assert q(image.to_element()) == image


def test_quotient_reduce_kills_ideal_basis():
    for el in pair.ideal_basis(4):
        assert pair.quotient_reduce(el).is_zero()


def test_quotient_element_multiplication():
    q = pair.quotient_reduce
    prod = q(pair.p_power(2)) * q(pair.umono({Z: 1}))
    assert prod == QuotientElement(pair, {pair.mono({Z: 1, E: 1, FG: 1}): F(1)})
    assert (q(U.gen("p")) * q(pair.p_power(2))).is_zero()


def test_v_p_powers_stay_in_the_ideal():
    for m in range(9):
        assert pair.v_p_in_ideal(m)


def test_radial_restriction_small():
    report = pair.radial_restriction_check(3)
    assert report["pass"]
    assert report["image_rank"] == report["rep_count"] == 7
    kernel = [tuple(m) for m in report["kernel"]]
    assert kernel == sorted(
        [pair.mono({P: 1}), pair.mono({Z: 1, P: 1}), pair.mono({Z: 2, P: 1})]
    )


def test_roots_of_the_diagonal_cartan():
    roots = pair.roots()
    assert len(roots) == 6
    assert all(any(tag) for tag in roots)
    assert all(len(spaces) == 1 for spaces in roots.values())
    # every root vanishes on the central z
    assert all(tag[0] == 0 for tag in roots)
    expected = {
        (0, 1, -1),
        (0, -1, -1),
        (0, 1, 1),
        (0, -1, 1),
        (0, 0, 2),
        (0, 0, -2),
    }
    assert {tuple(int(c) for c in tag) for tag in roots} == expected


def test_builtin_pair_lookup():
    assert builtin_pair("gl12-osp12") is pair.pair
    with pytest.raises(KeyError):
        builtin_pair("sl2")
