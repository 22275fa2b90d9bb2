"""Named check suites behind the `check` subcommand.

Every runner returns a plain dict: suite name, the degree bound it ran
at, a list of items with pass flags (witness data attached only on
failure), and an overall pass flag.  Runs are deterministic: random
draws use fixed seeds and all iteration orders are fixed, so identical
invocations serialize identically.
"""

from fractions import Fraction
from random import Random

from .functionals import is_bi_invariant, product_functional, random_invariant_functional
from .gl12 import (
    alpha_beta_recursive,
    alpha_closed,
    alpha_recursive,
    beta_closed,
    beta_from_alpha,
    beta_recursive,
    build_pair,
)
from .liealg import check_jacobi
from .sequences import check_tangent_identity, zigzag, zigzag_bruteforce
from .symmetrize import (
    SymElement,
    check_symmetrization_in_ideal,
    check_unitriangular,
    reduce_mod_IL,
    supersymmetrize,
    sym_monomials_up_to,
)
from .unipoly import UniPoly

SUITE_NAMES = ("jacobi", "hopf", "symmetrization", "alpha", "ideal", "radial")

ZERO = Fraction(0)


def _item(name: str, ok: bool, witness=None) -> dict:
    entry = {"name": name, "pass": bool(ok)}
    if not ok and witness is not None:
        entry["witness"] = witness
    return entry


def _report(suite: str, degree: int, items: list, detail=None) -> dict:
    out = {
        "suite": suite,
        "degree": degree,
        "items": items,
        "pass": all(it["pass"] for it in items),
    }
    if detail is not None:
        out["detail"] = detail
    return out


def run_jacobi(degree: int) -> dict:
    pair = build_pair()
    bad = check_jacobi(pair.algebra)
    items = [_item("super-jacobi", not bad, {"triples": bad[:5]})]
    rows = pair.verify_table(
        samples=((Fraction(1), ZERO), (ZERO, Fraction(1)), (Fraction(3), Fraction(-2)))
    )
    failing = [row["identity"] for row in rows if not row["pass"]]
    items.append(_item("commutator-table", not failing, {"identities": failing[:5]}))
    return _report("jacobi", degree, items, detail={"table_rows": len(rows)})


def run_hopf(degree: int) -> dict:
    U = build_pair().U
    unit = (0,) * U.algebra.dim
    monos = list(U.monomials_up_to(degree))
    gen_names = [g.name for g in U.algebra.generators]
    items = []

    witness = None
    for mono in monos:
        left: dict = {}
        right: dict = {}
        for (m1, m2), c in U._coproduct_mono(mono).items():
            for (a, b), c2 in U._coproduct_mono(m1).items():
                key = (a, b, m2)
                left[key] = left.get(key, ZERO) + c * c2
            for (a, b), c2 in U._coproduct_mono(m2).items():
                key = (m1, a, b)
                right[key] = right.get(key, ZERO) + c * c2
        if {k: v for k, v in left.items() if v} != {k: v for k, v in right.items() if v}:
            witness = {"monomial": list(mono)}
            break
    items.append(_item("coassociativity", witness is None, witness))

    witness = None
    for mono in monos:
        el = U.monomial(mono)
        left_el = U.zero()
        right_el = U.zero()
        for (m1, m2), c in U._coproduct_mono(mono).items():
            if m1 == unit:
                left_el = left_el + c * U.monomial(m2)
            if m2 == unit:
                right_el = right_el + c * U.monomial(m1)
        if left_el != el or right_el != el:
            witness = {"monomial": list(mono)}
            break
    items.append(_item("counit", witness is None, witness))

    witness = None
    for mono in monos:
        acc = U.zero()
        for (m1, m2), c in U._coproduct_mono(mono).items():
            acc = acc + c * (U.antipode(U.monomial(m1)) * U.monomial(m2))
        expected = U.one() if mono == unit else U.zero()
        if acc != expected:
            witness = {"monomial": list(mono)}
            break
    items.append(_item("antipode", witness is None, witness))

    # Multiplicativity of the coproduct against every generator; with
    # coassociativity this generates the full morphism property.
    witness = None
    for mono in monos:
        a = U.monomial(mono)
        da = U.coproduct(a)
        for name in gen_names:
            b = U.gen(name)
            if U.coproduct(a * b) != da * U.coproduct(b):
                witness = {"monomial": list(mono), "generator": name}
                break
        if witness:
            break
    items.append(_item("coproduct-morphism", witness is None, witness))

    return _report("hopf", degree, items, detail={"monomials": len(monos)})


def run_symmetrization(degree: int) -> dict:
    pair = build_pair()
    sp = pair.pair
    parities = [sp.algebra.parity_of(v) for v in sp.p_basis]
    witness = None
    count = 0
    for exps in sym_monomials_up_to(parities, degree):
        el = SymElement(sp.algebra, sp.p_basis, {tuple(exps): Fraction(1)})
        count += 1
        if reduce_mod_IL(supersymmetrize(el, pair.U), sp) != el:
            witness = {"monomial": list(exps)}
            break
    items = [
        _item("roundtrip", witness is None, witness),
        _item("unitriangular", check_unitriangular(sp, degree)),
        _item("symmetrization-in-ideal", check_symmetrization_in_ideal(sp, degree)),
    ]
    return _report("symmetrization", degree, items, detail={"monomials": count})


def run_alpha(degree: int) -> dict:
    n_max = max(1, degree)
    pair = build_pair()
    witness = None
    for n in range(1, n_max + 1):
        a_rec, b_rec = alpha_beta_recursive(n)
        routes = [
            ("closed", alpha_closed(n), beta_closed(n)),
            ("binomial", a_rec, beta_from_alpha(n)),
            ("pbw", *pair.alpha_beta_from_pbw(n)),
        ]
        for label, a_other, b_other in routes:
            if a_other != a_rec or b_other != b_rec:
                witness = {"n": n, "route": label}
                break
        if witness:
            break
    items = [_item("triple-agreement", witness is None, witness)]

    spots = [
        ("alpha_1", alpha_recursive(1), UniPoly([0, 1])),
        ("beta_0", beta_recursive(0), UniPoly([1])),
        ("alpha_4", alpha_recursive(4), UniPoly([5, 0, -6, 0, 1])),
        ("beta_2", beta_recursive(2), UniPoly([-2, 0, 3])),
    ]
    bad = [name for name, got, want in spots if got != want]
    items.append(_item("spot-values", not bad, {"values": bad}))

    witness = None
    for n in range(min(n_max, 10) + 1):
        if zigzag(n) != zigzag_bruteforce(n):
            witness = {"n": n}
            break
    items.append(_item("zigzag-bruteforce", witness is None, witness))

    witness = None
    for m in range(1, min(n_max, 6) + 1):
        if not check_tangent_identity(m):
            witness = {"m": m}
            break
    items.append(_item("tangent-bernoulli", witness is None, witness))

    return _report("alpha", n_max, items)


def run_ideal(degree: int) -> dict:
    report = build_pair().verify_ideal_basis(degree)
    counts = {
        key: report[key]
        for key in ("basis_count", "rep_count", "dim", "ideal_rank", "span_rank")
    }
    items = [
        _item("membership", report["membership"], counts),
        _item("independent", report["independent"], counts),
        _item("complete", report["complete"], counts),
    ]
    return _report("ideal", degree, items, detail=counts)


def run_radial(degree: int) -> dict:
    pair = build_pair()
    report = pair.radial_restriction_check(degree)
    items = [
        _item("surjective", report["surjective"]),
        _item("kernel", report["kernel_ok"], {"kernel": report["kernel"]}),
        _item("independent", report["independent"]),
    ]

    bound = min(degree, 5)
    basis = pair.ideal_basis(bound)
    witness = None
    for left_seed, right_seed in ((101, 201), (102, 202), (103, 203)):
        lam = random_invariant_functional(pair, bound, Random(left_seed))
        mu = random_invariant_functional(pair, bound, Random(right_seed))
        if not (is_bi_invariant(lam, pair.pair, basis) and is_bi_invariant(mu, pair.pair, basis)):
            witness = {"seeds": [left_seed, right_seed], "stage": "factors"}
            break
        if not is_bi_invariant(product_functional(lam, mu), pair.pair, basis):
            witness = {"seeds": [left_seed, right_seed], "stage": "product"}
            break
    items.append(_item("functional-closure", witness is None, witness))

    detail = {
        "image_rank": report["image_rank"],
        "rep_count": report["rep_count"],
        "functional_bound": bound,
    }
    return _report("radial", degree, items, detail=detail)


_RUNNERS = {
    "jacobi": run_jacobi,
    "hopf": run_hopf,
    "symmetrization": run_symmetrization,
    "alpha": run_alpha,
    "ideal": run_ideal,
    "radial": run_radial,
}


def run_suite(name: str, degree: int) -> dict:
    """Run one named suite, or all of them in fixed order."""
    if name == "all":
        reports = [_RUNNERS[s](degree) for s in SUITE_NAMES]
        return {
            "suite": "all",
            "degree": degree,
            "suites": reports,
            "pass": all(r["pass"] for r in reports),
        }
    if name not in _RUNNERS:
        raise ValueError(f"unknown suite {name!r}")
    return _RUNNERS[name](degree)
