from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superradial.liealg import (
    Involution,
    LieSuperalgebra,
    SuperVector,
    algebra_from_json,
    algebra_to_json,
    builtin_algebra,
    change_basis,
    check_centralizer,
    check_jacobi,
    gl_nn_q_pair,
    gl_superalgebra,
    root_decomposition,
    split_pair,
)
from superradial.linalg import Matrix
from superradial.scalars import koszul_sign

F = Fraction


def test_gl11_bracket_example():
    g = gl_superalgebra(1, 1)
    e = g.gen("E(1,1b)")
    f = g.gen("E(1b,1)")
    # odd-odd bracket is an anticommutator: {e, f} = E(1,1) + E(1b,1b)
    assert g.bracket(e, f) == g.gen("E(1,1)") + g.gen("E(1b,1b)")
    assert g.bracket(e, e) == SuperVector()


def test_gl_parities():
    g = gl_superalgebra(1, 2)
    assert g.parity(g.index("E(1,1)")) == 0
    assert g.parity(g.index("E(1,1b)")) == 1
    assert g.parity(g.index("E(1b,2b)")) == 0


@pytest.mark.parametrize("m,n", [(1, 1), (1, 2), (2, 2)])
def test_gl_jacobi(m, n):
    assert check_jacobi(gl_superalgebra(m, n)) == []


def test_jacobi_detects_breakage():
    # sl(2)-like table with one wrong constant
    bad = LieSuperalgebra(
        ["h", "e", "f"],
        [0, 0, 0],
        {
            (0, 1): {1: F(2)},
            (0, 2): {2: F(-2)},
            (1, 2): {0: F(3)},  # should be 1*h
        },
    )
    assert check_jacobi(bad) == []  # sl2 relations scale consistently; build a real break
    worse = LieSuperalgebra(
        ["h", "e", "f"],
        [0, 0, 0],
        {
            (0, 1): {1: F(2)},
            (0, 2): {2: F(2)},  # wrong sign
            (1, 2): {0: F(1)},
        },
    )
    assert worse.bracket(worse.gen("h"), worse.gen("f")) == F(2) * worse.gen("f")
    assert check_jacobi(worse) != []


def test_parity_homogeneity_enforced():
    with pytest.raises(ValueError):
        LieSuperalgebra(["x", "y"], [0, 1], {(0, 0): {1: F(1)}})
    with pytest.raises(ValueError):
        # even generator with [x,x] != 0
        LieSuperalgebra(["x", "y"], [0, 0], {(0, 0): {1: F(1)}})


def test_odd_square_allowed():
    g = LieSuperalgebra(["x", "z"], [1, 0], {(0, 0): {1: F(2)}})
    assert g.bracket(g.gen("x"), g.gen("x")) == F(2) * g.gen("z")


parity_choice = st.sampled_from([0, 1])


@st.composite
def homogeneous_vector(draw, g, parity):
    indices = [i for i in range(g.dim) if g.parity(i) == parity]
    coeffs = draw(
        st.lists(
            st.fractions(min_value=-4, max_value=4, max_denominator=2),
            min_size=len(indices),
            max_size=len(indices),
        )
    )
    return SuperVector(zip(indices, coeffs))


@given(parity_choice, parity_choice, st.data())
@settings(max_examples=40)
def test_bracket_super_skew(p1, p2, data):
    g = gl_superalgebra(1, 2)
    x = data.draw(homogeneous_vector(g, p1))
    y = data.draw(homogeneous_vector(g, p2))
    assert g.bracket(x, y) == (-koszul_sign(p1, p2)) * g.bracket(y, x)


def test_change_basis_roundtrip():
    g = gl_superalgebra(1, 1)
    h_plus = g.gen("E(1,1)") + g.gen("E(1b,1b)")
    h_minus = g.gen("E(1,1)") - g.gen("E(1b,1b)")
    e = g.gen("E(1,1b)")
    f = g.gen("E(1b,1)")
    reb = change_basis(g, [h_plus, h_minus, e, f], ["z", "h", "e", "f"], [0, 0, 1, 1])
    b = reb.algebra
    # {e,f} = E(1,1)+E(1b,1b) = z in the new basis
    assert b.bracket(b.gen("e"), b.gen("f")) == b.gen("z")
    assert b.bracket(b.gen("h"), b.gen("e")) == F(2) * b.gen("e")
    assert b.bracket(b.gen("z"), b.gen("e")) == SuperVector()
    assert check_jacobi(b) == []
    assert reb.to_new(h_plus) == b.gen("z")
    assert reb.to_old(b.gen("h")) == h_minus


def test_change_basis_rejects_bad_input():
    g = gl_superalgebra(1, 1)
    with pytest.raises(ValueError):
        change_basis(g, [g.gen("E(1,1)")] * 4, ["a", "b", "c", "d"], [0, 0, 0, 0])
    with pytest.raises(ValueError):
        change_basis(
            g,
            [g.gen("E(1,1)") + g.gen("E(1,1b)")] * 4,
            ["a", "b", "c", "d"],
            [0, 0, 0, 0],
        )


def test_involution_validate():
    g = gl_superalgebra(1, 1)
    # negation is not an automorphism of a superalgebra with odd part
    minus = Involution(-Matrix.identity(4))
    with pytest.raises(ValueError):
        minus.validate(g)
    ident = Involution(Matrix.identity(4))
    ident.validate(g)
    with pytest.raises(ValueError):
        Involution(F(2) * Matrix.identity(4)).validate(g)


def test_gl_nn_q_pair_structure():
    for n in (1, 2):
        pair = gl_nn_q_pair(n)
        g = pair.algebra
        assert len(pair.k_basis) == 2 * n * n
        assert len(pair.p_basis) == 2 * n * n
        assert len(pair.a_basis) == n
        assert check_centralizer(pair)
        for a in pair.a_basis:
            assert pair.theta.apply(a) == -a


def test_centralizer_failure_detected():
    # use the full diagonal of gl(1|1) as "a": its centralizer in p is bigger
    g = gl_superalgebra(1, 1)
    swap = [g.gen("E(1b,1b)"), g.gen("E(1b,1)"), g.gen("E(1,1b)"), g.gen("E(1,1)")]
    theta = Involution.from_images(swap, 4)
    a_basis = [g.gen("E(1,1)") - g.gen("E(1b,1b)")]
    pair = split_pair(g, theta, a_basis)
    assert check_centralizer(pair)
    # shrink a to the zero-dimensional guess: centralizer (= all of p) exceeds it
    pair_bad = split_pair(g, theta, [])
    assert not check_centralizer(pair_bad)


def test_root_decomposition_gl22():
    g = gl_superalgebra(2, 2)
    h_basis = [g.gen(f"E({lab},{lab})") for lab in ("1", "2", "1b", "2b")]
    roots = root_decomposition(g, h_basis)
    assert len(roots) == 12
    for tag, vectors in roots.items():
        assert len(vectors) == 1
        assert sum(tag) == 0
        # eigenvector check: [h_i, v] = tag_i * v
        v = vectors[0]
        for value, h in zip(tag, h_basis):
            assert g.bracket(h, v) == value * v


def test_root_decomposition_rejects_nilpotent():
    heis = LieSuperalgebra(
        ["x", "y", "z"], [0, 0, 0], {(0, 1): {2: F(1)}}
    )
    with pytest.raises(ValueError):
        root_decomposition(heis, [heis.gen("x")])


def test_root_decomposition_rejects_fat_centralizer():
    ab = LieSuperalgebra(["x", "y"], [0, 0], {})
    with pytest.raises(ValueError):
        root_decomposition(ab, [ab.gen("x")])


def test_json_roundtrip():
    g = gl_superalgebra(1, 2)
    doc = algebra_to_json(g)
    g2 = algebra_from_json(doc)
    assert [gen.name for gen in g2.generators] == [gen.name for gen in g.generators]
    for i in range(g.dim):
        for j in range(g.dim):
            assert g.bracket_units(i, j) == g2.bracket_units(i, j)
    with pytest.raises(ValueError):
        algebra_from_json({"schema": "2", "generators": []})


def test_builtin_algebra():
    g = builtin_algebra("gl(1|2)")
    assert g.dim == 9
    with pytest.raises(KeyError):
        builtin_algebra("so(5)")
