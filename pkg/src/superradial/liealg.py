"""Finite-dimensional Lie superalgebras presented by structure constants.

An algebra is a list of homogeneous generators plus a table of brackets
[x_i, x_j] expanded over the generator basis.  Construction normalizes the
table with super skew-symmetry and rejects parity-inhomogeneous brackets;
the super Jacobi identity is checked separately by `check_jacobi` so that
deliberately broken tables can be built in tests.

Beyond the raw algebra type this module provides gl(m|n) on matrix units,
changes of basis, involutions, the k/p eigenspace split of a symmetric
pair, Cartan centralizer checks, and simultaneous ad-eigenspace (root)
decompositions.  Everything is exact over Q.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .linalg import Matrix, char_poly, nullspace, rank, rational_roots, solve_membership
from .scalars import EVEN, ODD, ONE, ZERO, Parity, Scalar, format_scalar, koszul_sign, parse_scalar


class SuperVector(dict):
    """Sparse vector over an algebra's generator basis: {index: Scalar}.

    Zero coefficients are never stored, so dict equality is vector equality.
    """

    def __init__(self, items: Iterable = ()):
        super().__init__()
        pairs = items.items() if isinstance(items, Mapping) else items
        for i, c in pairs:
            acc = self.get(i, ZERO) + c
            if acc:
                self[i] = acc
            else:
                self.pop(i, None)

    @classmethod
    def unit(cls, index: int) -> "SuperVector":
        return cls([(index, ONE)])

    def __add__(self, other: "SuperVector") -> "SuperVector":
        out = SuperVector(self)
        for i, c in other.items():
            acc = out.get(i, ZERO) + c
            if acc:
                out[i] = acc
            else:
                out.pop(i, None)
        return out

    def __sub__(self, other: "SuperVector") -> "SuperVector":
        return self + (-ONE) * other

    def __neg__(self) -> "SuperVector":
        return SuperVector({i: -c for i, c in self.items()})

    def __rmul__(self, scalar) -> "SuperVector":
        if not scalar:
            return SuperVector()
        return SuperVector({i: scalar * c for i, c in self.items()})

    def dense(self, dim: int) -> list[Scalar]:
        return [self.get(i, ZERO) for i in range(dim)]


@dataclass(frozen=True)
class Generator:
    index: int
    name: str
    parity: Parity


class LieSuperalgebra:
    """Lie superalgebra over Q given by structure constants.

    `table` maps ordered index pairs (i, j) to the expansion of [x_i, x_j];
    pairs given in one order are completed in the other by super
    skew-symmetry, and pairs never mentioned have zero bracket.
    """

    def __init__(
        self,
        names: Sequence[str],
        parities: Sequence[Parity],
        table: Mapping[tuple[int, int], Mapping[int, Scalar]],
    ):
        if len(names) != len(parities):
            raise ValueError("names and parities disagree in length")
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        self.generators = tuple(
            Generator(i, name, parity) for i, (name, parity) in enumerate(zip(names, parities))
        )
        self._by_name = {g.name: g for g in self.generators}
        self._table: dict[tuple[int, int], dict[int, Scalar]] = {}
        n = len(names)
        for (i, j), terms in table.items():
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"bracket ({i},{j}) out of range")
            clean = {k: c for k, c in terms.items() if c}
            self._check_homogeneous(i, j, clean)
            self._store(i, j, clean)
        # anything not seen is zero
        for i in range(n):
            for j in range(n):
                self._table.setdefault((i, j), {})

    def _check_homogeneous(self, i: int, j: int, terms: Mapping[int, Scalar]) -> None:
        want = self.generators[i].parity ^ self.generators[j].parity
        for k in terms:
            if self.generators[k].parity != want:
                raise ValueError(
                    f"bracket [{self.generators[i].name},{self.generators[j].name}] "
                    f"has a parity-{self.generators[k].parity} term; expected parity {want}"
                )

    def _store(self, i: int, j: int, terms: dict[int, Scalar]) -> None:
        sign = koszul_sign(self.generators[i].parity, self.generators[j].parity)
        mirrored = {k: -sign * c for k, c in terms.items()}
        for key, value in (((i, j), terms), ((j, i), mirrored)):
            old = self._table.get(key)
            if old is not None and old != value:
                raise ValueError(f"inconsistent bracket data for pair {key}")
            self._table[key] = value
        if i == j and self.generators[i].parity == EVEN and terms:
            raise ValueError(f"[x,x] must vanish for even {self.generators[i].name}")

    @property
    def dim(self) -> int:
        return len(self.generators)

    def parity(self, index: int) -> Parity:
        return self.generators[index].parity

    def index(self, name: str) -> int:
        try:
            return self._by_name[name].index
        except KeyError:
            raise KeyError(f"no generator named {name!r}") from None

    def gen(self, name: str) -> SuperVector:
        return SuperVector.unit(self.index(name))

    def bracket_units(self, i: int, j: int) -> Mapping[int, Scalar]:
        return self._table[(i, j)]

    def bracket(self, x: SuperVector, y: SuperVector) -> SuperVector:
        out: dict[int, Scalar] = {}
        for i, ci in x.items():
            for j, cj in y.items():
                terms = self._table[(i, j)]
                if terms:
                    c = ci * cj
                    for k, v in terms.items():
                        acc = out.get(k, ZERO) + c * v
                        if acc:
                            out[k] = acc
                        else:
                            del out[k]
        return SuperVector(out)

    def parity_of(self, x: SuperVector) -> Optional[Parity]:
        """Parity of a homogeneous vector, None for 0 or mixed vectors."""
        seen = {self.parity(i) for i in x}
        if len(seen) == 1:
            return seen.pop()
        return None

    def ad_matrix(self, x: SuperVector) -> Matrix:
        """Matrix of ad(x) = [x, -] on the generator basis."""
        cols = [self.bracket(x, SuperVector.unit(j)).dense(self.dim) for j in range(self.dim)]
        return Matrix.from_columns(cols)


def check_jacobi(g: LieSuperalgebra) -> list[tuple[int, int, int]]:
    """All generator triples violating the super Jacobi identity (empty = pass).

    (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]] = 0.
    """
    bad = []
    units = [SuperVector.unit(i) for i in range(g.dim)]
    for i in range(g.dim):
        pi = g.parity(i)
        for j in range(i, g.dim):
            pj = g.parity(j)
            for k in range(j, g.dim):
                pk = g.parity(k)
                total = (
                    koszul_sign(pi, pk) * g.bracket(units[i], g.bracket(units[j], units[k]))
                    + koszul_sign(pj, pi) * g.bracket(units[j], g.bracket(units[k], units[i]))
                    + koszul_sign(pk, pj) * g.bracket(units[k], g.bracket(units[i], units[j]))
                )
                if total:
                    bad.append((i, j, k))
    return bad


def gl_superalgebra(m: int, n: int) -> LieSuperalgebra:
    """gl(m|n) on matrix units E_(a,b), even indices first.

    Index a runs over 1..m (even) then 1b..nb (odd, "b" for barred); the unit
    E_(a,b) has parity |a|+|b| and
    [E_ab, E_cd] = delta_bc E_ad - (-1)^{(|a|+|b|)(|c|+|d|)} delta_da E_cb.
    """
    if m < 0 or n < 0 or m + n == 0:
        raise ValueError("need m + n >= 1")
    size = m + n

    def label(a: int) -> str:
        return str(a + 1) if a < m else f"{a - m + 1}b"

    def par(a: int) -> Parity:
        return EVEN if a < m else ODD

    def unit(a: int, b: int) -> int:
        return a * size + b

    names = [f"E({label(a)},{label(b)})" for a in range(size) for b in range(size)]
    parities = [par(a) ^ par(b) for a in range(size) for b in range(size)]
    table: dict[tuple[int, int], dict[int, Scalar]] = {}
    for a in range(size):
        for b in range(size):
            for c in range(size):
                for d in range(size):
                    terms: dict[int, Scalar] = {}
                    if b == c:
                        terms[unit(a, d)] = terms.get(unit(a, d), ZERO) + ONE
                    if d == a:
                        sign = koszul_sign(par(a) ^ par(b), par(c) ^ par(d))
                        terms[unit(c, b)] = terms.get(unit(c, b), ZERO) - sign
                    terms = {k: v for k, v in terms.items() if v}
                    if terms:
                        table[(unit(a, b), unit(c, d))] = terms
    return LieSuperalgebra(names, parities, table)


@dataclass
class Rebased:
    """An algebra re-expressed on a new basis, with the change matrices.

    `matrix` has the new basis vectors as columns (old coordinates);
    `inverse` converts old coordinates to new ones.
    """

    algebra: LieSuperalgebra
    source: LieSuperalgebra
    matrix: Matrix
    inverse: Matrix

    def to_new(self, x: SuperVector) -> SuperVector:
        return SuperVector(enumerate(self.inverse.apply(x.dense(self.source.dim))))

    def to_old(self, x: SuperVector) -> SuperVector:
        return SuperVector(enumerate(self.matrix.apply(x.dense(self.algebra.dim))))


def change_basis(
    g: LieSuperalgebra,
    vectors: Sequence[SuperVector],
    names: Sequence[str],
    parities: Sequence[Parity],
) -> Rebased:
    """Re-express g on a new homogeneous basis given in old coordinates."""
    if len(vectors) != g.dim:
        raise ValueError("new basis must have exactly dim vectors")
    for v, p in zip(vectors, parities):
        if any(g.parity(i) != p for i in v):
            raise ValueError("new basis vector is not parity-homogeneous as labeled")
    c = Matrix.from_columns([v.dense(g.dim) for v in vectors])
    try:
        cinv = c.inverse()
    except ValueError:
        raise ValueError("new basis vectors are linearly dependent") from None
    table: dict[tuple[int, int], dict[int, Scalar]] = {}
    for i in range(g.dim):
        for j in range(i, g.dim):
            br = g.bracket(vectors[i], vectors[j])
            if br:
                coords = cinv.apply(br.dense(g.dim))
                table[(i, j)] = {k: v for k, v in enumerate(coords) if v}
    algebra = LieSuperalgebra(names, parities, table)
    return Rebased(algebra=algebra, source=g, matrix=c, inverse=cinv)


class Involution:
    """Involutive parity-preserving automorphism, as a matrix on generators."""

    def __init__(self, matrix: Matrix):
        self.matrix = matrix

    @classmethod
    def from_images(cls, images: Sequence[SuperVector], dim: int) -> "Involution":
        return cls(Matrix.from_columns([v.dense(dim) for v in images]))

    def apply(self, x: SuperVector) -> SuperVector:
        out: dict[int, Scalar] = {}
        for j, c in x.items():
            for i, v in enumerate(self.matrix.column(j)):
                if v:
                    acc = out.get(i, ZERO) + c * v
                    if acc:
                        out[i] = acc
                    else:
                        del out[i]
        return SuperVector(out)

    def validate(self, g: LieSuperalgebra) -> None:
        n = g.dim
        if self.matrix.nrows != n or self.matrix.ncols != n:
            raise ValueError("involution matrix has the wrong shape")
        if self.matrix * self.matrix != Matrix.identity(n):
            raise ValueError("map is not an involution")
        for j in range(n):
            pj = g.parity(j)
            for i, v in enumerate(self.matrix.column(j)):
                if v and g.parity(i) != pj:
                    raise ValueError("involution does not preserve parity")
        units = [SuperVector.unit(i) for i in range(n)]
        images = [self.apply(u) for u in units]
        for i in range(n):
            for j in range(i, n):
                if self.apply(g.bracket(units[i], units[j])) != g.bracket(images[i], images[j]):
                    raise ValueError(
                        f"involution is not an automorphism on "
                        f"({g.generators[i].name},{g.generators[j].name})"
                    )


class SymmetricPair:
    """A supersymmetric pair (g, k): involution eigenspaces plus a Cartan
    subspace a inside the (-1)-eigenspace p."""

    def __init__(
        self,
        algebra: LieSuperalgebra,
        theta: Involution,
        k_basis: Sequence[SuperVector],
        p_basis: Sequence[SuperVector],
        a_basis: Sequence[SuperVector],
    ):
        self.algebra = algebra
        self.theta = theta
        self.k_basis = list(k_basis)
        self.p_basis = list(p_basis)
        self.a_basis = list(a_basis)


def split_pair(
    g: LieSuperalgebra, theta: Involution, a_basis: Sequence[SuperVector]
) -> SymmetricPair:
    """Split g into theta-eigenspaces and package a symmetric pair.

    Validates everything: theta is an involutive automorphism, the
    eigenspaces exhaust g and bracket correctly ([k,k] in k, [k,p] in p,
    [p,p] in k), and a_basis is an even abelian subspace of p.
    """
    theta.validate(g)
    n = g.dim
    ident = Matrix.identity(n)
    k_vecs = nullspace((theta.matrix - ident).rows, n)
    p_vecs = nullspace((theta.matrix + ident).rows, n)
    if len(k_vecs) + len(p_vecs) != n:
        raise ValueError("eigenspaces of theta do not exhaust g")
    k_basis = [SuperVector(enumerate(v)) for v in k_vecs]
    p_basis = [SuperVector(enumerate(v)) for v in p_vecs]

    def in_span(x: SuperVector, span: Sequence[SuperVector]) -> bool:
        return solve_membership(x.dense(n), [v.dense(n) for v in span]) is not None

    for left, right, target, label in (
        (k_basis, k_basis, k_basis, "[k,k] in k"),
        (k_basis, p_basis, p_basis, "[k,p] in p"),
        (p_basis, p_basis, k_basis, "[p,p] in k"),
    ):
        for x in left:
            for y in right:
                if not in_span(g.bracket(x, y), target):
                    raise ValueError(f"bracket closure {label} fails")
    for a in a_basis:
        if g.parity_of(a) not in (EVEN, None):
            raise ValueError("a_basis must be even")
        if not in_span(a, p_basis):
            raise ValueError("a_basis must lie in p")
    for a in a_basis:
        for b in a_basis:
            if g.bracket(a, b):
                raise ValueError("a_basis must be abelian")
    return SymmetricPair(g, theta, k_basis, p_basis, list(a_basis))


def check_centralizer(pair: SymmetricPair) -> bool:
    """True when the centralizer of a in p is exactly a."""
    g = pair.algebra
    n = g.dim
    p_cols = [v.dense(n) for v in pair.p_basis]
    rows = []
    for a in pair.a_basis:
        brackets = [g.bracket(v, a).dense(n) for v in pair.p_basis]
        for r in range(n):
            rows.append([brackets[j][r] for j in range(len(pair.p_basis))])
    cz = nullspace(rows, len(pair.p_basis))
    a_coords = []
    for a in pair.a_basis:
        coords = solve_membership(a.dense(n), p_cols)
        if coords is None:
            raise ValueError("a_basis must lie in p")
        a_coords.append(coords)
    ra = rank(a_coords)
    rc = rank(cz)
    return rc == ra and rank(a_coords + cz) == ra


def root_decomposition(
    g: LieSuperalgebra, h_basis: Sequence[SuperVector]
) -> dict[tuple[Scalar, ...], list[SuperVector]]:
    """Simultaneous ad-eigenspace decomposition relative to h.

    Returns {(a_1,...,a_r): basis} where a_i is the eigenvalue of ad(h_i),
    i.e. the value of the root on h_i, for the nonzero roots only.  The
    joint 0-eigenspace must coincide with span(h_basis); irrational or
    defective ad-operators raise ValueError.
    """
    n = g.dim
    ad_mats = [g.ad_matrix(h) for h in h_basis]
    spaces: list[tuple[tuple[Scalar, ...], list[list[Scalar]]]] = [
        ((), Matrix.identity(n).rows)
    ]
    for mat in ad_mats:
        refined: list[tuple[tuple[Scalar, ...], list[list[Scalar]]]] = []
        for tag, basis in spaces:
            cols = list(basis)
            restricted_cols = []
            for v in cols:
                w = mat.apply(v)
                coords = solve_membership(w, cols)
                if coords is None:
                    raise ValueError("h does not act invariantly; family not simultaneous")
                restricted_cols.append(coords)
            k = len(cols)
            restricted = Matrix.from_columns(restricted_cols)
            roots = rational_roots(char_poly(restricted))
            if sum(mult for _, mult in roots) != k:
                raise ValueError("ad eigenvalue outside Q; decomposition needs a field extension")
            total = 0
            for lam, _ in roots:
                shifted = restricted - lam * Matrix.identity(k)
                for coords in nullspace(shifted.rows, k):
                    vec = [ZERO] * n
                    for c, bvec in zip(coords, cols):
                        if c:
                            vec = [x + c * y for x, y in zip(vec, bvec)]
                    refined_entry = next(
                        (e for e in refined if e[0] == tag + (lam,)), None
                    )
                    if refined_entry is None:
                        refined.append((tag + (lam,), [vec]))
                    else:
                        refined_entry[1].append(vec)
                    total += 1
            if total != k:
                raise ValueError("ad operator is not diagonalizable")
        spaces = refined
    zero_tag = tuple([ZERO] * len(h_basis))
    out: dict[tuple[Scalar, ...], list[SuperVector]] = {}
    for tag, basis in spaces:
        if tag == zero_tag:
            h_dense = [h.dense(n) for h in h_basis]
            if rank(basis) != rank(h_dense) or rank(basis + h_dense) != rank(h_dense):
                raise ValueError("joint centralizer of h exceeds span(h)")
            continue
        out[tag] = [SuperVector(enumerate(v)) for v in basis]
    return dict(sorted(out.items()))


def gl_nn_q_pair(n: int) -> SymmetricPair:
    """(gl(n|n), q(n)): the block-swap involution with q(n) as fixed points.

    The Cartan subspace is spanned by E_(i,i) - E_(ib,ib).
    """
    g = gl_superalgebra(n, n)
    size = 2 * n

    def swap(a: int) -> int:
        return a + n if a < n else a - n

    images = []
    for a in range(size):
        for b in range(size):
            images.append(SuperVector.unit(swap(a) * size + swap(b)))
    theta = Involution.from_images(images, g.dim)
    a_basis = [
        SuperVector.unit(i * size + i) - SuperVector.unit((i + n) * size + (i + n))
        for i in range(n)
    ]
    return split_pair(g, theta, a_basis)


# ---------------------------------------------------------------------------
# Serialization


def algebra_to_json(g: LieSuperalgebra) -> dict:
    """JSON-ready dict: generator list plus sparse brackets for i <= j."""
    brackets = {}
    for i in range(g.dim):
        for j in range(i, g.dim):
            terms = g.bracket_units(i, j)
            if terms:
                brackets[f"{i},{j}"] = {
                    str(k): format_scalar(c) for k, c in sorted(terms.items())
                }
    return {
        "schema": "1",
        "generators": [{"name": gen.name, "parity": gen.parity} for gen in g.generators],
        "brackets": brackets,
    }


def algebra_from_json(doc: Mapping) -> LieSuperalgebra:
    if doc.get("schema") != "1":
        raise ValueError("unsupported algebra schema")
    names = [gen["name"] for gen in doc["generators"]]
    parities = [int(gen["parity"]) for gen in doc["generators"]]
    if any(p not in (EVEN, ODD) for p in parities):
        raise ValueError("parity must be 0 or 1")
    table: dict[tuple[int, int], dict[int, Scalar]] = {}
    for key, terms in doc.get("brackets", {}).items():
        i_str, j_str = key.split(",")
        table[(int(i_str), int(j_str))] = {
            int(k): parse_scalar(c) for k, c in terms.items()
        }
    return LieSuperalgebra(names, parities, table)


def load_algebra(text: str) -> LieSuperalgebra:
    return algebra_from_json(json.loads(text))


def builtin_algebra(name: str) -> LieSuperalgebra:
    """Algebras constructible by name: "gl(m|n)" for now."""
    match = re.fullmatch(r"gl\((\d+)\|(\d+)\)", name.strip())
    if match:
        return gl_superalgebra(int(match.group(1)), int(match.group(2)))
    raise KeyError(f"unknown builtin algebra {name!r}")
