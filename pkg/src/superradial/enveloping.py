"""Universal enveloping superalgebras: PBW normal forms and Hopf structure.

Monomials are exponent tuples over the algebra's ordered generator basis,
with odd exponents capped at 1 (odd squares rewrite eagerly through
x*x = (1/2)[x,x]).  The rewriting engine repeatedly fixes the leftmost
out-of-order adjacent pair in a word,

    x_j x_i  ->  (-1)^{|i||j|} x_i x_j + [x_j, x_i]      (j > i),

which terminates because each step drops (degree, inversion count)
lexicographically.  Results are memoized per word on the `Enveloping`
instance, so repeated products over the same algebra get cheaper as the
cache warms up.

The Hopf operations use the standard primitive structure: for a generator
x, coproduct(x) = x(x)1 + 1(x)x, counit(x) = 0, antipode(x) = -x, extended
as superalgebra (anti)morphisms with Koszul signs.
"""

from __future__ import annotations

import sys
from math import comb
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Union

from .liealg import LieSuperalgebra, SuperVector
from .scalars import ONE, ZERO, Parity, Scalar, format_scalar, koszul_sign

Monomial = tuple[int, ...]

_MIN_RECURSION = 20000


def deglex_key(mono: Monomial) -> tuple[int, Monomial]:
    """Sort key for the graded lexicographic order on exponent tuples."""
    return (sum(mono), mono)


class UElement:
    """Element of U(g) in PBW normal form: {exponent tuple: coefficient}."""

    __slots__ = ("U", "terms")

    def __init__(self, U: "Enveloping", terms: Mapping[Monomial, Scalar]):
        self.U = U
        self.terms = dict(terms)

    def _check_parent(self, other: "UElement") -> None:
        if self.U is not other.U:
            raise ValueError("elements belong to different enveloping algebras")

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Filtration degree: largest total exponent (zero element has -1)."""
        return max((sum(m) for m in self.terms), default=-1)

    def coefficient(self, mono: Monomial) -> Scalar:
        return self.terms.get(tuple(mono), ZERO)

    def support(self) -> list[Monomial]:
        return sorted(self.terms, key=deglex_key)

    def __add__(self, other: "UElement") -> "UElement":
        self._check_parent(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            acc = out.get(m, ZERO) + c
            if acc:
                out[m] = acc
            else:
                del out[m]
        return UElement(self.U, out)

    def __sub__(self, other: "UElement") -> "UElement":
        return self + (-ONE) * other

    def __neg__(self) -> "UElement":
        return (-ONE) * self

    def __rmul__(self, scalar) -> "UElement":
        if isinstance(scalar, UElement):
            return NotImplemented
        if not scalar:
            return UElement(self.U, {})
        return UElement(self.U, {m: scalar * c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, UElement):
            return self.U.multiply(self, other)
        return self.__rmul__(other)

    def __pow__(self, n: int) -> "UElement":
        if n < 0:
            raise ValueError("negative powers do not exist in U(g)")
        out = self.U.one()
        for _ in range(n):
            out = self.U.multiply(out, self)
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, UElement) and self.U is other.U and self.terms == other.terms
        )

    def __repr__(self) -> str:
        return f"<U: {self.text()}>"

    def text(self) -> str:
        """Canonical ASCII form, deglex-ascending terms; reparses exactly."""
        if not self.terms:
            return "0"
        chunks: list[str] = []
        for mono in self.support():
            c = self.terms[mono]
            factors = []
            for i, e in enumerate(mono):
                if e == 1:
                    factors.append(self.U.algebra.generators[i].name)
                elif e > 1:
                    factors.append(f"{self.U.algebra.generators[i].name}^{e}")
            body = "*".join(factors)
            mag = abs(c)
            if not body:
                piece = format_scalar(mag)
            elif mag == 1:
                piece = body
            else:
                piece = f"{format_scalar(mag)}*{body}"
            if not chunks:
                chunks.append(piece if c > 0 else f"-{piece}")
            else:
                chunks.append(f"+ {piece}" if c > 0 else f"- {piece}")
        return " ".join(chunks)

    def to_json(self) -> list[dict]:
        return [
            {"monomial": list(m), "coeff": format_scalar(self.terms[m])}
            for m in self.support()
        ]


class TensorElement:
    """Element of U(g) (x) U(g); keys are pairs of monomials.

    Multiplication uses the Koszul rule
    (a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd.
    """

    __slots__ = ("U", "terms")

    def __init__(self, U: "Enveloping", terms: Mapping[tuple[Monomial, Monomial], Scalar]):
        self.U = U
        self.terms = dict(terms)

    def __add__(self, other: "TensorElement") -> "TensorElement":
        if self.U is not other.U:
            raise ValueError("tensors belong to different enveloping algebras")
        out = dict(self.terms)
        for key, c in other.terms.items():
            acc = out.get(key, ZERO) + c
            if acc:
                out[key] = acc
            else:
                del out[key]
        return TensorElement(self.U, out)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-ONE) * other

    def __rmul__(self, scalar) -> "TensorElement":
        if not scalar:
            return TensorElement(self.U, {})
        return TensorElement(self.U, {k: scalar * c for k, c in self.terms.items()})

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        if not isinstance(other, TensorElement):
            return NotImplemented
        if self.U is not other.U:
            raise ValueError("tensors belong to different enveloping algebras")
        U = self.U
        out: dict[tuple[Monomial, Monomial], Scalar] = {}
        for (a1, a2), c1 in self.terms.items():
            pa2 = U.mono_parity(a2)
            for (b1, b2), c2 in other.terms.items():
                sign = koszul_sign(pa2, U.mono_parity(b1))
                c = sign * c1 * c2
                left = U._nf_word(U.mono_word(a1) + U.mono_word(b1))
                right = U._nf_word(U.mono_word(a2) + U.mono_word(b2))
                for m1, v1 in left.items():
                    cv1 = c * v1
                    for m2, v2 in right.items():
                        key = (m1, m2)
                        acc = out.get(key, ZERO) + cv1 * v2
                        if acc:
                            out[key] = acc
                        else:
                            del out[key]
        return TensorElement(U, out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TensorElement)
            and self.U is other.U
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        pieces = [
            f"{format_scalar(c)}*{m1}(x){m2}"
            for (m1, m2), c in sorted(
                self.terms.items(), key=lambda kv: (deglex_key(kv[0][0]), deglex_key(kv[0][1]))
            )
        ]
        return "<U(x)U: " + (" + ".join(pieces) or "0") + ">"


FactorLike = Union[SuperVector, tuple[SuperVector, Scalar]]


class Enveloping:
    """U(g) for a structure-constant Lie superalgebra g."""

    def __init__(self, algebra: LieSuperalgebra):
        self.algebra = algebra
        self._parities = tuple(gen.parity for gen in algebra.generators)
        self._nf: dict[tuple[int, ...], dict[Monomial, Scalar]] = {}
        self._coproducts: dict[Monomial, dict[tuple[Monomial, Monomial], Scalar]] = {}
        self._antipodes: dict[Monomial, dict[Monomial, Scalar]] = {}
        self._zero_mono: Monomial = (0,) * algebra.dim
        if sys.getrecursionlimit() < _MIN_RECURSION:
            sys.setrecursionlimit(_MIN_RECURSION)

    # -- basic constructors ------------------------------------------------

    def zero(self) -> UElement:
        return UElement(self, {})

    def one(self) -> UElement:
        return UElement(self, {self._zero_mono: ONE})

    def gen(self, name: str) -> UElement:
        i = self.algebra.index(name)
        mono = list(self._zero_mono)
        mono[i] = 1
        return UElement(self, {tuple(mono): ONE})

    def monomial(self, exps: Sequence[int]) -> UElement:
        return UElement(self, {self._validate_mono(exps): ONE})

    def element(self, terms: Mapping[Sequence[int], Scalar]) -> UElement:
        out: dict[Monomial, Scalar] = {}
        for exps, c in terms.items():
            m = self._validate_mono(exps)
            acc = out.get(m, ZERO) + c
            if acc:
                out[m] = acc
            else:
                out.pop(m, None)
        return UElement(self, out)

    def from_vector(self, x: SuperVector) -> UElement:
        """Image of g in U(g): a degree-1 element."""
        out: dict[Monomial, Scalar] = {}
        for i, c in x.items():
            mono = list(self._zero_mono)
            mono[int(i)] = 1
            out[tuple(mono)] = c
        return UElement(self, out)

    def _validate_mono(self, exps: Sequence[int]) -> Monomial:
        m = tuple(int(e) for e in exps)
        if len(m) != self.algebra.dim:
            raise ValueError("monomial length does not match the algebra dimension")
        for i, e in enumerate(m):
            if e < 0:
                raise ValueError("negative exponent")
            if e > 1 and self._parities[i]:
                raise ValueError(
                    f"odd generator {self.algebra.generators[i].name} admits exponent 0 or 1 only"
                )
        return m

    # -- monomial bookkeeping ----------------------------------------------

    def mono_word(self, mono: Monomial) -> tuple[int, ...]:
        word: list[int] = []
        for i, e in enumerate(mono):
            word.extend((i,) * e)
        return tuple(word)

    def mono_parity(self, mono: Monomial) -> Parity:
        total = 0
        for i, e in enumerate(mono):
            if e and self._parities[i]:
                total ^= e & 1
        return total

    def parity_of(self, a: UElement) -> Optional[Parity]:
        """Parity of a homogeneous element, None for 0 or mixed parity."""
        seen = {self.mono_parity(m) for m in a.terms}
        return seen.pop() if len(seen) == 1 else None

    def monomials_of_degree(self, d: int) -> Iterator[Monomial]:
        """Exponent tuples of total degree exactly d, lexicographically ascending."""
        dim = self.algebra.dim

        def rec(pos: int, remaining: int, prefix: list[int]) -> Iterator[Monomial]:
            if pos == dim:
                if remaining == 0:
                    yield tuple(prefix)
                return
            cap = min(remaining, 1) if self._parities[pos] else remaining
            for e in range(cap + 1):
                prefix.append(e)
                yield from rec(pos + 1, remaining - e, prefix)
                prefix.pop()

        yield from rec(0, d, [])

    def monomials_up_to(self, d: int) -> Iterator[Monomial]:
        """Deglex-ascending enumeration of all monomials of degree <= d."""
        for deg in range(d + 1):
            yield from self.monomials_of_degree(deg)

    def dim_up_to(self, d: int) -> int:
        return sum(1 for _ in self.monomials_up_to(d))

    # -- the rewriting engine ----------------------------------------------

    def _nf_word(self, word: tuple[int, ...]) -> dict[Monomial, Scalar]:
        """Normal form of a product of generators, as a raw terms dict.

        Callers must not mutate the returned dict; it is shared by the cache.
        """
        cached = self._nf.get(word)
        if cached is not None:
            return cached
        g = self.algebra
        defect = -1
        for t in range(len(word) - 1):
            a, b = word[t], word[t + 1]
            if a > b or (a == b and self._parities[a]):
                defect = t
                break
        if defect < 0:
            mono = [0] * g.dim
            for i in word:
                mono[i] += 1
            result = {tuple(mono): ONE}
        else:
            a, b = word[defect], word[defect + 1]
            head, tail = word[:defect], word[defect + 2 :]
            acc: dict[Monomial, Scalar] = {}
            if a == b:
                # odd square: x*x = (1/2)[x,x]
                for k, c in g.bracket_units(a, a).items():
                    _accumulate(acc, self._nf_word(head + (k,) + tail), c / 2)
            else:
                sign = koszul_sign(self._parities[a], self._parities[b])
                _accumulate(acc, self._nf_word(head + (b, a) + tail), sign)
                for k, c in g.bracket_units(a, b).items():
                    _accumulate(acc, self._nf_word(head + (k,) + tail), c)
            result = acc
        self._nf[word] = result
        return result

    def normal_form_word(self, word: Sequence[int]) -> UElement:
        return UElement(self, dict(self._nf_word(tuple(word))))

    def normal_form(self, factors: Iterable[FactorLike]) -> UElement:
        """Normal form of a product of (SuperVector, Scalar) factors.

        Bare SuperVectors are taken with coefficient 1.  The expansion is
        multilinear; every resulting generator word goes through the
        rewriting engine.
        """
        words: list[tuple[tuple[int, ...], Scalar]] = [((), ONE)]
        dim = self.algebra.dim
        for factor in factors:
            if isinstance(factor, tuple):
                vec, scale = factor
            else:
                vec, scale = factor, ONE
            new: list[tuple[tuple[int, ...], Scalar]] = []
            for i, ci in sorted(vec.items()):
                if not (0 <= i < dim):
                    raise ValueError(f"generator index {i} outside the algebra")
                c = scale * ci
                if c:
                    new.extend((w + (i,), cw * c) for w, cw in words)
            words = new
            if not words:
                break
        out: dict[Monomial, Scalar] = {}
        for w, c in words:
            _accumulate(out, self._nf_word(w), c)
        return UElement(self, out)

    def multiply(self, a: UElement, b: UElement) -> UElement:
        if a.U is not self or b.U is not self:
            raise ValueError("elements belong to different enveloping algebras")
        out: dict[Monomial, Scalar] = {}
        for m1, c1 in a.terms.items():
            w1 = self.mono_word(m1)
            for m2, c2 in b.terms.items():
                _accumulate(out, self._nf_word(w1 + self.mono_word(m2)), c1 * c2)
        return UElement(self, out)

    # -- Hopf structure ----------------------------------------------------

    def _coproduct_mono(self, mono: Monomial) -> dict[tuple[Monomial, Monomial], Scalar]:
        cached = self._coproducts.get(mono)
        if cached is not None:
            return cached
        entries: dict[tuple[Monomial, Monomial], Scalar] = {
            (self._zero_mono, self._zero_mono): ONE
        }
        for i, e in enumerate(mono):
            if not e:
                continue
            odd = self._parities[i]
            if odd:
                splits = [(1, 0, ONE), (0, 1, ONE)]
            else:
                splits = [(j, e - j, Scalar(comb(e, j))) for j in range(e + 1)]
            new: dict[tuple[Monomial, Monomial], Scalar] = {}
            for (m1, m2), c in entries.items():
                p2 = self.mono_parity(m2)
                for j, k, binom in splits:
                    # moving x_i^j into the first slot crosses the second slot
                    sign = -ONE if (odd and j and p2) else ONE
                    if j:
                        lm = list(m1)
                        lm[i] += j
                        nm1 = tuple(lm)
                    else:
                        nm1 = m1
                    if k:
                        rm = list(m2)
                        rm[i] += k
                        nm2 = tuple(rm)
                    else:
                        nm2 = m2
                    key = (nm1, nm2)
                    acc = new.get(key, ZERO) + sign * binom * c
                    if acc:
                        new[key] = acc
                    else:
                        del new[key]
            entries = new
        self._coproducts[mono] = entries
        return entries

    def coproduct(self, a: UElement) -> TensorElement:
        out: dict[tuple[Monomial, Monomial], Scalar] = {}
        for mono, c in a.terms.items():
            for key, v in self._coproduct_mono(mono).items():
                acc = out.get(key, ZERO) + c * v
                if acc:
                    out[key] = acc
                else:
                    del out[key]
        return TensorElement(self, out)

    def counit(self, a: UElement) -> Scalar:
        return a.terms.get(self._zero_mono, ZERO)

    def _antipode_mono(self, mono: Monomial) -> dict[Monomial, Scalar]:
        cached = self._antipodes.get(mono)
        if cached is None:
            word = self.mono_word(mono)
            odd = sum(1 for i in word if self._parities[i])
            sign = ONE
            if len(word) % 2:
                sign = -sign
            if (odd * (odd - 1) // 2) % 2:
                sign = -sign
            raw = self._nf_word(tuple(reversed(word)))
            cached = {m: sign * c for m, c in raw.items()}
            self._antipodes[mono] = cached
        return cached

    def antipode(self, a: UElement) -> UElement:
        """S(x_1...x_r) = (-1)^r (Koszul reversal sign) x_r...x_1, linearly."""
        out: dict[Monomial, Scalar] = {}
        for mono, c in a.terms.items():
            _accumulate(out, self._antipode_mono(mono), c)
        return UElement(self, out)

    def tensor(self, pairs: Mapping[tuple[Monomial, Monomial], Scalar]) -> TensorElement:
        return TensorElement(self, {k: c for k, c in pairs.items() if c})


def _accumulate(
    acc: dict[Monomial, Scalar], terms: Mapping[Monomial, Scalar], coeff: Scalar
) -> None:
    if not coeff:
        return
    for m, v in terms.items():
        new = acc.get(m, ZERO) + coeff * v
        if new:
            acc[m] = new
        else:
            del acc[m]


_SHARED: dict[int, Enveloping] = {}


def enveloping_of(algebra) -> Enveloping:
    """One Enveloping instance per algebra object, so rewrite caches are shared."""
    inst = _SHARED.get(id(algebra))
    if inst is None:
        inst = Enveloping(algebra)
        _SHARED[id(algebra)] = inst
    return inst
