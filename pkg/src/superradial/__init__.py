"""Exact computer algebra for enveloping superalgebras and supersymmetric pairs.

Everything here runs over the rationals with `fractions.Fraction` scalars;
no floating point is used anywhere.  The main entry points are:

* `liealg.gl_superalgebra` and friends: Lie superalgebras from structure
  constants, involutions, symmetric pairs, root decompositions.
* `enveloping.Enveloping`: PBW normal forms and the Hopf superalgebra
  structure of U(g) (product, coproduct, counit, antipode).
* `symmetrize`: supersymmetrization S(p) -> U(g), projection along U(g)k,
  and the span/decomposition checks built on them.
* `gl12`: the rank-one supersymmetric pair inside gl(1|2), its commutation
  polynomials alpha_n/beta_n, the explicit ideal basis, and the radial
  restriction checks.
* `cli`: the `superradial` command line tool.
"""

__version__ = "0.1.0"
