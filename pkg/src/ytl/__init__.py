"""Exact computational algebra for framed Hecke algebras (Yokonuma-Hecke
type), their Temperley-Lieb-style quotients, explicit irreducible
representations, and constructive matrix-algebra isomorphisms.

Modules:
    scalars       exact cyclotomic / Laurent / rational-function arithmetic
    permutations  symmetric group, compositions, coset representatives
    tableaux      partitions, standard d-tableaux, dimension formulas
    yokonuma      the algebra Y_{d,n}(q) in the standard basis
    linalg        generic exact dense linear algebra
    reps          seminormal irreducible representations and oracles
    isomaps       block isomorphisms, Jones-basis reduction, quotient bases
    exprparse     expression parser for the CLI
    verify        machine-verification suites
    cli           command-line interface
"""

__version__ = "1.0.0"
