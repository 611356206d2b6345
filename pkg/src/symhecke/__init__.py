"""Exact computations in cyclotomic Hecke algebras of type B, their
quotients, and the fused Hecke algebras of type A.

Modules: ring (Laurent polynomials and exact linear algebra), coxeter
(signed permutations), hecke (the algebras H(n)), quotient (quotients by
saturation), fused (H_{k,n} and the map from A_n^(k)), combinat (Bratteli
diagrams and dimensions), verify (the claim registry), expr and cli.
"""

__version__ = "0.1.0"
