"""Exact-arithmetic models of the Lie algebra G2.

Subpackages cover the split 7x7 matrix model, root-system reconstruction from
Cartan matrices, the two real octonion algebras, derivation-algebra solvers,
generic 3-form classification with constructive witnesses, the compact model
over Q(i), and the Clifford/spin picture.  Everything classification-shaped is
bit-exact over the rationals; arbitrary-precision decimals appear only inside
witness construction.
"""

__version__ = "0.1.0"
