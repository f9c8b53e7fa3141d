"""Exact-arithmetic verification of F4 root combinatorics, the quartic
invariant on a rank-four Cartan subspace, and the desmic pencil of quartic
surfaces, down to the j-invariant identity with squares of elliptic curves.

All computations run over Q(zeta8); nothing is floating point.
"""

__version__ = "0.1.0"

FIELD_DESCRIPTION = "Q(zeta8) with z^4 = -1; sqrt2 = z - z^3"
