"""Exact-arithmetic toolkit for Lie algebras with S3/S4 symmetry.

Subpackages cover: scalars over Q(w), the localized ring k[t, 1/t, 1/(1-t)],
sparse structure-tensor algebras with identity checking, symmetric-group
actions and isotypic decompositions, generalized Malcev algebras and the
Lie algebras they coordinatize, normal Lie-related-triple algebras, a
catalog of concrete models, and the Tetrahedron algebra.
"""

__version__ = "0.1.0"
