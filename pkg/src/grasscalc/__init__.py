"""Exact combinatorics of homogeneous bundles on Grassmannians.

Everything is computed over the integers (or exact rational functions):
partition combinatorics, Littlewood-Richardson products, Bott cohomology,
Ext groups between equivariant simples, equivariant quivers with relations,
Hilbert series matrices and their inverses, presentation complexes, and
maximal Cohen-Macaulay checks.
"""

from .errors import (
    GrasscalcError,
    ResourceLimitError,
    SingularMatrixError,
    UnsupportedFamilyError,
)

__all__ = [
    "GrasscalcError",
    "ResourceLimitError",
    "SingularMatrixError",
    "UnsupportedFamilyError",
]

__version__ = "0.1.0"
