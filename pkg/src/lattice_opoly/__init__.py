"""Classical orthogonal polynomials on linear lattices, in exact arithmetic."""

from .classification import AffineReduction, CanonicalClass, classify, equivalent
from .core_algebra import GaussianRational, ParamPoly, Poly, gauss
from .lattice import LinearLattice
from .pearson import Form, KlsParameters, PearsonPair, affine_push, kls_import, to_centered

__version__ = "0.1.0"

__all__ = [
    "AffineReduction",
    "CanonicalClass",
    "Form",
    "GaussianRational",
    "KlsParameters",
    "LinearLattice",
    "ParamPoly",
    "PearsonPair",
    "Poly",
    "affine_push",
    "classify",
    "equivalent",
    "gauss",
    "kls_import",
    "to_centered",
]
